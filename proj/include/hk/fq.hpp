#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace hk {

/// Element of F_q packed as sum d_i p^i (digits = coordinates in the power
/// basis of the field modulus). Value 0 is the zero element.
using FqElem = std::uint32_t;

/// F_{p^deg} with table-based arithmetic. The modulus is the lexicographically
/// least monic irreducible polynomial of the given degree over F_p, so field
/// construction is reproducible everywhere (including the p-adic residue maps).
class FqField {
  public:
    FqField(int p, int deg);

    int p() const { return p_; }
    int degree() const { return deg_; }
    std::uint32_t q() const { return q_; }

    /// Monic modulus coefficients c_0..c_deg (c_deg = 1).
    const std::vector<int>& modulus() const { return mod_; }

    FqElem add(FqElem a, FqElem b) const;
    FqElem sub(FqElem a, FqElem b) const;
    FqElem neg(FqElem a) const;
    FqElem mul(FqElem a, FqElem b) const {
        if (a == 0 || b == 0) return 0;
        std::uint32_t e = log_[a] + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[e];
    }
    FqElem inv(FqElem a) const;
    FqElem pow(FqElem a, long long e) const;

    FqElem from_int(long long v) const;  // image of an integer (prime subfield)
    FqElem frobenius(FqElem a) const { return frob_[a]; }

    /// Absolute trace to F_p, as an integer in [0, p).
    int trace(FqElem a) const { return trace_[a]; }

    /// A fixed generator of the multiplicative group.
    FqElem generator() const { return gen_; }

    /// Evaluate a polynomial with F_p coefficients at a field element.
    FqElem eval_fp_poly(const std::vector<int>& coeffs, FqElem x) const;

    /// A root in this field of the given monic irreducible polynomial over
    /// F_p whose degree divides deg. Deterministic (least packed value).
    FqElem root_of(const std::vector<int>& poly) const;

    /// Digits of the packed element, length = degree.
    std::vector<int> digits(FqElem a) const;
    FqElem from_digits(const std::vector<int>& d) const;

    std::string to_string(FqElem a) const;

  private:
    int p_, deg_;
    std::uint32_t q_;
    std::vector<int> mod_;
    std::vector<std::uint32_t> exp_, log_;  // exp_[i] = g^i, log_[x] defined for x != 0
    std::vector<FqElem> frob_;
    std::vector<std::uint8_t> trace_;
    std::vector<FqElem> neg_;
    FqElem gen_ = 0;

    FqElem mul_slow(FqElem a, FqElem b) const;
};

/// Lexicographically least monic irreducible polynomial of degree `deg` over
/// F_p, as coefficients c_0..c_deg. Lex order compares (c_0, c_1, ...) left to
/// right.
std::vector<int> least_irreducible_poly(int p, int deg);

/// Irreducibility over F_p (exact, for small degrees).
bool is_irreducible_fp(const std::vector<int>& poly, int p);

}  // namespace hk
