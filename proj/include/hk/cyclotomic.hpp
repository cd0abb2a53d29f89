#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace hk {

/// Exact element of Z[zeta_p], stored as an integer count vector
/// (c_0, ..., c_{p-1}) representing sum c_t zeta^t, canonicalized by the
/// relation sum_t zeta^t = 0 so that c_{p-1} = 0.
class CycInt {
  public:
    explicit CycInt(int p) : c_(p, 0) {}
    CycInt(int p, long long integer) : c_(p, 0) { c_[0] = integer; canonicalize(); }

    int p() const { return static_cast<int>(c_.size()); }
    const std::vector<long long>& counts() const { return c_; }

    /// zeta^t with t taken mod p.
    static CycInt zeta_power(int p, long long t);

    void add_zeta_power(long long t, long long mult = 1) {
        c_[static_cast<std::size_t>(((t % p()) + p()) % p())] += mult;
    }

    void canonicalize();

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator-() const;
    CycInt operator*(const CycInt& o) const;
    CycInt operator*(long long k) const;
    CycInt& operator+=(const CycInt& o);
    bool operator==(const CycInt& o) const { return c_ == o.c_; }
    bool operator!=(const CycInt& o) const { return !(*this == o); }
    bool is_zero() const;

    /// Exact division by an integer; false when not exactly divisible.
    bool divide_exact(long long k, CycInt& out) const;

    /// Galois twist zeta -> zeta^s, s prime to p.
    CycInt galois(long long s) const;

    /// Value under the embedding zeta -> exp(2 pi i s / p).
    std::complex<double> embed(int s) const;

    /// Sum of the counts (the total number of enumerated points when the
    /// element came from a character-sum count vector). Only meaningful on
    /// raw, un-canonicalized data; see raw constructor below.
    std::string to_string() const;

  private:
    std::vector<long long> c_;
};

}  // namespace hk
