#include "hk/fq.hpp"

#include <algorithm>
#include <stdexcept>

#include "hk/util.hpp"

namespace hk {

namespace {

// Dense F_p[t] helpers; polynomials are coefficient vectors c_0.. with no
// trailing-zero guarantee enforced by trim().
using Poly = std::vector<int>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_rem(Poly a, const Poly& m, int p) {
    trim(a);
    int dm = static_cast<int>(m.size()) - 1;
    int inv_lead = static_cast<int>(invmod(static_cast<std::uint64_t>(m[dm]), p));
    while (static_cast<int>(a.size()) - 1 >= dm) {
        int da = static_cast<int>(a.size()) - 1;
        int c = static_cast<int>(mulmod(a[da], inv_lead, p));
        if (c != 0) {
            for (int i = 0; i <= dm; ++i) {
                int& t = a[da - dm + i];
                t = static_cast<int>(((t - static_cast<long long>(c) * m[i]) % p + p) % p);
            }
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<int>((r[i + j] + static_cast<long long>(a[i]) * b[j]) % p);
    return poly_rem(std::move(r), m, p);
}

Poly poly_powmod(Poly base, long long e, const Poly& m, int p) {
    Poly r{1};
    base = poly_rem(std::move(base), m, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, m, p);
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, int p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

bool is_irreducible_fp(const std::vector<int>& poly, int p) {
    Poly m = poly;
    trim(m);
    int d = static_cast<int>(m.size()) - 1;
    if (d <= 0) return false;
    if (d == 1) return true;
    // x^(p^d) == x mod m, and gcd(x^(p^(d/l)) - x, m) = 1 for primes l | d.
    Poly x{0, 1};
    Poly xp = x;
    std::vector<Poly> frob_powers;  // x^(p^k) mod m for k = 1..d
    for (int k = 1; k <= d; ++k) {
        xp = poly_powmod(xp, p, m, p);
        frob_powers.push_back(xp);
    }
    Poly top = frob_powers[d - 1];  // x^(p^d) mod m
    Poly diff = top;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] - 1 % p + p) % p;
    trim(diff);
    if (!diff.empty()) return false;
    for (int l = 2; l <= d; ++l) {
        if (d % l != 0 || !is_prime(l)) continue;
        Poly g = frob_powers[d / l - 1];
        g.resize(std::max<std::size_t>(g.size(), 2), 0);
        g[1] = (g[1] - 1 % p + p) % p;
        trim(g);
        Poly gg = poly_gcd(m, g, p);
        if (static_cast<int>(gg.size()) - 1 != 0) return false;
    }
    return true;
}

std::vector<int> least_irreducible_poly(int p, int deg) {
    if (deg == 1) return {0, 1};  // t
    std::vector<int> c(deg, 0);   // c_0..c_{deg-1}, lex (c_0 most significant)
    while (true) {
        std::vector<int> poly(c);
        poly.push_back(1);
        if (is_irreducible_fp(poly, p)) return poly;
        int i = deg - 1;
        while (i >= 0) {
            if (++c[i] < p) break;
            c[i] = 0;
            --i;
        }
        if (i < 0) throw std::logic_error("no irreducible polynomial found");
    }
}

FqField::FqField(int p, int deg) : p_(p), deg_(deg) {
    if (!is_prime(p)) throw std::invalid_argument("FqField: p not prime");
    if (deg < 1) throw std::invalid_argument("FqField: degree < 1");
    long long q = ipow(p, deg);
    if (q > (1 << 22)) throw budget_error("FqField: field too large for tables");
    q_ = static_cast<std::uint32_t>(q);
    mod_ = least_irreducible_poly(p, deg);

    neg_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
        std::uint32_t r = 0, mult = 1, x = a;
        for (int i = 0; i < deg_; ++i) {
            int d = static_cast<int>(x % p_);
            x /= p_;
            r += static_cast<std::uint32_t>((p_ - d) % p_) * mult;
            mult *= p_;
        }
        neg_[a] = r;
    }

    // Multiplicative tables from a generator.
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    std::vector<long long> prime_factors;
    {
        long long m = q_ - 1;
        for (long long d = 2; d * d <= m; ++d)
            while (m % d == 0) {
                prime_factors.push_back(d);
                while (m % d == 0) m /= d;
                break;
            }
        if (m > 1) prime_factors.push_back(m);
        std::sort(prime_factors.begin(), prime_factors.end());
        prime_factors.erase(std::unique(prime_factors.begin(), prime_factors.end()),
                            prime_factors.end());
    }
    for (std::uint32_t g = 1; g < q_; ++g) {
        bool ok = g != 1 || q_ == 2;
        for (long long l : prime_factors) {
            // g^((q-1)/l) != 1
            std::uint32_t acc = 1;
            long long e = (q_ - 1) / l;
            std::uint32_t base = g;
            while (e) {
                if (e & 1) acc = mul_slow(acc, base);
                base = mul_slow(base, base);
                e >>= 1;
            }
            if (acc == 1) { ok = false; break; }
        }
        if (ok) { gen_ = g; break; }
    }
    if (gen_ == 0) throw std::logic_error("FqField: no generator");
    std::uint32_t cur = 1;
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
        exp_[i] = cur;
        log_[cur] = i;
        cur = mul_slow(cur, gen_);
    }

    frob_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) frob_[a] = pow(a, p_);
    trace_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
        std::uint32_t t = a, s = a;
        for (int i = 1; i < deg_; ++i) {
            t = frob_[t];
            s = add(s, t);
        }
        trace_[a] = static_cast<std::uint8_t>(s % p_);  // element of prime subfield
    }
}

FqElem FqField::mul_slow(FqElem a, FqElem b) const {
    Poly pa, pb;
    std::uint32_t x = a;
    for (int i = 0; i < deg_; ++i) { pa.push_back(static_cast<int>(x % p_)); x /= p_; }
    x = b;
    for (int i = 0; i < deg_; ++i) { pb.push_back(static_cast<int>(x % p_)); x /= p_; }
    Poly r = poly_mulmod(pa, pb, mod_, p_);
    std::uint32_t out = 0, mult = 1;
    for (int i = 0; i < deg_; ++i) {
        int d = i < static_cast<int>(r.size()) ? r[i] : 0;
        out += static_cast<std::uint32_t>(d) * mult;
        mult *= p_;
    }
    return out;
}

FqElem FqField::add(FqElem a, FqElem b) const {
    std::uint32_t r = 0, mult = 1;
    for (int i = 0; i < deg_; ++i) {
        int s = static_cast<int>(a % p_) + static_cast<int>(b % p_);
        if (s >= p_) s -= p_;
        r += static_cast<std::uint32_t>(s) * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

FqElem FqField::sub(FqElem a, FqElem b) const { return add(a, neg_[b]); }
FqElem FqField::neg(FqElem a) const { return neg_[a]; }

FqElem FqField::inv(FqElem a) const {
    if (a == 0) throw std::domain_error("FqField: inverse of zero");
    std::uint32_t e = (q_ - 1 - log_[a]) % (q_ - 1);
    return exp_[e];
}

FqElem FqField::pow(FqElem a, long long e) const {
    if (a == 0) {
        if (e <= 0) throw std::domain_error("FqField: 0^nonpositive");
        return 0;
    }
    long long le = (static_cast<long long>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    if (le < 0) le += q_ - 1;
    return exp_[le];
}

FqElem FqField::from_int(long long v) const {
    long long r = v % p_;
    if (r < 0) r += p_;
    return static_cast<FqElem>(r);
}

FqElem FqField::eval_fp_poly(const std::vector<int>& coeffs, FqElem x) const {
    FqElem acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = add(mul(acc, x), from_int(*it));
    return acc;
}

FqElem FqField::root_of(const std::vector<int>& poly) const {
    for (std::uint32_t a = 0; a < q_; ++a)
        if (eval_fp_poly(poly, a) == 0) return a;
    throw std::domain_error("FqField: no root of subfield modulus");
}

std::vector<int> FqField::digits(FqElem a) const {
    std::vector<int> d(deg_);
    for (int i = 0; i < deg_; ++i) {
        d[i] = static_cast<int>(a % p_);
        a /= p_;
    }
    return d;
}

FqElem FqField::from_digits(const std::vector<int>& d) const {
    std::uint32_t r = 0, mult = 1;
    for (int i = 0; i < deg_; ++i) {
        int x = i < static_cast<int>(d.size()) ? ((d[i] % p_) + p_) % p_ : 0;
        r += static_cast<std::uint32_t>(x) * mult;
        mult *= p_;
    }
    return r;
}

std::string FqField::to_string(FqElem a) const {
    if (deg_ == 1) return std::to_string(a);
    std::string s = "[";
    auto d = digits(a);
    for (int i = 0; i < deg_; ++i) {
        if (i) s += ",";
        s += std::to_string(d[i]);
    }
    return s + "]";
}

}  // namespace hk
