#include "hk/cyclotomic.hpp"

#include <cmath>
#include <stdexcept>

namespace hk {

CycInt CycInt::zeta_power(int p, long long t) {
    CycInt z(p);
    z.add_zeta_power(t);
    z.canonicalize();
    return z;
}

void CycInt::canonicalize() {
    long long last = c_.back();
    if (last == 0) return;
    for (auto& x : c_) x -= last;
}

CycInt CycInt::operator+(const CycInt& o) const {
    CycInt r(*this);
    r += o;
    return r;
}

CycInt& CycInt::operator+=(const CycInt& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    canonicalize();
    return *this;
}

CycInt CycInt::operator-(const CycInt& o) const {
    CycInt r(p());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    r.canonicalize();
    return r;
}

CycInt CycInt::operator-() const {
    CycInt r(p());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    r.canonicalize();
    return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
    CycInt r(p());
    int n = p();
    for (int i = 0; i < n; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (o.c_[j] == 0) continue;
            int k = i + j;
            if (k >= n) k -= n;
            r.c_[k] += c_[i] * o.c_[j];
        }
    }
    r.canonicalize();
    return r;
}

CycInt CycInt::operator*(long long k) const {
    CycInt r(*this);
    for (auto& x : r.c_) x *= k;
    return r;  // already canonical: scaling keeps c_{p-1} = 0
}

bool CycInt::is_zero() const {
    for (long long x : c_)
        if (x != 0) return false;
    return true;
}

bool CycInt::divide_exact(long long k, CycInt& out) const {
    if (k == 0) throw std::domain_error("CycInt: divide by zero");
    out = CycInt(p());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] % k != 0) return false;
        out.c_[i] = c_[i] / k;
    }
    return true;
}

CycInt CycInt::galois(long long s) const {
    CycInt r(p());
    for (int t = 0; t < p(); ++t) r.add_zeta_power(s * t, c_[t]);
    r.canonicalize();
    return r;
}

std::complex<double> CycInt::embed(int s) const {
    std::complex<double> z(0.0, 0.0);
    const double twopi = 6.283185307179586476925286766559;
    for (int t = 0; t < p(); ++t) {
        if (c_[t] == 0) continue;
        double arg = twopi * ((static_cast<long long>(s) * t) % p()) / p();
        z += static_cast<double>(c_[t]) * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return z;
}

std::string CycInt::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c_[i]);
    }
    return s + ")";
}

}  // namespace hk
