#pragma once

#include <cstdint>
#include <future>
#include <stdexcept>
#include <string>
#include <vector>

namespace hk {

/// Raised when a result cannot be certified to the precision the caller asked
/// for. The engine refuses to round silently.
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an enumeration or iteration budget is exceeded.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

/// p-adic valuation of a nonzero integer.
inline int vp(std::int64_t n, std::int64_t p) {
    if (n == 0) throw std::invalid_argument("vp(0)");
    if (n < 0) n = -n;
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

// Arithmetic mod m for m < 2^63, products via 128-bit intermediates.
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    std::uint64_t s = a + b;
    if (s >= m || s < a) s -= m;
    return s;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= b ? a - b : a + (m - b);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

/// Inverse of a unit mod m (m a prime power p^M, gcd(a, p) = 1).
inline std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a % m);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (r != 1) throw std::domain_error("invmod: not a unit");
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

/// Run fn(i) for i in [0, count) on up to nthreads threads. nthreads <= 1 runs inline.
template <class Fn>
void parallel_for(std::size_t count, int nthreads, Fn&& fn) {
    if (nthreads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::size_t nt = std::min<std::size_t>(nthreads, count);
    std::vector<std::future<void>> fut;
    fut.reserve(nt);
    for (std::size_t t = 0; t < nt; ++t) {
        fut.push_back(std::async(std::launch::async, [&, t] {
            for (std::size_t i = t; i < count; i += nt) fn(i);
        }));
    }
    for (auto& f : fut) f.get();
}

}  // namespace hk
