#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace hk {

/// Maximum number of torus variables supported by the packed exponent type.
constexpr int kMaxVars = 4;

/// A Laurent monomial exponent u in Z^n, n <= kMaxVars.
struct Exp {
    std::array<std::int32_t, kMaxVars> e{};
    std::uint8_t n = 0;

    Exp() = default;
    explicit Exp(int nvars) : n(static_cast<std::uint8_t>(nvars)) {
        if (nvars < 1 || nvars > kMaxVars) throw std::invalid_argument("Exp: bad n");
    }
    Exp(std::initializer_list<int> xs) : n(static_cast<std::uint8_t>(xs.size())) {
        if (xs.size() < 1 || xs.size() > kMaxVars) throw std::invalid_argument("Exp: bad n");
        int i = 0;
        for (int x : xs) e[i++] = x;
    }

    int operator[](int i) const { return e[i]; }
    std::int32_t& operator[](int i) { return e[i]; }
    bool operator==(const Exp& o) const { return n == o.n && e == o.e; }
    bool operator!=(const Exp& o) const { return !(*this == o); }

    /// Lexicographic order on (e[0], ..., e[n-1]).
    bool operator<(const Exp& o) const {
        for (int i = 0; i < n; ++i)
            if (e[i] != o.e[i]) return e[i] < o.e[i];
        return false;
    }

    Exp operator+(const Exp& o) const {
        Exp r(*this);
        for (int i = 0; i < n; ++i) r.e[i] += o.e[i];
        return r;
    }
    Exp operator-(const Exp& o) const {
        Exp r(*this);
        for (int i = 0; i < n; ++i) r.e[i] -= o.e[i];
        return r;
    }
    Exp operator*(int c) const {
        Exp r(*this);
        for (int i = 0; i < n; ++i) r.e[i] *= c;
        return r;
    }

    bool is_zero() const {
        for (int i = 0; i < n; ++i)
            if (e[i] != 0) return false;
        return true;
    }
};

inline Exp unit_exp(int n, int j) {  // e_{j+1} in 0-based position j
    Exp u(n);
    u[j] = 1;
    return u;
}

inline Exp diag_exp(int n) {  // U = (-1, ..., -1)
    Exp u(n);
    for (int i = 0; i < n; ++i) u[i] = -1;
    return u;
}

/// epsilon_i = x_1 x_2 ... x_i  (i = 0 gives the constant monomial).
inline Exp epsilon_exp(int n, int i) {
    Exp u(n);
    for (int j = 0; j < i; ++j) u[j] = 1;
    return u;
}

/// m(u) = max(0, -u_1, ..., -u_n).
inline int mval(const Exp& u) {
    int m = 0;
    for (int i = 0; i < u.n; ++i)
        if (-u[i] > m) m = -u[i];
    return m;
}

/// m*(v) = min(0, -v_1, ..., -v_n).
inline int mstar(const Exp& v) {
    int m = 0;
    for (int i = 0; i < v.n; ++i)
        if (-v[i] < m) m = -v[i];
    return m;
}

/// Polyhedral weight w(u) = sum u_i + (n+1) m(u).
inline int weight(const Exp& u) {
    int s = 0;
    for (int i = 0; i < u.n; ++i) s += u[i];
    return s + (u.n + 1) * mval(u);
}

/// Same weight via the maximum of the n+1 facet linear forms; used as a
/// cross-check of the closed formula.
inline int weight_linear_forms(const Exp& u) {
    int s = 0;
    for (int i = 0; i < u.n; ++i) s += u[i];
    int w = s;  // l^(0)
    for (int i = 0; i < u.n; ++i) {
        int li = s - (u.n + 1) * u[i];
        if (li > w) w = li;
    }
    return w;
}

/// Conical coordinates: u = nu_0 U + sum nu_j e_j with nu >= 0 and min nu = 0.
struct Conical {
    std::array<std::int32_t, kMaxVars + 1> nu{};  // nu[0] = nu_0
    int n = 0;
    int weight() const {
        int s = 0;
        for (int i = 0; i <= n; ++i) s += nu[i];
        return s;
    }
};

inline Conical conical(const Exp& u) {
    Conical c;
    c.n = u.n;
    int m = mval(u);
    c.nu[0] = m;
    for (int i = 0; i < u.n; ++i) c.nu[i + 1] = u[i] + m;
    return c;
}

/// Bitmask of Supp(u) inside {0, 1, ..., n}: bit k set iff nu_k > 0.
inline unsigned support_mask(const Exp& u) {
    Conical c = conical(u);
    unsigned m = 0;
    for (int i = 0; i <= u.n; ++i)
        if (c.nu[i] > 0) m |= (1u << i);
    return m;
}

/// True iff u and v lie in one closed sectorial cone, equivalently
/// w(u + v) = w(u) + w(v).
inline bool same_cone(const Exp& u, const Exp& v) {
    unsigned full = (1u << (u.n + 1)) - 1;
    return (support_mask(u) | support_mask(v)) != full;
}

/// psi on monomials: u/p when p | u componentwise, absent otherwise.
inline bool psi_monomial(const Exp& u, int p, Exp& out) {
    out = Exp(static_cast<int>(u.n));
    for (int i = 0; i < u.n; ++i) {
        if (u[i] % p != 0) return false;
        out[i] = u[i] / p;
    }
    return true;
}

/// All u in Z^n with w(u) = i, in increasing lexicographic order.
std::vector<Exp> monomials_of_weight(int n, int i);

/// All u with w(u) <= cap, in (weight, lex) order.
std::vector<Exp> monomials_up_to_weight(int n, int cap);

struct ExpHash {
    std::size_t operator()(const Exp& u) const {
        std::uint64_t h = u.n;
        for (int i = 0; i < u.n; ++i)
            h = h * 1099511628211ULL + static_cast<std::uint32_t>(u.e[i] + (1 << 20));
        return static_cast<std::size_t>(h);
    }
};

}  // namespace hk
