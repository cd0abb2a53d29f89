#include "hk/exponent.hpp"

#include <algorithm>

namespace hk {

namespace {

// Enumerate conical tuples (nu_0, ..., nu_n) with sum = i and min = 0; each
// gives a unique u. Recursion over positions.
void gen(int n, int pos, int remaining, bool have_zero, Conical& c, std::vector<Exp>& out) {
    if (pos == n + 1) {
        if (remaining == 0 && have_zero) {
            Exp u(n);
            for (int j = 0; j < n; ++j) u[j] = c.nu[j + 1] - c.nu[0];
            out.push_back(u);
        }
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        c.nu[pos] = v;
        gen(n, pos + 1, remaining - v, have_zero || v == 0, c, out);
    }
    c.nu[pos] = 0;
}

}  // namespace

std::vector<Exp> monomials_of_weight(int n, int i) {
    std::vector<Exp> out;
    Conical c;
    c.n = n;
    gen(n, 0, i, false, c, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Exp> monomials_up_to_weight(int n, int cap) {
    std::vector<Exp> out;
    for (int i = 0; i <= cap; ++i) {
        auto wi = monomials_of_weight(n, i);
        out.insert(out.end(), wi.begin(), wi.end());
    }
    return out;
}

}  // namespace hk
