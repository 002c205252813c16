#include "hessencomb/core.hpp"

#include <algorithm>

#include "hessencomb/errors.hpp"

namespace hessencomb {

namespace {
void require_same_size(const Permutation& w, const HessenbergFunction& h) {
    if (w.size() != h.n()) throw SizeMismatch("permutation size differs from Hessenberg size");
}
} // namespace

int ell_h(const Permutation& w, const HessenbergFunction& h) {
    require_same_size(w, h);
    int count = 0;
    for (int j = 1; j <= h.n(); ++j)
        for (int i = j + 1; i <= h(j); ++i)
            if (w(j) > w(i)) ++count;
    return count;
}

int minus_cell_dimension(const Permutation& w, const HessenbergFunction& h) {
    require_same_size(w, h);
    return h.complex_dimension() - ell_h(w, h);
}

std::vector<int> descent_set(const Permutation& w) {
    return w.descent_set();
}

std::vector<long long> poincare_coefficients(const HessenbergFunction& h) {
    std::vector<long long> counts(h.complex_dimension() + 1, 0);
    for (const Permutation& w : all_permutations(h.n())) ++counts[ell_h(w, h)];
    return counts;
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
    if (v.size() != w.size()) throw SizeMismatch("bruhat_leq: sizes differ");
    const int n = v.size();
    std::vector<int> pv, pw;
    pv.reserve(n);
    pw.reserve(n);
    for (int k = 1; k <= n; ++k) {
        pv.insert(std::upper_bound(pv.begin(), pv.end(), v(k)), v(k));
        pw.insert(std::upper_bound(pw.begin(), pw.end(), w(k)), w(k));
        for (int a = 0; a < k; ++a)
            if (pv[a] > pw[a]) return false;
    }
    return true;
}

Permutation iota(const Permutation& w) {
    std::vector<int> out(w.size());
    for (int i = 1; i <= w.size(); ++i) out[i - 1] = w.size() - w(i) + 1;
    return Permutation(std::move(out));
}

std::optional<int> nilpotent_cell(const Permutation& w, const HessenbergFunction& h) {
    require_same_size(w, h);
    for (int j = 1; j <= h.n(); ++j) {
        if (w(j) == 1) continue; // w(0) = 0 convention
        if (w.position_of(w(j) - 1) > h(j)) return std::nullopt;
    }
    return ell_h(w, h);
}

} // namespace hessencomb
