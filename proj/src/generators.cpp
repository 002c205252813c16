#include "hessencomb/generators.hpp"

#include <algorithm>
#include <numeric>

#include "hessencomb/core.hpp"
#include "hessencomb/errors.hpp"
#include "hessencomb/orientation.hpp"

namespace hessencomb {

namespace {

void check_budget(const HessenbergFunction& h) {
    if (h.n() > 9) throw BudgetExceeded("S_n filtering is limited to n <= 9");
}

void check_index(const HessenbergFunction& h, int i) {
    if (i < 1 || i >= h.n()) throw IndexOutOfRange("index must lie in [1, n-1]");
}

bool next_in_T(const HessenbergFunction& h, int i) {
    return h.in_T(i + 1) || i + 1 == h.n();
}

} // namespace

bool in_generator_set(const Permutation& w, const HessenbergFunction& h) {
    if (w.size() != h.n()) throw SizeMismatch("permutation size differs from Hessenberg size");
    for (int v = 1; v < h.n(); ++v)
        if (w.position_of(v + 1) > h(w.position_of(v))) return false;
    return true;
}

std::vector<Permutation> generators_k(const HessenbergFunction& h, int k) {
    check_budget(h);
    std::vector<Permutation> out;
    for (const Permutation& w : all_permutations(h.n()))
        if (ell_h(w, h) == k && in_generator_set(w, h)) out.push_back(w);
    return out;
}

std::vector<std::vector<Permutation>> generators_by_degree(const HessenbergFunction& h,
                                                           int max_k) {
    check_budget(h);
    if (max_k < 0 || max_k > h.complex_dimension()) max_k = h.complex_dimension();
    std::vector<std::vector<Permutation>> out(max_k + 1);
    for (const Permutation& w : all_permutations(h.n())) {
        const int k = ell_h(w, h);
        if (k <= max_k && in_generator_set(w, h)) out[k].push_back(w);
    }
    return out;
}

Permutation canonical_w_i(const HessenbergFunction& h, int i) {
    check_index(h, i);
    const int n = h.n();
    std::vector<int> word;
    word.reserve(n);
    if (h.in_T(i)) {
        if (next_in_T(h, i)) {
            // 1 2 ... i-1 i+1 | i i+2 ... n  (= s_i)
            for (int v = 1; v < i; ++v) word.push_back(v);
            word.push_back(i + 1);
            word.push_back(i);
            for (int v = i + 2; v <= n; ++v) word.push_back(v);
        } else {
            // 1 2 ... i-1 n | i i+1 ... n-1
            for (int v = 1; v < i; ++v) word.push_back(v);
            word.push_back(n);
            for (int v = i; v <= n - 1; ++v) word.push_back(v);
        }
    } else {
        if (next_in_T(h, i)) {
            // 2 ... i i+1 | 1 i+2 ... n
            for (int v = 2; v <= i + 1; ++v) word.push_back(v);
            word.push_back(1);
            for (int v = i + 2; v <= n; ++v) word.push_back(v);
        } else {
            // n-i+1 ... n-1 n | 1 2 ... n-i
            for (int v = n - i + 1; v <= n; ++v) word.push_back(v);
            for (int v = 1; v <= n - i; ++v) word.push_back(v);
        }
    }
    return Permutation(std::move(word));
}

std::vector<Permutation> canonical_w(const HessenbergFunction& h) {
    std::vector<Permutation> out;
    out.reserve(h.n() - 1);
    for (int i = 1; i < h.n(); ++i) out.push_back(canonical_w_i(h, i));
    return out;
}

std::vector<Permutation> A_i(const HessenbergFunction& h, int i) {
    check_index(h, i);
    check_budget(h);
    std::vector<Permutation> out;
    for (const Permutation& u : all_permutations(h.n())) {
        const int pos_next = u.position_of(i + 1);
        const int pos_i = u.position_of(i);
        if (pos_next <= i && pos_i > i && h(pos_next) < pos_i && ell_h(u, h) == 1)
            out.push_back(u);
    }
    return out;
}

std::vector<Permutation> P_i(const HessenbergFunction& h, int i) {
    check_index(h, i);
    check_budget(h);
    std::vector<Permutation> out;
    for (const Permutation& u : all_permutations(h.n())) {
        if (ell_h(u, h) != 1) continue;
        const auto des = u.descent_set();
        if (des.size() == 1 && des[0] == i) out.push_back(u);
    }
    return out;
}

std::vector<Permutation> P_i_closed_form(const HessenbergFunction& h, int i) {
    check_index(h, i);
    const int n = h.n();
    std::vector<Permutation> out;
    const Permutation wi = canonical_w_i(h, i);
    if (h.in_T(i)) {
        if (next_in_T(h, i)) {
            out.push_back(wi);
        } else {
            // s_{j+1} s_{j+2} ... s_{n-1} w^[i] for i <= j < n
            Permutation cur = wi; // j = n-1 gives the empty product
            out.push_back(cur);
            for (int j = n - 2; j >= i; --j) {
                cur = cur.left_multiply_simple(j + 1);
                out.push_back(cur);
            }
        }
    } else {
        if (next_in_T(h, i)) {
            // s_j s_{j-1} ... s_1 w^[i] for 0 <= j < i
            Permutation cur = wi;
            out.push_back(cur);
            for (int j = 1; j < i; ++j) {
                cur = cur.left_multiply_simple(j);
                out.push_back(cur);
            }
        } else {
            // every u with Des(u) = {i}: merge a proper i-subset prefix
            std::vector<bool> take(n, false);
            std::fill(take.begin(), take.begin() + i, true);
            // iterate all i-subsets of [n] via combinations
            std::vector<int> idx(i);
            std::iota(idx.begin(), idx.end(), 1);
            while (true) {
                std::vector<int> word(idx.begin(), idx.end());
                std::vector<bool> used(n + 1, false);
                for (int v : idx) used[v] = true;
                for (int v = 1; v <= n; ++v)
                    if (!used[v]) word.push_back(v);
                Permutation u{word};
                const auto des = u.descent_set();
                if (des.size() == 1 && des[0] == i) out.push_back(u);
                // next combination
                int pos = i - 1;
                while (pos >= 0 && idx[pos] == n - (i - 1 - pos)) --pos;
                if (pos < 0) break;
                ++idx[pos];
                for (int q = pos + 1; q < i; ++q) idx[q] = idx[q - 1] + 1;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int P_i_cardinality(const HessenbergFunction& h, int i) {
    check_index(h, i);
    const int n = h.n();
    if (h.in_T(i)) return next_in_T(h, i) ? Int(1) : Int(n - i);
    return next_in_T(h, i) ? Int(i) : binomial(n, i) - 1;
}

Int d_i(const HessenbergFunction& h, int i) {
    check_index(h, i);
    const int n = h.n();
    if (h.in_T(i)) return 1;
    if (next_in_T(h, i)) return n;
    return binomial(n, i);
}

Int dim_H2(const HessenbergFunction& h) {
    Int total = 0;
    for (int i = 1; i < h.n(); ++i) total += d_i(h, i);
    return total;
}

Composition alpha_i(const HessenbergFunction& h, int i) {
    check_index(h, i);
    const int n = h.n();
    if (h.in_T(i)) return Composition({n});
    if (next_in_T(h, i)) return Composition({1, n - 1});
    return Composition({i, n - i});
}

StabilizerShape stabilizer_composition(const HessenbergFunction& h, int i) {
    check_index(h, i);
    const int n = h.n();
    const bool full_T = static_cast<int>(h.T().size()) == n - 1;
    if (h.in_T(i)) {
        if (next_in_T(h, i)) {
            if (full_T) return {true, Composition({n})};
            if (n != 2 * i) return {true, Composition({i, n - i})};
            return {false, Composition({i, i})}; // only the sandwich is known
        }
        return {true, Composition({n - 1, 1})};
    }
    if (next_in_T(h, i)) return {true, Composition({1, n - 1})};
    return {true, Composition({n - i, i})}; // holds even when n = 2i
}

Composition SourceBlocks::block_composition() const {
    std::vector<int> sizes;
    sizes.reserve(blocks.size());
    for (const auto& b : blocks) sizes.push_back(static_cast<int>(b.size()));
    return Composition(std::move(sizes));
}

SourceBlocks source_blocks(const Permutation& w, const HessenbergFunction& h) {
    if (!in_generator_set(w, h))
        throw NotAGenerator("source blocks are defined for members of G_h only");
    auto src = sources(orient_from_perm(w, h));
    std::sort(src.begin(), src.end(), std::greater<int>());

    SourceBlocks out{w, src, {}};
    const int parts = static_cast<int>(src.size());
    for (int a = 0; a < parts; ++a) {
        const int from = w(src[a]);
        const int to = (a + 1 < parts) ? w(src[a + 1]) - 1 : h.n();
        std::vector<int> block;
        for (int v = from; v <= to; ++v) block.push_back(v);
        out.blocks.push_back(std::move(block));
    }
    return out;
}

std::vector<int> J_indicator_degree1(const HessenbergFunction& h, int i) {
    check_index(h, i);
    if (!(h.in_T(i) && next_in_T(h, i)))
        throw UnsupportedShape("J indicator is only available when w^[i] = s_i");
    const Permutation w = canonical_w_i(h, i); // = s_i
    std::vector<int> out;
    for (int k = 1; k < h.n(); ++k) {
        if (is_dashed_move(w, k, h)) {
            out.push_back(k);
        } else if (k == i && !A_i(h, i).empty()) {
            out.push_back(k);
        }
    }
    return out;
}

GeneratorReport build_report(const HessenbergFunction& h, int max_k) {
    // Full degree range is the default at desk scale; larger symmetric
    // groups keep only degrees 0 and 1, which is what the closed-form data
    // below describes anyway.
    if (max_k < 0) max_k = (h.n() <= 6) ? h.complex_dimension() : 1;
    max_k = std::min(max_k, h.complex_dimension());

    GeneratorReport r{h, max_k, generators_by_degree(h, max_k), canonical_w(h), {}, {}, {}, {}, {}};
    for (int i = 1; i < h.n(); ++i) {
        r.A_sets.push_back(A_i(h, i));
        r.P_sets.push_back(P_i(h, i));
        r.d.push_back(d_i(h, i));
        r.alpha.push_back(alpha_i(h, i));
        r.stabilizers.push_back(stabilizer_composition(h, i));
    }
    return r;
}

} // namespace hessencomb
