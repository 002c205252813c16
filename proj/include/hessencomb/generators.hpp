#pragma once

#include <optional>
#include <vector>

#include "hessencomb/hessenberg.hpp"
#include "hessencomb/partitions.hpp"
#include "hessencomb/permutation.hpp"

namespace hessencomb {

// Membership in the generator set
//   G_h = { w : w^{-1}(w(j)+1) <= h(j) whenever w(j) in [n-1] },
// i.e. for every value v < n the position of v+1 is bounded by h applied
// to the position of v.
bool in_generator_set(const Permutation& w, const HessenbergFunction& h);

// G_h^k = { w in G_h : ell_h(w) = k }, lexicographically sorted. Computed
// by filtering S_n; refuses n > 9.
std::vector<Permutation> generators_k(const HessenbergFunction& h, int k);

// All of G_h grouped by degree: entry k is G_h^k.
std::vector<std::vector<Permutation>> generators_by_degree(const HessenbergFunction& h,
                                                           int max_k = -1);

// The canonical degree-one generators w^[1..n-1], by the four-case table
// (i in T or not, i+1 in T union {n} or not).
std::vector<Permutation> canonical_w(const HessenbergFunction& h);
Permutation canonical_w_i(const HessenbergFunction& h, int i);

// A_i = { u : u^{-1}(i+1) <= i, u^{-1}(i) > i, h(u^{-1}(i+1)) < u^{-1}(i),
//         ell_h(u) = 1 }, lexicographically sorted.
std::vector<Permutation> A_i(const HessenbergFunction& h, int i);

// P_i = { u : ell_h(u) = 1 and Des(u) = {i} }, lexicographically sorted.
std::vector<Permutation> P_i(const HessenbergFunction& h, int i);
// The same set by the closed-form description (chains of simple
// reflections applied to w^[i], or all single-descent words); kept as an
// independent route for cross-checking.
std::vector<Permutation> P_i_closed_form(const HessenbergFunction& h, int i);
// |P_i| by the closed counting formula.
Int P_i_cardinality(const HessenbergFunction& h, int i);

Int d_i(const HessenbergFunction& h, int i);
Int dim_H2(const HessenbergFunction& h); // sum of d_i = |{w : ell_h(w)=1}|

// Chow's composition alpha^i: (n) if i in T; (1,n-1) if i not in T and
// i+1 in T union {n}; (i,n-i) otherwise.
Composition alpha_i(const HessenbergFunction& h, int i);

// Young-subgroup shape of the stabilizer of the degree-one generator
// class. Every case is resolved except i in T, i+1 in T union {n},
// n = 2i, T != [n-1], where only the sandwich
// S_(i,i) <= Stab < S_n is known; that case reports exact = false with
// the lower bound.
struct StabilizerShape {
    bool exact = true;
    Composition composition; // the stabilizer shape, or the lower bound
};
StabilizerShape stabilizer_composition(const HessenbergFunction& h, int i);

// Source data of o_h(w) for w in G_h: positions sorted decreasingly carry
// increasing values, and the value intervals K_i they cut partition [n].
struct SourceBlocks {
    Permutation w;
    std::vector<int> source_positions;   // s_1 > s_2 > ... > s_{l+1}
    std::vector<std::vector<int>> blocks; // K_1, ..., K_{l+1}

    Composition block_composition() const;
};
SourceBlocks source_blocks(const Permutation& w, const HessenbergFunction& h);

// Degree-one specialization of the stabilizer indicator set J: defined
// only when w^[i] = s_i (i in T and i+1 in T union {n}); contains i
// exactly when A_i is nonempty, plus any dashed simple moves (none occur
// in this shape).
std::vector<int> J_indicator_degree1(const HessenbergFunction& h, int i);

// Everything the report/JSON surface carries for one h.
struct GeneratorReport {
    HessenbergFunction h;
    int max_k = -1; // largest degree included in G_by_k
    std::vector<std::vector<Permutation>> G_by_k;
    std::vector<Permutation> w_list;
    std::vector<std::vector<Permutation>> A_sets;
    std::vector<std::vector<Permutation>> P_sets;
    std::vector<Int> d;
    std::vector<Composition> alpha;
    std::vector<StabilizerShape> stabilizers;
};
GeneratorReport build_report(const HessenbergFunction& h, int max_k = -1);

} // namespace hessencomb
