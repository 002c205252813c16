#pragma once

#include <optional>
#include <vector>

#include "hessencomb/hessenberg.hpp"
#include "hessencomb/permutation.hpp"

namespace hessencomb {

// The h-relative inversion count
//   ell_h(w) = |{ (j,i) : 1 <= j < i <= h(j), w(j) > w(i) }|.
// Coincides with the Coxeter length when h = (n,...,n).
int ell_h(const Permutation& w, const HessenbergFunction& h);

// Number of ascent pairs (j,i), j < i <= h(j), w(j) < w(i); this is the
// dimension of the minus cell, N_h - ell_h(w).
int minus_cell_dimension(const Permutation& w, const HessenbergFunction& h);

std::vector<int> descent_set(const Permutation& w);

// Entry k counts permutations with ell_h = k; entries sum to n!.
std::vector<long long> poincare_coefficients(const HessenbergFunction& h);

// Bruhat order via the sorted-prefix criterion: v <= w iff for every k the
// ascending k-tuple of v(1..k) is entrywise <= that of w(1..k).
bool bruhat_leq(const Permutation& v, const Permutation& w);

// The involution (iota(w))(i) = n - w(i) + 1.
Permutation iota(const Permutation& w);

// Cell of w in the nilpotent Hessenberg variety: empty (nullopt) unless
// w^{-1}(w(j)-1) <= h(j) for all j (convention w(0)=0, so w(j)=1 is
// vacuous); otherwise the dimension, which equals ell_h(w).
std::optional<int> nilpotent_cell(const Permutation& w, const HessenbergFunction& h);

} // namespace hessencomb
