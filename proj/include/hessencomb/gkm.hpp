#pragma once

#include <map>
#include <string>
#include <vector>

#include "hessencomb/hessenberg.hpp"
#include "hessencomb/multipoly.hpp"
#include "hessencomb/permutation.hpp"

namespace hessencomb {

// The GKM moment graph of Hess(S,h): vertices are all of S_n, and v is
// joined to v s_{j,i} for every pair j < i <= h(j) with label
// t_{v(i)} - t_{v(j)}. Edges come in opposite pairs with opposite labels.
struct GkmGraph {
    HessenbergFunction h;
    std::vector<Permutation> vertices; // lexicographic

    explicit GkmGraph(HessenbergFunction hf);

    // Directed neighbors of v: (w, label(v -> w)).
    std::vector<std::pair<Permutation, MultiPoly>> neighbors(const Permutation& v) const;
    MultiPoly edge_label(const Permutation& v, int j, int i) const;
    int degree() const; // |E(G_h)|, the same at every vertex
};

GkmGraph build_gkm(const HessenbergFunction& h); // BudgetExceeded for n > 6

// A tuple of polynomials indexed by the vertices. Membership in the
// equivariant cohomology ring is the edge-divisibility condition; no
// homogeneity is required.
struct EquivariantClass {
    int n = 0;
    std::map<Permutation, MultiPoly> values;

    static EquivariantClass constant(int n, Int c);
    // v |-> t_{v(k)}; these generate together with the constants.
    static EquivariantClass coordinate(int n, int k);
    // v |-> t_m at every vertex.
    static EquivariantClass global_variable(int n, int m);

    EquivariantClass operator+(const EquivariantClass& other) const;
    EquivariantClass operator-(const EquivariantClass& other) const;
    EquivariantClass operator*(const EquivariantClass& other) const;

    bool operator==(const EquivariantClass& other) const = default;
};

// Divisibility test on every edge: p(v) - p(w) must vanish identically
// under the substitution t_{v(i)} := t_{v(j)}. Exact; no polynomial
// division involved.
bool is_equivariant_class(const GkmGraph& g, const EquivariantClass& c);

// Tymoczko's dot action: (u . c)(v) = c(u^{-1} v) with t_k renamed t_{u(k)}.
EquivariantClass dot_action(const Permutation& u, const EquivariantClass& c);

enum class EdgeRelation { Edge, Dashed, NotTransposition };
std::string edge_relation_name(EdgeRelation r);

// Classify the pair (v,w): Edge when w = v s_{j,i} with i <= h(j), Dashed
// when w = v s_{j,i} with i > h(j), NotTransposition otherwise.
EdgeRelation edge_relation(const Permutation& v, const Permutation& w,
                           const HessenbergFunction& h);

} // namespace hessencomb
