#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "hessencomb/hessenberg.hpp"
#include "hessencomb/permutation.hpp"

namespace hessencomb {

// An acyclic orientation of G_h. direction[e] follows the lexicographic
// edge list of the graph: true means the edge {j,i} (j<i) is directed
// j -> i ("forward"), false means i -> j. Construction verifies
// acyclicity, so every value of this type is acyclic by invariant. The
// base graph is shared, keeping orientations cheap self-contained values.
class AcyclicOrientation {
  public:
    AcyclicOrientation(std::shared_ptr<const IncomparabilityGraph> graph,
                       std::vector<bool> forward);

    const IncomparabilityGraph& graph() const { return *graph_; }
    const std::vector<bool>& forward() const { return forward_; }
    int edge_count() const { return static_cast<int>(forward_.size()); }

    bool operator==(const AcyclicOrientation& other) const {
        return forward_ == other.forward_;
    }

  private:
    std::shared_ptr<const IncomparabilityGraph> graph_;
    std::vector<bool> forward_;
};

// The graph type G_{w,h}: the orientation data of o_h(w) recorded as the
// set of forward edges. Two permutations have the same graph type exactly
// when these agree.
struct GraphType {
    int n = 0;
    std::vector<bool> forward; // indexed like the G_h edge list

    bool operator==(const GraphType& other) const = default;
};

// o_h(w): edge {j,i} (j<i) directed j -> i iff w(j) < w(i).
AcyclicOrientation orient_from_perm(const Permutation& w, const HessenbergFunction& h);
GraphType graph_type(const Permutation& w, const HessenbergFunction& h);

// All acyclic orientations of G_h, enumerated by backtracking over the
// lexicographic edge list (forward branch first) so the output order is
// reproducible.
std::vector<AcyclicOrientation> enumerate_orientations(const HessenbergFunction& h);

// Edges directed from the larger vertex to the smaller one; grades O_h.
int descending_edge_count(const AcyclicOrientation& o);
// Edges directed small -> large; asc(o) + descending_edge_count(o) = |E|.
int asc(const AcyclicOrientation& o);

std::vector<int> sinks(const AcyclicOrientation& o);
std::vector<int> sources(const AcyclicOrientation& o);

// Inverse of orient_from_perm on the generator set: repeatedly peel the
// maximal source s and assign it the next value, so w(s_l) = l. The result
// satisfies orient_from_perm(w, h) == o and lies in G_h.
Permutation perm_from_orientation(const AcyclicOrientation& o, const HessenbergFunction& h);

bool same_graph_type(const Permutation& v, const Permutation& w, const HessenbergFunction& h);

// Partition of {w : ell_h(w) = k} into graph-type classes. Classes are
// sorted lexicographically, as is each class's member list.
std::vector<std::vector<Permutation>> graph_type_classes(const HessenbergFunction& h, int k);

// Is multiplying v by s_i (on the left) a dashed move, i.e. the positions
// p < q of the values i, i+1 satisfy q > h(p) so (v, s_i v) is not a GKM
// edge? Dashed moves preserve graph type.
bool is_dashed_move(const Permutation& v, int i, const HessenbergFunction& h);

// A chain of dashed moves w -> s_{i_1} w -> s_{i_2} s_{i_1} w -> ... -> u,
// or nullopt when w and u have different graph types. Among all chains the
// shortest one is returned, ties broken lexicographically.
std::optional<std::vector<int>> dashed_chain(const Permutation& w, const Permutation& u,
                                             const HessenbergFunction& h);

} // namespace hessencomb
