#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hessencomb {

// The incomparability graph G_h: vertices [n], edges {j,i} for j < i <= h(j).
// Edge list is kept in lexicographic order; all orientation code indexes
// into it.
struct IncomparabilityGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // (j,i) with j < i

    int edge_index(int j, int i) const; // -1 when {j,i} is not an edge
    std::vector<std::vector<int>> adjacency() const;
};

// A Hessenberg function h(1) <= ... <= h(n) with i <= h(i), restricted to
// the irreducible case h(i) >= i+1 for i < n. Derived data (the complex
// dimension N_h, the index set T_h and G_h) is computed at construction.
class HessenbergFunction {
  public:
    explicit HessenbergFunction(std::vector<int> values);

    int n() const { return static_cast<int>(values_.size()); }
    int operator()(int i) const { return values_[i - 1]; } // h(i), 1-based
    const std::vector<int>& values() const { return values_; }

    int complex_dimension() const { return dimension_; } // N_h
    const std::vector<int>& T() const { return T_; }      // T_h, sorted
    bool in_T(int i) const;
    const IncomparabilityGraph& graph() const { return graph_; }

    std::string str() const; // "2,4,4,4"
    static HessenbergFunction parse(const std::string& text);

    bool operator==(const HessenbergFunction& other) const { return values_ == other.values_; }

  private:
    std::vector<int> values_;
    int dimension_ = 0;
    std::vector<int> T_;
    IncomparabilityGraph graph_;
};

HessenbergFunction make_hessenberg(std::vector<int> values);

} // namespace hessencomb
