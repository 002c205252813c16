#include "hessencomb/gkm.hpp"

#include "hessencomb/errors.hpp"

namespace hessencomb {

GkmGraph::GkmGraph(HessenbergFunction hf) : h(std::move(hf)) {
    if (h.n() > 6) throw BudgetExceeded("GKM graph on S_n is limited to n <= 6");
    vertices = all_permutations(h.n());
}

MultiPoly GkmGraph::edge_label(const Permutation& v, int j, int i) const {
    return MultiPoly::linear_difference(h.n(), v(i), v(j));
}

std::vector<std::pair<Permutation, MultiPoly>> GkmGraph::neighbors(const Permutation& v) const {
    std::vector<std::pair<Permutation, MultiPoly>> out;
    for (auto [j, i] : h.graph().edges)
        out.emplace_back(v.right_multiply_transposition(j, i), edge_label(v, j, i));
    return out;
}

int GkmGraph::degree() const { return static_cast<int>(h.graph().edges.size()); }

GkmGraph build_gkm(const HessenbergFunction& h) { return GkmGraph(h); }

EquivariantClass EquivariantClass::constant(int n, Int c) {
    EquivariantClass out{n, {}};
    for (const Permutation& v : all_permutations(n)) out.values.emplace(v, MultiPoly::constant(n, c));
    return out;
}

EquivariantClass EquivariantClass::coordinate(int n, int k) {
    EquivariantClass out{n, {}};
    for (const Permutation& v : all_permutations(n))
        out.values.emplace(v, MultiPoly::variable(n, v(k)));
    return out;
}

EquivariantClass EquivariantClass::global_variable(int n, int m) {
    EquivariantClass out{n, {}};
    for (const Permutation& v : all_permutations(n)) out.values.emplace(v, MultiPoly::variable(n, m));
    return out;
}

namespace {
EquivariantClass combine(const EquivariantClass& a, const EquivariantClass& b,
                         MultiPoly (*op)(const MultiPoly&, const MultiPoly&)) {
    if (a.n != b.n) throw SizeMismatch("classes over different symmetric groups");
    EquivariantClass out{a.n, {}};
    for (const auto& [v, pa] : a.values) {
        auto it = b.values.find(v);
        if (it == b.values.end()) throw MissingVertex("class not defined at " + v.str());
        out.values.emplace(v, op(pa, it->second));
    }
    return out;
}
} // namespace

EquivariantClass EquivariantClass::operator+(const EquivariantClass& other) const {
    return combine(*this, other, +[](const MultiPoly& x, const MultiPoly& y) { return x + y; });
}

EquivariantClass EquivariantClass::operator-(const EquivariantClass& other) const {
    return combine(*this, other, +[](const MultiPoly& x, const MultiPoly& y) { return x - y; });
}

EquivariantClass EquivariantClass::operator*(const EquivariantClass& other) const {
    return combine(*this, other, +[](const MultiPoly& x, const MultiPoly& y) { return x * y; });
}

bool is_equivariant_class(const GkmGraph& g, const EquivariantClass& c) {
    if (c.n != g.h.n()) throw SizeMismatch("class size differs from GKM graph size");
    for (const Permutation& v : g.vertices)
        if (!c.values.count(v)) throw MissingVertex("class not defined at " + v.str());
    for (const Permutation& v : g.vertices) {
        const MultiPoly& pv = c.values.at(v);
        for (auto [j, i] : g.h.graph().edges) {
            const Permutation w = v.right_multiply_transposition(j, i);
            if (w < v) continue; // each unordered edge once
            const MultiPoly diff = pv - c.values.at(w);
            // divisibility by t_{v(i)} - t_{v(j)}
            if (!diff.substitute(v(i), v(j)).is_zero()) return false;
        }
    }
    return true;
}

EquivariantClass dot_action(const Permutation& u, const EquivariantClass& c) {
    if (u.size() != c.n) throw SizeMismatch("acting permutation has wrong size");
    const Permutation uinv = u.inverse();
    EquivariantClass out{c.n, {}};
    for (const auto& entry : c.values) {
        const Permutation& v = entry.first;
        auto it = c.values.find(uinv.compose(v));
        if (it == c.values.end()) throw MissingVertex("class not defined at " + v.str());
        out.values.emplace(v, it->second.relabel(u));
    }
    return out;
}

std::string edge_relation_name(EdgeRelation r) {
    switch (r) {
        case EdgeRelation::Edge: return "Edge";
        case EdgeRelation::Dashed: return "Dashed";
        case EdgeRelation::NotTransposition: return "NotTransposition";
    }
    return "?";
}

EdgeRelation edge_relation(const Permutation& v, const Permutation& w,
                           const HessenbergFunction& h) {
    if (v.size() != w.size() || v.size() != h.n())
        throw SizeMismatch("edge_relation: sizes differ");
    std::vector<int> diff;
    for (int p = 1; p <= v.size(); ++p)
        if (v(p) != w(p)) diff.push_back(p);
    if (diff.size() != 2) return EdgeRelation::NotTransposition;
    const int j = diff[0], i = diff[1];
    if (v(j) != w(i) || v(i) != w(j)) return EdgeRelation::NotTransposition;
    return i <= h(j) ? EdgeRelation::Edge : EdgeRelation::Dashed;
}

} // namespace hessencomb
