#include "hessencomb/orientation.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "hessencomb/core.hpp"
#include "hessencomb/errors.hpp"

namespace hessencomb {

namespace {

std::vector<std::vector<int>> directed_adjacency(const IncomparabilityGraph& g,
                                                 const std::vector<bool>& forward) {
    std::vector<std::vector<int>> adj(g.n + 1);
    for (size_t e = 0; e < g.edges.size(); ++e) {
        auto [j, i] = g.edges[e];
        if (forward[e])
            adj[j].push_back(i);
        else
            adj[i].push_back(j);
    }
    return adj;
}

bool is_acyclic(const IncomparabilityGraph& g, const std::vector<bool>& forward) {
    auto adj = directed_adjacency(g, forward);
    std::vector<int> color(g.n + 1, 0);
    std::vector<int> stack;
    for (int start = 1; start <= g.n; ++start) {
        if (color[start] != 0) continue;
        stack.push_back(start);
        while (!stack.empty()) {
            int v = stack.back();
            if (color[v] == 0) {
                color[v] = 1;
                for (int u : adj[v]) {
                    if (color[u] == 1) return false;
                    if (color[u] == 0) stack.push_back(u);
                }
            } else {
                if (color[v] == 1) color[v] = 2;
                stack.pop_back();
            }
        }
    }
    return true;
}

void require_size(const Permutation& w, const HessenbergFunction& h) {
    if (w.size() != h.n()) throw SizeMismatch("permutation size differs from Hessenberg size");
}

} // namespace

AcyclicOrientation::AcyclicOrientation(std::shared_ptr<const IncomparabilityGraph> graph,
                                       std::vector<bool> forward)
    : graph_(std::move(graph)), forward_(std::move(forward)) {
    if (forward_.size() != graph_->edges.size())
        throw SizeMismatch("orientation has wrong number of edges");
    if (!is_acyclic(*graph_, forward_)) throw ParseError("orientation contains a directed cycle");
}

AcyclicOrientation orient_from_perm(const Permutation& w, const HessenbergFunction& h) {
    require_size(w, h);
    auto g = std::make_shared<IncomparabilityGraph>(h.graph());
    std::vector<bool> fwd(g->edges.size());
    for (size_t e = 0; e < g->edges.size(); ++e)
        fwd[e] = w(g->edges[e].first) < w(g->edges[e].second);
    return AcyclicOrientation(std::move(g), std::move(fwd));
}

GraphType graph_type(const Permutation& w, const HessenbergFunction& h) {
    require_size(w, h);
    const auto& g = h.graph();
    GraphType t;
    t.n = g.n;
    t.forward.resize(g.edges.size());
    for (size_t e = 0; e < g.edges.size(); ++e)
        t.forward[e] = w(g.edges[e].first) < w(g.edges[e].second);
    return t;
}

std::vector<AcyclicOrientation> enumerate_orientations(const HessenbergFunction& h) {
    auto shared_graph = std::make_shared<IncomparabilityGraph>(h.graph());
    const auto& g = *shared_graph;
    const int m = static_cast<int>(g.edges.size());
    std::vector<std::vector<int>> adj(g.n + 1); // edges oriented so far
    std::vector<bool> fwd(m, true);
    std::vector<AcyclicOrientation> out;

    // Reachability check over the partially oriented graph: adding a -> b
    // creates a cycle iff b already reaches a.
    auto reaches = [&](int from, int to) {
        std::vector<int> stack{from};
        std::vector<bool> seen(g.n + 1, false);
        seen[from] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (v == to) return true;
            for (int u : adj[v])
                if (!seen[u]) {
                    seen[u] = true;
                    stack.push_back(u);
                }
        }
        return false;
    };

    auto rec = [&](auto&& self, int e) -> void {
        if (e == m) {
            out.emplace_back(shared_graph, fwd);
            return;
        }
        auto [j, i] = g.edges[e];
        for (bool dir : {true, false}) {
            const int a = dir ? j : i;
            const int b = dir ? i : j;
            if (reaches(b, a)) continue;
            fwd[e] = dir;
            adj[a].push_back(b);
            self(self, e + 1);
            adj[a].pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

int descending_edge_count(const AcyclicOrientation& o) {
    int count = 0;
    for (bool f : o.forward())
        if (!f) ++count;
    return count;
}

int asc(const AcyclicOrientation& o) {
    return o.edge_count() - descending_edge_count(o);
}

namespace {
std::vector<int> degree_zero(const AcyclicOrientation& o, bool incoming) {
    const auto& g = o.graph();
    std::vector<int> deg(g.n + 1, 0);
    for (size_t e = 0; e < g.edges.size(); ++e) {
        auto [j, i] = g.edges[e];
        const int head = o.forward()[e] ? i : j;
        const int tail = o.forward()[e] ? j : i;
        ++deg[incoming ? head : tail];
    }
    std::vector<int> out;
    for (int v = 1; v <= g.n; ++v)
        if (deg[v] == 0) out.push_back(v);
    return out;
}
} // namespace

std::vector<int> sinks(const AcyclicOrientation& o) { return degree_zero(o, false); }
std::vector<int> sources(const AcyclicOrientation& o) { return degree_zero(o, true); }

Permutation perm_from_orientation(const AcyclicOrientation& o, const HessenbergFunction& h) {
    const auto& g = o.graph();
    if (g.n != h.graph().n || g.edges != h.graph().edges)
        throw SizeMismatch("orientation does not live on G_h");
    const int n = g.n;
    // indegree over the remaining vertices
    std::vector<int> indeg(n + 1, 0);
    std::vector<bool> removed(n + 1, false);
    auto head_of = [&](size_t e) { return o.forward()[e] ? g.edges[e].second : g.edges[e].first; };
    auto tail_of = [&](size_t e) { return o.forward()[e] ? g.edges[e].first : g.edges[e].second; };
    for (size_t e = 0; e < g.edges.size(); ++e) ++indeg[head_of(e)];

    std::vector<int> word(n);
    for (int step = 1; step <= n; ++step) {
        int source = -1;
        for (int v = n; v >= 1; --v)
            if (!removed[v] && indeg[v] == 0) {
                source = v; // maximal source
                break;
            }
        word[source - 1] = step;
        removed[source] = true;
        for (size_t e = 0; e < g.edges.size(); ++e)
            if (tail_of(e) == source && !removed[head_of(e)]) --indeg[head_of(e)];
    }
    return Permutation(std::move(word));
}

bool same_graph_type(const Permutation& v, const Permutation& w, const HessenbergFunction& h) {
    if (v.size() != w.size()) throw SizeMismatch("same_graph_type: sizes differ");
    return graph_type(v, h) == graph_type(w, h);
}

std::vector<std::vector<Permutation>> graph_type_classes(const HessenbergFunction& h, int k) {
    if (h.n() > 9) throw BudgetExceeded("graph_type_classes enumerates S_n only for n <= 9");
    std::map<std::vector<bool>, std::vector<Permutation>> by_type;
    for (const Permutation& w : all_permutations(h.n()))
        if (ell_h(w, h) == k) by_type[graph_type(w, h).forward].push_back(w);
    std::vector<std::vector<Permutation>> classes;
    classes.reserve(by_type.size());
    for (auto& [type, members] : by_type) {
        std::sort(members.begin(), members.end());
        classes.push_back(std::move(members));
    }
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return classes;
}

bool is_dashed_move(const Permutation& v, int i, const HessenbergFunction& h) {
    require_size(v, h);
    if (i < 1 || i >= v.size()) throw IndexOutOfRange("simple reflection index out of [1,n-1]");
    int p = v.position_of(i);
    int q = v.position_of(i + 1);
    if (p > q) std::swap(p, q);
    return q > h(p);
}

std::optional<std::vector<int>> dashed_chain(const Permutation& w, const Permutation& u,
                                             const HessenbergFunction& h) {
    if (w.size() != u.size()) throw SizeMismatch("dashed_chain: sizes differ");
    require_size(w, h);
    if (!same_graph_type(w, u, h)) return std::nullopt;
    if (w == u) return std::vector<int>{};

    // Distances from u over dashed moves (symmetric), then a greedy walk
    // from w picking the smallest reflection index that moves closer; this
    // realizes the shortest-then-lexicographic choice.
    std::map<Permutation, int> dist;
    std::deque<Permutation> queue;
    dist[u] = 0;
    queue.push_back(u);
    while (!queue.empty()) {
        Permutation v = queue.front();
        queue.pop_front();
        for (int i = 1; i < v.size(); ++i) {
            if (!is_dashed_move(v, i, h)) continue;
            Permutation next = v.left_multiply_simple(i);
            if (dist.emplace(next, dist[v] + 1).second) queue.push_back(next);
        }
    }
    auto it = dist.find(w);
    if (it == dist.end()) return std::nullopt; // cannot happen for equal types
    std::vector<int> chain;
    Permutation cur = w;
    int remaining = it->second;
    while (remaining > 0) {
        for (int i = 1; i < cur.size(); ++i) {
            if (!is_dashed_move(cur, i, h)) continue;
            Permutation next = cur.left_multiply_simple(i);
            auto dn = dist.find(next);
            if (dn != dist.end() && dn->second == remaining - 1) {
                chain.push_back(i);
                cur = std::move(next);
                --remaining;
                break;
            }
        }
    }
    return chain;
}

} // namespace hessencomb
