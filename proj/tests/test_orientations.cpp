#include <doctest.h>

#include <algorithm>
#include <set>

#include "hessencomb/core.hpp"
#include "hessencomb/errors.hpp"
#include "hessencomb/generators.hpp"
#include "hessencomb/orientation.hpp"
#include "hessencomb/universe.hpp"

using namespace hessencomb;

namespace {

Permutation P(const std::string& s) { return Permutation::parse(s); }
HessenbergFunction H(const std::string& s) { return HessenbergFunction::parse(s); }

// Brute-force oracle: all 2^m edge assignments, acyclicity by Kahn's
// algorithm. Independent of the backtracking enumerator.
std::set<std::vector<bool>> orientations_oracle(const HessenbergFunction& h) {
    const auto& g = h.graph();
    const int m = static_cast<int>(g.edges.size());
    std::set<std::vector<bool>> out;
    for (long long mask = 0; mask < (1LL << m); ++mask) {
        std::vector<bool> fwd(m);
        std::vector<int> indeg(g.n + 1, 0);
        std::vector<std::vector<int>> adj(g.n + 1);
        for (int e = 0; e < m; ++e) {
            fwd[e] = (mask >> e) & 1;
            const int from = fwd[e] ? g.edges[e].first : g.edges[e].second;
            const int to = fwd[e] ? g.edges[e].second : g.edges[e].first;
            adj[from].push_back(to);
            ++indeg[to];
        }
        std::vector<int> order;
        std::vector<int> queue;
        for (int v = 1; v <= g.n; ++v)
            if (indeg[v] == 0) queue.push_back(v);
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            order.push_back(v);
            for (int u : adj[v])
                if (--indeg[u] == 0) queue.push_back(u);
        }
        if (static_cast<int>(order.size()) == g.n) out.insert(fwd);
    }
    return out;
}

std::vector<bool> reversed_edges(const AcyclicOrientation& o) {
    std::vector<bool> rev;
    for (bool f : o.forward()) rev.push_back(!f);
    return rev;
}

} // namespace

TEST_CASE("orient_from_perm on h=(2,4,4,4)") {
    const auto h = H("2,4,4,4");
    // edge order: {1,2},{2,3},{2,4},{3,4}
    CHECK(orient_from_perm(Permutation::identity(4), h).forward() ==
          std::vector<bool>{true, true, true, true});
    CHECK(orient_from_perm(P("4123"), h).forward() ==
          std::vector<bool>{false, true, true, true});
    CHECK(orient_from_perm(P("3412"), h).forward() ==
          std::vector<bool>{true, false, false, true});
    CHECK_THROWS_AS(orient_from_perm(P("123"), h), SizeMismatch);
}

TEST_CASE("enumeration counts and grading") {
    const auto h = H("2,4,4,4");
    const auto orientations = enumerate_orientations(h);
    CHECK(orientations.size() == 12);
    std::vector<int> grading(5, 0);
    for (const auto& o : orientations) ++grading[descending_edge_count(o)];
    CHECK(grading == std::vector<int>{1, 3, 4, 3, 1});

    CHECK(enumerate_orientations(H("3,3,3")).size() == 6);
    CHECK(enumerate_orientations(H("2,2")).size() == 2);
}

TEST_CASE("enumeration agrees with the 2^m brute-force oracle") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& h : enumerate_hessenberg(n)) {
            std::set<std::vector<bool>> got;
            for (const auto& o : enumerate_orientations(h)) got.insert(o.forward());
            CHECK(got == orientations_oracle(h));
            CHECK(got.size() == enumerate_orientations(h).size()); // no duplicates
        }
}

TEST_CASE("asc and descending counts") {
    const auto h = H("2,4,4,4");
    const auto all_forward = orient_from_perm(Permutation::identity(4), h);
    CHECK(descending_edge_count(all_forward) == 0);
    CHECK(asc(all_forward) == 4);

    const auto k4 = H("4,4,4,4");
    CHECK(descending_edge_count(orient_from_perm(P("4321"), k4)) == 6);
    CHECK(asc(orient_from_perm(P("4123"), h)) == 3);

    const auto k3 = H("3,3,3");
    CHECK(asc(orient_from_perm(P("321"), k3)) == 0);
    for (const auto& o : enumerate_orientations(h))
        CHECK(asc(o) + descending_edge_count(o) == o.edge_count());
}

TEST_CASE("sinks and sources") {
    const auto h = H("2,4,4,4");
    const auto all_forward = orient_from_perm(Permutation::identity(4), h);
    CHECK(sources(all_forward) == std::vector<int>{1});
    CHECK(sinks(all_forward) == std::vector<int>{4});

    CHECK(sources(orient_from_perm(P("234156"), H("2,3,5,6,6,6"))) == std::vector<int>{1, 4});

    CHECK(sinks(orient_from_perm(P("321"), H("3,3,3"))) == std::vector<int>{1});

    for (const auto& o : enumerate_orientations(H("2,3,5,6,6,6"))) {
        CHECK_FALSE(sinks(o).empty());
        CHECK_FALSE(sources(o).empty());
    }
}

TEST_CASE("maximal-source peeling recovers the twelve generator representatives") {
    const auto h = H("2,4,4,4");
    CHECK(perm_from_orientation(orient_from_perm(Permutation::identity(4), h), h) ==
          Permutation::identity(4));

    // orientation with only {1,2} reversed
    auto g = std::make_shared<IncomparabilityGraph>(h.graph());
    const AcyclicOrientation one_rev(g, {false, true, true, true});
    CHECK(perm_from_orientation(one_rev, h) == P("4123"));

    std::set<std::string> reps;
    for (const auto& o : enumerate_orientations(h)) reps.insert(perm_from_orientation(o, h).str());
    CHECK(reps == std::set<std::string>{"1234", "4123", "2314", "1243", "4213", "4132", "3412",
                                        "2341", "4312", "4231", "3421", "4321"});
}

TEST_CASE("round trips between orientations and generators") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& h : enumerate_hessenberg(n)) {
            for (const auto& o : enumerate_orientations(h)) {
                const Permutation w = perm_from_orientation(o, h);
                CHECK(in_generator_set(w, h));
                CHECK(orient_from_perm(w, h) == o);
            }
            for (const auto& level : generators_by_degree(h))
                for (const Permutation& w : level)
                    CHECK(perm_from_orientation(orient_from_perm(w, h), h) == w);
        }
}

TEST_CASE("orientation type checks acyclicity") {
    const auto h = H("3,3,3");
    auto g = std::make_shared<IncomparabilityGraph>(h.graph());
    // edges {1,2},{1,3},{2,3}: 1->2, 2->3, 3->1 is a cycle
    CHECK_THROWS_AS(AcyclicOrientation(g, {true, false, true}), ParseError);
}

TEST_CASE("graph types and classes") {
    const auto h = H("2,3,5,6,6,6");
    for (const Permutation& w : all_permutations(4))
        CHECK(same_graph_type(w, w, H("2,4,4,4")));

    const auto classes = graph_type_classes(h, 1);
    std::multiset<size_t> sizes;
    for (const auto& cls : classes) sizes.insert(cls.size());
    CHECK(sizes == std::multiset<size_t>{1, 1, 3, 5, 14});

    for (int n = 2; n <= 5; ++n)
        for (const auto& hh : enumerate_hessenberg(n)) {
            std::vector<int> by_desc(hh.complex_dimension() + 1, 0);
            for (const auto& o : enumerate_orientations(hh)) ++by_desc[descending_edge_count(o)];
            for (int k = 0; k <= hh.complex_dimension(); ++k) {
                const auto cls = graph_type_classes(hh, k);
                CHECK(static_cast<int>(cls.size()) == by_desc[k]);
                for (const auto& c : cls) {
                    int gens = 0;
                    for (const Permutation& w : c)
                        if (in_generator_set(w, hh)) ++gens;
                    CHECK(gens == 1);
                }
            }
        }
}

TEST_CASE("O_h^1 always has n-1 elements") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& h : enumerate_hessenberg(n)) {
            int count = 0;
            for (const auto& o : enumerate_orientations(h))
                if (descending_edge_count(o) == 1) ++count;
            CHECK(count == n - 1);
        }
}

TEST_CASE("dashed chains") {
    const auto h = H("2,3,5,6,6,6");
    CHECK(dashed_chain(P("612345"), P("612345"), h) == std::vector<int>{});
    CHECK(dashed_chain(P("612345"), P("512346"), h) == std::vector<int>{5});
    // different graph types
    CHECK_FALSE(dashed_chain(P("612345"), P("123465"), h).has_value());
    CHECK_THROWS_AS(dashed_chain(P("21"), P("612345"), h), SizeMismatch);

    // every chain stays inside the class and each step is a non-edge move
    for (int n = 2; n <= 4; ++n)
        for (const auto& hh : enumerate_hessenberg(n))
            for (int k = 0; k <= hh.complex_dimension(); ++k)
                for (const auto& cls : graph_type_classes(hh, k)) {
                    Permutation gen = cls.front();
                    for (const Permutation& w : cls)
                        if (in_generator_set(w, hh)) gen = w;
                    for (const Permutation& u : cls) {
                        const auto chain = dashed_chain(gen, u, hh);
                        REQUIRE(chain.has_value());
                        Permutation cur = gen;
                        for (int s : *chain) {
                            CHECK(is_dashed_move(cur, s, hh));
                            CHECK(same_graph_type(cur, cur.left_multiply_simple(s), hh));
                            cur = cur.left_multiply_simple(s);
                        }
                        CHECK(cur == u);
                    }
                }
}

TEST_CASE("orient_from_perm is acyclic for every permutation") {
    // construction validates acyclicity, so surviving the sweep is the check
    for (int n = 2; n <= 5; ++n)
        for (const auto& h : enumerate_hessenberg(n))
            for (const Permutation& w : all_permutations(n))
                CHECK_NOTHROW(orient_from_perm(w, h));
}

TEST_CASE("dashed moves preserve graph type everywhere") {
    for (const auto& h : enumerate_hessenberg(4))
        for (const Permutation& v : all_permutations(4))
            for (int i = 1; i < 4; ++i)
                if (is_dashed_move(v, i, h))
                    CHECK(same_graph_type(v, v.left_multiply_simple(i), h));
}

TEST_CASE("reversing an acyclic orientation is acyclic") {
    const auto h = H("2,4,4,4");
    for (const auto& o : enumerate_orientations(h)) {
        auto g = std::make_shared<IncomparabilityGraph>(h.graph());
        CHECK_NOTHROW(AcyclicOrientation(g, reversed_edges(o)));
    }
}
