#include "hessencomb/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "hessencomb/core.hpp"
#include "hessencomb/errors.hpp"
#include "hessencomb/generators.hpp"
#include "hessencomb/gkm.hpp"
#include "hessencomb/json_io.hpp"
#include "hessencomb/orientation.hpp"
#include "hessencomb/universe.hpp"

namespace hessencomb {

namespace {

using Job = std::function<std::vector<IdentityCheck>()>;

std::vector<IdentityCheck> run_jobs(const std::vector<Job>& jobs, int workers) {
    std::vector<std::vector<IdentityCheck>> slots(jobs.size());
    if (workers <= 1) {
        for (size_t i = 0; i < jobs.size(); ++i) slots[i] = jobs[i]();
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1))
                slots[i] = jobs[i]();
        };
        std::vector<std::thread> threads;
        for (int t = 0; t < workers; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    std::vector<IdentityCheck> out;
    for (auto& s : slots)
        for (auto& e : s) out.push_back(std::move(e));
    return out;
}

std::string vec_str(const std::vector<long long>& v) {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out << ',';
        out << v[i];
    }
    out << ')';
    return out.str();
}

std::string perm_set_str(const std::vector<Permutation>& ws) {
    std::ostringstream out;
    out << '{';
    for (size_t i = 0; i < ws.size(); ++i) {
        if (i) out << ',';
        out << ws[i].str();
    }
    out << '}';
    return out.str();
}

IdentityCheck make_check(std::string id, std::string params, std::string lhs, std::string rhs) {
    IdentityCheck c;
    c.id = std::move(id);
    c.params = std::move(params);
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    c.pass = (c.lhs == c.rhs);
    return c;
}

// Permutations with descent set exactly {i}: ascending prefix/suffix
// splits at i, skipping the identity arrangement.
std::vector<Permutation> single_descent_permutations(int n) {
    std::vector<Permutation> out;
    for (int i = 1; i < n; ++i) {
        std::vector<int> idx(i);
        for (int q = 0; q < i; ++q) idx[q] = q + 1;
        while (true) {
            std::vector<int> word(idx.begin(), idx.end());
            std::vector<bool> used(n + 1, false);
            for (int v : idx) used[v] = true;
            for (int v = 1; v <= n; ++v)
                if (!used[v]) word.push_back(v);
            if (word[i - 1] > word[i]) out.emplace_back(word);
            int pos = i - 1;
            while (pos >= 0 && idx[pos] == n - (i - 1 - pos)) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int q = pos + 1; q < i; ++q) idx[q] = idx[q - 1] + 1;
        }
    }
    return out;
}

long long count_ell_h_equal_1(const HessenbergFunction& h) {
    long long count = 0;
    if (h.n() <= 6) {
        for (const Permutation& w : all_permutations(h.n()))
            if (ell_h(w, h) == 1) ++count;
    } else {
        // ell_h(w) = 1 forces a single descent; enumerate only those.
        for (const Permutation& w : single_descent_permutations(h.n()))
            if (ell_h(w, h) == 1) ++count;
    }
    return count;
}

// ---------------------------------------------------------------- counts

std::vector<IdentityCheck> counts_for(const HessenbergFunction& h) {
    std::vector<IdentityCheck> out;
    const std::string hs = "h=" + h.str();
    const int n = h.n();

    const auto by_degree = generators_by_degree(h);
    std::vector<long long> g_sizes(by_degree.size());
    for (size_t k = 0; k < by_degree.size(); ++k)
        g_sizes[k] = static_cast<long long>(by_degree[k].size());

    std::vector<long long> o_sizes(h.complex_dimension() + 1, 0);
    const auto orientations = enumerate_orientations(h);
    for (const auto& o : orientations) ++o_sizes[descending_edge_count(o)];
    out.push_back(make_check("counts/G-vs-O", hs, vec_str(g_sizes), vec_str(o_sizes)));

    out.push_back(make_check("counts/O1-size", hs, std::to_string(o_sizes.size() > 1 ? o_sizes[1] : 0),
                             std::to_string(n - 1)));
    out.push_back(
        make_check("counts/G0-size", hs, std::to_string(g_sizes.empty() ? 0 : g_sizes[0]), "1"));

    auto w_list = canonical_w(h);
    std::sort(w_list.begin(), w_list.end());
    out.push_back(
        make_check("counts/G1-canonical", hs, perm_set_str(by_degree[1]), perm_set_str(w_list)));

    const auto poincare = poincare_coefficients(h);
    long long total = 0;
    for (long long c : poincare) total += c;
    Int fact = factorial(n);
    out.push_back(make_check("counts/poincare-sum", hs, std::to_string(total), fact.str()));

    // graph-type classes partition each level and meet G_h exactly once
    bool classes_ok = true;
    for (int k = 0; k <= h.complex_dimension(); ++k) {
        const auto classes = graph_type_classes(h, k);
        if (static_cast<long long>(classes.size()) != g_sizes[k]) classes_ok = false;
        long long members = 0;
        for (const auto& cls : classes) {
            members += static_cast<long long>(cls.size());
            int generators_in_class = 0;
            for (const Permutation& w : cls)
                if (in_generator_set(w, h)) ++generators_in_class;
            if (generators_in_class != 1) classes_ok = false;
        }
        if (members != poincare[k]) classes_ok = false;
    }
    out.push_back(make_check("counts/class-partition", hs, classes_ok ? "ok" : "violated", "ok"));

    // dim H^2 by three routes
    Int route_d = dim_H2(h);
    Int route_p = 0;
    for (int i = 1; i < n; ++i) route_p += Int(static_cast<long long>(P_i(h, i).size()));
    long long route_direct = count_ell_h_equal_1(h);
    out.push_back(make_check("counts/dimH2-routes", hs,
                             route_d.str() + "/" + route_p.str() + "/" + std::to_string(route_direct),
                             route_d.str() + "/" + route_d.str() + "/" + route_d.str()));

    Int alpha_total = 0;
    for (int i = 1; i < n; ++i) alpha_total += multinomial_dim(alpha_i(h, i));
    out.push_back(make_check("counts/alpha-multinomial", hs, alpha_total.str(), dim_H2(h).str()));
    return out;
}

// ---------------------------------------------------------------- lemmas

std::vector<IdentityCheck> lemmas_for(const HessenbergFunction& h) {
    std::vector<IdentityCheck> out;
    const std::string hs = "h=" + h.str();
    const int n = h.n();

    // iota bijection between the nilpotent cell conditions and G_h
    {
        bool bijection = true;
        std::vector<long long> dims_nilp(h.complex_dimension() + 1, 0);
        std::vector<long long> dims_minus(h.complex_dimension() + 1, 0);
        for (const Permutation& w : all_permutations(n)) {
            const auto cell = nilpotent_cell(w, h);
            const Permutation v = iota(w);
            std::optional<int> minus;
            if (in_generator_set(v, h)) minus = minus_cell_dimension(v, h);
            if (cell != minus) bijection = false;
            if (cell) ++dims_nilp[*cell];
            if (minus) ++dims_minus[*minus];
        }
        out.push_back(make_check("lemmas/iota-bijection", hs,
                                 (bijection ? "bijective " : "broken ") + vec_str(dims_nilp),
                                 "bijective " + vec_str(dims_minus)));
    }

    // descents of A_i avoid T-indices >= i
    for (int i = 1; i < n; ++i) {
        std::set<int> descents;
        for (const Permutation& u : A_i(h, i))
            for (int d : u.descent_set()) descents.insert(d);
        std::vector<int> bad;
        for (int j : h.T())
            if (j >= i && descents.count(j)) bad.push_back(j);
        std::ostringstream lhs;
        lhs << '{';
        for (size_t q = 0; q < bad.size(); ++q) lhs << (q ? "," : "") << bad[q];
        lhs << '}';
        out.push_back(
            make_check("lemmas/Ai-descents-avoid-T", hs + " i=" + std::to_string(i), lhs.str(), "{}"));
    }

    // A_j cap P_i is the predicted singleton for i = t_a < j < t_{a+1}
    {
        std::vector<int> T = h.T();
        T.push_back(n);
        for (size_t a = 0; a + 1 < T.size(); ++a) {
            const int i = T[a];
            if (h.in_T(i + 1) || i + 1 == n) continue; // no gap after t_a
            const auto Pi = P_i(h, i);
            for (int j = i + 1; j < T[a + 1]; ++j) {
                const auto Aj = A_i(h, j);
                std::vector<Permutation> inter;
                std::set_intersection(Aj.begin(), Aj.end(), Pi.begin(), Pi.end(),
                                      std::back_inserter(inter));
                Permutation expected = canonical_w_i(h, i);
                for (int s = n - 1; s >= j + 1; --s) expected = expected.left_multiply_simple(s);
                out.push_back(make_check("lemmas/Aj-cap-Pi",
                                         hs + " i=" + std::to_string(i) + " j=" + std::to_string(j),
                                         perm_set_str(inter), "{" + expected.str() + "}"));
            }
        }
    }

    // A_i is empty whenever T = [n-1]
    if (static_cast<int>(h.T().size()) == n - 1) {
        bool all_empty = true;
        for (int i = 1; i < n; ++i)
            if (!A_i(h, i).empty()) all_empty = false;
        out.push_back(make_check("lemmas/Ai-empty-full-T", hs, all_empty ? "empty" : "nonempty",
                                 "empty"));
    }

    // P_i: definition vs closed form, and the counting formula
    for (int i = 1; i < n; ++i) {
        const auto direct = P_i(h, i);
        out.push_back(make_check("lemmas/Pi-closed-form", hs + " i=" + std::to_string(i),
                                 perm_set_str(direct), perm_set_str(P_i_closed_form(h, i))));
        out.push_back(make_check("lemmas/Pi-cardinality", hs + " i=" + std::to_string(i),
                                 std::to_string(direct.size()), P_i_cardinality(h, i).str()));
    }

    // source blocks: monotone values, partition of [n], w^[i] matches alpha^i
    {
        bool ok = true;
        for (const auto& level : generators_by_degree(h))
            for (const Permutation& w : level) {
                const SourceBlocks sb = source_blocks(w, h);
                for (size_t q = 0; q + 1 < sb.source_positions.size(); ++q) {
                    if (sb.source_positions[q] <= sb.source_positions[q + 1]) ok = false;
                    if (w(sb.source_positions[q]) >= w(sb.source_positions[q + 1])) ok = false;
                }
                std::vector<int> all;
                for (const auto& block : sb.blocks) all.insert(all.end(), block.begin(), block.end());
                std::sort(all.begin(), all.end());
                std::vector<int> expected(n);
                for (int v = 1; v <= n; ++v) expected[v - 1] = v;
                if (all != expected) ok = false;
            }
        out.push_back(make_check("lemmas/source-blocks", hs, ok ? "ok" : "violated", "ok"));

        bool alpha_ok = true;
        for (int i = 1; i < n; ++i) {
            const auto sb = source_blocks(canonical_w_i(h, i), h);
            if (!(sb.block_composition().sorted() == alpha_i(h, i).sorted())) alpha_ok = false;
        }
        out.push_back(
            make_check("lemmas/source-blocks-alpha", hs, alpha_ok ? "ok" : "violated", "ok"));
    }

    // orientation round-trips
    {
        bool ok = true;
        for (const auto& level : generators_by_degree(h))
            for (const Permutation& w : level)
                if (!(perm_from_orientation(orient_from_perm(w, h), h) == w)) ok = false;
        for (const auto& o : enumerate_orientations(h))
            if (!(orient_from_perm(perm_from_orientation(o, h), h) == o)) ok = false;
        out.push_back(make_check("lemmas/orientation-roundtrip", hs, ok ? "ok" : "violated", "ok"));
    }

    // e-positivity scan (empirical; a failure here is a finding)
    {
        const auto findings = e_negativity_findings(csf(h));
        std::string lhs = findings.empty() ? "none" : findings.front();
        out.push_back(make_check("lemmas/e-positivity", hs, lhs, "none"));
    }

    // dashed chains stay inside the class and use only non-edges
    if (n <= 5) {
        bool ok = true;
        for (int k = 0; k <= h.complex_dimension() && ok; ++k)
            for (const auto& cls : graph_type_classes(h, k)) {
                Permutation gen = cls.front();
                for (const Permutation& w : cls)
                    if (in_generator_set(w, h)) gen = w;
                for (const Permutation& u : cls) {
                    const auto chain = dashed_chain(gen, u, h);
                    if (!chain) {
                        ok = false;
                        continue;
                    }
                    Permutation cur = gen;
                    for (int s : *chain) {
                        const Permutation next = cur.left_multiply_simple(s);
                        if (edge_relation(cur, next, h) != EdgeRelation::Dashed) ok = false;
                        cur = next;
                    }
                    if (!(cur == u)) ok = false;
                }
            }
        out.push_back(make_check("lemmas/dashed-chain", hs, ok ? "ok" : "violated", "ok"));
    }

    // Bruhat criterion vs transposition-closure oracle
    if (n <= 4) {
        bool agree = true;
        const auto perms = all_permutations(n);
        // closure: leq[w] = everything reachable with length increasing
        std::map<Permutation, std::set<Permutation>> above;
        for (const Permutation& v : perms) {
            std::set<Permutation> seen{v};
            std::vector<Permutation> stack{v};
            while (!stack.empty()) {
                Permutation x = stack.back();
                stack.pop_back();
                for (int a = 1; a <= n; ++a)
                    for (int b = a + 1; b <= n; ++b) {
                        Permutation y = x.right_multiply_transposition(a, b);
                        if (y.inversions() > x.inversions() && !seen.count(y)) {
                            seen.insert(y);
                            stack.push_back(y);
                        }
                    }
            }
            above.emplace(v, std::move(seen));
        }
        for (const Permutation& v : perms)
            for (const Permutation& w : perms)
                if (bruhat_leq(v, w) != (above[v].count(w) > 0)) agree = false;
        out.push_back(make_check("lemmas/bruhat-oracle", hs, agree ? "ok" : "violated", "ok"));
    }

    return out;
}

// ------------------------------------------------------------------ gkm

std::vector<IdentityCheck> gkm_for(const HessenbergFunction& h) {
    std::vector<IdentityCheck> out;
    const std::string hs = "h=" + h.str();
    const int n = h.n();
    const GkmGraph g = build_gkm(h);

    {
        bool ok = true;
        for (const Permutation& v : g.vertices)
            for (auto [j, i] : h.graph().edges) {
                const Permutation w = v.right_multiply_transposition(j, i);
                const MultiPoly sum = g.edge_label(v, j, i) + g.edge_label(w, j, i);
                if (!sum.is_zero()) ok = false;
            }
        out.push_back(make_check("gkm/label-antisymmetry", hs, ok ? "ok" : "violated", "ok"));
    }

    {
        bool ok = is_equivariant_class(g, EquivariantClass::constant(n, 7));
        for (int k = 1; k <= n; ++k) {
            ok = ok && is_equivariant_class(g, EquivariantClass::coordinate(n, k));
            ok = ok && is_equivariant_class(g, EquivariantClass::global_variable(n, k));
        }
        out.push_back(make_check("gkm/membership-basic", hs, ok ? "ok" : "violated", "ok"));
    }

    {
        // p(e) = t_1 at one vertex and 0 elsewhere is never a class when
        // the graph has an edge at e.
        EquivariantClass c = EquivariantClass::constant(n, 0);
        c.values.at(Permutation::identity(n)) = MultiPoly::variable(n, 1);
        out.push_back(make_check("gkm/non-class-rejected", hs,
                                 is_equivariant_class(g, c) ? "accepted" : "rejected", "rejected"));
    }

    {
        std::seed_seq seed_data(h.values().begin(), h.values().end());
        std::mt19937 rng(seed_data);
        auto rand_int = [&](int lo, int hi) {
            return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
        };
        auto random_generator_class = [&]() {
            switch (rand_int(0, 2)) {
                case 0: return EquivariantClass::constant(n, rand_int(-3, 3));
                case 1: return EquivariantClass::coordinate(n, rand_int(1, n));
                default: return EquivariantClass::global_variable(n, rand_int(1, n));
            }
        };
        auto random_class = [&]() {
            EquivariantClass acc = EquivariantClass::constant(n, 0);
            const int terms = rand_int(1, 3);
            for (int t = 0; t < terms; ++t) {
                EquivariantClass term = random_generator_class();
                if (rand_int(0, 1)) term = term * random_generator_class();
                acc = rand_int(0, 1) ? acc + term : acc - term;
            }
            return acc;
        };
        const auto perms = all_permutations(n);
        auto random_perm = [&]() { return perms[rand_int(0, static_cast<int>(perms.size()) - 1)]; };

        const int samples = 13;
        bool member_ok = true, preserve_ok = true, law_ok = true, identity_ok = true;
        for (int s = 0; s < samples; ++s) {
            const EquivariantClass c = random_class();
            if (!is_equivariant_class(g, c)) member_ok = false;
            const Permutation u1 = random_perm(), u2 = random_perm();
            const EquivariantClass moved = dot_action(u1, c);
            if (!is_equivariant_class(g, moved)) preserve_ok = false;
            if (!(dot_action(u1.compose(u2), c) == dot_action(u1, dot_action(u2, c))))
                law_ok = false;
            if (!(dot_action(Permutation::identity(n), c) == c)) identity_ok = false;
        }
        out.push_back(make_check("gkm/random-membership", hs, member_ok ? "ok" : "violated", "ok"));
        out.push_back(
            make_check("gkm/dot-preserves-membership", hs, preserve_ok ? "ok" : "violated", "ok"));
        out.push_back(make_check("gkm/dot-group-law", hs, law_ok ? "ok" : "violated", "ok"));
        out.push_back(make_check("gkm/dot-identity", hs, identity_ok ? "ok" : "violated", "ok"));
    }

    {
        bool ok = true;
        for (const Permutation& v : g.vertices) {
            for (const Permutation& w : g.vertices) {
                const EdgeRelation r = edge_relation(v, w, h);
                if (edge_relation(w, v, h) != r) ok = false;
            }
        }
        out.push_back(make_check("gkm/relation-symmetric", hs, ok ? "ok" : "violated", "ok"));
    }
    return out;
}

struct SuiteSpec {
    std::string name;
    int default_n_max;
    std::function<std::vector<IdentityCheck>(const HessenbergFunction&)> per_h;
};

const std::vector<SuiteSpec>& suite_specs() {
    static const std::vector<SuiteSpec> specs = {
        {"counts", 6, counts_for},
        {"chow", 7, [](const HessenbergFunction& h) {
             return std::vector<IdentityCheck>{check_chow_h2(h)};
         }},
        {"sinks", 6, check_sink_identity},
        {"brosnan-chow", 6, check_brosnan_chow},
        {"lemmas", 6, lemmas_for},
        {"gkm", 4, gkm_for},
    };
    return specs;
}

void append_suite(std::vector<Job>& jobs, const SuiteSpec& spec, int n_max) {
    for (int n = 2; n <= n_max; ++n)
        for (const HessenbergFunction& h : enumerate_hessenberg(n))
            jobs.push_back([h, &spec] { return spec.per_h(h); });
}

} // namespace

int VerifyReport::passed() const {
    int count = 0;
    for (const auto& e : entries)
        if (e.pass) ++count;
    return count;
}

int VerifyReport::failed() const { return static_cast<int>(entries.size()) - passed(); }

VerifyReport run_suite(const std::string& name, const SuiteOptions& options) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Job> jobs;
    int effective_n_max = options.n_max;
    if (name == "all") {
        for (const auto& spec : suite_specs()) {
            const int n_max = options.n_max > 0 ? options.n_max : spec.default_n_max;
            effective_n_max = std::max(effective_n_max, n_max);
            append_suite(jobs, spec, n_max);
        }
    } else {
        const auto& specs = suite_specs();
        auto it = std::find_if(specs.begin(), specs.end(),
                               [&](const SuiteSpec& s) { return s.name == name; });
        if (it == specs.end()) throw UnknownSuite("unknown suite '" + name + "'");
        effective_n_max = options.n_max > 0 ? options.n_max : it->default_n_max;
        append_suite(jobs, *it, effective_n_max);
    }

    VerifyReport report;
    report.suite = name;
    report.n_max = effective_n_max;
    report.entries = run_jobs(jobs, std::max(1, options.jobs));
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

std::string render_report_table(const VerifyReport& report, bool verbose) {
    std::ostringstream out;
    for (const auto& e : report.entries) {
        if (!verbose && e.pass) continue;
        out << (e.pass ? "pass  " : "FAIL  ") << e.id << "  " << e.params;
        if (!e.pass || verbose) out << "  lhs=" << e.lhs << "  rhs=" << e.rhs;
        out << '\n';
    }
    out << "suite " << report.suite << ": " << report.passed() << "/" << report.entries.size()
        << " identities pass (n_max=" << report.n_max << ", " << report.wall_seconds << "s)\n";
    return out.str();
}

std::string render_report_json(const VerifyReport& report) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : report.entries) {
        nlohmann::json entry;
        entry["identity"] = e.id;
        entry["params"] = e.params;
        entry["lhs"] = e.lhs;
        entry["rhs"] = e.rhs;
        entry["pass"] = e.pass;
        entries.push_back(std::move(entry));
    }
    nlohmann::json out;
    out["format"] = kFormatVersion;
    out["suite"] = report.suite;
    out["n_max"] = report.n_max;
    out["entries"] = std::move(entries);
    out["summary"] = {{"total", report.entries.size()},
                      {"passed", report.passed()},
                      {"failed", report.failed()}};
    return dump_canonical(out);
}

} // namespace hessencomb
