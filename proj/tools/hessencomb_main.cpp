// hessencomb: combinatorics of regular semisimple Hessenberg varieties in
// type A. Subcommands cover generator sets, acyclic orientations, the A_i
// correction sets, graph-type classes, chromatic quasisymmetric functions,
// GKM class checking, and the exhaustive verification suites.
//
// Exit codes: 0 success, 1 identity/membership failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hessencomb/core.hpp"
#include "hessencomb/csf.hpp"
#include "hessencomb/errors.hpp"
#include "hessencomb/generators.hpp"
#include "hessencomb/gkm.hpp"
#include "hessencomb/json_io.hpp"
#include "hessencomb/orientation.hpp"
#include "hessencomb/universe.hpp"
#include "hessencomb/verify.hpp"

namespace hc = hessencomb;
using nlohmann::json;

namespace {

std::string perm_list(const std::vector<hc::Permutation>& ws) {
    std::ostringstream out;
    for (size_t i = 0; i < ws.size(); ++i) {
        if (i) out << ' ';
        out << ws[i].str();
    }
    return out.str();
}

int cmd_report(const std::string& h_str, bool as_json, int max_k) {
    const auto h = hc::HessenbergFunction::parse(h_str);
    const auto report = hc::build_report(h, max_k);
    if (as_json) {
        std::cout << hc::dump_canonical(hc::report_to_json(report));
        return 0;
    }
    std::cout << "h = (" << h.str() << ")  n = " << h.n()
              << "  N_h = " << h.complex_dimension() << "\n";
    std::cout << "T = {";
    for (size_t i = 0; i < h.T().size(); ++i) std::cout << (i ? "," : "") << h.T()[i];
    std::cout << "}\n";
    for (size_t k = 0; k < report.G_by_k.size(); ++k)
        std::cout << "G_h^" << k << " (" << report.G_by_k[k].size()
                  << "): " << perm_list(report.G_by_k[k]) << "\n";
    for (int i = 1; i < h.n(); ++i) {
        const auto& stab = report.stabilizers[i - 1];
        std::cout << "i=" << i << "  w^[" << i << "]=" << report.w_list[i - 1].str()
                  << "  d_i=" << report.d[i - 1].str() << "  alpha^i=" << report.alpha[i - 1].str()
                  << "  stab=" << stab.composition.str() << (stab.exact ? "" : " (lower bound)")
                  << "\n";
        std::cout << "    A_" << i << " (" << report.A_sets[i - 1].size()
                  << "): " << perm_list(report.A_sets[i - 1]) << "\n";
        std::cout << "    P_" << i << " (" << report.P_sets[i - 1].size()
                  << "): " << perm_list(report.P_sets[i - 1]) << "\n";
    }
    std::cout << "dim H^2 = " << hc::dim_H2(h).str() << "\n";
    return 0;
}

int cmd_generators(const std::string& h_str, int k, bool as_json) {
    const auto h = hc::HessenbergFunction::parse(h_str);
    const auto by_degree =
        (k >= 0) ? std::vector<std::vector<hc::Permutation>>{hc::generators_k(h, k)}
                 : hc::generators_by_degree(h);
    if (as_json) {
        json out;
        out["format"] = hc::kFormatVersion;
        out["h"] = h.values();
        if (k >= 0) out["k"] = k;
        json levels = json::array();
        for (const auto& level : by_degree) {
            json arr = json::array();
            for (const auto& w : level) arr.push_back(w.str());
            levels.push_back(std::move(arr));
        }
        out["G_by_k"] = std::move(levels);
        std::cout << hc::dump_canonical(out);
        return 0;
    }
    for (size_t d = 0; d < by_degree.size(); ++d)
        std::cout << "G_h^" << (k >= 0 ? k : static_cast<int>(d)) << " ("
                  << by_degree[d].size() << "): " << perm_list(by_degree[d]) << "\n";
    return 0;
}

int cmd_orientations(const std::string& h_str, bool as_json) {
    const auto h = hc::HessenbergFunction::parse(h_str);
    const auto orientations = hc::enumerate_orientations(h);
    if (as_json) {
        json out;
        out["format"] = hc::kFormatVersion;
        out["h"] = h.values();
        out["count"] = orientations.size();
        json arr = json::array();
        for (const auto& o : orientations) arr.push_back(hc::orientation_to_json(o));
        out["orientations"] = std::move(arr);
        std::cout << hc::dump_canonical(out);
        return 0;
    }
    for (const auto& o : orientations) {
        const auto w = hc::perm_from_orientation(o, h);
        std::cout << "w=" << w.str() << "  asc=" << hc::asc(o)
                  << "  desc=" << hc::descending_edge_count(o) << "  sources={";
        const auto src = hc::sources(o);
        for (size_t i = 0; i < src.size(); ++i) std::cout << (i ? "," : "") << src[i];
        std::cout << "}  sinks={";
        const auto snk = hc::sinks(o);
        for (size_t i = 0; i < snk.size(); ++i) std::cout << (i ? "," : "") << snk[i];
        std::cout << "}\n";
    }
    std::cout << orientations.size() << " acyclic orientations\n";
    return 0;
}

int cmd_ai(const std::string& h_str, int only_i, bool as_json) {
    const auto h = hc::HessenbergFunction::parse(h_str);
    json out;
    out["format"] = hc::kFormatVersion;
    out["h"] = h.values();
    json sets = json::array();
    for (int i = 1; i < h.n(); ++i) {
        if (only_i > 0 && i != only_i) continue;
        const auto set = hc::A_i(h, i);
        json entry;
        entry["i"] = i;
        json arr = json::array();
        for (const auto& u : set) arr.push_back(u.str());
        entry["A"] = std::move(arr);
        if (h.in_T(i) && (h.in_T(i + 1) || i + 1 == h.n())) {
            json jind = json::array();
            for (int v : hc::J_indicator_degree1(h, i)) jind.push_back(v);
            entry["J"] = std::move(jind);
        }
        if (!as_json)
            std::cout << "A_" << i << " (" << set.size() << "): " << perm_list(set) << "\n";
        sets.push_back(std::move(entry));
    }
    out["A_sets"] = std::move(sets);
    if (as_json) std::cout << hc::dump_canonical(out);
    return 0;
}

int cmd_partition(const std::string& h_str, int k, bool as_json) {
    const auto h = hc::HessenbergFunction::parse(h_str);
    const auto classes = hc::graph_type_classes(h, k);
    if (as_json) {
        json out;
        out["format"] = hc::kFormatVersion;
        out["h"] = h.values();
        out["k"] = k;
        json arr = json::array();
        for (const auto& cls : classes) {
            json c = json::array();
            for (const auto& w : cls) c.push_back(w.str());
            arr.push_back(std::move(c));
        }
        out["classes"] = std::move(arr);
        std::cout << hc::dump_canonical(out);
        return 0;
    }
    for (const auto& cls : classes) {
        hc::Permutation gen = cls.front();
        for (const auto& w : cls)
            if (hc::in_generator_set(w, h)) gen = w;
        std::cout << "[" << gen.str() << "] (" << cls.size() << "): " << perm_list(cls) << "\n";
    }
    std::cout << classes.size() << " graph-type classes at level " << k << "\n";
    return 0;
}

int cmd_csf(const std::string& h_str, const std::string& basis_str, bool as_json, bool no_cache,
            const std::string& cache_dir_flag) {
    const auto h = hc::HessenbergFunction::parse(h_str);
    const hc::Basis basis = hc::parse_basis(basis_str);
    hc::SymFunc f;
    if (no_cache) {
        const auto x = hc::csf(h);
        switch (basis) {
            case hc::Basis::m: f = x.m_coeffs; break;
            case hc::Basis::e: f = x.e_coeffs; break;
            case hc::Basis::h: f = hc::omega_e_to_h(x.e_coeffs); break;
        }
    } else {
        const std::string dir =
            cache_dir_flag.empty() ? hc::cache_directory() : cache_dir_flag;
        f = hc::csf_cached(h, basis, dir);
    }
    if (as_json)
        std::cout << hc::symfunc_to_json_text(f);
    else
        std::cout << "X_{G_h} (" << hc::basis_name(basis) << "-basis) = " << f.str() << "\n";
    return 0;
}

int cmd_gkm_check(const std::string& h_str, const std::string& classes_file, bool as_json) {
    const auto h = hc::HessenbergFunction::parse(h_str);
    const auto g = hc::build_gkm(h);

    std::ifstream in(classes_file);
    if (!in) throw hc::ParseError("cannot open classes file '" + classes_file + "'");
    json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded()) throw hc::ParseError("invalid JSON in '" + classes_file + "'");

    std::vector<hc::EquivariantClass> classes;
    if (doc.is_object() && doc.contains("classes"))
        for (const auto& c : doc["classes"]) classes.push_back(hc::class_from_json(c));
    else
        classes.push_back(hc::class_from_json(doc));

    json results = json::array();
    bool all_ok = true;
    for (size_t idx = 0; idx < classes.size(); ++idx) {
        const bool ok = hc::is_equivariant_class(g, classes[idx]);
        all_ok = all_ok && ok;
        json entry;
        entry["index"] = idx;
        entry["is_class"] = ok;
        results.push_back(std::move(entry));
        if (!as_json)
            std::cout << "class " << idx << ": " << (ok ? "member" : "NOT a member") << "\n";
    }
    if (as_json) {
        json out;
        out["format"] = hc::kFormatVersion;
        out["h"] = h.values();
        out["results"] = std::move(results);
        out["all_pass"] = all_ok;
        std::cout << hc::dump_canonical(out);
    }
    return all_ok ? 0 : 1;
}

int cmd_verify(const std::string& suite, int n_max, int jobs, bool as_json, bool verbose) {
    hc::SuiteOptions options;
    options.n_max = n_max;
    options.jobs = jobs;
    const auto report = hc::run_suite(suite, options);
    if (as_json)
        std::cout << hc::render_report_json(report);
    else
        std::cout << hc::render_report_table(report, verbose);
    return report.all_pass() ? 0 : 1;
}

int cmd_universe(int n, bool as_json) {
    const auto universe = hc::enumerate_hessenberg(n);
    if (as_json) {
        json out;
        out["format"] = hc::kFormatVersion;
        out["n"] = n;
        out["count"] = universe.size();
        json arr = json::array();
        for (const auto& h : universe) arr.push_back(h.values());
        out["functions"] = std::move(arr);
        std::cout << hc::dump_canonical(out);
        return 0;
    }
    for (const auto& h : universe) std::cout << h.str() << "\n";
    std::cout << universe.size() << " Hessenberg functions on [" << n << "]\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorics of regular semisimple Hessenberg varieties"};
    app.require_subcommand(1);
    // --h is an option everywhere, so help is --help only
    app.set_help_flag("--help", "print help");

    std::string h_str, basis = "e", classes_file, suite = "all", cache_dir;
    int k = -1, only_i = -1, max_k = -1, n = 4, n_max = -1, jobs = 1;
    bool as_json = false, verbose = false, no_cache = false;

    auto add_subcommand = [&](const std::string& name, const std::string& desc) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->set_help_flag("--help", "print help");
        return sub;
    };

    auto* report = add_subcommand("report", "full generator report for one h");
    report->add_option("--h", h_str, "Hessenberg function, e.g. 2,4,4,4")->required();
    report->add_flag("--json", as_json, "emit JSON");
    report->add_option("--max-k", max_k, "largest degree to include in G_by_k");

    auto* generators = add_subcommand("generators", "generator sets G_h^k");
    generators->add_option("--h", h_str)->required();
    generators->add_option("--k", k, "restrict to one degree");
    generators->add_flag("--json", as_json);

    auto* orientations = add_subcommand("orientations", "acyclic orientations of G_h");
    orientations->add_option("--h", h_str)->required();
    orientations->add_flag("--json", as_json);

    auto* ai = add_subcommand("ai", "the correction sets A_i");
    ai->add_option("--h", h_str)->required();
    ai->add_option("--i", only_i, "restrict to one index");
    ai->add_flag("--json", as_json);

    auto* partition = add_subcommand("partition", "graph-type classes at one degree");
    partition->add_option("--h", h_str)->required();
    partition->add_option("--k", k, "degree (default 1)");
    partition->add_flag("--json", as_json);

    auto* csf = add_subcommand("csf", "chromatic quasisymmetric function of G_h");
    csf->add_option("--h", h_str)->required();
    csf->add_option("--basis", basis, "m, e, or h (default e)");
    csf->add_flag("--json", as_json);
    csf->add_flag("--no-cache", no_cache, "skip the disk cache");
    csf->add_option("--cache-dir", cache_dir, "cache directory (default HESSENCOMB_CACHE or .hessencomb-cache)");

    auto* gkm_check = add_subcommand("gkm-check", "equivariant class membership");
    gkm_check->add_option("--h", h_str)->required();
    gkm_check->add_option("--classes", classes_file, "JSON file with one class or {classes:[...]}")
        ->required();
    gkm_check->add_flag("--json", as_json);

    auto* verify = add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "counts|chow|sinks|brosnan-chow|lemmas|gkm|all");
    verify->add_option("--n-max", n_max, "override the per-suite default bound");
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_flag("--json", as_json);
    verify->add_flag("--verbose", verbose, "print passing identities too");

    auto* universe = add_subcommand("universe", "all Hessenberg functions on [n]");
    universe->add_option("--n", n)->required();
    universe->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (report->parsed()) return cmd_report(h_str, as_json, max_k);
        if (generators->parsed()) return cmd_generators(h_str, k, as_json);
        if (orientations->parsed()) return cmd_orientations(h_str, as_json);
        if (ai->parsed()) return cmd_ai(h_str, only_i, as_json);
        if (partition->parsed()) return cmd_partition(h_str, k < 0 ? 1 : k, as_json);
        if (csf->parsed()) return cmd_csf(h_str, basis, as_json, no_cache, cache_dir);
        if (gkm_check->parsed()) return cmd_gkm_check(h_str, classes_file, as_json);
        if (verify->parsed()) return cmd_verify(suite, n_max, jobs, as_json, verbose);
        if (universe->parsed()) return cmd_universe(n, as_json);
    } catch (const hessencomb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
