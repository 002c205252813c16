#include "hessencomb/csf.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hessencomb/core.hpp"
#include "hessencomb/errors.hpp"
#include "hessencomb/generators.hpp"
#include "hessencomb/json_io.hpp"
#include "hessencomb/orientation.hpp"

namespace hessencomb {

TPoly csf_coloring_poly(const HessenbergFunction& h, const std::vector<int>& multiplicities) {
    const int n = h.n();
    int total = 0;
    for (int m : multiplicities) {
        if (m < 0) throw ValueOutOfRange("color multiplicities must be non-negative");
        total += m;
    }
    if (total != n) throw SizeMismatch("color multiplicities must sum to n");

    // The coefficient only involves l = #colors colors, so enumerating the
    // distinct rearrangements of the multiset color word is exact.
    std::vector<int> word;
    for (int c = 0; c < static_cast<int>(multiplicities.size()); ++c)
        for (int k = 0; k < multiplicities[c]; ++k) word.push_back(c + 1);
    std::sort(word.begin(), word.end());

    const auto& edges = h.graph().edges;
    TPoly poly;
    do {
        int ascents = 0;
        bool proper = true;
        for (auto [j, i] : edges) {
            const int cj = word[j - 1], ci = word[i - 1];
            if (cj == ci) {
                proper = false;
                break;
            }
            if (cj < ci) ++ascents;
        }
        if (proper) poly.add_monomial(ascents, 1);
    } while (std::next_permutation(word.begin(), word.end()));
    return poly;
}

CsfExpansion csf(const HessenbergFunction& h) {
    if (h.n() > 9) throw BudgetExceeded("chromatic function enumeration is limited to n <= 9");
    CsfExpansion out(h);
    for (const Partition& lambda : partitions_of(h.n())) {
        TPoly coeff = csf_coloring_poly(h, lambda.parts());
        if (!coeff.is_zero()) out.m_coeffs.add_term(lambda, coeff);
    }
    out.e_coeffs = m_to_e(out.m_coeffs);
    return out;
}

std::vector<IdentityCheck> check_sink_identity(const HessenbergFunction& h) {
    const CsfExpansion x = csf(h);
    const int n = h.n();

    std::vector<TPoly> lhs(n + 1), rhs(n + 1);
    for (const auto& [lambda, coeff] : x.e_coeffs.terms) lhs[lambda.length()] += coeff;
    for (const AcyclicOrientation& o : enumerate_orientations(h))
        rhs[sinks(o).size()].add_monomial(asc(o), 1);

    std::vector<IdentityCheck> out;
    for (int j = 1; j <= n; ++j) {
        if (lhs[j].is_zero() && rhs[j].is_zero()) continue;
        IdentityCheck c;
        c.id = "sink-identity";
        c.params = "h=" + h.str() + " j=" + std::to_string(j);
        c.lhs = lhs[j].str();
        c.rhs = rhs[j].str();
        c.pass = lhs[j] == rhs[j];
        out.push_back(std::move(c));
    }
    return out;
}

IdentityCheck check_chow_h2(const HessenbergFunction& h) {
    const CsfExpansion x = csf(h);
    SymFunc lhs(Basis::e, h.n());
    for (const auto& [lambda, coeff] : x.e_coeffs.terms) {
        const Int c1 = coeff.at(1);
        if (c1 != 0) lhs.add_term(lambda, TPoly::constant(c1));
    }
    SymFunc rhs(Basis::e, h.n());
    for (int i = 1; i < h.n(); ++i)
        rhs.add_term(alpha_i(h, i).sorted(), TPoly::constant(1));

    IdentityCheck c;
    c.id = "chow-h2";
    c.params = "h=" + h.str();
    c.lhs = lhs.str();
    c.rhs = rhs.str();
    c.pass = lhs == rhs;
    return c;
}

std::vector<IdentityCheck> check_brosnan_chow(const HessenbergFunction& h) {
    const CsfExpansion x = csf(h);

    TPoly lhs_total, lhs_invariant;
    for (const auto& [lambda, coeff] : x.e_coeffs.terms) {
        lhs_total += coeff * multinomial_dim(lambda);
        lhs_invariant += coeff;
    }

    TPoly rhs_total;
    {
        const auto counts = poincare_coefficients(h);
        for (int k = 0; k < static_cast<int>(counts.size()); ++k)
            rhs_total.add_monomial(k, Int(counts[k]));
    }

    TPoly rhs_invariant;
    {
        const auto by_degree = generators_by_degree(h);
        for (int k = 0; k < static_cast<int>(by_degree.size()); ++k)
            rhs_invariant.add_monomial(k, Int(static_cast<long long>(by_degree[k].size())));
    }

    std::vector<IdentityCheck> out;
    IdentityCheck a;
    a.id = "brosnan-chow-total-dim";
    a.params = "h=" + h.str();
    a.lhs = lhs_total.str();
    a.rhs = rhs_total.str();
    a.pass = lhs_total == rhs_total;
    out.push_back(std::move(a));

    IdentityCheck b;
    b.id = "brosnan-chow-invariant-dim";
    b.params = "h=" + h.str();
    b.lhs = lhs_invariant.str();
    b.rhs = rhs_invariant.str();
    b.pass = lhs_invariant == rhs_invariant;
    out.push_back(std::move(b));
    return out;
}

std::vector<std::string> e_negativity_findings(const CsfExpansion& x) {
    std::vector<std::string> findings;
    for (const auto& [lambda, coeff] : x.e_coeffs.terms)
        for (int k = 0; k <= coeff.degree(); ++k)
            if (coeff.at(k) < 0)
                findings.push_back("h=" + x.h.str() + " lambda=" + lambda.str() +
                                   " t^" + std::to_string(k) + " coefficient " +
                                   coeff.at(k).str());
    return findings;
}

std::string cache_directory(const std::string& fallback) {
    if (const char* env = std::getenv("HESSENCOMB_CACHE"); env && *env) return env;
    return fallback;
}

SymFunc csf_cached(const HessenbergFunction& h, Basis basis, const std::string& cache_dir) {
    namespace fs = std::filesystem;
    std::string key = h.str();
    std::replace(key.begin(), key.end(), ',', '-');
    const fs::path file = fs::path(cache_dir) / ("csf_" + key + "_" + basis_name(basis) + ".json");

    if (fs::exists(file)) {
        std::ifstream in(file);
        std::stringstream buf;
        buf << in.rdbuf();
        try {
            SymFunc cached = symfunc_from_json_text(buf.str());
            if (cached.basis == basis && cached.n == h.n()) return cached;
        } catch (const Error&) {
            // stale or incompatible cache entry: fall through and rebuild
        }
    }

    const CsfExpansion x = csf(h);
    SymFunc result;
    switch (basis) {
        case Basis::m: result = x.m_coeffs; break;
        case Basis::e: result = x.e_coeffs; break;
        case Basis::h: result = omega_e_to_h(x.e_coeffs); break;
    }
    std::error_code ec;
    fs::create_directories(file.parent_path(), ec);
    if (!ec) {
        std::ofstream out(file);
        out << symfunc_to_json_text(result) << '\n';
    }
    return result;
}

} // namespace hessencomb
