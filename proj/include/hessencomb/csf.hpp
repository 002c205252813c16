#pragma once

#include <string>
#include <vector>

#include "hessencomb/hessenberg.hpp"
#include "hessencomb/symfunc.hpp"

namespace hessencomb {

// X_{G_h}(x,t) expanded in both the monomial and the elementary basis.
// The m_lambda coefficient is the generating polynomial, over proper
// colorings kappa with color i used lambda_i times, of
//   asc(kappa) = |{ {a,b} in E(G_h) : a < b, kappa(a) < kappa(b) }|.
// This coloring-weighted definition is the one external import of the
// library (it originates in the chromatic quasisymmetric function
// literature, not here); everything downstream checks against it.
struct CsfExpansion {
    HessenbergFunction h;
    SymFunc m_coeffs; // basis m
    SymFunc e_coeffs; // basis e, equal as a symmetric function

    explicit CsfExpansion(HessenbergFunction hf)
        : h(std::move(hf)), m_coeffs(Basis::m, h.n()), e_coeffs(Basis::e, h.n()) {}
};

CsfExpansion csf(const HessenbergFunction& h); // BudgetExceeded for n > 9

// m-type coefficient for an arbitrary color-multiplicity vector; used to
// check that the expansion is symmetric in the colors.
TPoly csf_coloring_poly(const HessenbergFunction& h, const std::vector<int>& multiplicities);

// One row of an identity check: both sides rendered canonically.
struct IdentityCheck {
    std::string id;
    std::string params;
    std::string lhs;
    std::string rhs;
    bool pass = false;
};

// Per sink count j: sum over length-j partitions of c_lambda(t) vs the
// asc-generating polynomial of orientations with j sinks.
std::vector<IdentityCheck> check_sink_identity(const HessenbergFunction& h);

// [t^1] of the e-expansion vs sum_i e_{sort(alpha^i)}.
IdentityCheck check_chow_h2(const HessenbergFunction& h);

// (a) total dimensions: sum_lambda c_lambda(t) dim M^lambda = sum_w t^{ell_h(w)};
// (b) invariant dimensions: sum_lambda c_lambda(t) = sum_k |G_h^k| t^k.
std::vector<IdentityCheck> check_brosnan_chow(const HessenbergFunction& h);

// Coefficients with a negative entry, if any; empirical e-positivity scan.
std::vector<std::string> e_negativity_findings(const CsfExpansion& x);

// Disk cache for CSF expansions, keyed by the h-string and basis. The
// directory comes from HESSENCOMB_CACHE, falling back to the given default.
std::string cache_directory(const std::string& fallback = ".hessencomb-cache");
SymFunc csf_cached(const HessenbergFunction& h, Basis basis, const std::string& cache_dir);

} // namespace hessencomb
