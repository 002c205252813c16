#pragma once

#include <map>
#include <string>
#include <vector>

#include "hessencomb/partitions.hpp"
#include "hessencomb/tpoly.hpp"

namespace hessencomb {

enum class Basis { m, e, h };

std::string basis_name(Basis b);
Basis parse_basis(const std::string& name);

// A homogeneous symmetric function of degree n with TPoly coefficients,
// tagged by the basis its index partitions refer to. Zero-coefficient
// terms are dropped, so equality is structural.
struct SymFunc {
    Basis basis = Basis::m;
    int n = 0;
    std::map<Partition, TPoly> terms;

    SymFunc() = default;
    SymFunc(Basis basis, int n) : basis(basis), n(n) {}

    void add_term(const Partition& lambda, const TPoly& coeff);
    void normalize(); // drop zero terms
    bool is_zero() const { return terms.empty(); }

    bool operator==(const SymFunc& other) const = default;

    std::string str() const;
};

// Transition matrix entries: e_mu = sum_lambda T[mu][lambda] m_lambda where
// T[mu][lambda] counts 0-1 matrices with row sums mu and column sums
// lambda. Rows/columns follow partitions_of(n) order. Matrices and their
// exact integer inverses are cached per n behind a mutex; population is
// idempotent.
const std::vector<std::vector<Int>>& e_to_m_matrix(int n);
const std::vector<std::vector<Int>>& m_to_e_matrix(int n);
Int e_to_m_determinant(int n); // +-1

SymFunc e_to_m(const SymFunc& f);
SymFunc m_to_e(const SymFunc& f);
// The omega involution sends e_lambda to h_lambda: same coefficients,
// different tag.
SymFunc omega_e_to_h(const SymFunc& f);

} // namespace hessencomb
