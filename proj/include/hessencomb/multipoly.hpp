#pragma once

#include <map>
#include <string>
#include <vector>

#include "hessencomb/bigint.hpp"
#include "hessencomb/permutation.hpp"

namespace hessencomb {

// Sparse polynomial in t_1..t_n with exact integer coefficients, stored in
// canonical form (no zero coefficients, exponent vectors of length n).
class MultiPoly {
  public:
    MultiPoly() = default;
    explicit MultiPoly(int n) : n_(n) {}

    static MultiPoly constant(int n, Int c);
    static MultiPoly variable(int n, int k); // t_k
    // t_a - t_b
    static MultiPoly linear_difference(int n, int a, int b);

    int vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, Int>& terms() const { return terms_; }

    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly operator+(const MultiPoly& other) const;
    MultiPoly operator-(const MultiPoly& other) const;
    MultiPoly operator*(const MultiPoly& other) const;
    MultiPoly operator*(const Int& scalar) const;
    MultiPoly operator-() const;

    // Identify t_a with t_b (substitute t_a := t_b).
    MultiPoly substitute(int a, int b) const;
    // Rename variables t_k -> t_{u(k)}.
    MultiPoly relabel(const Permutation& u) const;

    void add_term(std::vector<int> exps, Int coeff);

    bool operator==(const MultiPoly& other) const = default;

    std::string str() const;

  private:
    int n_ = 0;
    std::map<std::vector<int>, Int> terms_;
};

} // namespace hessencomb
