#pragma once

#include <string>
#include <vector>

#include "hessencomb/bigint.hpp"

namespace hessencomb {

// Polynomial in the grading variable t with exact integer coefficients.
// Trailing zeros are trimmed, so equal polynomials compare equal.
class TPoly {
  public:
    TPoly() = default;
    explicit TPoly(std::vector<Int> coeffs);
    static TPoly monomial(int degree, Int coeff = 1);
    static TPoly constant(Int c);

    const std::vector<Int>& coeffs() const { return coeffs_; }
    Int at(int degree) const;
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }

    TPoly& operator+=(const TPoly& other);
    TPoly& operator-=(const TPoly& other);
    TPoly& add_monomial(int degree, const Int& coeff);
    TPoly operator+(const TPoly& other) const;
    TPoly operator-(const TPoly& other) const;
    TPoly operator*(const Int& scalar) const;

    bool operator==(const TPoly& other) const { return coeffs_ == other.coeffs_; }

    std::string str() const; // "1 + 3t + t^2"

  private:
    void trim();
    std::vector<Int> coeffs_;
};

} // namespace hessencomb
