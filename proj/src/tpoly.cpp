#include "hessencomb/tpoly.hpp"

#include <sstream>

namespace hessencomb {

TPoly::TPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

TPoly TPoly::monomial(int degree, Int coeff) {
    std::vector<Int> c(degree + 1, 0);
    c[degree] = std::move(coeff);
    return TPoly(std::move(c));
}

TPoly TPoly::constant(Int c) {
    return TPoly(std::vector<Int>{std::move(c)});
}

Int TPoly::at(int degree) const {
    if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[degree];
}

void TPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

TPoly& TPoly::operator+=(const TPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
    for (size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    trim();
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
    for (size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    trim();
    return *this;
}

TPoly& TPoly::add_monomial(int degree, const Int& coeff) {
    if (degree >= static_cast<int>(coeffs_.size())) coeffs_.resize(degree + 1, 0);
    coeffs_[degree] += coeff;
    trim();
    return *this;
}

TPoly TPoly::operator+(const TPoly& other) const {
    TPoly r = *this;
    r += other;
    return r;
}

TPoly TPoly::operator-(const TPoly& other) const {
    TPoly r = *this;
    r -= other;
    return r;
}

TPoly TPoly::operator*(const Int& scalar) const {
    if (scalar == 0) return TPoly{};
    TPoly r = *this;
    for (Int& c : r.coeffs_) c *= scalar;
    return r;
}

std::string TPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        Int c = coeffs_[k];
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        Int a = abs(c);
        if (a != 1 || k == 0) out << a.str();
        if (k == 1) out << 't';
        if (k > 1) out << "t^" << k;
        first = false;
    }
    return out.str();
}

} // namespace hessencomb
