#include "hessencomb/multipoly.hpp"

#include <sstream>

#include "hessencomb/errors.hpp"

namespace hessencomb {

MultiPoly MultiPoly::constant(int n, Int c) {
    MultiPoly p(n);
    p.add_term(std::vector<int>(n, 0), std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(int n, int k) {
    if (k < 1 || k > n) throw IndexOutOfRange("variable index out of range");
    MultiPoly p(n);
    std::vector<int> e(n, 0);
    e[k - 1] = 1;
    p.add_term(std::move(e), 1);
    return p;
}

MultiPoly MultiPoly::linear_difference(int n, int a, int b) {
    MultiPoly p = variable(n, a);
    p -= variable(n, b);
    return p;
}

void MultiPoly::add_term(std::vector<int> exps, Int coeff) {
    if (static_cast<int>(exps.size()) != n_) throw SizeMismatch("exponent vector length mismatch");
    if (coeff == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(std::move(exps), std::move(coeff));
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    if (n_ != other.n_) throw SizeMismatch("polynomials over different variable counts");
    for (const auto& [e, c] : other.terms_) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    if (n_ != other.n_) throw SizeMismatch("polynomials over different variable counts");
    for (const auto& [e, c] : other.terms_) {
        auto [it, inserted] = terms_.emplace(e, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
    MultiPoly r = *this;
    r += other;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const {
    MultiPoly r = *this;
    r -= other;
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
    if (n_ != other.n_) throw SizeMismatch("polynomials over different variable counts");
    MultiPoly r(n_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_) {
            std::vector<int> e(n_);
            for (int k = 0; k < n_; ++k) e[k] = ea[k] + eb[k];
            r.add_term(std::move(e), ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::operator*(const Int& scalar) const {
    MultiPoly r(n_);
    if (scalar == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * scalar);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(n_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::substitute(int a, int b) const {
    MultiPoly r(n_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> ne = e;
        ne[b - 1] += ne[a - 1];
        ne[a - 1] = 0;
        r.add_term(std::move(ne), c);
    }
    return r;
}

MultiPoly MultiPoly::relabel(const Permutation& u) const {
    if (u.size() != n_) throw SizeMismatch("relabeling permutation has wrong size");
    MultiPoly r(n_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> ne(n_, 0);
        for (int k = 1; k <= n_; ++k) ne[u(k) - 1] = e[k - 1];
        r.add_term(std::move(ne), c);
    }
    return r;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        Int a = abs(c);
        bool has_var = false;
        for (int k = 0; k < n_; ++k) has_var = has_var || e[k] > 0;
        if (a != 1 || !has_var) out << a.str();
        bool started = (a != 1 || !has_var);
        for (int k = 0; k < n_; ++k) {
            if (e[k] == 0) continue;
            if (started) out << '*';
            out << 't' << (k + 1);
            if (e[k] > 1) out << '^' << e[k];
            started = true;
        }
        first = false;
    }
    return out.str();
}

} // namespace hessencomb
