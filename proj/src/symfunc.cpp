#include "hessencomb/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "hessencomb/errors.hpp"

namespace hessencomb {

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::m: return "m";
        case Basis::e: return "e";
        case Basis::h: return "h";
    }
    return "?";
}

Basis parse_basis(const std::string& name) {
    if (name == "m") return Basis::m;
    if (name == "e") return Basis::e;
    if (name == "h") return Basis::h;
    throw ParseError("unknown basis '" + name + "' (expected m, e, or h)");
}

void SymFunc::add_term(const Partition& lambda, const TPoly& coeff) {
    if (lambda.size() != n) throw SizeMismatch("partition size differs from SymFunc degree");
    auto [it, inserted] = terms.emplace(lambda, coeff);
    if (!inserted) it->second += coeff;
    if (it->second.is_zero()) terms.erase(it);
}

void SymFunc::normalize() {
    for (auto it = terms.begin(); it != terms.end();)
        it = it->second.is_zero() ? terms.erase(it) : std::next(it);
}

std::string SymFunc::str() const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [lambda, coeff] : terms) {
        if (!first) out << " + ";
        out << '(' << coeff.str() << ") " << basis_name(basis) << lambda.str();
        first = false;
    }
    return out.str();
}

namespace {

// Count 0-1 matrices with the given row and column sums by scanning the
// columns and tracking the multiset of residual row sums.
Int count_01_matrices(const std::vector<int>& rows, const std::vector<int>& cols) {
    std::map<std::pair<std::vector<int>, int>, Int> memo;
    auto rec = [&](auto&& self, std::vector<int> residual, int ci) -> Int {
        if (ci == static_cast<int>(cols.size())) {
            return std::all_of(residual.begin(), residual.end(), [](int r) { return r == 0; })
                       ? Int(1)
                       : Int(0);
        }
        std::sort(residual.begin(), residual.end());
        auto key = std::make_pair(residual, ci);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        const int m = static_cast<int>(residual.size());
        const int need = cols[ci];
        Int total = 0;
        // choose which rows receive a 1 in this column
        std::vector<int> pick;
        auto choose = [&](auto&& chooser, int start, int left) -> void {
            if (left == 0) {
                std::vector<int> next = residual;
                for (int r : pick) --next[r];
                total += self(self, std::move(next), ci + 1);
                return;
            }
            for (int r = start; r <= m - left; ++r) {
                if (residual[r] == 0) continue;
                pick.push_back(r);
                chooser(chooser, r + 1, left - 1);
                pick.pop_back();
            }
        };
        choose(choose, 0, need);
        memo[key] = total;
        return total;
    };
    return rec(rec, rows, 0);
}

struct TransitionTables {
    std::vector<std::vector<Int>> e_to_m;
    std::vector<std::vector<Int>> m_to_e;
    Int det;
};

// Exact inverse by rational Gauss-Jordan; entries must come out integral
// (the matrix is unimodular), which is verified here.
TransitionTables build_tables(int n) {
    const auto parts = partitions_of(n);
    const int sz = static_cast<int>(parts.size());
    TransitionTables t;
    t.e_to_m.assign(sz, std::vector<Int>(sz, 0));
    for (int r = 0; r < sz; ++r)
        for (int c = 0; c < sz; ++c)
            t.e_to_m[r][c] = count_01_matrices(parts[r].parts(), parts[c].parts());

    std::vector<std::vector<Rat>> a(sz, std::vector<Rat>(sz));
    std::vector<std::vector<Rat>> inv(sz, std::vector<Rat>(sz, 0));
    for (int r = 0; r < sz; ++r) {
        for (int c = 0; c < sz; ++c) a[r][c] = Rat(t.e_to_m[r][c]);
        inv[r][r] = 1;
    }
    Rat det = 1;
    for (int col = 0; col < sz; ++col) {
        int piv = -1;
        for (int r = col; r < sz; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw NonIntegralResult("e-to-m transition matrix is singular");
        if (piv != col) {
            std::swap(a[piv], a[col]);
            std::swap(inv[piv], inv[col]);
            det = -det;
        }
        const Rat p = a[col][col];
        det *= p;
        for (int c = 0; c < sz; ++c) {
            a[col][c] /= p;
            inv[col][c] /= p;
        }
        for (int r = 0; r < sz; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rat f = a[r][col];
            for (int c = 0; c < sz; ++c) {
                a[r][c] -= f * a[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    if (denominator(det) != 1) throw NonIntegralResult("transition determinant not integral");
    t.det = numerator(det);

    t.m_to_e.assign(sz, std::vector<Int>(sz, 0));
    for (int r = 0; r < sz; ++r)
        for (int c = 0; c < sz; ++c) {
            if (denominator(inv[r][c]) != 1)
                throw NonIntegralResult("m-to-e transition entry not integral");
            t.m_to_e[r][c] = numerator(inv[r][c]);
        }
    return t;
}

std::mutex table_mutex;
std::map<int, TransitionTables> table_cache;

const TransitionTables& tables(int n) {
    std::scoped_lock lock(table_mutex);
    auto it = table_cache.find(n);
    if (it == table_cache.end()) it = table_cache.emplace(n, build_tables(n)).first;
    return it->second;
}

// f expressed in src coordinates -> matrix product against rows of M.
SymFunc apply_transition(const SymFunc& f, const std::vector<std::vector<Int>>& M, Basis out_tag) {
    const auto parts = partitions_of(f.n);
    std::map<Partition, int> index;
    for (int i = 0; i < static_cast<int>(parts.size()); ++i) index[parts[i]] = i;

    SymFunc out(out_tag, f.n);
    for (const auto& [mu, coeff] : f.terms) {
        const int r = index.at(mu);
        for (int c = 0; c < static_cast<int>(parts.size()); ++c) {
            if (M[r][c] == 0) continue;
            out.add_term(parts[c], coeff * M[r][c]);
        }
    }
    return out;
}

} // namespace

const std::vector<std::vector<Int>>& e_to_m_matrix(int n) { return tables(n).e_to_m; }
const std::vector<std::vector<Int>>& m_to_e_matrix(int n) { return tables(n).m_to_e; }
Int e_to_m_determinant(int n) { return tables(n).det; }

SymFunc e_to_m(const SymFunc& f) {
    if (f.basis != Basis::e) throw WrongBasis("e_to_m expects an e-tagged input");
    return apply_transition(f, e_to_m_matrix(f.n), Basis::m);
}

SymFunc m_to_e(const SymFunc& f) {
    if (f.basis != Basis::m) throw WrongBasis("m_to_e expects an m-tagged input");
    // m_lambda = sum_mu inv[lambda][mu] e_mu with inv the transposed
    // inverse; rows of m_to_e_matrix are already laid out that way.
    const auto parts = partitions_of(f.n);
    std::map<Partition, int> index;
    for (int i = 0; i < static_cast<int>(parts.size()); ++i) index[parts[i]] = i;
    const auto& inv = m_to_e_matrix(f.n);

    SymFunc out(Basis::e, f.n);
    for (const auto& [lambda, coeff] : f.terms) {
        const int c = index.at(lambda);
        for (int r = 0; r < static_cast<int>(parts.size()); ++r) {
            if (inv[c][r] == 0) continue;
            out.add_term(parts[r], coeff * inv[c][r]);
        }
    }
    return out;
}

SymFunc omega_e_to_h(const SymFunc& f) {
    if (f.basis != Basis::e) throw WrongBasis("omega_e_to_h expects an e-tagged input");
    SymFunc out = f;
    out.basis = Basis::h;
    return out;
}

} // namespace hessencomb
