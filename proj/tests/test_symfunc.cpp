#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "hessencomb/errors.hpp"
#include "hessencomb/symfunc.hpp"

using namespace hessencomb;

namespace {

Partition Pt(std::vector<int> parts) { return Partition(std::move(parts)); }

// Independent oracle for the e -> m transition: expand the product of
// elementary polynomials in n honest variables and collect monomials by
// their sorted exponent pattern.
std::map<Partition, Int> expand_e_oracle(const Partition& mu, int n) {
    using Poly = std::map<std::vector<int>, Int>;
    Poly acc;
    acc[std::vector<int>(n, 0)] = 1;
    for (int part : mu.parts()) {
        // e_part = sum over part-subsets of the variables
        Poly next;
        std::vector<int> subset(part);
        for (int q = 0; q < part; ++q) subset[q] = q;
        while (true) {
            for (const auto& [mono, coeff] : acc) {
                std::vector<int> m = mono;
                for (int q : subset) ++m[q];
                next[m] += coeff;
            }
            int pos = part - 1;
            while (pos >= 0 && subset[pos] == n - (part - pos)) --pos;
            if (pos < 0) break;
            ++subset[pos];
            for (int q = pos + 1; q < part; ++q) subset[q] = subset[q - 1] + 1;
        }
        acc = std::move(next);
    }
    std::map<Partition, Int> out;
    for (const auto& [mono, coeff] : acc) {
        std::vector<int> pattern;
        for (int e : mono)
            if (e > 0) pattern.push_back(e);
        std::sort(pattern.begin(), pattern.end(), std::greater<int>());
        // the m_lambda coefficient is read off the dominant monomial
        // x_1^{l_1} x_2^{l_2} ...; match it exactly
        std::vector<int> lead = pattern;
        lead.resize(n, 0);
        if (std::equal(lead.begin(), lead.end(), mono.begin())) out[Partition(pattern)] += coeff;
    }
    return out;
}

} // namespace

TEST_CASE("partitions and compositions") {
    const auto parts6 = partitions_of(6);
    CHECK(parts6.size() == 11);
    CHECK(parts6.front().parts() == std::vector<int>{6});
    CHECK(parts6.back().parts() == std::vector<int>{1, 1, 1, 1, 1, 1});
    CHECK_THROWS_AS(Pt({1, 2}), NotWeaklyIncreasing);
    CHECK_THROWS_AS(Pt({0}), ValueOutOfRange);
    CHECK(Composition({2, 4}).sorted() == Pt({4, 2}));
}

TEST_CASE("multinomial dimensions") {
    CHECK(multinomial_dim(Composition({6})) == 1);
    CHECK(multinomial_dim(Composition({2, 4})) == 15);
    CHECK(multinomial_dim(Composition({1, 5})) == 6);
    CHECK(multinomial_dim(Composition({4, 2})) == multinomial_dim(Composition({2, 4})));
    CHECK(multinomial_dim(Pt({1, 1, 1, 1})) == 24);
}

TEST_CASE("tpoly arithmetic") {
    TPoly p;
    p.add_monomial(0, 1);
    p.add_monomial(2, 3);
    CHECK(p.str() == "1 + 3t^2");
    CHECK(p.at(1) == 0);
    CHECK((p - p).is_zero());
    CHECK((p * Int(2)).at(2) == 6);
    TPoly q = TPoly::monomial(2, -3);
    CHECK((p + q) == TPoly::constant(1));
    CHECK(TPoly{}.str() == "0");
}

TEST_CASE("e_to_m on the small cases") {
    SymFunc e2(Basis::e, 2);
    e2.add_term(Pt({2}), TPoly::constant(1));
    SymFunc m = e_to_m(e2);
    CHECK(m.basis == Basis::m);
    CHECK(m.terms.size() == 1);
    CHECK(m.terms.at(Pt({1, 1})) == TPoly::constant(1));

    SymFunc e11(Basis::e, 2);
    e11.add_term(Pt({1, 1}), TPoly::constant(1));
    m = e_to_m(e11);
    CHECK(m.terms.at(Pt({2})) == TPoly::constant(1));
    CHECK(m.terms.at(Pt({1, 1})) == TPoly::constant(2));

    for (int n = 2; n <= 5; ++n) {
        SymFunc en(Basis::e, n);
        en.add_term(Pt({n}), TPoly::constant(1));
        m = e_to_m(en);
        CHECK(m.terms.size() == 1);
        CHECK(m.terms.at(Partition(std::vector<int>(n, 1))) == TPoly::constant(1));
    }

    CHECK_THROWS_AS(e_to_m(SymFunc(Basis::m, 3)), WrongBasis);
}

TEST_CASE("e_to_m agrees with the polynomial-expansion oracle") {
    for (int n = 2; n <= 6; ++n)
        for (const Partition& mu : partitions_of(n)) {
            SymFunc f(Basis::e, n);
            f.add_term(mu, TPoly::constant(1));
            const SymFunc m = e_to_m(f);
            const auto expected = expand_e_oracle(mu, n);
            CHECK(m.terms.size() == expected.size());
            for (const auto& [lambda, coeff] : expected)
                CHECK(m.terms.at(lambda) == TPoly::constant(coeff));
        }
}

TEST_CASE("m_to_e inverts e_to_m") {
    SymFunc m11(Basis::m, 2);
    m11.add_term(Pt({1, 1}), TPoly::constant(1));
    SymFunc e = m_to_e(m11);
    CHECK(e.terms.size() == 1);
    CHECK(e.terms.at(Pt({2})) == TPoly::constant(1));

    SymFunc m2(Basis::m, 2);
    m2.add_term(Pt({2}), TPoly::constant(1));
    e = m_to_e(m2);
    CHECK(e.terms.at(Pt({1, 1})) == TPoly::constant(1));
    CHECK(e.terms.at(Pt({2})) == TPoly::constant(-2));

    CHECK_THROWS_AS(m_to_e(SymFunc(Basis::e, 3)), WrongBasis);
}

TEST_CASE("transition round trips on random inputs up to n=8") {
    std::mt19937 rng(20250809);
    for (int n = 2; n <= 8; ++n) {
        const auto parts = partitions_of(n);
        for (int trial = 0; trial < 5; ++trial) {
            SymFunc f(Basis::e, n);
            for (const Partition& lambda : parts) {
                TPoly c;
                for (int d = 0; d <= 2; ++d) {
                    const int v = static_cast<int>(rng() % 7) - 3;
                    if (v != 0) c.add_monomial(d, v);
                }
                if (!c.is_zero()) f.add_term(lambda, c);
            }
            CHECK(m_to_e(e_to_m(f)) == f);
        }
        // full basis both ways
        for (const Partition& lambda : parts) {
            SymFunc e1(Basis::e, n);
            e1.add_term(lambda, TPoly::constant(1));
            CHECK(m_to_e(e_to_m(e1)) == e1);
            SymFunc m1(Basis::m, n);
            m1.add_term(lambda, TPoly::constant(1));
            CHECK(e_to_m(m_to_e(m1)) == m1);
        }
    }
}

TEST_CASE("transition matrix is unimodular") {
    for (int n = 2; n <= 8; ++n) {
        const Int det = e_to_m_determinant(n);
        CHECK((det == 1 || det == -1));
    }
}

TEST_CASE("omega relabels e to h") {
    SymFunc f(Basis::e, 6);
    f.add_term(Pt({6}), TPoly::constant(3));
    f.add_term(Pt({4, 2}), TPoly::constant(1));
    f.add_term(Pt({5, 1}), TPoly::constant(1));
    const SymFunc g = omega_e_to_h(f);
    CHECK(g.basis == Basis::h);
    CHECK(g.terms.at(Pt({6})) == TPoly::constant(3));
    CHECK(g.terms.at(Pt({4, 2})) == TPoly::constant(1));
    CHECK(g.terms.size() == 3);

    CHECK(omega_e_to_h(SymFunc(Basis::e, 4)).is_zero());
    CHECK_THROWS_AS(omega_e_to_h(SymFunc(Basis::m, 4)), WrongBasis);
}

TEST_CASE("zero terms are dropped") {
    SymFunc f(Basis::e, 3);
    f.add_term(Pt({3}), TPoly::constant(2));
    f.add_term(Pt({3}), TPoly::constant(-2));
    CHECK(f.is_zero());
}
