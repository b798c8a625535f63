#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "qpart/identities.hpp"
#include "qpart/mseries.hpp"
#include "qpart/partition.hpp"
#include "qpart/weights.hpp"

using namespace qpart;

namespace {

MSeries from_terms(int order, std::vector<std::pair<Exp4, coeff_t>> terms) {
    MSeries s(order);
    for (const auto& [e, c] : terms) s.set_coeff(e, c);
    return s;
}

}  // namespace

TEST_CASE("mseries arithmetic") {
    MSeries one_plus_a = from_terms(2, {{{0, 0, 0, 0}, 1}, {{1, 0, 0, 0}, 1}});
    MSeries one_minus_a = from_terms(2, {{{0, 0, 0, 0}, 1}, {{1, 0, 0, 0}, -1}});
    CHECK(m_mul(one_plus_a, one_minus_a) ==
          from_terms(2, {{{0, 0, 0, 0}, 1}, {{2, 0, 0, 0}, -1}}));

    // 1/(1-ab) = sum (ab)^j as far as the truncation allows
    MSeries inv = m_inverse(from_terms(8, {{{0, 0, 0, 0}, 1}, {{1, 1, 0, 0}, -1}}));
    MSeries expect(8);
    for (int j = 0; j <= 4; ++j) expect.set_coeff({j, j, 0, 0}, 1);
    CHECK(inv == expect);

    // Q*Q exceeds total degree 7
    MSeries q = from_terms(7, {{{1, 1, 1, 1}, 1}});
    CHECK(m_mul(q, q) == MSeries(7));

    CHECK(m_add(one_plus_a, m_neg(one_plus_a)) == MSeries(2));
    CHECK(m_sub(one_plus_a, one_plus_a) == MSeries(2));
    CHECK(m_scaled(q, 3) == from_terms(7, {{{1, 1, 1, 1}, 3}}));
    CHECK_THROWS_AS(m_inverse(from_terms(3, {{{0, 0, 0, 0}, 2}})), std::invalid_argument);

    MSeries deep = from_terms(6, {{{0, 0, 0, 0}, -1},
                                  {{1, 0, 0, 0}, 2},
                                  {{0, 1, 1, 0}, -3},
                                  {{2, 1, 0, 1}, 1}});
    CHECK(m_mul(deep, m_inverse(deep)) == MSeries::constant(6, 1));
    CHECK(m_inverse(m_inverse(deep)) == deep);
}

TEST_CASE("four-variable pochhammer") {
    // (-a;Q)_inf truncated at total degree 5: factors n=0 and n=1 reach it
    MSeries s = pochhammer({-1, {1, 0, 0, 0}, {1, 1, 1, 1}, {}}, 5);
    CHECK(s == from_terms(5, {{{0, 0, 0, 0}, 1}, {{1, 0, 0, 0}, 1}, {{2, 1, 1, 1}, 1}}));

    CHECK_THROWS_AS(pochhammer({+1, {0, 0, 0, 0}, {1, 1, 1, 1}, {}}, 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(pochhammer({+1, {1, 0, 0, 0}, {0, 0, 0, 0}, {}}, 4),
                    std::invalid_argument);
    CHECK_NOTHROW(pochhammer({+1, {0, 0, 0, 0}, {1, 1, 1, 1}, 2}, 4));
}

TEST_CASE("boulet products at small order") {
    CHECK(boulet(BouletForm::psi, 1) ==
          from_terms(1, {{{0, 0, 0, 0}, 1}, {{1, 0, 0, 0}, 1}}));
    CHECK(boulet(BouletForm::psi, 2) ==
          from_terms(2, {{{0, 0, 0, 0}, 1}, {{1, 0, 0, 0}, 1}, {{1, 1, 0, 0}, 1}}));
    CHECK(boulet(BouletForm::phi, 2) ==
          from_terms(2, {{{0, 0, 0, 0}, 1},
                         {{1, 0, 0, 0}, 1},
                         {{1, 1, 0, 0}, 1},
                         {{1, 0, 1, 0}, 1}}));
    CHECK(boulet(BouletForm::psi, 4) == from_terms(4, {{{0, 0, 0, 0}, 1},
                                                       {{1, 0, 0, 0}, 1},
                                                       {{1, 1, 0, 0}, 1},
                                                       {{1, 1, 1, 0}, 1},
                                                       {{2, 1, 0, 0}, 1},
                                                       {{2, 1, 1, 0}, 1},
                                                       {{2, 2, 0, 0}, 1}}));
    CHECK(boulet(BouletForm::phi, 3) == from_terms(3, {{{0, 0, 0, 0}, 1},
                                                       {{1, 0, 0, 0}, 1},
                                                       {{1, 0, 1, 0}, 1},
                                                       {{1, 1, 0, 0}, 1},
                                                       {{1, 1, 1, 0}, 1},
                                                       {{2, 0, 1, 0}, 1},
                                                       {{2, 1, 0, 0}, 1}}));
}

TEST_CASE("boulet products match decorated enumeration") {
    const int N = 10;
    CHECK(boulet(BouletForm::psi, N) == decorated_series(ConstraintSpec::distinct(), N));
    CHECK(boulet(BouletForm::phi, N) ==
          decorated_series(ConstraintSpec::unrestricted(), N));
}

TEST_CASE("specialize") {
    MSeries psi8 = boulet(BouletForm::psi, 8);
    // a,b -> q; c,d -> 1: distinct partitions by odd-index sum, i.e. p(n)
    Series s = specialize(psi8, {1, 1, 0, 0}, 4);
    CHECK(s.coeffs() == std::vector<coeff_t>{1, 1, 2, 3, 5});
    // a,c -> q; b,d -> 1: conjugate odd-index sum over distinct partitions
    Series t = specialize(psi8, {1, 0, 1, 0}, 4);
    CHECK(t.coeffs() == std::vector<coeff_t>{1, 2, 3, 6, 9});

    // unit substitutions are exact only to half the expansion order
    CHECK_THROWS_AS(specialize(psi8, {1, 1, 0, 0}, 5), std::invalid_argument);
    CHECK_NOTHROW(specialize(psi8, {1, 1, 1, 1}, 8));
    CHECK_THROWS_AS(specialize(psi8, {1, 1, 1, -1}, 2), std::invalid_argument);

    MSeries c = MSeries::constant(6, 7);
    CHECK(specialize(c, {1, 1, 1, 1}, 6) == Series::constant(6, 7));

    // all variables to q: the statistic becomes the norm
    Series norm_side = specialize(boulet(BouletForm::psi, 10), {1, 1, 1, 1}, 10);
    for (int n = 0; n <= 10; ++n) CHECK(norm_side.coeff(n) == ref::distinct_count(n));
}

TEST_CASE("mseries ring laws on random polynomials") {
    std::uint64_t state = 99;
    auto next = [&state](int lo, int hi) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return lo + static_cast<int>((state >> 33) % static_cast<std::uint64_t>(hi - lo + 1));
    };
    auto random_mseries = [&](int order) {
        MSeries s(order);
        for (int t = 0; t < 12; ++t) {
            Exp4 e{next(0, 2), next(0, 2), next(0, 2), next(0, 2)};
            if (total_degree(e) <= order) s.set_coeff(e, next(-5, 5));
        }
        return s;
    };
    for (int trial = 0; trial < 6; ++trial) {
        MSeries a = random_mseries(6), b = random_mseries(6), c = random_mseries(6);
        CHECK(m_add(a, b) == m_add(b, a));
        CHECK(m_mul(a, b) == m_mul(b, a));
        CHECK(m_mul(m_mul(a, b), c) == m_mul(a, m_mul(b, c)));
        CHECK(m_mul(a, m_add(b, c)) == m_add(m_mul(a, b), m_mul(a, c)));
        CHECK(m_mul(a, MSeries::constant(6, 1)) == a);
        CHECK(m_add(a, m_neg(a)) == MSeries(6));
    }
}

TEST_CASE("specializations agree with direct statistic enumeration") {
    MSeries psi20 = boulet(BouletForm::psi, 20);
    MSeries phi20 = boulet(BouletForm::phi, 20);
    auto d = ConstraintSpec::distinct();
    auto u = ConstraintSpec::unrestricted();
    CHECK(specialize(psi20, {1, 1, 0, 0}, 10) ==
          statistic_series(d, StatisticId::odd_index_sum, WeightId::unit(), 10));
    CHECK(specialize(psi20, {1, 0, 1, 0}, 10) ==
          statistic_series(d, StatisticId::odd_index_sum_of_conjugate, WeightId::unit(),
                           10));
    CHECK(specialize(phi20, {1, 1, 0, 0}, 10) ==
          statistic_series(u, StatisticId::odd_index_sum, WeightId::unit(), 10));
}

TEST_CASE("mseries JSON and terms ordering") {
    MSeries s = from_terms(4, {{{1, 1, 1, 1}, -2}, {{0, 0, 0, 0}, 1}, {{2, 0, 0, 0}, 3}});
    auto terms = s.terms();
    REQUIRE(terms.size() == 3);
    CHECK(terms[0].first == Exp4{0, 0, 0, 0});  // lexicographic order
    CHECK(terms[1].first == Exp4{1, 1, 1, 1});
    CHECK(terms[2].first == Exp4{2, 0, 0, 0});
    CHECK(MSeries::from_json(s.to_json()) == s);
    CHECK(s.to_json()["terms"][0][1] == 1);
}
