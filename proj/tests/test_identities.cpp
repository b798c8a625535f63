#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "oracles.hpp"
#include "qpart/identities.hpp"

using namespace qpart;

namespace {

const Identity& by_id(const std::string& id) {
    for (const Identity& ident : registry())
        if (ident.id == id) return ident;
    REQUIRE_MESSAGE(false, "identity not registered: " << id);
    static Identity dummy;
    return dummy;
}

/* Structural independence: the two sides must not be the same recipe, and
 * formula-backed pairs must use different named forms. */
bool sides_independent(const Identity& ident) {
    const SideRecipe& l = ident.lhs;
    const SideRecipe& r = ident.rhs;
    if (l.kind != r.kind) return true;
    switch (l.kind) {
        case SideRecipe::Kind::series_product:
        case SideRecipe::Kind::series_sum:
            return l.form != r.form || !(l.params == r.params);
        case SideRecipe::Kind::enumeration:
            return !(l.spec == r.spec) || l.stat != r.stat || !(l.wt == r.wt);
        case SideRecipe::Kind::decorated_enumeration:
            return !(l.spec == r.spec);
        case SideRecipe::Kind::boulet_product:
            return l.bform != r.bform;
        case SideRecipe::Kind::crank_class:
            return l.rel != r.rel || l.threshold != r.threshold;
    }
    return false;
}

}  // namespace

TEST_CASE("registry shape") {
    const auto& reg = registry();
    CHECK(reg.size() >= 20);

    std::set<std::string> ids;
    for (const Identity& ident : reg) ids.insert(ident.id);
    CHECK(ids.size() == reg.size());  // unique ids

    // default grids
    for (int M = 0; M <= 4; ++M)
        for (int k = 1; k <= 3; ++k)
            for (int m = 0; m <= 3; ++m) {
                std::string suffix = "[M=" + std::to_string(M) + ",k=" + std::to_string(k) +
                                     ",m=" + std::to_string(m) + "]";
                CHECK(ids.count("finite_weighted" + suffix) == 1);
                CHECK(ids.count("corollary_sum" + suffix) == 1);
            }
    for (int l = 0; l <= 3; ++l)
        for (int v = 0; v <= 1; ++v)
            CHECK(ids.count("weight_change[l=" + std::to_string(l) +
                            ",v=" + std::to_string(v) + "]") == 1);
    CHECK(ids.count("corollary_sum[M=inf,k=1,m=2]") == 1);

    for (const Identity& ident : reg) {
        CHECK(sides_independent(ident));
        CHECK(ident.lhs.is_multivariate() == ident.rhs.is_multivariate());
        CHECK_FALSE(ident.description.empty());
    }

    CHECK(by_id("e_variant_distinct").experimental);
    CHECK(by_id("boulet_psi").order_cap == 20);
}

TEST_CASE("find_identities") {
    CHECK(find_identities("all").size() == registry().size());
    CHECK(find_identities("euler").size() == 1);
    CHECK(find_identities("weight_change").size() == 10);
    CHECK(find_identities("finite_weighted").size() == 60);
    CHECK(find_identities("nonsense").empty());
}

TEST_CASE("build_side frozen examples") {
    const Identity& rr2_crank = by_id("rr2_crank");
    CHECK(build_side(rr2_crank, Side::lhs, 5).coeffs() ==
          std::vector<coeff_t>{1, 0, 1, 2, 3, 4});
    CHECK(build_side(rr2_crank, Side::rhs, 5).coeffs() ==
          std::vector<coeff_t>{1, 0, 1, 2, 3, 4});

    // constant terms at order 0: 1, or 0 for the odd-parts-count set
    CHECK(build_side(by_id("euler"), Side::lhs, 0).coeff(0) == 1);
    CHECK(build_side(by_id("euler"), Side::rhs, 0).coeff(0) == 1);
    CHECK(build_side(by_id("odd_distinct_crank"), Side::lhs, 0).coeff(0) == 0);
    CHECK(build_side(by_id("odd_distinct_crank"), Side::rhs, 0).coeff(0) == 0);

    // corrections land on the series: tilde identities at order 1
    CHECK(build_side(by_id("tilde1_pos_crank"), Side::rhs, 1).coeff(1) == 1);
    CHECK(build_side(by_id("tilde2_zero_crank"), Side::rhs, 1).coeff(1) == -1);
    CHECK(build_side(by_id("tilde1_neg_crank"), Side::lhs, 10).coeffs() ==
          std::vector<coeff_t>{0, 1, 1, 1, 2, 3, 5, 7, 10, 14, 19});
    CHECK(build_side(by_id("tilde2_zero_crank"), Side::lhs, 10).coeffs() ==
          std::vector<coeff_t>{1, -1, 0, 1, 1, 1, 1, 1, 2, 2, 4});

    // the doubled right-hand side of the experimental variant
    CHECK(build_side(by_id("e_variant_distinct"), Side::rhs, 5).coeffs() ==
          std::vector<coeff_t>{2, 4, 6, 12, 18, 28});
    CHECK(build_side(by_id("e_variant_distinct"), Side::lhs, 5).coeffs() ==
          std::vector<coeff_t>{2, 4, 6, 12, 18, 28});

    CHECK_THROWS_AS(build_side(by_id("boulet_psi"), Side::lhs, 5), std::invalid_argument);
    CHECK_THROWS_AS(build_side_m(by_id("euler"), Side::lhs, 5), std::invalid_argument);
}

TEST_CASE("crank class series matches the pointwise counter") {
    Series le = crank_class_series(CrankRelation::le, -1, 12);
    Series eq = crank_class_series(CrankRelation::eq, 0, 12);
    Series ge = crank_class_series(CrankRelation::ge, 1, 12);
    for (int n = 0; n <= 12; ++n) {
        CHECK(le.coeff(n) == count_crank_class(n, CrankRelation::le, -1));
        CHECK(eq.coeff(n) == count_crank_class(n, CrankRelation::eq, 0));
        CHECK(ge.coeff(n) == count_crank_class(n, CrankRelation::ge, 1));
        CHECK(le.coeff(n) + eq.coeff(n) + ge.coeff(n) == ref::partition_count(n));
    }
}

TEST_CASE("structural recursion equals explicit enumeration for U by O") {
    Series fast = unrestricted_odd_index_series(22);
    Series slow = statistic_series(ConstraintSpec::unrestricted(),
                                   StatisticId::odd_index_sum, WeightId::unit(), 22);
    CHECK(fast == slow);
}

TEST_CASE("even-column walk bound: norm <= 3 * value + 1 on distinct partitions") {
    auto d = ConstraintSpec::distinct();
    for (int n = 0; n <= 28; ++n)
        for (const auto& parts : ref::all_partitions(n)) {
            Partition p = Partition::from_parts(parts);
            if (!member(d, p)) continue;
            std::int64_t value = statistic(StatisticId::even_index_sum_of_conjugate, p);
            CHECK(p.norm() <= 3 * value + 1);
        }
}

TEST_CASE("verification, spot identities") {
    CHECK(verify(by_id("euler"), 30).verified);
    CHECK(verify(by_id("gauss_sq"), 30).verified);
    CHECK(verify(by_id("alladi_weighted"), 22).verified);
    CHECK(verify(by_id("rr2_crank"), 22).verified);
    CHECK(verify(by_id("signed_distinct_crank"), 18).verified);
    CHECK(verify(by_id("cor_hat"), 18).verified);
    CHECK(verify(by_id("e_variant_distinct"), 16).verified);
    CHECK(verify(by_id("boulet_psi"), 10).verified);
    CHECK(verify(by_id("boulet_phi"), 10).verified);

    VerificationReport rep = verify(by_id("boulet_psi"), 35);
    CHECK(rep.order == 20);  // cap applies
    CHECK(rep.verified);
}

TEST_CASE("sum sides agree with their enumeration reading") {
    // Durfee-square sum forms against direct set enumeration
    CHECK(build_side(by_id("gauss_sq"), Side::lhs, 30) ==
          statistic_series(ConstraintSpec::unrestricted(), StatisticId::norm,
                           WeightId::unit(), 30));
    CHECK(sum_form("rr1_sum", {}, 30) ==
          statistic_series(ConstraintSpec::rogers_ramanujan(1), StatisticId::norm,
                           WeightId::unit(), 30));
    CHECK(sum_form("rr2_sum", {}, 30) ==
          statistic_series(ConstraintSpec::rogers_ramanujan(2), StatisticId::norm,
                           WeightId::unit(), 30));
    CHECK(product_form("distinct", {}, 30) ==
          statistic_series(ConstraintSpec::distinct(), StatisticId::norm,
                           WeightId::unit(), 30));
    CHECK(sum_form("auluck_sum", {}, 30) ==
          statistic_series(ConstraintSpec::rogers_ramanujan(2), StatisticId::norm,
                           WeightId::omega(2, 2), 30));
}

TEST_CASE("a corrupted identity reports the first mismatch") {
    Identity bad;
    bad.id = "harness_self_test";
    bad.description = "deliberately perturbed comparison";
    bad.lhs = SideRecipe::enumeration(ConstraintSpec::unrestricted());
    bad.rhs = SideRecipe::product("euler_inverse").plus(3, 1);
    VerificationReport rep = verify(bad, 10);
    CHECK_FALSE(rep.verified);
    REQUIRE(rep.first_mismatch.has_value());
    CHECK(rep.first_mismatch->exponent == std::vector<int>{3});
    CHECK(rep.first_mismatch->lhs == 3);
    CHECK(rep.first_mismatch->rhs == 4);

    nlohmann::json j = rep.to_json(false);
    CHECK(j["status"] == "failed");
    CHECK(j["first_mismatch"]["exponent"] == std::vector<int>{3});
    CHECK_FALSE(j.contains("ms"));
    CHECK(rep.to_json(true).contains("ms"));
}

TEST_CASE("monotonicity: a verified prefix stays verified") {
    for (int order : {3, 9, 17})
        CHECK(verify(by_id("gauss_sq"), order).verified);
    for (int order : {0, 5, 12})
        CHECK(verify(by_id("tilde1_neg_crank"), order).verified);
}

TEST_CASE("graded refinement sums to the odd-index identity") {
    const int N = 14;
    Series total(N);
    for (int l = 0; l <= 4; ++l)
        for (int v = 0; v <= 1; ++v) {
            Params p;
            p.l = l;
            p.v = v;
            Identity inst = instantiate_family("weight_change", p);
            total = add(total, build_side(inst, Side::lhs, N));
        }
    CHECK(total == build_side(by_id("odd_index_distinct"), Side::lhs, N));
}

TEST_CASE("family instantiation outside the default grid") {
    Params p;
    p.M = 5;
    p.k = 1;
    p.m = 2;
    Identity inst = instantiate_family("finite_weighted", p);
    CHECK(inst.id == "finite_weighted[M=5,k=1,m=2]");
    CHECK(verify(inst, 22).verified);

    Params pc;
    pc.infinite_M = true;
    pc.k = 1;
    pc.m = 1;
    CHECK(verify(instantiate_family("corollary_sum", pc), 20).verified);

    CHECK_THROWS_AS(instantiate_family("nope", p), std::invalid_argument);
    CHECK_THROWS_AS(instantiate_family("finite_weighted", Params{}),
                    std::invalid_argument);
}

TEST_CASE("verify_all at a small order") {
    auto reports = verify_all(8);
    CHECK(reports.size() == registry().size());
    for (std::size_t i = 0; i + 1 < reports.size(); ++i)
        CHECK(reports[i].id < reports[i + 1].id);
    for (const auto& rep : reports) {
        INFO("identity: " << rep.id);
        CHECK(rep.verified);
    }
}

TEST_CASE("verify_all at order zero compares constant terms") {
    for (const auto& rep : verify_all(0)) {
        INFO("identity: " << rep.id);
        CHECK(rep.verified);
    }
}
