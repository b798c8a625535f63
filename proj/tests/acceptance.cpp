/* Acceptance suite: exercises the headline guarantees end to end and prints
 * one PASS/FAIL line per criterion. Exit code 0 only when all pass. */

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "qpart/identities.hpp"
#include "qpart/mseries.hpp"
#include "qpart/partition.hpp"
#include "qpart/series.hpp"
#include "qpart/statistics.hpp"
#include "qpart/weights.hpp"

using namespace qpart;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int criterion, bool ok, const std::string& what, double secs) {
    std::printf("%s: criterion %d — %s (%.2fs)\n", ok ? "PASS" : "FAIL", criterion,
                what.c_str(), secs);
    if (!ok) ++failures;
}

bool check(bool cond, const char* what) {
    if (!cond) std::printf("    failed: %s\n", what);
    return cond;
}

/* 1. p(4) = 5 three independent ways, under a second. */
void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    ok &= check(enumerate_by_norm(ConstraintSpec::unrestricted(), 4).size() == 5,
                "U-enumeration at norm 4");
    ok &= check(product_form("euler_inverse", {}, 4).coeff(4) == 5,
                "1/(q;q)_inf expansion");
    ok &= check(sum_form("gauss_sq", {}, 4).coeff(4) == 5, "sum q^{n^2}/(q)_n^2");
    double secs = seconds_since(t0);
    ok &= check(secs < 1.0, "runtime under 1 s");
    report(1, ok, "p(4) = 5 three ways", secs);
}

/* 2. The whole registry, grids included, coefficient-exact at order 40. */
void criterion2() {
    auto t0 = std::chrono::steady_clock::now();
    auto reports = verify_all(40);
    bool ok = check(reports.size() == registry().size(), "every identity reported");
    int failed = 0;
    for (const auto& rep : reports)
        if (!rep.verified) {
            ++failed;
            std::printf("    mismatch in %s at order %d\n", rep.id.c_str(), rep.order);
        }
    ok &= check(failed == 0, "all identities verified at order 40");
    double secs = seconds_since(t0);
    ok &= check(secs < 60.0, "runtime under 60 s");
    report(2, ok,
           "full registry (" + std::to_string(reports.size()) +
               " identities) verified at order 40",
           secs);
}

/* 3. Flagship univariate identities at order 60. */
void criterion3() {
    auto t0 = std::chrono::steady_clock::now();
    const std::vector<std::string> flagship = {
        "euler",          "euler_distinct_prod", "euler_odd_prod",
        "gauss_sq",       "rr1_sum_product",     "rr2_sum_product",
        "alladi_weighted", "odd_index_distinct",  "rr2_crank",
        "auluck_dyson",   "ali2_unrestricted",   "ali2_distinct_conj"};
    bool ok = true;
    for (const std::string& id : flagship) {
        auto found = find_identities(id);
        ok &= check(found.size() == 1, id.c_str());
        if (found.size() != 1) continue;
        VerificationReport rep = verify(found.front(), 60);
        if (!rep.verified)
            std::printf("    mismatch in %s at order %d\n", rep.id.c_str(), rep.order);
        ok &= rep.verified;
    }
    double secs = seconds_since(t0);
    ok &= check(secs < 120.0, "runtime under 120 s");
    report(3, ok, "flagship identities verified at order 60", secs);
}

/* 4. Boulet products at total degree 20 plus their specializations. */
void criterion4() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (const char* id : {"boulet_psi", "boulet_phi"}) {
        VerificationReport rep = verify(find_identities(id).front(), 20);
        ok &= check(rep.verified && rep.order == 20, id);
    }
    MSeries psi20 = boulet(BouletForm::psi, 20);
    MSeries phi20 = boulet(BouletForm::phi, 20);
    ok &= check(specialize(psi20, {1, 1, 0, 0}, 10) == product_form("euler_inverse", {}, 10),
                "psi(q,q,1,1) reproduces p(n)");
    ok &= check(specialize(phi20, {1, 1, 0, 0}, 10) ==
                    product_form("unrestricted_sq", {}, 10),
                "phi(q,q,1,1) reproduces 1/(q)_inf^2");
    ok &= check(specialize(psi20, {1, 0, 1, 0}, 10) == product_form("distinct_sq", {}, 10),
                "psi(q,1,q,1) reproduces (-q)_inf^2");
    report(4, ok, "Boulet expansions at degree 20 and their specializations", seconds_since(t0));
}

/* 5. Property suites at the documented bounds. */
void criterion5() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;

    {  // O + E = norm and O >= E for norm <= 40
        bool good = true;
        for_each_member_stat_le(
            ConstraintSpec::unrestricted(), AdditiveStat::norm, 40,
            [&](const std::vector<int>& parts, std::int64_t norm) {
                std::int64_t o = 0, e = 0;
                for (std::size_t i = 0; i < parts.size(); ++i)
                    (i % 2 == 0 ? o : e) += parts[i];
                good = good && (o + e == norm) && (o >= e);
            });
        ok &= check(good, "O+E = norm and O >= E to norm 40");
    }

    {  // crank symmetry for 2 <= n <= 40, explicit exception at n = 1
        Series pos = crank_class_series(CrankRelation::ge, 1, 40);
        Series neg = crank_class_series(CrankRelation::le, -1, 40);
        bool sym = true;
        for (int n = 2; n <= 40; ++n) sym = sym && pos.coeff(n) == neg.coeff(n);
        ok &= check(sym, "crank symmetry for 2 <= n <= 40");
        ok &= check(pos.coeff(1) == 0 && neg.coeff(1) == 1,
                    "crank symmetry fails only at n = 1");
    }

    {  // conjugation is a norm-preserving involution to norm 30
        bool good = true;
        for_each_member_stat_le(
            ConstraintSpec::unrestricted(), AdditiveStat::norm, 30,
            [&](const std::vector<int>& parts, std::int64_t norm) {
                Partition p = Partition::from_parts(parts);
                Partition c = conjugate(p);
                good = good && c.norm() == norm && conjugate(c) == p;
            });
        ok &= check(good, "conjugation involution to norm 30");
    }

    {  // omega(1,2) = omega(2,2) + tilde1 and tilde2 = omega(2,2) - tilde1 on RR1
        bool good = true;
        for_each_member_stat_le(
            ConstraintSpec::rogers_ramanujan(1), AdditiveStat::norm, 40,
            [&](const std::vector<int>& parts, std::int64_t) {
                Partition p = Partition::from_parts(parts);
                good = good && weight_identity_check(p) &&
                       weight(WeightId::tilde2(), p) ==
                           weight(WeightId::omega(2, 2), p) - weight(WeightId::tilde1(), p);
            });
        ok &= check(good, "omega splitting on RR1 to norm 40");
    }

    {  // nesting RR2 within RR1 within D within U to norm 40
        auto rr1 = ConstraintSpec::rogers_ramanujan(1);
        auto d = ConstraintSpec::distinct();
        auto u = ConstraintSpec::unrestricted();
        bool good = true;
        for_each_member_stat_le(
            ConstraintSpec::rogers_ramanujan(2), AdditiveStat::norm, 40,
            [&](const std::vector<int>& parts, std::int64_t) {
                good = good && member(rr1, Partition::from_parts(parts));
            });
        for_each_member_stat_le(
            rr1, AdditiveStat::norm, 40,
            [&](const std::vector<int>& parts, std::int64_t) {
                good = good && member(d, Partition::from_parts(parts));
            });
        for_each_member_stat_le(
            d, AdditiveStat::norm, 40,
            [&](const std::vector<int>& parts, std::int64_t) {
                good = good && member(u, Partition::from_parts(parts));
            });
        ok &= check(good, "nesting RR2 in RR1 in D in U to norm 40");
    }

    {  // omega(k,m) >= 1 on P_M(k,m) over the documented grid
        bool good = true;
        for (int M = 0; M <= 5; ++M)
            for (int k = 1; k <= 3; ++k)
                for (int m = 0; m <= 3; ++m) {
                    WeightId w = WeightId::omega(k, m);
                    for_each_member_stat_le(
                        ConstraintSpec::exact_parts_set(M, k, m), AdditiveStat::norm, 30,
                        [&](const std::vector<int>& parts, std::int64_t) {
                            good = good && weight_of_parts(w, parts) >= 1;
                        });
                }
        ok &= check(good, "omega positivity on P_M(k,m), M <= 5, k <= 3, m <= 3, norm <= 30");
    }

    report(5, ok, "property suites at documented bounds", seconds_since(t0));
}

/* 6. The graded refinement sums to the odd-index identity at order 20. */
void criterion6() {
    auto t0 = std::chrono::steady_clock::now();
    const int N = 20;
    Series total(N);
    for (int l = 0; l <= 4; ++l)
        for (int v = 0; v <= 1; ++v) {
            Params p;
            p.l = l;
            p.v = v;
            total = add(total, build_side(instantiate_family("weight_change", p),
                                          Side::lhs, N));
        }
    Series direct = build_side(find_identities("odd_index_distinct").front(), Side::lhs, N);
    bool ok = check(total == direct, "sum of graded sides equals the direct side");
    report(6, ok, "graded weight_change sum matches odd_index_distinct at order 20",
           seconds_since(t0));
}

/* 7. Harness self-test: a corrupted identity must fail at the right spot. */
void criterion7() {
    auto t0 = std::chrono::steady_clock::now();
    Identity bad;
    bad.id = "self_test_corrupted";
    bad.description = "rhs perturbed at q^3";
    bad.lhs = SideRecipe::enumeration(ConstraintSpec::unrestricted());
    bad.rhs = SideRecipe::product("euler_inverse").plus(3, 1);
    VerificationReport rep = verify(bad, 12);
    bool ok = check(!rep.verified, "corrupted identity flagged");
    ok &= check(rep.first_mismatch && rep.first_mismatch->exponent == std::vector<int>{3},
                "first mismatch at exponent 3");
    ok &= check(rep.first_mismatch && rep.first_mismatch->lhs == 3 &&
                    rep.first_mismatch->rhs == 4,
                "mismatching coefficients reported");
    report(7, ok, "harness self-test flags a perturbed identity", seconds_since(t0));
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all acceptance criteria passed\n");
    return failures == 0 ? 0 : 1;
}
