#ifndef QPART_IDENTITIES_HPP
#define QPART_IDENTITIES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qpart/mseries.hpp"
#include "qpart/partition.hpp"
#include "qpart/series.hpp"
#include "qpart/statistics.hpp"
#include "qpart/weights.hpp"

namespace qpart {

/* One side of an identity: a recipe that builds a truncated series. A side
 * is either enumeration-backed (sum of weight * q^statistic over a
 * constraint set) or formula-backed (a named product/sum form), plus an
 * optional scale factor and a finite correction polynomial. The two sides
 * of a registered identity never share a builder path. */
struct SideRecipe {
    enum class Kind {
        enumeration,            // sum over spec of weight(pi) q^{stat(pi)}
        series_product,         // named product form
        series_sum,             // named sum form
        crank_class,            // #partitions of n with crank rel threshold
        decorated_enumeration,  // 4-variable: sum over spec of the decoration monomial
        boulet_product          // 4-variable: Boulet phi/psi product formula
    };

    Kind kind = Kind::enumeration;
    ConstraintSpec spec;
    StatisticId stat = StatisticId::norm;
    WeightId wt = WeightId::unit();
    std::string form;
    Params params;
    CrankRelation rel = CrankRelation::ge;
    int threshold = 0;
    BouletForm bform = BouletForm::psi;
    coeff_t scale = 1;
    std::vector<std::pair<int, coeff_t>> correction;  // exponent -> added coefficient

    static SideRecipe enumeration(ConstraintSpec s,
                                  StatisticId st = StatisticId::norm,
                                  WeightId w = WeightId::unit());
    static SideRecipe product(std::string name, Params p = {});
    static SideRecipe sum(std::string name, Params p = {});
    static SideRecipe cranks(CrankRelation rel, int threshold);
    static SideRecipe decorated(ConstraintSpec s);
    static SideRecipe boulet_side(BouletForm f);

    SideRecipe plus(int exponent, coeff_t coefficient) &&;
    SideRecipe times(coeff_t factor) &&;

    bool is_multivariate() const;
    std::string describe() const;
};

struct Identity {
    std::string id;
    std::string description;
    SideRecipe lhs;
    SideRecipe rhs;
    /* Largest order at which this identity is verified; multivariate
     * expansions get a cap so blanket verification runs stay affordable. */
    std::optional<int> order_cap;
    bool experimental = false;

    bool multivariate() const { return lhs.is_multivariate(); }
    int effective_order(int requested) const;
};

enum class Side { lhs, rhs };

struct VerificationReport {
    std::string id;
    int order = 0;
    bool verified = false;
    struct Mismatch {
        std::vector<int> exponent;  // one entry for q-series, four for (a,b,c,d)
        coeff_t lhs = 0;
        coeff_t rhs = 0;
    };
    std::optional<Mismatch> first_mismatch;
    double millis = 0.0;

    nlohmann::json to_json(bool include_timing) const;
    static std::string csv_header(bool include_timing);
    std::string csv_row(bool include_timing) const;
};

/* Builds one side as a univariate series (multivariate identities refuse;
 * use build_side_m). Enumeration recipes require a finiteness certificate. */
Series build_side(const Identity& ident, Side side, int order);
MSeries build_side_m(const Identity& ident, Side side, int order);

/* Coefficient-by-coefficient comparison over 0..order (capped by the
 * identity). Mismatches are reported, never thrown. */
VerificationReport verify(const Identity& ident, int order);

/* The full registered collection: every identity ships with its default
 * parameter grid instantiated. */
const std::vector<Identity>& registry();

/* Exact id match, the name of a parameterized family (all instances), or
 * "all". Empty result when nothing matches. */
std::vector<Identity> find_identities(std::string_view id_or_family);

/* Builds one instance of a parameterized family outside the default grid:
 * finite_weighted (M,k,m), corollary_sum (M,k,m; M may be inf),
 * weight_change (l,v). */
Identity instantiate_family(std::string_view family, const Params& params);

/* Verifies everything; reports sorted by identity id. */
std::vector<VerificationReport> verify_all(int order);

/* Generating function of sum_{pi in U} q^{O(pi)} by structural recursion on
 * the largest part (no product formula involved); the affordable route to
 * high orders where explicit enumeration would visit ~1e9 partitions. */
Series unrestricted_odd_index_series(int order);

/* sum over members of spec (stat <= order) of weight * q^stat, by explicit
 * enumeration; the default enumeration-side builder. */
Series statistic_series(const ConstraintSpec& spec, StatisticId stat,
                        const WeightId& wt, int order);

/* Per-norm crank-class counts as a series, one sweep over all partitions
 * of norm <= order. */
Series crank_class_series(CrankRelation rel, int threshold, int order);

/* Four-variable enumeration side: sum over members with norm <= order of
 * a^#a b^#b c^#c d^#d over the four-decorated Ferrers diagram. */
MSeries decorated_series(const ConstraintSpec& spec, int order);

}  // namespace qpart

#endif
