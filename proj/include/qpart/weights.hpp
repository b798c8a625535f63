#ifndef QPART_WEIGHTS_HPP
#define QPART_WEIGHTS_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "qpart/partition.hpp"

namespace qpart {

/* The weight functions attached to partitions by the weighted identities.
 * All weights are total functions returning exact integers; off their
 * natural domain the factors may vanish or go negative, which is permitted.
 *
 * With gaps g_i = lambda_i - lambda_{i+1} and smallest part s:
 *   unit            1
 *   omega(k,m)      (s+1-k) * prod_i (g_i + 1 - m)
 *   tilde1          prod_i (g_i - 1)                      (empty -> 0)
 *   tilde2          (s-2) * prod_i (g_i - 1)              (empty -> 1)
 *   hat1            2^par(s) * prod_i 2^par(g_i)
 *   sign_by_parts   (-1)^{nu(pi)}
 *
 * tilde1(empty) = 0 and tilde2(empty) = 1 are forced by the splitting
 * omega(1,2) = omega(2,2) + tilde1 and tilde2 = omega(2,2) - tilde1, which
 * hold for every partition including the empty one. */
struct WeightId {
    enum class Kind { unit, omega_km, tilde1, tilde2, hat1, sign_by_parts };
    Kind kind = Kind::unit;
    int k = 0;  // omega_km only
    int m = 0;

    bool operator==(const WeightId&) const = default;

    static WeightId unit() { return {}; }
    static WeightId omega(int k, int m);
    static WeightId tilde1() { return {Kind::tilde1, 0, 0}; }
    static WeightId tilde2() { return {Kind::tilde2, 0, 0}; }
    static WeightId hat1() { return {Kind::hat1, 0, 0}; }
    static WeightId sign_by_parts() { return {Kind::sign_by_parts, 0, 0}; }

    /* CLI/JSON tags: "unit", "omega:k,m", "tilde1", "tilde2", "hat1", "sign". */
    static WeightId parse(std::string_view tag);
    std::string tag() const;
};

std::int64_t weight(const WeightId& w, const Partition& p);

/* Hot-path variant over a raw decreasing part list. */
std::int64_t weight_of_parts(const WeightId& w, const std::vector<int>& parts);

/* Decoration counts of the four-decorated Ferrers diagram: odd rows are
 * filled a,b,a,b,... and even rows c,d,c,d,... so
 * a+b = O(pi), c+d = E(pi), a >= b, c >= d. */
struct DecorationCount {
    std::int64_t a = 0, b = 0, c = 0, d = 0;
    bool operator==(const DecorationCount&) const = default;
};

DecorationCount decoration(const Partition& p);

/* omega(1,2) == omega(2,2) + tilde1, pointwise; a pure property check. */
bool weight_identity_check(const Partition& p);

}  // namespace qpart

#endif
