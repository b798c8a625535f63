#ifndef QPART_STATISTICS_HPP
#define QPART_STATISTICS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qpart/partition.hpp"

namespace qpart {

/* Closed enumeration of the per-partition statistics generating functions
 * are indexed by. CLI/JSON tags in parentheses. */
enum class StatisticId {
    norm,                        // "norm"
    num_parts,                   // "nparts"
    odd_index_sum,               // "o"      lambda_1 + lambda_3 + ...
    even_index_sum,              // "e"      lambda_2 + lambda_4 + ...
    odd_index_sum_of_conjugate,  // "o-conj"
    even_index_sum_of_conjugate, // "e-conj"
    crank,                       // "crank"
    durfee                       // "durfee"
};

StatisticId parse_statistic(std::string_view tag);
std::string statistic_tag(StatisticId id);

std::int64_t odd_index_sum(const Partition& p);
std::int64_t even_index_sum(const Partition& p);

/* Dyson crank: the largest part when 1 is not a part, otherwise
 * (#parts larger than the number of 1s) - (#1s). crank(empty) = 0, the
 * convention forced by the constant term of the crank identities. */
std::int64_t crank(const Partition& p);

/* Side of the largest square fitting in the Ferrers diagram. */
std::int64_t durfee(const Partition& p);

int parity(std::int64_t n);  // 0 if even, 1 if odd

std::int64_t statistic(StatisticId id, const Partition& p);

enum class CrankRelation { eq, le, ge };

CrankRelation parse_crank_relation(std::string_view text);  // "=", "<=", ">="
std::string crank_relation_text(CrankRelation rel);

/* Number of partitions of n whose crank satisfies the relation against
 * threshold, by full enumeration. */
std::int64_t count_crank_class(int n, CrankRelation rel, int threshold);

/* Crank straight from a decreasing part list (enumeration hot path). */
std::int64_t crank_of_parts(const std::vector<int>& parts);

/* The additive bounded-walk driver for (spec, stat), when the pair has a
 * finiteness certificate; nullopt otherwise. */
std::optional<AdditiveStat> additive_stat_for(const ConstraintSpec& spec,
                                              StatisticId stat);

/* All members of spec whose statistic equals value, lexicographically
 * decreasing. Requires a finiteness certificate:
 *   norm       -- any spec
 *   o          -- any spec (E <= O bounds the norm by 2*value)
 *   o-conj     -- any spec (same bound through the conjugate)
 *   e-conj     -- specs with strictly decreasing parts (norm <= 3*value + 1)
 * Throws std::domain_error otherwise; (U, e) is the canonical infinite
 * family (lambda_2 + i, lambda_2, ...). */
std::vector<Partition> enumerate_by_statistic(const ConstraintSpec& spec,
                                              StatisticId stat, int value);

}  // namespace qpart

#endif
