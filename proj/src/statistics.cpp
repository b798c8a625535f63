#include "qpart/statistics.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qpart {

StatisticId parse_statistic(std::string_view tag) {
    if (tag == "norm") return StatisticId::norm;
    if (tag == "nparts") return StatisticId::num_parts;
    if (tag == "o") return StatisticId::odd_index_sum;
    if (tag == "e") return StatisticId::even_index_sum;
    if (tag == "o-conj") return StatisticId::odd_index_sum_of_conjugate;
    if (tag == "e-conj") return StatisticId::even_index_sum_of_conjugate;
    if (tag == "crank") return StatisticId::crank;
    if (tag == "durfee") return StatisticId::durfee;
    throw std::invalid_argument("unknown statistic tag '" + std::string(tag) + "'");
}

std::string statistic_tag(StatisticId id) {
    switch (id) {
        case StatisticId::norm: return "norm";
        case StatisticId::num_parts: return "nparts";
        case StatisticId::odd_index_sum: return "o";
        case StatisticId::even_index_sum: return "e";
        case StatisticId::odd_index_sum_of_conjugate: return "o-conj";
        case StatisticId::even_index_sum_of_conjugate: return "e-conj";
        case StatisticId::crank: return "crank";
        case StatisticId::durfee: return "durfee";
    }
    return "?";
}

std::int64_t odd_index_sum(const Partition& p) {
    std::int64_t s = 0;
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); i += 2) s += parts[i];
    return s;
}

std::int64_t even_index_sum(const Partition& p) {
    std::int64_t s = 0;
    const auto& parts = p.parts();
    for (std::size_t i = 1; i < parts.size(); i += 2) s += parts[i];
    return s;
}

std::int64_t crank(const Partition& p) {
    if (p.is_empty()) return 0;
    const auto& parts = p.parts();
    // parts are decreasing, so the 1s form a suffix
    std::int64_t ones = 0;
    for (auto it = parts.rbegin(); it != parts.rend() && *it == 1; ++it) ++ones;
    if (ones == 0) return parts.front();
    auto first_not_greater = std::lower_bound(parts.begin(), parts.end(), ones,
                                              [](int part, std::int64_t t) { return part > t; });
    std::int64_t larger = first_not_greater - parts.begin();
    return larger - ones;
}

std::int64_t durfee(const Partition& p) {
    const auto& parts = p.parts();
    std::int64_t d = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i] >= static_cast<int>(i + 1)) d = static_cast<std::int64_t>(i + 1);
    return d;
}

int parity(std::int64_t n) {
    return static_cast<int>(((n % 2) + 2) % 2);
}

std::int64_t statistic(StatisticId id, const Partition& p) {
    switch (id) {
        case StatisticId::norm: return p.norm();
        case StatisticId::num_parts: return static_cast<std::int64_t>(p.num_parts());
        case StatisticId::odd_index_sum: return odd_index_sum(p);
        case StatisticId::even_index_sum: return even_index_sum(p);
        case StatisticId::odd_index_sum_of_conjugate: return odd_index_sum(conjugate(p));
        case StatisticId::even_index_sum_of_conjugate: return even_index_sum(conjugate(p));
        case StatisticId::crank: return crank(p);
        case StatisticId::durfee: return durfee(p);
    }
    return 0;
}

CrankRelation parse_crank_relation(std::string_view text) {
    if (text == "=" || text == "==") return CrankRelation::eq;
    if (text == "<=") return CrankRelation::le;
    if (text == ">=") return CrankRelation::ge;
    throw std::invalid_argument("crank relation must be '=', '<=' or '>='");
}

std::string crank_relation_text(CrankRelation rel) {
    switch (rel) {
        case CrankRelation::eq: return "=";
        case CrankRelation::le: return "<=";
        case CrankRelation::ge: return ">=";
    }
    return "?";
}

std::int64_t crank_of_parts(const std::vector<int>& parts) {
    if (parts.empty()) return 0;
    std::int64_t ones = 0;
    for (auto it = parts.rbegin(); it != parts.rend() && *it == 1; ++it) ++ones;
    if (ones == 0) return parts.front();
    auto first_not_greater = std::lower_bound(parts.begin(), parts.end(), ones,
                                              [](int part, std::int64_t t) { return part > t; });
    return (first_not_greater - parts.begin()) - ones;
}

std::int64_t count_crank_class(int n, CrankRelation rel, int threshold) {
    if (n < 0) return 0;
    std::int64_t count = 0;
    for_each_member_stat_le(
        ConstraintSpec::unrestricted(), AdditiveStat::norm, n,
        [&](const std::vector<int>& parts, std::int64_t norm) {
            if (norm != n) return;
            std::int64_t c = crank_of_parts(parts);
            bool hit = false;
            switch (rel) {
                case CrankRelation::eq: hit = c == threshold; break;
                case CrankRelation::le: hit = c <= threshold; break;
                case CrankRelation::ge: hit = c >= threshold; break;
            }
            if (hit) ++count;
        });
    return count;
}

std::optional<AdditiveStat> additive_stat_for(const ConstraintSpec& spec,
                                              StatisticId stat) {
    switch (stat) {
        case StatisticId::norm: return AdditiveStat::norm;
        case StatisticId::odd_index_sum: return AdditiveStat::odd_index_sum;
        case StatisticId::odd_index_sum_of_conjugate:
            /* O(pi') counts odd-column dots, ceil(part/2) per part, so the
             * norm is at most twice the value on every set. */
            return AdditiveStat::odd_column_sum;
        case StatisticId::even_index_sum_of_conjugate:
            if (stat_walk_terminates(spec, AdditiveStat::even_column_sum))
                return AdditiveStat::even_column_sum;
            return std::nullopt;
        default: return std::nullopt;
    }
}

std::vector<Partition> enumerate_by_statistic(const ConstraintSpec& spec,
                                              StatisticId stat, int value) {
    std::optional<AdditiveStat> walk = additive_stat_for(spec, stat);
    if (!walk)
        throw std::domain_error(
            "statistic '" + statistic_tag(stat) +
            "' has no finiteness certificate on this set: infinitely many "
            "partitions can share one value");
    std::vector<Partition> out;
    if (value < 0) return out;
    for_each_member_stat_le(
        spec, *walk, value,
        [&](const std::vector<int>& parts, std::int64_t s) {
            if (s == value) out.push_back(Partition::from_parts(parts));
        });
    std::sort(out.begin(), out.end(), std::greater<>{});
    return out;
}

}  // namespace qpart
