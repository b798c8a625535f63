#ifndef QPART_PARTITION_HPP
#define QPART_PARTITION_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace qpart {

/* A partition is a weakly decreasing sequence of positive integers; the
 * empty sequence is the unique partition of 0. Immutable after construction. */
class Partition {
  public:
    Partition() = default;

    /* Validates and wraps a part list. Throws std::invalid_argument on an
     * increasing run, a zero, or a negative entry. */
    static Partition from_parts(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int part(std::size_t i) const { return parts_[i]; }
    std::size_t num_parts() const { return parts_.size(); }
    bool is_empty() const { return parts_.empty(); }
    std::int64_t norm() const;

    /* Lexicographic order on part sequences (a proper prefix is smaller). */
    auto operator<=>(const Partition&) const = default;

    nlohmann::json to_json() const;
    static Partition from_json(const nlohmann::json& j);

    /* Parses "4,4,2,1,1"; "" and "0" both denote the empty partition. */
    static Partition parse(std::string_view text);
    std::string to_string() const;

  private:
    struct Unchecked {};
    Partition(std::vector<int> parts, Unchecked) : parts_(std::move(parts)) {}
    std::vector<int> parts_;

    friend Partition conjugate(const Partition&);
    friend Partition pointwise_add(const Partition&, const Partition&);
    friend Partition min_partition(int, int, int);
    friend class PartitionWalker;
};

/* Column counts of the Ferrers diagram; an involution. */
Partition conjugate(const Partition& p);

/* Row-wise sum of two Ferrers diagrams, rows past the shorter one copied.
 * The empty partition is the identity element. */
Partition pointwise_add(const Partition& a, const Partition& b);

/* The unique norm-minimal partition with exactly `num_parts` parts, smallest
 * part >= min_smallest and consecutive gaps >= min_gap:
 * ((M-1)m+k, (M-2)m+k, ..., m+k, k). Its norm is m*C(M,2) + k*M. */
Partition min_partition(int num_parts, int min_smallest, int min_gap);

enum class PartsParity { even, odd };

struct ResidueRule {
    int modulus = 1;
    std::vector<int> allowed;  // sorted, each in [0, modulus)
    bool permits(int value) const;
    bool operator==(const ResidueRule&) const = default;
};

/* Declarative membership predicate for a set of partitions. A closed record
 * of the constraint kinds the identities need, so membership stays decidable
 * and serializable. */
struct ConstraintSpec {
    int min_gap = 0;                     // lambda_i - lambda_{i+1} >= min_gap
    std::optional<int> max_gap;          // ... <= max_gap
    int min_smallest = 1;                // smallest part >= min_smallest
    std::optional<int> max_smallest;     // smallest part <= max_smallest
    std::optional<int> exact_parts;      // nu(pi) == exact_parts
    std::optional<int> max_parts;        // nu(pi) <= max_parts
    std::optional<PartsParity> parts_parity;
    std::optional<ResidueRule> residues; // every part in a residue class

    bool operator==(const ConstraintSpec&) const = default;

    bool is_unrestricted() const;

    /* Presets: U, D, D_e, D_o, RR1, RR2, K, C1hat, C2hat.
     * (PMkm needs parameters; see exact_parts_set.) */
    static ConstraintSpec preset(std::string_view name);
    static ConstraintSpec unrestricted() { return {}; }
    static ConstraintSpec distinct();
    static ConstraintSpec rogers_ramanujan(int i);      // RR1 / RR2
    static ConstraintSpec exact_parts_set(int M, int k, int m);    // P_M(k,m)
    static ConstraintSpec at_most_parts_set(int M, int k, int m);  // P_{<=M}(k,m)
    static ConstraintSpec distinct_exact(int num_parts);           // D_l

    nlohmann::json to_json() const;
    static ConstraintSpec from_json(const nlohmann::json& j);
    /* Accepts a preset name or inline JSON (text starting with '{'). */
    static ConstraintSpec parse(std::string_view text);
};

/* True iff p satisfies every active field of spec. The empty partition is a
 * member unless exact_parts >= 1 or parts_parity == odd excludes it. */
bool member(const ConstraintSpec& spec, const Partition& p);

/* All members of spec with norm exactly n, in lexicographically decreasing
 * order of part sequences. */
std::vector<Partition> enumerate_by_norm(const ConstraintSpec& spec, int n);

/* Count-only variant (no materialization). */
std::int64_t count_by_norm(const ConstraintSpec& spec, int n);

/* Additive per-part statistics used to drive bounded enumeration. Each part
 * contributes a non-negative amount that depends only on its value and its
 * 1-based index, so a partial sum can prune the walk. */
enum class AdditiveStat {
    norm,           // part
    odd_index_sum,  // part at odd index, else 0
    odd_column_sum, // ceil(part/2)  == odd-column dots == O(conjugate)
    even_column_sum // floor(part/2) == even-column dots == E(conjugate)
};

std::int64_t additive_stat_increment(AdditiveStat s, int part, std::size_t index);

/* True when {pi in spec : stat(pi) = n} is finite for every n, i.e. the
 * bounded walk below terminates. even_column_sum needs strictly decreasing
 * parts (min_gap >= 1): otherwise (1,1,...,1) repeats at increment 0. */
bool stat_walk_terminates(const ConstraintSpec& spec, AdditiveStat s);

/* Visits every member of spec whose additive statistic is <= budget.
 * Visit order is deterministic but unspecified; callers needing the public
 * lexicographic order sort afterwards. Throws std::domain_error when the
 * walk would not terminate. */
void for_each_member_stat_le(
    const ConstraintSpec& spec, AdditiveStat stat, std::int64_t budget,
    const std::function<void(const std::vector<int>& parts, std::int64_t stat_value)>& visit);

}  // namespace qpart

#endif
