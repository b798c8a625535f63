#include "qpart/partition.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>

#include "qpart/checked.hpp"

namespace qpart {

Partition Partition::from_parts(std::vector<int> parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts.size() && parts[i] < parts[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    return Partition(std::move(parts), Unchecked{});
}

std::int64_t Partition::norm() const {
    std::int64_t n = 0;
    for (int p : parts_) n += p;
    return n;
}

nlohmann::json Partition::to_json() const {
    return nlohmann::json(parts_);
}

Partition Partition::from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition JSON must be an array");
    return from_parts(j.get<std::vector<int>>());
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    if (text.empty() || text == "0") return Partition{};
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw std::invalid_argument("cannot parse partition part '" + std::string(tok) + "'");
        parts.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return from_parts(std::move(parts));
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition conjugate(const Partition& p) {
    if (p.is_empty()) return {};
    std::vector<int> cols(static_cast<std::size_t>(p.part(0)), 0);
    for (int part : p.parts())
        for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols), Partition::Unchecked{});
}

Partition pointwise_add(const Partition& a, const Partition& b) {
    const auto& x = a.parts();
    const auto& y = b.parts();
    std::vector<int> sum(std::max(x.size(), y.size()), 0);
    for (std::size_t i = 0; i < sum.size(); ++i) {
        if (i < x.size()) sum[i] += x[i];
        if (i < y.size()) sum[i] += y[i];
    }
    for (std::size_t i = 0; i + 1 < sum.size(); ++i)
        if (sum[i] < sum[i + 1])
            throw std::logic_error("pointwise_add produced a non-partition");
    return Partition(std::move(sum), Partition::Unchecked{});
}

Partition min_partition(int num_parts, int min_smallest, int min_gap) {
    if (num_parts < 1 || min_smallest < 1 || min_gap < 0)
        throw std::invalid_argument("min_partition requires M >= 1, k >= 1, m >= 0");
    std::vector<int> parts(static_cast<std::size_t>(num_parts));
    for (int i = 0; i < num_parts; ++i)
        parts[static_cast<std::size_t>(i)] = (num_parts - 1 - i) * min_gap + min_smallest;
    return Partition(std::move(parts), Partition::Unchecked{});
}

bool ResidueRule::permits(int value) const {
    int r = value % modulus;
    if (r < 0) r += modulus;
    return std::binary_search(allowed.begin(), allowed.end(), r);
}

bool ConstraintSpec::is_unrestricted() const {
    return *this == ConstraintSpec{};
}

ConstraintSpec ConstraintSpec::distinct() {
    ConstraintSpec s;
    s.min_gap = 1;
    return s;
}

ConstraintSpec ConstraintSpec::rogers_ramanujan(int i) {
    if (i != 1 && i != 2) throw std::invalid_argument("rogers_ramanujan index must be 1 or 2");
    ConstraintSpec s;
    s.min_gap = 2;
    s.min_smallest = i;
    return s;
}

ConstraintSpec ConstraintSpec::exact_parts_set(int M, int k, int m) {
    if (M < 0 || k < 1 || m < 0)
        throw std::invalid_argument("P_M(k,m) requires M >= 0, k >= 1, m >= 0");
    ConstraintSpec s;
    s.exact_parts = M;
    s.min_smallest = k;
    s.min_gap = m;
    return s;
}

ConstraintSpec ConstraintSpec::at_most_parts_set(int M, int k, int m) {
    if (M < 0 || k < 1 || m < 0)
        throw std::invalid_argument("P_{<=M}(k,m) requires M >= 0, k >= 1, m >= 0");
    ConstraintSpec s;
    s.max_parts = M;
    s.min_smallest = k;
    s.min_gap = m;
    return s;
}

ConstraintSpec ConstraintSpec::distinct_exact(int num_parts) {
    ConstraintSpec s;
    s.min_gap = 1;
    s.exact_parts = num_parts;
    return s;
}

ConstraintSpec ConstraintSpec::preset(std::string_view name) {
    ConstraintSpec s;
    if (name == "U") return s;
    if (name == "D") return distinct();
    if (name == "RR1") return rogers_ramanujan(1);
    if (name == "RR2") return rogers_ramanujan(2);
    if (name == "D_e") {
        s = distinct();
        s.parts_parity = PartsParity::even;
        return s;
    }
    if (name == "D_o") {
        s = distinct();
        s.parts_parity = PartsParity::odd;
        return s;
    }
    if (name == "K") {
        s.max_gap = 2;
        s.max_smallest = 2;
        return s;
    }
    if (name == "C1hat") {
        s.residues = ResidueRule{5, {1, 4}};
        return s;
    }
    if (name == "C2hat") {
        s.residues = ResidueRule{5, {2, 3}};
        return s;
    }
    throw std::invalid_argument("unknown partition-set preset '" + std::string(name) + "'");
}

nlohmann::json ConstraintSpec::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    if (min_gap != 0) j["min_gap"] = min_gap;
    if (max_gap) j["max_gap"] = *max_gap;
    if (min_smallest != 1) j["min_smallest"] = min_smallest;
    if (max_smallest) j["max_smallest"] = *max_smallest;
    if (exact_parts) j["exact_parts"] = *exact_parts;
    if (max_parts) j["max_parts"] = *max_parts;
    if (parts_parity)
        j["parts_parity"] = (*parts_parity == PartsParity::even) ? "even" : "odd";
    if (residues) {
        j["residues"] = {{"modulus", residues->modulus}, {"allowed", residues->allowed}};
    }
    return j;
}

ConstraintSpec ConstraintSpec::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("constraint spec JSON must be an object");
    ConstraintSpec s;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        if (key == "min_gap") s.min_gap = it->get<int>();
        else if (key == "max_gap") s.max_gap = it->get<int>();
        else if (key == "min_smallest") s.min_smallest = it->get<int>();
        else if (key == "max_smallest") s.max_smallest = it->get<int>();
        else if (key == "exact_parts") s.exact_parts = it->get<int>();
        else if (key == "max_parts") s.max_parts = it->get<int>();
        else if (key == "parts_parity") {
            std::string v = it->get<std::string>();
            if (v == "even") s.parts_parity = PartsParity::even;
            else if (v == "odd") s.parts_parity = PartsParity::odd;
            else throw std::invalid_argument("parts_parity must be 'even' or 'odd'");
        } else if (key == "residues") {
            ResidueRule r;
            r.modulus = it->at("modulus").get<int>();
            r.allowed = it->at("allowed").get<std::vector<int>>();
            std::sort(r.allowed.begin(), r.allowed.end());
            if (r.modulus < 1) throw std::invalid_argument("residue modulus must be >= 1");
            s.residues = std::move(r);
        } else {
            throw std::invalid_argument("unknown constraint field '" + key + "'");
        }
    }
    if (s.min_gap < 0 || s.min_smallest < 1)
        throw std::invalid_argument("invalid constraint bounds");
    return s;
}

ConstraintSpec ConstraintSpec::parse(std::string_view text) {
    std::size_t i = text.find_first_not_of(" \t");
    if (i != std::string_view::npos && text[i] == '{')
        return from_json(nlohmann::json::parse(text));
    return preset(text);
}

bool member(const ConstraintSpec& spec, const Partition& p) {
    const auto& parts = p.parts();
    const std::size_t nu = parts.size();
    if (spec.exact_parts && nu != static_cast<std::size_t>(*spec.exact_parts)) return false;
    if (spec.max_parts && nu > static_cast<std::size_t>(*spec.max_parts)) return false;
    if (spec.parts_parity) {
        bool even = nu % 2 == 0;
        if (even != (*spec.parts_parity == PartsParity::even)) return false;
    }
    if (nu == 0) return true;  // remaining constraints are vacuous on the empty partition
    if (parts.back() < spec.min_smallest) return false;
    if (spec.max_smallest && parts.back() > *spec.max_smallest) return false;
    if (spec.residues)
        for (int v : parts)
            if (!spec.residues->permits(v)) return false;
    for (std::size_t i = 0; i + 1 < nu; ++i) {
        int gap = parts[i] - parts[i + 1];
        if (gap < spec.min_gap) return false;
        if (spec.max_gap && gap > *spec.max_gap) return false;
    }
    return true;
}

/* ---------------- enumeration ---------------- */

namespace {

/* Completion constraints that cannot be enforced while parts are placed. */
bool leaf_ok(const ConstraintSpec& spec, const std::vector<int>& parts) {
    const std::size_t nu = parts.size();
    if (spec.exact_parts && nu != static_cast<std::size_t>(*spec.exact_parts)) return false;
    if (spec.parts_parity) {
        bool even = nu % 2 == 0;
        if (even != (*spec.parts_parity == PartsParity::even)) return false;
    }
    if (!parts.empty() && spec.max_smallest && parts.back() > *spec.max_smallest) return false;
    return true;
}

struct NormWalker {
    const ConstraintSpec& spec;
    const std::function<void(const std::vector<int>&)>& visit;
    std::vector<int> parts;

    /* Largest sum still reachable below `prev` with gaps >= min_gap, parts
     * >= min_smallest, and at most `slots` further parts. */
    std::int64_t max_fill(int prev, std::int64_t slots) const {
        int hi = prev - spec.min_gap;
        if (hi < spec.min_smallest) return 0;
        if (spec.min_gap == 0)
            return slots >= std::numeric_limits<std::int64_t>::max() / (hi > 0 ? hi : 1)
                       ? std::numeric_limits<std::int64_t>::max()
                       : slots * hi;
        std::int64_t count = (hi - spec.min_smallest) / spec.min_gap + 1;
        if (count > slots) count = slots;
        // arithmetic series hi + (hi-g) + ... , `count` terms
        return count * hi - spec.min_gap * count * (count - 1) / 2;
    }

    std::int64_t slots_left() const {
        std::int64_t used = static_cast<std::int64_t>(parts.size());
        std::int64_t s = std::numeric_limits<std::int64_t>::max();
        if (spec.exact_parts) s = *spec.exact_parts - used;
        else if (spec.max_parts) s = *spec.max_parts - used;
        return s < 0 ? 0 : s;
    }

    void rec(std::int64_t remaining, int prev) {
        if (remaining == 0) {
            if (leaf_ok(spec, parts)) visit(parts);
            return;
        }
        std::int64_t slots = slots_left();
        if (slots == 0) return;
        int hi = static_cast<int>(std::min<std::int64_t>(
            remaining, prev - spec.min_gap));
        int lo = spec.min_smallest;
        if (!parts.empty() && spec.max_gap)
            lo = std::max(lo, parts.back() - *spec.max_gap);
        for (int v = hi; v >= lo; --v) {
            if (spec.residues && !spec.residues->permits(v)) continue;
            std::int64_t rest = remaining - v;
            if (rest > 0) {
                if (rest > max_fill(v, slots - 1)) continue;
                if (spec.exact_parts) {
                    // all remaining slots must be used; check the minimum fill
                    std::int64_t j = slots - 1;
                    std::int64_t min_fill =
                        spec.min_gap * j * (j - 1) / 2 +
                        static_cast<std::int64_t>(spec.min_smallest) * j;
                    if (rest < min_fill) continue;  // v descending: smaller v only worse
                }
            }
            parts.push_back(v);
            rec(rest, v);
            parts.pop_back();
        }
    }
};

struct StatWalker {
    const ConstraintSpec& spec;
    AdditiveStat stat;
    std::int64_t budget;
    const std::function<void(const std::vector<int>&, std::int64_t)>& visit;
    std::vector<int> parts;

    /* Largest part value whose increment at `index` still fits `left`;
     * INT_MAX when the increment does not depend on the value (0). */
    int value_cap(std::size_t index, std::int64_t left) const {
        switch (stat) {
            case AdditiveStat::norm:
                return static_cast<int>(std::min<std::int64_t>(left, std::numeric_limits<int>::max()));
            case AdditiveStat::odd_index_sum:
                if (index % 2 == 1)
                    return static_cast<int>(std::min<std::int64_t>(left, std::numeric_limits<int>::max()));
                return std::numeric_limits<int>::max();
            case AdditiveStat::odd_column_sum:
                return static_cast<int>(std::min<std::int64_t>(2 * left, std::numeric_limits<int>::max()));
            case AdditiveStat::even_column_sum:
                return static_cast<int>(std::min<std::int64_t>(2 * left + 1, std::numeric_limits<int>::max()));
        }
        return 0;
    }

    void rec(std::int64_t used, int prev) {
        if (leaf_ok(spec, parts)) visit(parts, used);
        if (spec.exact_parts &&
            parts.size() >= static_cast<std::size_t>(*spec.exact_parts))
            return;
        if (spec.max_parts &&
            parts.size() >= static_cast<std::size_t>(*spec.max_parts))
            return;
        std::size_t index = parts.size() + 1;
        std::int64_t left = budget - used;
        int hi = std::min(prev - spec.min_gap, value_cap(index, left));
        int lo = spec.min_smallest;
        if (!parts.empty() && spec.max_gap)
            lo = std::max(lo, parts.back() - *spec.max_gap);
        for (int v = hi; v >= lo; --v) {
            if (spec.residues && !spec.residues->permits(v)) continue;
            std::int64_t inc = additive_stat_increment(stat, v, index);
            if (inc > left) continue;
            parts.push_back(v);
            rec(used + inc, v);
            parts.pop_back();
        }
    }
};

}  // namespace

std::int64_t additive_stat_increment(AdditiveStat s, int part, std::size_t index) {
    switch (s) {
        case AdditiveStat::norm: return part;
        case AdditiveStat::odd_index_sum: return index % 2 == 1 ? part : 0;
        case AdditiveStat::odd_column_sum: return (part + 1) / 2;
        case AdditiveStat::even_column_sum: return part / 2;
    }
    return 0;
}

bool stat_walk_terminates(const ConstraintSpec& spec, AdditiveStat s) {
    switch (s) {
        case AdditiveStat::norm:
        case AdditiveStat::odd_index_sum:
        case AdditiveStat::odd_column_sum:
            return true;
        case AdditiveStat::even_column_sum:
            /* floor(part/2) vanishes on part 1; only one 1 may occur when
             * parts are strictly decreasing. */
            return spec.min_gap >= 1;
    }
    return false;
}

void for_each_member_stat_le(
    const ConstraintSpec& spec, AdditiveStat stat, std::int64_t budget,
    const std::function<void(const std::vector<int>&, std::int64_t)>& visit) {
    if (!stat_walk_terminates(spec, stat))
        throw std::domain_error(
            "no finiteness certificate: infinitely many members share a statistic value");
    if (budget < 0) return;
    StatWalker w{spec, stat, budget, visit, {}};
    w.parts.reserve(64);
    w.rec(0, std::numeric_limits<int>::max() - 1);
}

std::vector<Partition> enumerate_by_norm(const ConstraintSpec& spec, int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::function<void(const std::vector<int>&)> visit =
        [&out](const std::vector<int>& parts) {
            out.push_back(Partition::from_parts(parts));
        };
    NormWalker w{spec, visit, {}};
    w.parts.reserve(64);
    w.rec(n, std::numeric_limits<int>::max() - 1);
    return out;
}

std::int64_t count_by_norm(const ConstraintSpec& spec, int n) {
    std::int64_t count = 0;
    if (n < 0) return 0;
    std::function<void(const std::vector<int>&)> visit =
        [&count](const std::vector<int>&) { ++count; };
    NormWalker w{spec, visit, {}};
    w.parts.reserve(64);
    w.rec(n, std::numeric_limits<int>::max() - 1);
    return count;
}

}  // namespace qpart
