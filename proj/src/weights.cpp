#include "qpart/weights.hpp"

#include <charconv>
#include <stdexcept>

#include "qpart/checked.hpp"
#include "qpart/statistics.hpp"

namespace qpart {

WeightId WeightId::omega(int k, int m) {
    if (k < 0 || m < 0)
        throw std::invalid_argument("omega weight requires k >= 0, m >= 0");
    return {Kind::omega_km, k, m};
}

WeightId WeightId::parse(std::string_view tag) {
    if (tag == "unit") return unit();
    if (tag == "tilde1") return tilde1();
    if (tag == "tilde2") return tilde2();
    if (tag == "hat1") return hat1();
    if (tag == "sign") return sign_by_parts();
    if (tag.rfind("omega:", 0) == 0) {
        std::string_view rest = tag.substr(6);
        std::size_t comma = rest.find(',');
        if (comma != std::string_view::npos) {
            int k = 0, m = 0;
            auto r1 = std::from_chars(rest.data(), rest.data() + comma, k);
            auto r2 = std::from_chars(rest.data() + comma + 1, rest.data() + rest.size(), m);
            if (r1.ec == std::errc{} && r2.ec == std::errc{} &&
                r1.ptr == rest.data() + comma && r2.ptr == rest.data() + rest.size())
                return omega(k, m);
        }
    }
    throw std::invalid_argument("unknown weight tag '" + std::string(tag) + "'");
}

std::string WeightId::tag() const {
    switch (kind) {
        case Kind::unit: return "unit";
        case Kind::omega_km:
            return "omega:" + std::to_string(k) + "," + std::to_string(m);
        case Kind::tilde1: return "tilde1";
        case Kind::tilde2: return "tilde2";
        case Kind::hat1: return "hat1";
        case Kind::sign_by_parts: return "sign";
    }
    return "?";
}

std::int64_t weight_of_parts(const WeightId& w, const std::vector<int>& parts) {
    const std::size_t nu = parts.size();
    switch (w.kind) {
        case WeightId::Kind::unit:
            return 1;
        case WeightId::Kind::omega_km: {
            if (nu == 0) return 1;
            std::int64_t r = parts.back() + 1 - w.k;
            for (std::size_t i = 0; i + 1 < nu; ++i)
                r = checked_mul(r, parts[i] - parts[i + 1] + 1 - w.m);
            return r;
        }
        case WeightId::Kind::tilde1: {
            if (nu == 0) return 0;
            std::int64_t r = 1;
            for (std::size_t i = 0; i + 1 < nu; ++i)
                r = checked_mul(r, parts[i] - parts[i + 1] - 1);
            return r;
        }
        case WeightId::Kind::tilde2: {
            if (nu == 0) return 1;
            std::int64_t r = parts.back() - 2;
            for (std::size_t i = 0; i + 1 < nu; ++i)
                r = checked_mul(r, parts[i] - parts[i + 1] - 1);
            return r;
        }
        case WeightId::Kind::hat1: {
            if (nu == 0) return 1;
            int twos = parity(parts.back());
            for (std::size_t i = 0; i + 1 < nu; ++i)
                twos += parity(parts[i] - parts[i + 1]);
            if (twos >= 63) throw OverflowError("hat1 weight exceeds 64 bits");
            return std::int64_t{1} << twos;
        }
        case WeightId::Kind::sign_by_parts:
            return nu % 2 == 0 ? 1 : -1;
    }
    return 0;
}

std::int64_t weight(const WeightId& w, const Partition& p) {
    return weight_of_parts(w, p.parts());
}

DecorationCount decoration(const Partition& p) {
    DecorationCount d;
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        std::int64_t head = (parts[i] + 1) / 2;
        std::int64_t tail = parts[i] / 2;
        if (i % 2 == 0) {
            d.a += head;
            d.b += tail;
        } else {
            d.c += head;
            d.d += tail;
        }
    }
    return d;
}

bool weight_identity_check(const Partition& p) {
    return weight(WeightId::omega(1, 2), p) ==
           checked_add(weight(WeightId::omega(2, 2), p), weight(WeightId::tilde1(), p));
}

}  // namespace qpart
