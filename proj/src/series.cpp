#include "qpart/series.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace qpart {

Series::Series(int order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    c_.assign(static_cast<std::size_t>(order) + 1, 0);
}

Series Series::constant(int order, coeff_t value) {
    Series s(order);
    s.c_[0] = value;
    return s;
}

Series Series::monomial(int order, int exponent, coeff_t value) {
    Series s(order);
    if (exponent < 0) throw std::invalid_argument("monomial exponent must be >= 0");
    if (exponent <= order) s.c_[static_cast<std::size_t>(exponent)] = value;
    return s;
}

coeff_t Series::coeff(int n) const {
    if (n < 0 || n > order())
        throw std::out_of_range("series coefficient index out of range");
    return c_[static_cast<std::size_t>(n)];
}

void Series::set_coeff(int n, coeff_t v) {
    if (n < 0 || n > order())
        throw std::out_of_range("series coefficient index out of range");
    c_[static_cast<std::size_t>(n)] = v;
}

void Series::add_coeff(int n, coeff_t v) {
    if (n < 0 || n > order())
        throw std::out_of_range("series coefficient index out of range");
    c_[static_cast<std::size_t>(n)] = checked_add(c_[static_cast<std::size_t>(n)], v);
}

nlohmann::json Series::to_json() const {
    return {{"order", order()}, {"coeffs", c_}};
}

Series Series::from_json(const nlohmann::json& j) {
    Series s(j.at("order").get<int>());
    auto coeffs = j.at("coeffs").get<std::vector<coeff_t>>();
    if (coeffs.size() != s.c_.size())
        throw std::invalid_argument("series JSON: coeffs length must be order+1");
    s.c_ = std::move(coeffs);
    return s;
}

Series add(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    for (int n = 0; n <= r.order(); ++n)
        r.set_coeff(n, checked_add(a.coeff(n), b.coeff(n)));
    return r;
}

Series sub(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    for (int n = 0; n <= r.order(); ++n)
        r.set_coeff(n, checked_sub(a.coeff(n), b.coeff(n)));
    return r;
}

Series neg(const Series& a) {
    Series r(a.order());
    for (int n = 0; n <= r.order(); ++n) r.set_coeff(n, checked_neg(a.coeff(n)));
    return r;
}

Series mul(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    const int N = r.order();
    for (int i = 0; i <= N; ++i) {
        coeff_t ai = a.coeff(i);
        if (ai == 0) continue;
        for (int j = 0; j + i <= N; ++j) {
            coeff_t bj = b.coeff(j);
            if (bj == 0) continue;
            r.add_coeff(i + j, checked_mul(ai, bj));
        }
    }
    return r;
}

Series scaled(const Series& a, coeff_t factor) {
    Series r(a.order());
    for (int n = 0; n <= r.order(); ++n)
        r.set_coeff(n, checked_mul(a.coeff(n), factor));
    return r;
}

Series shifted(const Series& a, int exponent) {
    if (exponent < 0) throw std::invalid_argument("shift exponent must be >= 0");
    Series r(a.order());
    for (int n = 0; n + exponent <= r.order(); ++n)
        r.set_coeff(n + exponent, a.coeff(n));
    return r;
}

Series inverse(const Series& s) {
    coeff_t c0 = s.coeff(0);
    if (c0 != 1 && c0 != -1)
        throw std::invalid_argument("series inverse requires constant term +1 or -1");
    const int N = s.order();
    Series b(N);
    b.set_coeff(0, c0);
    /* b_n = -c0 * sum_{j=1}^{n} s_j b_{n-j} */
    for (int n = 1; n <= N; ++n) {
        coeff_t acc = 0;
        for (int j = 1; j <= n; ++j)
            acc = checked_add(acc, checked_mul(s.coeff(j), b.coeff(n - j)));
        b.set_coeff(n, checked_mul(checked_neg(c0), acc));
    }
    return b;
}

Series pochhammer(const PochSpec& spec, int order) {
    if (spec.sign != 1 && spec.sign != -1)
        throw std::invalid_argument("pochhammer sign must be +1 or -1");
    if (!spec.length && (spec.step_exp < 1 || spec.base_exp < 1))
        throw std::invalid_argument(
            "infinite pochhammer product requires base and step exponents >= 1");
    if (spec.length && *spec.length < 0)
        throw std::invalid_argument("pochhammer length must be >= 0");
    if (spec.base_exp < 0 || spec.step_exp < 0)
        throw std::invalid_argument("pochhammer exponents must be >= 0");

    Series r = Series::constant(order, 1);
    for (int i = 0; !spec.length || i < *spec.length; ++i) {
        std::int64_t e = spec.base_exp + static_cast<std::int64_t>(i) * spec.step_exp;
        if (e > order) break;  // later factors cannot touch degrees <= order
        /* multiply by (1 - sign q^e) in place */
        for (int n = order; n >= static_cast<int>(e); --n) {
            coeff_t low = r.coeff(n - static_cast<int>(e));
            if (low != 0)
                r.set_coeff(n, spec.sign > 0 ? checked_sub(r.coeff(n), low)
                                             : checked_add(r.coeff(n), low));
        }
    }
    return r;
}

std::string Params::suffix() const {
    std::string s;
    auto put = [&s](const char* name, const std::string& val) {
        s += s.empty() ? "[" : ",";
        s += name;
        s += '=';
        s += val;
    };
    if (M) put("M", std::to_string(*M));
    else if (infinite_M) put("M", "inf");
    if (k) put("k", std::to_string(*k));
    if (m) put("m", std::to_string(*m));
    if (l) put("l", std::to_string(*l));
    if (v) put("v", std::to_string(*v));
    if (!s.empty()) s += "]";
    return s;
}

Params Params::parse(std::string_view text) {
    Params p;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view item = text.substr(
            pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        std::size_t eq = item.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("parameter items must look like name=value");
        std::string_view name = item.substr(0, eq);
        std::string_view val = item.substr(eq + 1);
        if (name == "M" && val == "inf") {
            p.infinite_M = true;
        } else {
            int x = 0;
            auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), x);
            if (ec != std::errc{} || ptr != val.data() + val.size())
                throw std::invalid_argument("cannot parse parameter value '" +
                                            std::string(val) + "'");
            if (name == "M") p.M = x;
            else if (name == "k") p.k = x;
            else if (name == "m") p.m = x;
            else if (name == "l") p.l = x;
            else if (name == "v") p.v = x;
            else
                throw std::invalid_argument("unknown parameter '" + std::string(name) + "'");
        }
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return p;
}

namespace {

Series finite_poch(int length, int order) {  // (q;q)_length
    return pochhammer({+1, 1, 1, length}, order);
}

std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

int require(const std::optional<int>& v, const char* what) {
    if (!v) throw std::invalid_argument(std::string("missing parameter ") + what);
    return *v;
}

Series corollary_sum_series(const Params& params, int order) {
    /* sum_{i=0}^{M} q^{m*C(i,2)+k*i} / (q)_i^2, truncated; M absent or
     * infinite_M means the sum runs while the leading exponent fits. */
    int k = require(params.k, "k");
    int m = require(params.m, "m");
    std::optional<int> M = params.M;
    if (params.infinite_M) M.reset();
    if (!M && k < 1 && m < 1)
        throw std::invalid_argument(
            "corollary_sum with unbounded M needs k >= 1 or m >= 1 to terminate");
    const int bound = M.value_or(std::numeric_limits<int>::max());
    Series total(order);
    Series inv_poch = Series::constant(order, 1);  // 1/(q)_i, updated per i
    for (int i = 0;; ++i) {
        if (i > bound) break;
        std::int64_t e = m * choose2(i) + static_cast<std::int64_t>(k) * i;
        if (e > order) break;  // exponents are nondecreasing in i
        if (i > 0) {
            /* divide by (1 - q^i): multiply by the geometric series */
            Series geom(order);
            for (int n = 0; n <= order; n += i) geom.set_coeff(n, 1);
            inv_poch = mul(inv_poch, geom);
        }
        total = add(total, shifted(mul(inv_poch, inv_poch), static_cast<int>(e)));
    }
    return total;
}

}  // namespace

bool is_product_form(std::string_view name) {
    return name == "euler_inverse" || name == "odd_parts" || name == "distinct" ||
           name == "rr1_product" || name == "rr2_product" || name == "distinct_sq" ||
           name == "unrestricted_sq" || name == "finite_rhs" ||
           name == "dyson_crank_nonneg";
}

bool is_sum_form(std::string_view name) {
    return name == "gauss_sq" || name == "rr1_sum" || name == "rr2_sum" ||
           name == "auluck_sum" || name == "dyson_alternating" ||
           name == "corollary_sum";
}

Series product_form(std::string_view name, const Params& params, int order) {
    if (name == "euler_inverse") return inverse(pochhammer({+1, 1, 1, {}}, order));
    if (name == "odd_parts") return inverse(pochhammer({+1, 1, 2, {}}, order));
    if (name == "distinct") return pochhammer({-1, 1, 1, {}}, order);
    if (name == "rr1_product")
        return inverse(mul(pochhammer({+1, 1, 5, {}}, order),
                           pochhammer({+1, 4, 5, {}}, order)));
    if (name == "rr2_product")
        return inverse(mul(pochhammer({+1, 2, 5, {}}, order),
                           pochhammer({+1, 3, 5, {}}, order)));
    if (name == "distinct_sq") {
        Series d = pochhammer({-1, 1, 1, {}}, order);
        return mul(d, d);
    }
    if (name == "unrestricted_sq") {
        Series e = inverse(pochhammer({+1, 1, 1, {}}, order));
        return mul(e, e);
    }
    if (name == "finite_rhs") {
        int M = require(params.M, "M");
        int k = require(params.k, "k");
        int m = require(params.m, "m");
        std::int64_t e = m * choose2(M) + static_cast<std::int64_t>(k) * M;
        if (e > order) return Series(order);
        Series inv = inverse(finite_poch(M, order));
        return shifted(mul(inv, inv), static_cast<int>(e));
    }
    if (name == "dyson_crank_nonneg")
        return mul(product_form("euler_inverse", {}, order),
                   sum_form("dyson_alternating", {}, order));
    throw std::invalid_argument("unknown product form '" + std::string(name) + "'");
}

Series sum_form(std::string_view name, const Params& params, int order) {
    if (name == "corollary_sum") return corollary_sum_series(params, order);
    if (name == "dyson_alternating") {
        Series r(order);
        for (std::int64_t i = 0; choose2(i + 1) <= order; ++i)
            r.add_coeff(static_cast<int>(choose2(i + 1)), i % 2 == 0 ? 1 : -1);
        return r;
    }
    bool square;
    std::int64_t lin;
    if (name == "gauss_sq") { square = true; lin = 0; }
    else if (name == "rr1_sum") { square = false; lin = 0; }
    else if (name == "rr2_sum") { square = false; lin = 1; }
    else if (name == "auluck_sum") { square = true; lin = 1; }
    else throw std::invalid_argument("unknown sum form '" + std::string(name) + "'");

    /* sum over n >= 0 of q^{n^2 + lin*n} / (q)_n or (q)_n^2 */
    Series total(order);
    Series inv_poch = Series::constant(order, 1);
    for (std::int64_t n = 0; n * n + lin * n <= order; ++n) {
        if (n > 0) {
            Series geom(order);
            for (int j = 0; j <= order; j += static_cast<int>(n)) geom.set_coeff(j, 1);
            inv_poch = mul(inv_poch, geom);
        }
        Series term = square ? mul(inv_poch, inv_poch) : inv_poch;
        total = add(total, shifted(term, static_cast<int>(n * n + lin * n)));
    }
    return total;
}

}  // namespace qpart
