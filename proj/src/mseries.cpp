#include "qpart/mseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace qpart {

namespace {
constexpr int kMaxOrder = 48;  // dense (N+1)^4 storage; 48 -> ~44 MB
}

MSeries::MSeries(int order) : order_(order), stride_(order + 1) {
    if (order < 0) throw std::invalid_argument("mseries order must be >= 0");
    if (order > kMaxOrder)
        throw std::invalid_argument("mseries order exceeds the supported maximum (48)");
    c_.assign(static_cast<std::size_t>(stride_) * stride_ * stride_ * stride_, 0);
}

MSeries MSeries::constant(int order, coeff_t value) {
    MSeries s(order);
    s.c_[0] = value;
    return s;
}

std::size_t MSeries::index(const Exp4& e) const {
    return ((static_cast<std::size_t>(e[0]) * stride_ + e[1]) * stride_ + e[2]) * stride_ + e[3];
}

coeff_t MSeries::coeff(const Exp4& e) const {
    for (int x : e)
        if (x < 0) throw std::out_of_range("negative exponent");
    if (total_degree(e) > order_) return 0;
    return c_[index(e)];
}

void MSeries::set_coeff(const Exp4& e, coeff_t v) {
    for (int x : e)
        if (x < 0) throw std::out_of_range("negative exponent");
    if (total_degree(e) > order_)
        throw std::out_of_range("exponent exceeds the truncation order");
    c_[index(e)] = v;
}

void MSeries::add_coeff(const Exp4& e, coeff_t v) {
    set_coeff(e, checked_add(coeff(e), v));
}

std::vector<std::pair<Exp4, coeff_t>> MSeries::terms() const {
    std::vector<std::pair<Exp4, coeff_t>> out;
    Exp4 e;
    for (e[0] = 0; e[0] <= order_; ++e[0])
        for (e[1] = 0; e[0] + e[1] <= order_; ++e[1])
            for (e[2] = 0; e[0] + e[1] + e[2] <= order_; ++e[2])
                for (e[3] = 0; total_degree(e) <= order_; ++e[3]) {
                    coeff_t v = c_[index(e)];
                    if (v != 0) out.emplace_back(e, v);
                }
    return out;
}

bool MSeries::operator==(const MSeries& other) const {
    return order_ == other.order_ && c_ == other.c_;
}

nlohmann::json MSeries::to_json() const {
    nlohmann::json jt = nlohmann::json::array();
    for (const auto& [e, v] : terms())
        jt.push_back({{e[0], e[1], e[2], e[3]}, v});
    return {{"order", order_}, {"terms", jt}};
}

MSeries MSeries::from_json(const nlohmann::json& j) {
    MSeries s(j.at("order").get<int>());
    for (const auto& item : j.at("terms")) {
        auto exps = item.at(0).get<std::vector<int>>();
        if (exps.size() != 4)
            throw std::invalid_argument("mseries term exponent must have 4 entries");
        s.set_coeff({exps[0], exps[1], exps[2], exps[3]}, item.at(1).get<coeff_t>());
    }
    return s;
}

MSeries m_add(const MSeries& a, const MSeries& b) {
    MSeries r(std::min(a.order(), b.order()));
    for (const auto& [e, v] : a.terms())
        if (total_degree(e) <= r.order()) r.add_coeff(e, v);
    for (const auto& [e, v] : b.terms())
        if (total_degree(e) <= r.order()) r.add_coeff(e, v);
    return r;
}

MSeries m_sub(const MSeries& a, const MSeries& b) {
    return m_add(a, m_neg(b));
}

MSeries m_neg(const MSeries& a) {
    MSeries r(a.order());
    for (const auto& [e, v] : a.terms()) r.set_coeff(e, checked_neg(v));
    return r;
}

MSeries m_scaled(const MSeries& a, coeff_t factor) {
    MSeries r(a.order());
    for (const auto& [e, v] : a.terms()) r.set_coeff(e, checked_mul(v, factor));
    return r;
}

MSeries m_mul(const MSeries& a, const MSeries& b) {
    MSeries r(std::min(a.order(), b.order()));
    const int N = r.order();
    auto at = a.terms();
    auto bt = b.terms();
    for (const auto& [ea, va] : at) {
        int da = total_degree(ea);
        if (da > N) continue;
        for (const auto& [eb, vb] : bt) {
            if (da + total_degree(eb) > N) continue;
            Exp4 e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
            std::size_t idx = r.index(e);
            r.c_[idx] = checked_add(r.c_[idx], checked_mul(va, vb));
        }
    }
    return r;
}

MSeries m_inverse(const MSeries& a) {
    coeff_t c0 = a.coeff({0, 0, 0, 0});
    if (c0 != 1 && c0 != -1)
        throw std::invalid_argument("mseries inverse requires constant term +1 or -1");
    const int N = a.order();
    MSeries r(N);
    r.set_coeff({0, 0, 0, 0}, c0);

    std::vector<std::pair<Exp4, coeff_t>> a_terms;
    for (const auto& t : a.terms())
        if (total_degree(t.first) >= 1) a_terms.push_back(t);

    /* known inverse terms grouped by total degree */
    std::vector<std::vector<std::pair<Exp4, coeff_t>>> by_degree(
        static_cast<std::size_t>(N) + 1);
    by_degree[0].push_back({{0, 0, 0, 0}, c0});

    for (int d = 1; d <= N; ++d) {
        /* a0*r[t] + sum_{deg u >= 1} a[u]*r[t-u] = 0 for every t of degree d */
        for (const auto& [u, cu] : a_terms) {
            int du = total_degree(u);
            if (du > d) continue;
            for (const auto& [w, cw] : by_degree[static_cast<std::size_t>(d - du)]) {
                Exp4 t{u[0] + w[0], u[1] + w[1], u[2] + w[2], u[3] + w[3]};
                std::size_t idx = r.index(t);
                r.c_[idx] = checked_sub(r.c_[idx], checked_mul(cu, cw));
            }
        }
        /* scale the accumulated degree-d slice by 1/a0 = a0 and record it */
        Exp4 e;
        for (e[0] = 0; e[0] <= d; ++e[0])
            for (e[1] = 0; e[0] + e[1] <= d; ++e[1])
                for (e[2] = 0; e[0] + e[1] + e[2] <= d; ++e[2]) {
                    e[3] = d - e[0] - e[1] - e[2];
                    std::size_t idx = r.index(e);
                    if (r.c_[idx] != 0) {
                        r.c_[idx] = checked_mul(r.c_[idx], c0);
                        by_degree[static_cast<std::size_t>(d)].push_back({e, r.c_[idx]});
                    }
                }
    }
    return r;
}

MSeries pochhammer(const MPochSpec& spec, int order) {
    if (spec.sign != 1 && spec.sign != -1)
        throw std::invalid_argument("pochhammer sign must be +1 or -1");
    for (int x : spec.base)
        if (x < 0) throw std::invalid_argument("pochhammer base exponents must be >= 0");
    for (int x : spec.modulus)
        if (x < 0) throw std::invalid_argument("pochhammer modulus exponents must be >= 0");
    if (!spec.length &&
        (total_degree(spec.base) < 1 || total_degree(spec.modulus) < 1))
        throw std::invalid_argument(
            "infinite pochhammer product requires base and modulus of positive degree");

    MSeries r = MSeries::constant(order, 1);
    for (int i = 0; !spec.length || i < *spec.length; ++i) {
        Exp4 e{spec.base[0] + i * spec.modulus[0], spec.base[1] + i * spec.modulus[1],
               spec.base[2] + i * spec.modulus[2], spec.base[3] + i * spec.modulus[3]};
        if (total_degree(e) > order) {
            if (!spec.length) break;
            continue;  // finite product: remaining factors act as 1 at this order
        }
        MSeries factor = MSeries::constant(order, 1);
        factor.set_coeff(e, spec.sign > 0 ? -1 : 1);
        r = m_mul(r, factor);
    }
    return r;
}

BouletForm parse_boulet(std::string_view name) {
    if (name == "phi") return BouletForm::phi;
    if (name == "psi") return BouletForm::psi;
    throw std::invalid_argument("boulet form must be 'phi' or 'psi'");
}

MSeries boulet(BouletForm form, int order) {
    const Exp4 Q{1, 1, 1, 1};
    MSeries r = pochhammer({-1, {1, 0, 0, 0}, Q, {}}, order);        // (-a;Q)
    r = m_mul(r, pochhammer({-1, {1, 1, 1, 0}, Q, {}}, order));      // (-abc;Q)
    r = m_mul(r, m_inverse(pochhammer({+1, {1, 1, 0, 0}, Q, {}}, order)));  // /(ab;Q)
    if (form == BouletForm::phi) {
        r = m_mul(r, m_inverse(pochhammer({+1, {1, 0, 1, 0}, Q, {}}, order)));  // /(ac;Q)
        r = m_mul(r, m_inverse(pochhammer({+1, Q, Q, {}}, order)));             // /(Q;Q)
    }
    return r;
}

Series specialize(const MSeries& ms, const Exp4& q_exponents, int out_order) {
    for (int x : q_exponents)
        if (x < 0) throw std::invalid_argument("specialization exponents must be >= 0");
    bool has_unit = std::any_of(q_exponents.begin(), q_exponents.end(),
                                [](int x) { return x == 0; });
    int valid = has_unit ? ms.order() / 2 : ms.order();
    if (out_order > valid)
        throw std::invalid_argument(
            "requested order exceeds the exact range of this specialization");
    Series r(out_order);
    for (const auto& [e, v] : ms.terms()) {
        std::int64_t n = 0;
        for (int t = 0; t < 4; ++t)
            n += static_cast<std::int64_t>(e[t]) * q_exponents[t];
        if (n <= out_order) r.add_coeff(static_cast<int>(n), v);
    }
    return r;
}

}  // namespace qpart
