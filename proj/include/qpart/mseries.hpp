#ifndef QPART_MSERIES_HPP
#define QPART_MSERIES_HPP

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qpart/checked.hpp"
#include "qpart/series.hpp"

namespace qpart {

using Exp4 = std::array<int, 4>;  // exponents of (a, b, c, d)

inline int total_degree(const Exp4& e) { return e[0] + e[1] + e[2] + e[3]; }

/* Truncated polynomial in (a,b,c,d) with exact integer coefficients,
 * truncated by TOTAL degree: monomial total degree = partition norm, which
 * keeps enumeration-versus-product comparisons exact per degree. */
class MSeries {
  public:
    explicit MSeries(int order);
    static MSeries constant(int order, coeff_t value);

    int order() const { return order_; }
    coeff_t coeff(const Exp4& e) const;
    void set_coeff(const Exp4& e, coeff_t v);
    void add_coeff(const Exp4& e, coeff_t v);

    /* Nonzero terms in lexicographic exponent order. */
    std::vector<std::pair<Exp4, coeff_t>> terms() const;

    bool operator==(const MSeries&) const;

    /* {"order": N, "terms": [[[i,j,k,l], c], ...]} sorted lexicographically. */
    nlohmann::json to_json() const;
    static MSeries from_json(const nlohmann::json& j);

  private:
    int order_;
    int stride_;
    std::vector<coeff_t> c_;
    std::size_t index(const Exp4& e) const;
    friend MSeries m_mul(const MSeries&, const MSeries&);
    friend MSeries m_inverse(const MSeries&);
};

MSeries m_add(const MSeries& a, const MSeries& b);
MSeries m_sub(const MSeries& a, const MSeries& b);
MSeries m_neg(const MSeries& a);
MSeries m_mul(const MSeries& a, const MSeries& b);
MSeries m_scaled(const MSeries& a, coeff_t factor);
/* Inverse up to total degree; requires constant term +1 or -1. */
MSeries m_inverse(const MSeries& a);

/* (sign base; modulus)_length in four variables:
 * prod_{i=0}^{length-1} (1 - sign * base * modulus^i). Infinite products
 * need base and modulus of positive total degree. */
struct MPochSpec {
    int sign = +1;
    Exp4 base{0, 0, 0, 0};
    Exp4 modulus{1, 1, 1, 1};  // Q = abcd
    std::optional<int> length;
};

MSeries pochhammer(const MPochSpec& spec, int order);

enum class BouletForm { phi, psi };

BouletForm parse_boulet(std::string_view name);  // "phi" | "psi"

/* Boulet's generating functions for four-decorated Ferrers diagrams, with
 * Q = abcd:
 *   psi = (-a;Q)(-abc;Q) / (ab;Q)              over distinct-row diagrams
 *   phi = (-a;Q)(-abc;Q) / ((ab;Q)(ac;Q)(Q;Q)) over all diagrams  */
MSeries boulet(BouletForm form, int order);

/* Maps each monomial a^i b^j c^k d^l to q^{i ea + j eb + k ec + l ed} and
 * sums. When any exponent is 0 the result is only exact up to order/2 (the
 * decorated diagrams satisfy a+b >= c+d and a+c >= b+d, so unit
 * substitutions at half order are safe); requesting more is an error. */
Series specialize(const MSeries& ms, const Exp4& q_exponents, int out_order);

}  // namespace qpart

#endif
