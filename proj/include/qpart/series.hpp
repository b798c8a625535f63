#ifndef QPART_SERIES_HPP
#define QPART_SERIES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qpart/checked.hpp"

namespace qpart {

/* Truncated formal power series in q with exact integer coefficients.
 * Coefficients of q^0 .. q^order are meaningful; arithmetic never reads or
 * writes past the truncation order, and every coefficient operation is
 * overflow-checked. */
class Series {
  public:
    Series() : Series(0) {}
    explicit Series(int order);
    static Series constant(int order, coeff_t value);
    static Series monomial(int order, int exponent, coeff_t value);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    coeff_t coeff(int n) const;
    void set_coeff(int n, coeff_t v);
    void add_coeff(int n, coeff_t v);
    const std::vector<coeff_t>& coeffs() const { return c_; }

    bool operator==(const Series&) const = default;

    nlohmann::json to_json() const;          // {"order": N, "coeffs": [...]}
    static Series from_json(const nlohmann::json& j);

  private:
    std::vector<coeff_t> c_;
};

/* Binary operations truncate to the smaller operand order. */
Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series neg(const Series& a);
Series mul(const Series& a, const Series& b);
Series scaled(const Series& a, coeff_t factor);
Series shifted(const Series& a, int exponent);  // multiply by q^exponent

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator-(const Series& a) { return neg(a); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }

/* Multiplicative inverse up to the truncation order. Requires constant
 * term +1 or -1 (integer coefficients stay integers). */
Series inverse(const Series& s);

/* (sign q^base; q^step)_length, i.e. prod_{i=0}^{length-1} (1 - sign q^{base+i*step}).
 * length == nullopt means the infinite product; then base >= 1 and step >= 1
 * so that only finitely many factors reach any fixed order. */
struct PochSpec {
    int sign = +1;
    int base_exp = 1;
    int step_exp = 1;
    std::optional<int> length;  // nullopt = infinite
};

Series pochhammer(const PochSpec& spec, int order);

/* Optional integer parameters of named forms and identities. */
struct Params {
    std::optional<int> M, k, m, l, v;
    bool infinite_M = false;  // M -> infinity in the bounded sums

    bool operator==(const Params&) const = default;
    std::string suffix() const;  // "[M=2,k=1,m=2]" style, "" when empty
    /* Parses "M=2,k=1,m=2" or "M=inf,..." */
    static Params parse(std::string_view text);
};

/* Named product-side series:
 *   euler_inverse      1/(q;q)_inf
 *   odd_parts          1/(q;q^2)_inf
 *   distinct           (-q;q)_inf
 *   rr1_product        1/((q;q^5)(q^4;q^5))_inf
 *   rr2_product        1/((q^2;q^5)(q^3;q^5))_inf
 *   distinct_sq        (-q;q)_inf^2
 *   unrestricted_sq    1/(q;q)_inf^2
 *   finite_rhs         q^{m*C(M,2)+k*M} / (q;q)_M^2       (params M,k,m)
 *   dyson_crank_nonneg euler_inverse * dyson_alternating  */
Series product_form(std::string_view name, const Params& params, int order);

/* Named sum-side series:
 *   gauss_sq           sum q^{n^2}/(q)_n^2
 *   rr1_sum            sum q^{n^2}/(q)_n
 *   rr2_sum            sum q^{n^2+n}/(q)_n
 *   auluck_sum         sum q^{n^2+n}/(q)_n^2
 *   dyson_alternating  sum (-1)^n q^{n(n+1)/2}
 *   corollary_sum      sum_{i=0}^{M} q^{m*C(i,2)+k*i}/(q)_i^2  (M may be inf) */
Series sum_form(std::string_view name, const Params& params, int order);

bool is_product_form(std::string_view name);
bool is_sum_form(std::string_view name);

}  // namespace qpart

#endif
