#ifndef QPART_CHECKED_HPP
#define QPART_CHECKED_HPP

#include <cstdint>
#include <stdexcept>

namespace qpart {

/* Coefficient arithmetic is exact 64-bit integer arithmetic. Overflow is a
 * hard error, never a silent wrap. */
struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using coeff_t = std::int64_t;

inline coeff_t checked_add(coeff_t a, coeff_t b) {
    coeff_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

inline coeff_t checked_sub(coeff_t a, coeff_t b) {
    coeff_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

inline coeff_t checked_mul(coeff_t a, coeff_t b) {
    coeff_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

inline coeff_t checked_neg(coeff_t a) {
    return checked_sub(0, a);
}

}  // namespace qpart

#endif
