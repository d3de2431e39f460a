#include "closed_forms.hpp"

#include <algorithm>

namespace kstates {

namespace {

const IntPolynomial kX{0, 1};
const IntPolynomial kOne{1};
const IntPolynomial kXSquaredMinusOne{-1, 0, 1};

IntPolynomial binom_power(std::uint32_t n) { return IntPolynomial::binomial_power(n); }

} // namespace

IntPolynomial alpha(std::uint32_t n) { return exact_div_by_x(binom_power(n) - kOne); }

IntPolynomial b_n0(std::uint32_t n) { return kX * binom_power(n); }

IntPolynomial b_ninf(std::uint32_t n) { return binom_power(n) + kXSquaredMinusOne; }

IntPolynomial b_nr_closed(std::uint32_t n, std::uint32_t r) {
    auto first = exact_div_by_x(binom_power(r) + kXSquaredMinusOne) * binom_power(n);
    auto second = kXSquaredMinusOne * exact_div_by_x(binom_power(r) - kOne);
    return first + second;
}

IntPolynomial b_nr_recurrence(std::uint32_t n, std::uint32_t r) {
    const auto inf_r = b_ninf(r);
    auto acc = b_n0(r);
    auto power = kOne;
    for (std::uint32_t i = 1; i <= n; ++i) {
        acc = acc + power * inf_r;
        power = power * binom_power(1);
    }
    return acc;
}

IntPolynomial b_n0_recurrence(std::uint32_t n) {
    auto acc = kX;
    for (std::uint32_t i = 1; i <= n; ++i) acc = kX * acc + acc;
    return acc;
}

IntPolynomial b_ninf_recurrence(std::uint32_t n) {
    auto zero_col = kX;
    auto inf_col = IntPolynomial{0, 0, 1};
    for (std::uint32_t i = 1; i <= n; ++i) {
        inf_col = zero_col + inf_col;
        zero_col = kX * zero_col + zero_col;
    }
    return inf_col;
}

StateClasses b_nr_classes(std::uint32_t n, std::uint32_t r) {
    const auto an = alpha(n);
    const auto ar = alpha(r);
    return StateClasses{
        .first_twists = shift_up(an, 2),
        .second_twists = shift_up(ar, 2),
        .mixed = shift_up(an * ar, 1),
        .single = kX,
    };
}

Int coeff_formula(std::uint32_t n, std::uint32_t r, std::uint32_t k) {
    const Int N = n, R = r, K = k;
    Int v = binomial(N + R, K + 1);
    v = checked_add(v, binomial(N, K - 1));
    v = checked_add(v, binomial(R, K - 1));
    v = checked_sub(v, binomial(N, K + 1));
    v = checked_sub(v, binomial(R, K + 1));
    if (k == 1) v = checked_sub(v, 1);
    return v;
}

Int coeff_k1(std::uint32_t n, std::uint32_t r) { return checked_add(checked_mul(n, r), 1); }

Int coeff_k2(std::uint32_t n, std::uint32_t r) {
    Int a = checked_mul(n, checked_add(binomial(r, 2), 1));
    Int b = checked_mul(r, checked_add(binomial(n, 2), 1));
    return checked_add(a, b);
}

Int degree_formula(std::uint32_t n, std::uint32_t r) {
    const Int N = n, R = r;
    return std::max({N + 1, R + 1, N + R - 1});
}

Int leading_coeff(ExtendedCount n, ExtendedCount r) {
    if (n.is_infinite() && r.is_infinite())
        throw Error(Errc::unsupported, "C(inf, inf) is not defined for two-bridge shadows");
    if (r.is_infinite()) return b_ninf(n.value()).leading();
    if (n.is_infinite()) return b_ninf(r.value()).leading();
    return b_nr_closed(n.value(), r.value()).leading();
}

IntPolynomial special_rows(SpecialRow row, std::uint32_t n) {
    switch (row) {
    case SpecialRow::r1:
        return binom_power(n + 1) + kXSquaredMinusOne;
    case SpecialRow::r2:
        return IntPolynomial{2, 2} * binom_power(n) + kXSquaredMinusOne * IntPolynomial{2, 1};
    case SpecialRow::diag: {
        auto twice = scale(binom_power(n), 2) - kOne;
        return exact_div_by_x(binom_power(2 * n) + kXSquaredMinusOne * twice);
    }
    }
    throw Error(Errc::invalid_argument, "unknown special row");
}

} // namespace kstates
