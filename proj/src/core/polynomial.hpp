#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "checked.hpp"

namespace kstates {

/// Dense polynomial in x with exact 64-bit coefficients; index k holds the
/// coefficient of x^k. Always normalized: no trailing zeros, and the zero
/// polynomial has no coefficients at all.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs);
    IntPolynomial(std::initializer_list<Int> coeffs) : IntPolynomial(std::vector<Int>(coeffs)) {}

    static IntPolynomial constant(Int c) { return IntPolynomial({c}); }
    static IntPolynomial monomial(Int c, std::size_t power);
    /// (x + 1)^n
    static IntPolynomial binomial_power(std::size_t n);

    std::span<const Int> coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Largest power with a nonzero coefficient; nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept;
    Int coeff(std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : 0; }
    /// Coefficient of the highest power, 0 for the zero polynomial.
    Int leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

    Int eval(Int t) const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void normalize();
    std::vector<Int> coeffs_;
};

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial sub(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial scale(const IntPolynomial& p, Int c);
/// p / x. Throws Errc::not_divisible when the constant term is nonzero.
IntPolynomial exact_div_by_x(const IntPolynomial& p);
IntPolynomial shift_up(const IntPolynomial& p, std::size_t powers);

inline IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) { return add(p, q); }
inline IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q) { return sub(p, q); }
inline IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) { return mul(p, q); }

/// "c0 c1 c2 ..." ascending; the zero polynomial prints as "0".
std::string format_coeffs(const IntPolynomial& p);
/// "5x + 8x^2 + 3x^3": ascending powers, zero terms omitted.
std::string format_human(const IntPolynomial& p);
/// Inverse of format_coeffs. Throws Errc::invalid_argument on malformed text.
IntPolynomial parse_coeffs(std::string_view text);

} // namespace kstates
