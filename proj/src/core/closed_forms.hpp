#pragma once

#include <cstdint>

#include "polynomial.hpp"
#include "tangle.hpp"

namespace kstates {

/// ((x+1)^n - 1) / x, i.e. coefficients C(n, k+1).
IntPolynomial alpha(std::uint32_t n);

/// B(n,0) = x (x+1)^n
IntPolynomial b_n0(std::uint32_t n);

/// B(n,inf) = (x+1)^n + x^2 - 1
IntPolynomial b_ninf(std::uint32_t n);

/// B(n,r) = ((x+1)^r + x^2 - 1)/x * (x+1)^n + (x^2 - 1) ((x+1)^r - 1)/x.
/// Valid for every finite n, r including 0.
IntPolynomial b_nr_closed(std::uint32_t n, std::uint32_t r);

/// Iterates B(n,r) = B(n-1,r) + (x+1)^(n-1) B(inf,r) from B(0,r) = x (x+1)^r.
IntPolynomial b_nr_recurrence(std::uint32_t n, std::uint32_t r);

/// B(n,0) via B(n,0) = x B(n-1,0) + B(n-1,0), B(0,0) = x.
IntPolynomial b_n0_recurrence(std::uint32_t n);
/// B(n,inf) via B(n,inf) = B(n-1,0) + B(n-1,inf), B(0,inf) = x^2.
IntPolynomial b_ninf_recurrence(std::uint32_t n);

/// The four state classes of B(n,r). Their sum is B(n,r) for all finite
/// n, r; the state-level reading only holds for n, r >= 1.
struct StateClasses {
    IntPolynomial first_twists;  ///< x^2 alpha_n
    IntPolynomial second_twists; ///< x^2 alpha_r
    IntPolynomial mixed;         ///< x alpha_n alpha_r
    IntPolynomial single;        ///< x
    IntPolynomial sum() const { return first_twists + second_twists + mixed + single; }
};
StateClasses b_nr_classes(std::uint32_t n, std::uint32_t r);

/// b(n,r;k) = C(n+r,k+1) + C(n,k-1) + C(r,k-1) - C(n,k+1) - C(r,k+1) - [k == 1]
Int coeff_formula(std::uint32_t n, std::uint32_t r, std::uint32_t k);

/// b(n,r;1) = nr + 1
Int coeff_k1(std::uint32_t n, std::uint32_t r);
/// b(n,r;2) = n (C(r,2) + 1) + r (C(n,2) + 1)
Int coeff_k2(std::uint32_t n, std::uint32_t r);

/// d(n,r) = max(n+1, r+1, n+r-1)
Int degree_formula(std::uint32_t n, std::uint32_t r);

/// Leading coefficient of B(n,r); one argument may be infinite.
Int leading_coeff(ExtendedCount n, ExtendedCount r);

enum class SpecialRow {
    r1,   ///< (x+1)^(n+1) + x^2 - 1 = B(n,1)
    r2,   ///< (2x+2)(x+1)^n + (x^2-1)(x+2) = B(n,2)
    diag, ///< ((x+1)^(2n) + (x^2-1)(2(x+1)^n - 1)) / x = B(n,n)
};
IntPolynomial special_rows(SpecialRow row, std::uint32_t n);

} // namespace kstates
