#include "doctest.h"

#include "closed_forms.hpp"
#include "two_bridge.hpp"

using namespace kstates;

namespace {

const IntPolynomial x{0, 1};
const IntPolynomial one{1};

// Pascal's triangle, independent of kstates::binomial.
Int pascal(int a, int b) {
    if (b < 0 || b > a) return 0;
    std::vector<std::vector<Int>> t(a + 1);
    for (int i = 0; i <= a; ++i) {
        t[i].assign(i + 1, 1);
        for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
    }
    return t[a][b];
}

} // namespace

TEST_CASE("alpha") {
    CHECK(alpha(0).is_zero());
    CHECK(alpha(1) == one);
    // (x+1)^3 - 1 = x^3 + 3x^2 + 3x, shifted down
    CHECK(alpha(3) == IntPolynomial{3, 3, 1});
    for (int n = 0; n <= 10; ++n)
        for (int k = 0; k <= 10; ++k) CHECK(alpha(n).coeff(k) == pascal(n, k + 1));
}

TEST_CASE("b_n0 and b_ninf") {
    CHECK(b_n0(0) == x);
    CHECK(b_n0(4) == IntPolynomial{0, 1, 4, 6, 4, 1});
    CHECK(b_ninf(0) == IntPolynomial{0, 0, 1});
    CHECK(b_ninf(2) == IntPolynomial{0, 2, 2});
    for (std::uint32_t n = 0; n <= 8; ++n) {
        CHECK(b_n0(n) == shift_up(alpha(n), 2) + x);
        CHECK(b_ninf(n) == shift_up(alpha(n), 1) + IntPolynomial{0, 0, 1});
        CHECK(b_n0_recurrence(n) == b_n0(n));
        CHECK(b_ninf_recurrence(n) == b_ninf(n));
    }
}

TEST_CASE("b_nr_closed") {
    CHECK(b_nr_closed(2, 2) == IntPolynomial{0, 5, 8, 3});
    CHECK(b_nr_closed(3, 3) == IntPolynomial{0, 10, 24, 21, 8, 1});
    for (std::uint32_t n = 0; n <= 8; ++n) CHECK(b_nr_closed(n, 0) == b_n0(n));
    CHECK_THROWS_AS((void)b_nr_closed(100, 100), Error);
}

TEST_CASE("b_nr_recurrence") {
    CHECK(b_nr_recurrence(1, 1) == IntPolynomial{0, 2, 2});
    for (std::uint32_t r = 0; r <= 8; ++r) CHECK(b_nr_recurrence(0, r) == b_n0(r));
    for (std::uint32_t n = 0; n <= 8; ++n)
        for (std::uint32_t r = 0; r <= 8; ++r) CHECK(b_nr_recurrence(n, r) == b_nr_closed(n, r));
}

TEST_CASE("b_nr_classes") {
    const IntPolynomial x_plus_2{2, 1};
    auto c = b_nr_classes(2, 2);
    CHECK(c.first_twists == shift_up(x_plus_2, 2));
    CHECK(c.second_twists == shift_up(x_plus_2, 2));
    CHECK(c.mixed == shift_up(x_plus_2 * x_plus_2, 1));
    CHECK(c.single == x);
    CHECK(c.sum() == IntPolynomial{0, 5, 8, 3});

    c = b_nr_classes(1, 1);
    CHECK(c.first_twists == IntPolynomial{0, 0, 1});
    CHECK(c.second_twists == IntPolynomial{0, 0, 1});
    CHECK(c.mixed == x);
    CHECK(c.sum() == IntPolynomial{0, 2, 2});

    for (std::uint32_t n = 0; n <= 7; ++n) {
        for (std::uint32_t r = 0; r <= 7; ++r) {
            c = b_nr_classes(n, r);
            const Int a = (Int{1} << n) - 1, b = (Int{1} << r) - 1;
            CHECK(c.first_twists.eval(1) == a);
            CHECK(c.second_twists.eval(1) == b);
            CHECK(c.mixed.eval(1) == a * b);
            CHECK(c.single.eval(1) == 1);
            CHECK(c.sum() == b_nr_closed(n, r));
        }
    }
}

TEST_CASE("coeff_formula") {
    CHECK(coeff_formula(2, 2, 1) == 5);
    CHECK(coeff_formula(7, 2, 3) == 113);
    for (std::uint32_t n = 0; n <= 7; ++n) {
        for (std::uint32_t r = 0; r <= 7; ++r) {
            CHECK(coeff_formula(n, r, 0) == 0);
            const auto p = b_nr_closed(n, r);
            for (std::uint32_t k = 0; k <= 14; ++k) {
                CHECK(coeff_formula(n, r, k) == p.coeff(k));
                CHECK(coeff_formula(n, r, k) >= 0);
            }
        }
    }
}

TEST_CASE("coeff_k1 and coeff_k2") {
    CHECK(coeff_k1(7, 7) == 50);
    CHECK(coeff_k1(2, 2) == 5);
    const Int column_r1[] = {1, 2, 4, 7, 11, 16, 22, 29};
    for (std::uint32_t r = 0; r <= 7; ++r) {
        CHECK(coeff_k1(0, r) == 1);
        CHECK(coeff_k2(0, r) == r);
    }
    CHECK(coeff_k2(4, 4) == 56);
    for (std::uint32_t n = 0; n <= 7; ++n) {
        CHECK(coeff_k2(n, 1) == column_r1[n]);
        CHECK(coeff_k2(n, 1) == pascal(n, 2) + n + 1);
        for (std::uint32_t r = 0; r <= 7; ++r) {
            CHECK(coeff_k1(n, r) == coeff_formula(n, r, 1));
            CHECK(coeff_k2(n, r) == coeff_formula(n, r, 2));
        }
    }
}

TEST_CASE("degree_formula and leading_coeff") {
    CHECK(degree_formula(0, 0) == 1);
    CHECK(degree_formula(2, 2) == 3);
    CHECK(degree_formula(7, 7) == 13);
    CHECK(leading_coeff(2, 2) == 3);
    for (std::uint32_t n = 3; n <= 7; ++n) CHECK(leading_coeff(n, 2) == 2);

    const Int inf_leading[] = {1, 1, 2, 1, 1, 1, 1, 1};
    const Int inf_degree[] = {2, 2, 2, 3, 4, 5, 6, 7, 8};
    for (std::uint32_t n = 0; n < 8; ++n) {
        CHECK(leading_coeff(n, ExtendedCount::infinity()) == inf_leading[n]);
        CHECK(leading_coeff(ExtendedCount::infinity(), n) == inf_leading[n]);
    }
    for (std::uint32_t n = 0; n < 9; ++n) CHECK(b_ninf(n).degree() == static_cast<std::size_t>(inf_degree[n]));
    CHECK_THROWS_AS((void)leading_coeff(ExtendedCount::infinity(), ExtendedCount::infinity()), Error);

    for (std::uint32_t n = 0; n <= 7; ++n) {
        CHECK(degree_formula(n, 0) == n + 1);
        for (std::uint32_t r = 0; r <= 7; ++r) {
            CHECK(degree_formula(n, r) == degree_formula(r, n));
            CHECK(degree_formula(n, r) == static_cast<Int>(*b_nr_closed(n, r).degree()));
            CHECK(leading_coeff(n, r) == leading_coeff(r, n));
        }
    }
}

TEST_CASE("special_rows") {
    CHECK(special_rows(SpecialRow::r1, 7) == IntPolynomial{0, 8, 29, 56, 70, 56, 28, 8, 1});
    CHECK(special_rows(SpecialRow::r2, 5) == IntPolynomial{0, 11, 32, 41, 30, 12, 2});
    CHECK(special_rows(SpecialRow::diag, 6) == IntPolynomial{0, 37, 192, 495, 820, 952, 804, 497, 220, 66, 12, 1});
    for (std::uint32_t n = 0; n <= 10; ++n) {
        CHECK(special_rows(SpecialRow::r1, n) == b_nr_closed(n, 1));
        CHECK(special_rows(SpecialRow::r2, n) == b_nr_closed(n, 2));
        CHECK(special_rows(SpecialRow::diag, n) == b_nr_closed(n, n));
    }
}

TEST_CASE("property: recurrences, twist-knot identity, symmetry") {
    const IntPolynomial x_plus_1{1, 1};
    for (std::uint32_t n = 0; n <= 8; ++n) {
        if (n >= 1) {
            CHECK(b_n0(n) == x * b_n0(n - 1) + b_n0(n - 1));
            CHECK(b_ninf(n) == b_n0(n - 1) + b_ninf(n - 1));
        }
        CHECK(alpha(n + 1) == x_plus_1 * alpha(n) + one);
        CHECK(b_nr_closed(n, 2) == b_n0(n) + scale(b_ninf(n), 2) + x * b_ninf(n));
        for (std::uint32_t r = 0; r <= 8; ++r) CHECK(b_nr_closed(n, r) == b_nr_closed(r, n));
    }
}

TEST_CASE("two_bridge_polynomial routes") {
    const auto inf = ExtendedCount::infinity();
    CHECK(two_bridge_polynomial(3, inf, Method::closed) == IntPolynomial{0, 3, 4, 1});
    for (auto m : {Method::closed, Method::recurrence, Method::classes, Method::enumerate}) {
        CHECK(two_bridge_polynomial(2, 2, m) == IntPolynomial{0, 5, 8, 3});
        for (std::uint32_t k = 0; k <= 6; ++k) {
            CHECK(two_bridge_polynomial(k, inf, m) == b_ninf(k));
            CHECK(two_bridge_polynomial(inf, k, m) == b_ninf(k));
        }
    }
    CHECK_THROWS_AS((void)two_bridge_polynomial(inf, inf, Method::closed), Error);
    CHECK(parse_method("classes") == Method::classes);
    CHECK_THROWS_AS(parse_method("guess"), Error);

    try {
        (void)two_bridge_polynomial(4000000000U, 1, Method::enumerate, {30, 1});
        FAIL("expected cap_exceeded");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::cap_exceeded);
    }
}
