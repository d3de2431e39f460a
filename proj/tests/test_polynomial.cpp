#include "doctest.h"

#include <limits>
#include <random>

#include "polynomial.hpp"

using namespace kstates;

namespace {

IntPolynomial random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len(0, 5), coeff(-20, 20);
    std::vector<Int> c(len(rng));
    for (auto& v : c) v = coeff(rng);
    return IntPolynomial(std::move(c));
}

const IntPolynomial x{0, 1};

} // namespace

TEST_CASE("add") {
    CHECK(x + x == IntPolynomial{0, 2});
    CHECK(IntPolynomial{0, 1, 1} + IntPolynomial{} == IntPolynomial{0, 1, 1});
    CHECK((IntPolynomial{0, 5, 8, 3} + IntPolynomial{0, -5, -8, -3}).is_zero());
}

TEST_CASE("mul") {
    CHECK(IntPolynomial{1, 1} * IntPolynomial{1, 1} == IntPolynomial{1, 2, 1});
    const IntPolynomial p{3, 0, -2, 7};
    CHECK(p * IntPolynomial::constant(1) == p);
    // x (x+1)^2, row n=2 of the B(n,0) table
    CHECK(x * IntPolynomial::binomial_power(2) == IntPolynomial{0, 1, 2, 1});
    CHECK((p * IntPolynomial{}).is_zero());
}

TEST_CASE("exact_div_by_x") {
    CHECK(exact_div_by_x(IntPolynomial{0, 5, 8, 3}) == IntPolynomial{5, 8, 3});
    CHECK(exact_div_by_x(x) == IntPolynomial{1});
    CHECK(exact_div_by_x(IntPolynomial::binomial_power(3) - IntPolynomial{1}) == IntPolynomial{3, 3, 1});
    CHECK(exact_div_by_x(IntPolynomial{}).is_zero());

    try {
        exact_div_by_x(IntPolynomial{1, 1});
        FAIL("expected not_divisible");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_divisible);
    }
}

TEST_CASE("eval") {
    CHECK(IntPolynomial{0, 5, 8, 3}.eval(1) == 16);
    CHECK(IntPolynomial{}.eval(12345) == 0);
    CHECK(IntPolynomial{0, 2, 2}.eval(1) == 4);
    CHECK(IntPolynomial{1, -1, 1}.eval(-2) == 7);
}

TEST_CASE("degree, coeff, leading") {
    const IntPolynomial fig8{0, 5, 8, 3};
    CHECK(fig8.degree() == 3);
    CHECK(fig8.leading() == 3);
    CHECK(x.coeff(5) == 0);
    CHECK_FALSE(IntPolynomial{}.degree().has_value());
    CHECK(IntPolynomial{}.leading() == 0);
    CHECK(IntPolynomial{0, 0, 0}.is_zero());
}

TEST_CASE("overflow is reported, never wrapped") {
    const Int big = std::numeric_limits<Int>::max();
    auto expect_overflow = [](auto&& f) {
        try {
            f();
            FAIL("expected overflow");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::overflow);
        }
    };
    expect_overflow([&] { (void)(IntPolynomial{big} + IntPolynomial{1}); });
    expect_overflow([&] { (void)(IntPolynomial{big, 1} * IntPolynomial{2}); });
    expect_overflow([&] { (void)IntPolynomial{0, 0, 1}.eval(big); });
    expect_overflow([] { (void)IntPolynomial::binomial_power(100); });
    CHECK(IntPolynomial::binomial_power(62).coeff(31) == binomial(62, 31));
}

TEST_CASE("binomial convention") {
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(14, 7) == 3432);
}

TEST_CASE("formatting") {
    const IntPolynomial fig8{0, 5, 8, 3};
    CHECK(format_coeffs(fig8) == "0 5 8 3");
    CHECK(format_human(fig8) == "5x + 8x^2 + 3x^3");
    CHECK(format_coeffs(IntPolynomial{}) == "0");
    CHECK(format_human(IntPolynomial{}) == "0");
    CHECK(format_human(IntPolynomial{-1, 0, 1}) == "-1 + x^2");
    CHECK(format_human(IntPolynomial{1, -1, -2}) == "1 - x - 2x^2");
    CHECK(format_human(x) == "x");
}

TEST_CASE("parse_coeffs rejects malformed text") {
    CHECK(parse_coeffs("0 5 8 3") == IntPolynomial{0, 5, 8, 3});
    CHECK(parse_coeffs("0").is_zero());
    CHECK(parse_coeffs("1 0 0") == IntPolynomial{1});
    for (const char* bad : {"", "   ", "1 x", "1,2", "--3"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_coeffs(bad), Error);
    }
}

TEST_CASE("property: ring laws on random small polynomials") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const auto p = random_poly(rng), q = random_poly(rng), s = random_poly(rng);
        CHECK((p + q) + s == p + (q + s));
        CHECK(p + q == q + p);
        CHECK((p * q) * s == p * (q * s));
        CHECK(p * q == q * p);
        CHECK(p * (q + s) == p * q + p * s);
        CHECK((p - q) + q == p);
    }
}

TEST_CASE("property: multiplication agrees with pointwise evaluation") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = random_poly(rng), q = random_poly(rng);
        for (Int t : {-3, -1, 0, 1, 2, 5}) CHECK((p * q).eval(t) == p.eval(t) * q.eval(t));
    }
}

TEST_CASE("property: division by x inverts multiplication by x") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        auto p = shift_up(random_poly(rng), 1);
        CHECK(exact_div_by_x(p) * x == p);
    }
}

TEST_CASE("property: results are normalized and format round-trips") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = random_poly(rng), q = random_poly(rng);
        for (const auto& r : {p + q, p - q, p * q, p}) {
            CHECK((r.coeffs().empty() || r.coeffs().back() != 0));
            CHECK(IntPolynomial(std::vector<Int>(r.coeffs().begin(), r.coeffs().end())) == r);
            CHECK(parse_coeffs(format_coeffs(r)) == r);
            CHECK(format_coeffs(parse_coeffs(format_coeffs(r))) == format_coeffs(r));
        }
    }
}
