#include "doctest.h"

#include <map>

#include "closed_forms.hpp"
#include "tangle.hpp"

using namespace kstates;

namespace {

IntPolynomial x_times_binomial_power(std::uint32_t n) { return IntPolynomial{0, 1} * IntPolynomial::binomial_power(n); }

void check_two_ports(const ShadowDiagram& d) {
    std::map<EdgeId, int> uses;
    for (const auto& c : d.crossings())
        for (EdgeId e : c) ++uses[e];
    CHECK(uses.size() == d.edge_count());
    for (auto [e, n] : uses) CHECK(n == 2);
}

} // namespace

TEST_CASE("ExtendedCount parsing") {
    CHECK(ExtendedCount::parse("inf").is_infinite());
    CHECK(ExtendedCount::parse("7").value() == 7);
    CHECK(ExtendedCount::parse("0").value() == 0);
    CHECK(ExtendedCount::parse("inf").to_string() == "inf");
    for (const char* bad : {"", "-1", "Inf", "3x", "∞", "99999999999"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(ExtendedCount::parse(bad), Error);
    }
    CHECK_THROWS_AS((void)ExtendedCount::infinity().value(), Error);
}

TEST_CASE("zero tangle") {
    const auto t = Tangle::zero();
    CHECK(t.crossing_count() == 0);
    CHECK(t.nw() == t.ne());
    CHECK(t.sw() == t.se());
    CHECK(t.nw() != t.sw());

    const auto num = t.closure_numerator();
    CHECK(num.free_circles() == 2);
    CHECK(state_polynomial(num) == IntPolynomial{0, 0, 1});

    const auto den = t.closure_denominator();
    CHECK(den.free_circles() == 1);
    CHECK(den == ShadowDiagram::trivial_knot());
    CHECK(state_polynomial(den) == IntPolynomial{0, 1});
}

TEST_CASE("twist_right") {
    auto t = Tangle::zero();
    const EdgeId old_ne = t.ne(), old_se = t.se(), nw = t.nw(), sw = t.sw();
    t.twist_right();
    CHECK(t.crossing_count() == 1);
    CHECK(t.ne() != old_ne);
    CHECK(t.se() != old_se);
    CHECK(t.nw() == nw);
    CHECK(t.sw() == sw);
    CHECK(state_polynomial(t.closure_denominator()) == IntPolynomial{0, 1, 1});
    CHECK(state_polynomial(t.closure_numerator()) == IntPolynomial{0, 1, 1});

    auto u = Tangle::zero();
    for (std::uint32_t n = 0; n <= 7; ++n) {
        CAPTURE(n);
        CHECK(state_polynomial(u.closure_denominator()) == x_times_binomial_power(n));
        u.twist_right();
    }
}

TEST_CASE("twist_bottom") {
    auto t = Tangle::zero();
    const EdgeId nw = t.nw(), ne = t.ne();
    t.twist_bottom();
    CHECK(t.crossing_count() == 1);
    CHECK(t.nw() == nw);
    CHECK(t.ne() == ne);
    CHECK(state_polynomial(t.closure_denominator()) == IntPolynomial{0, 1, 1});

    auto u = Tangle::zero();
    for (std::uint32_t r = 0; r <= 7; ++r) {
        CAPTURE(r);
        CHECK(u.crossing_count() == r);
        CHECK(state_polynomial(u.closure_denominator()) == x_times_binomial_power(r));
        u.twist_bottom();
    }
}

TEST_CASE("closures of a single right-then-bottom twist give the Hopf shadow") {
    auto t = Tangle::zero();
    t.twist_right().twist_bottom();
    CHECK(state_polynomial(t.closure_denominator()) == IntPolynomial{0, 2, 2});
}

TEST_CASE("build_two_bridge") {
    const auto fig8 = build_two_bridge(2, 2);
    CHECK(fig8.crossing_count() == 4);
    CHECK(state_polynomial(fig8) == IntPolynomial{0, 5, 8, 3});
    CHECK(state_polynomial(build_two_bridge(3, 0)) == IntPolynomial{0, 1, 3, 3, 1});
    CHECK(state_polynomial(build_two_bridge(0, 5)) == state_polynomial(build_two_bridge(5, 0)));

    try {
        (void)build_two_bridge(ExtendedCount::infinity(), ExtendedCount::infinity());
        FAIL("expected unsupported");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::unsupported);
    }
    CHECK(build_two_bridge(4, ExtendedCount::infinity()) == build_torus(4));
    CHECK(build_two_bridge(ExtendedCount::infinity(), 4) == build_torus(4));
}

TEST_CASE("build_torus") {
    CHECK(state_polynomial(build_torus(0)) == IntPolynomial{0, 0, 1});
    CHECK(state_polynomial(build_torus(2)) == IntPolynomial{0, 2, 2});
    for (std::uint32_t k = 1; k <= 8; ++k) {
        CAPTURE(k);
        CHECK(build_torus(k).crossing_count() == k);
        CHECK(state_polynomial(build_torus(k)) == b_nr_closed(k - 1, 1));
    }
}

TEST_CASE("property: shadows match the closed form, are symmetric, and are well formed") {
    for (std::uint32_t n = 0; n <= 7; ++n) {
        for (std::uint32_t r = 0; r <= 7; ++r) {
            CAPTURE(n);
            CAPTURE(r);
            const auto d = build_two_bridge(n, r);
            CHECK(d.crossing_count() == n + r);
            check_two_ports(d);
            const auto p = state_polynomial(d, {30, 1});
            CHECK(p == b_nr_closed(n, r));
            CHECK(p == state_polynomial(build_two_bridge(r, n), {30, 1}));
        }
    }
    for (std::uint32_t k = 0; k <= 8; ++k) CHECK(state_polynomial(build_torus(k)) == b_ninf(k));
}
