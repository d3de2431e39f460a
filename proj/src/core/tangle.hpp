#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "diagram.hpp"

namespace kstates {

/// A half-twist count: a natural number or the symbolic infinity of tangle
/// notation.
class ExtendedCount {
public:
    constexpr ExtendedCount(std::uint32_t n) : value_(n) {} // NOLINT(google-explicit-constructor)
    static constexpr ExtendedCount infinity() { return ExtendedCount(); }

    constexpr bool is_infinite() const noexcept { return !value_.has_value(); }
    constexpr bool is_finite() const noexcept { return value_.has_value(); }
    /// Throws Errc::invalid_argument when infinite.
    std::uint32_t value() const;

    /// Nonnegative decimal or the token "inf".
    static ExtendedCount parse(std::string_view text);
    std::string to_string() const;

    friend bool operator==(const ExtendedCount&, const ExtendedCount&) = default;

private:
    constexpr ExtendedCount() = default;
    std::optional<std::uint32_t> value_;
};

/// A shadow diagram under construction with four boundary edge slots. The
/// slots may name the same edge; a boundary edge has at most one port
/// occupied until the tangle is closed.
class Tangle {
public:
    /// Two crossingless strands: top strand nw-ne, bottom strand sw-se.
    static Tangle zero();

    /// Adds a crossing between the two east ends: (ne, ne', se', se).
    Tangle& twist_right();
    /// Adds a crossing between the two south ends: (sw, se, se', sw').
    Tangle& twist_bottom();

    /// Joins nw to sw and ne to se.
    ShadowDiagram closure_denominator() const;
    /// Joins nw to ne and sw to se.
    ShadowDiagram closure_numerator() const;

    std::size_t crossing_count() const noexcept { return crossings_.size(); }
    EdgeId nw() const noexcept { return nw_; }
    EdgeId ne() const noexcept { return ne_; }
    EdgeId sw() const noexcept { return sw_; }
    EdgeId se() const noexcept { return se_; }

private:
    Tangle() = default;
    EdgeId new_edge() { return static_cast<EdgeId>(edge_count_++); }
    ShadowDiagram close(EdgeId a1, EdgeId a2, EdgeId b1, EdgeId b2) const;

    std::size_t edge_count_ = 0;
    std::vector<Crossing> crossings_;
    EdgeId nw_ = 0, ne_ = 0, sw_ = 0, se_ = 0;
};

/// Shadow of the two-bridge knot C(n, r): n right twists then r bottom
/// twists on the zero tangle, denominator closure. A single infinite
/// argument yields the (2,k)-torus shadow of the other. Throws
/// Errc::unsupported for (inf, inf).
ShadowDiagram build_two_bridge(ExtendedCount n, ExtendedCount r);

/// Numerator closure of k right twists: the (2,k)-torus shadow.
ShadowDiagram build_torus(std::uint32_t k);

} // namespace kstates
