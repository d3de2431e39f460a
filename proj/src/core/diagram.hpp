#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "polynomial.hpp"

namespace kstates {

using EdgeId = std::uint32_t;

/// Edge identifiers at the four ports of a crossing, in cyclic (planar) order.
using Crossing = std::array<EdgeId, 4>;

enum class Split : std::uint8_t {
    A, ///< joins ports {0,1} and {2,3}
    B, ///< joins ports {1,2} and {3,0}
};

/// One split per crossing. Bit i of a packed mask selects B at crossing i.
class StateMask {
public:
    StateMask() = default;
    explicit StateMask(std::vector<Split> splits) : splits_(std::move(splits)) {}
    static StateMask from_bits(std::uint64_t bits, std::size_t length);
    static StateMask all(Split s, std::size_t length) { return StateMask(std::vector<Split>(length, s)); }

    std::size_t size() const noexcept { return splits_.size(); }
    Split operator[](std::size_t i) const { return splits_[i]; }

private:
    std::vector<Split> splits_;
};

/// A knot shadow: crossings as 4-tuples of edge ids plus a count of closed
/// curves that meet no crossing. Every edge id in [0, edge_count) occupies
/// exactly two ports.
class ShadowDiagram {
public:
    /// The empty diagram: no edges, no crossings, no circles.
    ShadowDiagram() = default;

    /// Validates the port invariant. Edge ids that occur at no port become
    /// free circles and the remaining ids are renumbered in increasing order.
    /// Throws Errc::invalid_argument if an id is out of range or occurs a
    /// number of times other than zero or two.
    static ShadowDiagram make(std::size_t edge_count, std::vector<Crossing> crossings, std::size_t free_circles = 0);

    static ShadowDiagram trivial_knot() { return make(0, {}, 1); }

    std::size_t edge_count() const noexcept { return edge_count_; }
    std::size_t crossing_count() const noexcept { return crossings_.size(); }
    std::size_t free_circles() const noexcept { return free_circles_; }
    std::span<const Crossing> crossings() const noexcept { return crossings_; }

    friend bool operator==(const ShadowDiagram&, const ShadowDiagram&) = default;

private:
    std::size_t edge_count_ = 0;
    std::vector<Crossing> crossings_;
    std::size_t free_circles_ = 0;
};

inline constexpr std::size_t kDefaultMaxCrossings = 30;
/// Packed masks are 64-bit; the cap can never be raised past this.
inline constexpr std::size_t kAbsoluteMaxCrossings = 62;

struct EnumerationOptions {
    std::size_t max_crossings = kDefaultMaxCrossings;
    /// 0 picks a thread count from the hardware; 1 forces the sequential loop.
    unsigned threads = 0;
};

/// Number of closed curves after splitting every crossing as the mask says.
std::size_t circle_count(const ShadowDiagram& d, const StateMask& s);

/// Sum over all 2^m states of x^(circle count).
IntPolynomial state_polynomial(const ShadowDiagram& d, const EnumerationOptions& opts = {});

/// Number of states with exactly k circles.
std::uint64_t count_states_with_circles(const ShadowDiagram& d, std::size_t k, const EnumerationOptions& opts = {});

ShadowDiagram disjoint_union(const ShadowDiagram& d1, const ShadowDiagram& d2);

/// Where a connected sum cuts a summand: one of its edges, or one of its
/// free circles (all free circles are interchangeable).
struct SpliceSite {
    enum class Kind : std::uint8_t { edge, free_circle };
    Kind kind = Kind::edge;
    EdgeId edge = 0;

    static SpliceSite at_edge(EdgeId e) { return {Kind::edge, e}; }
    static SpliceSite at_free_circle() { return {Kind::free_circle, 0}; }
    friend bool operator==(const SpliceSite&, const SpliceSite&) = default;
};

/// Lowest-numbered edge, or a free circle when the diagram has no edges.
/// Throws Errc::invalid_argument for the empty diagram.
SpliceSite default_splice_site(const ShadowDiagram& d);

/// Every distinct splice site of d.
std::vector<SpliceSite> admissible_splice_sites(const ShadowDiagram& d);

/// Connected sum at the lowest-numbered edges.
ShadowDiagram connected_sum(const ShadowDiagram& d1, const ShadowDiagram& d2);

/// Connected sum at explicit sites. With edge e at ports P1, P2 of d1 and
/// edge f at ports Q1, Q2 of d2 (ports in scan order), the result joins
/// P1-Q1 and P2-Q2, or P1-Q2 and P2-Q1 when `cross_pairing` is set.
ShadowDiagram connected_sum(const ShadowDiagram& d1, SpliceSite s1, const ShadowDiagram& d2, SpliceSite s2,
                            bool cross_pairing = false);

} // namespace kstates
