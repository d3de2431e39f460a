#include "tangle.hpp"

#include <charconv>
#include <numeric>

namespace kstates {

std::uint32_t ExtendedCount::value() const {
    if (!value_) throw Error(Errc::invalid_argument, "expected a finite count, got inf");
    return *value_;
}

ExtendedCount ExtendedCount::parse(std::string_view text) {
    if (text == "inf") return infinity();
    std::uint32_t n = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
    if (text.empty() || ec != std::errc() || end != text.data() + text.size())
        throw Error(Errc::invalid_argument, "expected a nonnegative integer or 'inf', got '" + std::string(text) + "'");
    return ExtendedCount(n);
}

std::string ExtendedCount::to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

Tangle Tangle::zero() {
    Tangle t;
    EdgeId top = t.new_edge();
    EdgeId bottom = t.new_edge();
    t.nw_ = t.ne_ = top;
    t.sw_ = t.se_ = bottom;
    return t;
}

Tangle& Tangle::twist_right() {
    EdgeId ne = new_edge();
    EdgeId se = new_edge();
    crossings_.push_back({ne_, ne, se, se_});
    ne_ = ne;
    se_ = se;
    return *this;
}

Tangle& Tangle::twist_bottom() {
    EdgeId se = new_edge();
    EdgeId sw = new_edge();
    crossings_.push_back({sw_, se_, se, sw});
    se_ = se;
    sw_ = sw;
    return *this;
}

// Identifies a1 with a2 and b1 with b2, then relabels each class by its
// smallest member, numbering classes densely. ShadowDiagram::make turns port-free classes into circles.
ShadowDiagram Tangle::close(EdgeId a1, EdgeId a2, EdgeId b1, EdgeId b2) const {
    std::vector<EdgeId> parent(edge_count_);
    std::iota(parent.begin(), parent.end(), EdgeId{0});
    auto find = [&](EdgeId x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](EdgeId x, EdgeId y) {
        x = find(x);
        y = find(y);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
    };
    unite(a1, a2);
    unite(b1, b2);

    std::vector<EdgeId> class_id(edge_count_, 0);
    EdgeId classes = 0;
    for (EdgeId e = 0; e < edge_count_; ++e)
        if (find(e) == e) class_id[e] = classes++;
    auto crossings = crossings_;
    for (auto& c : crossings)
        for (auto& e : c) e = class_id[find(e)];
    return ShadowDiagram::make(classes, std::move(crossings));
}

ShadowDiagram Tangle::closure_denominator() const { return close(nw_, sw_, ne_, se_); }

ShadowDiagram Tangle::closure_numerator() const { return close(nw_, ne_, sw_, se_); }

ShadowDiagram build_torus(std::uint32_t k) {
    auto t = Tangle::zero();
    for (std::uint32_t i = 0; i < k; ++i) t.twist_right();
    return t.closure_numerator();
}

ShadowDiagram build_two_bridge(ExtendedCount n, ExtendedCount r) {
    if (n.is_infinite() && r.is_infinite())
        throw Error(Errc::unsupported, "C(inf, inf) is not defined for two-bridge shadows");
    if (r.is_infinite()) return build_torus(n.value());
    if (n.is_infinite()) return build_torus(r.value());
    auto t = Tangle::zero();
    for (std::uint32_t i = 0; i < n.value(); ++i) t.twist_right();
    for (std::uint32_t i = 0; i < r.value(); ++i) t.twist_bottom();
    return t.closure_denominator();
}

} // namespace kstates
