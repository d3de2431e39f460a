#include "diagram.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <thread>

namespace kstates {

StateMask StateMask::from_bits(std::uint64_t bits, std::size_t length) {
    if (length > 64) throw Error(Errc::invalid_argument, "packed state masks hold at most 64 crossings");
    std::vector<Split> splits(length);
    for (std::size_t i = 0; i < length; ++i) splits[i] = ((bits >> i) & 1U) ? Split::B : Split::A;
    return StateMask(std::move(splits));
}

ShadowDiagram ShadowDiagram::make(std::size_t edge_count, std::vector<Crossing> crossings, std::size_t free_circles) {
    std::vector<std::uint32_t> uses(edge_count, 0);
    for (const auto& c : crossings) {
        for (EdgeId e : c) {
            if (e >= edge_count)
                throw Error(Errc::invalid_argument,
                            "edge id " + std::to_string(e) + " out of range [0, " + std::to_string(edge_count) + ")");
            ++uses[e];
        }
    }
    std::vector<EdgeId> relabel(edge_count, 0);
    EdgeId next = 0;
    for (std::size_t e = 0; e < edge_count; ++e) {
        if (uses[e] == 0) {
            ++free_circles;
        } else if (uses[e] == 2) {
            relabel[e] = next++;
        } else {
            throw Error(Errc::invalid_argument, "edge " + std::to_string(e) + " occupies " + std::to_string(uses[e]) +
                                                    " ports; every edge needs exactly two");
        }
    }
    for (auto& c : crossings)
        for (auto& e : c) e = relabel[e];

    ShadowDiagram d;
    d.edge_count_ = next;
    d.crossings_ = std::move(crossings);
    d.free_circles_ = free_circles;
    return d;
}

namespace {

// Disjoint-set forest over edge ids, reset once per state.
class EdgeForest {
public:
    explicit EdgeForest(std::size_t n) : parent_(n), rank_(n) {}

    void reset() {
        std::iota(parent_.begin(), parent_.end(), EdgeId{0});
        std::fill(rank_.begin(), rank_.end(), std::uint8_t{0});
    }

    EdgeId find(EdgeId x) {
        EdgeId root = x;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[x] != root) {
            EdgeId up = parent_[x];
            parent_[x] = root;
            x = up;
        }
        return root;
    }

    /// Returns 1 if two classes merged, 0 if already joined.
    unsigned unite(EdgeId a, EdgeId b) {
        a = find(a);
        b = find(b);
        if (a == b) return 0;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        return 1;
    }

private:
    std::vector<EdgeId> parent_;
    std::vector<std::uint8_t> rank_;
};

struct PortPairs {
    EdgeId a0, a1, a2, a3; // split A: {a0,a1} {a2,a3}
    EdgeId b0, b1, b2, b3; // split B: {b0,b1} {b2,b3}
};

std::vector<PortPairs> port_pairs(const ShadowDiagram& d) {
    std::vector<PortPairs> out;
    out.reserve(d.crossing_count());
    for (const auto& c : d.crossings()) out.push_back({c[0], c[1], c[2], c[3], c[1], c[2], c[3], c[0]});
    return out;
}

// Curves = edge classes left after the unions, plus free circles.
std::size_t count_with_forest(EdgeForest& forest, std::span<const PortPairs> pairs, std::uint64_t bits,
                              std::size_t edge_count, std::size_t free_circles) {
    forest.reset();
    std::size_t merges = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& p = pairs[i];
        if ((bits >> i) & 1U) {
            merges += forest.unite(p.b0, p.b1);
            merges += forest.unite(p.b2, p.b3);
        } else {
            merges += forest.unite(p.a0, p.a1);
            merges += forest.unite(p.a2, p.a3);
        }
    }
    return edge_count - merges + free_circles;
}

void check_cap(const ShadowDiagram& d, const EnumerationOptions& opts) {
    std::size_t cap = std::min(opts.max_crossings, kAbsoluteMaxCrossings);
    if (d.crossing_count() > cap)
        throw Error(Errc::cap_exceeded, "too many crossings to enumerate: " + std::to_string(d.crossing_count()) +
                                            " > cap " + std::to_string(cap));
}

// Histogram of circle counts over all 2^m states. Splits the mask range into
// contiguous blocks, one per worker; integer sums make the merge exact.
std::vector<std::uint64_t> state_histogram(const ShadowDiagram& d, const EnumerationOptions& opts) {
    check_cap(d, opts);
    const std::size_t m = d.crossing_count();
    const std::uint64_t total = std::uint64_t{1} << m;
    const std::size_t bins = d.edge_count() + d.free_circles() + 1;
    const auto pairs = port_pairs(d);

    unsigned workers = opts.threads;
    if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
    constexpr std::uint64_t kMinBlock = std::uint64_t{1} << 14;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(1, total / kMinBlock)));

    auto run = [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& hist) {
        EdgeForest forest(d.edge_count());
        for (std::uint64_t bits = lo; bits < hi; ++bits)
            ++hist[count_with_forest(forest, pairs, bits, d.edge_count(), d.free_circles())];
    };

    std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(bins, 0));
    if (workers == 1) {
        run(0, total, partial[0]);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            std::uint64_t lo = total / workers * w;
            std::uint64_t hi = (w + 1 == workers) ? total : total / workers * (w + 1);
            pool.emplace_back([&, lo, hi, w] { run(lo, hi, partial[w]); });
        }
    }
    std::vector<std::uint64_t> hist(bins, 0);
    for (const auto& p : partial)
        for (std::size_t k = 0; k < bins; ++k) hist[k] += p[k];
    return hist;
}

} // namespace

std::size_t circle_count(const ShadowDiagram& d, const StateMask& s) {
    if (s.size() != d.crossing_count())
        throw Error(Errc::invalid_argument, "state mask has " + std::to_string(s.size()) + " entries for " +
                                                std::to_string(d.crossing_count()) + " crossings");
    EdgeForest forest(d.edge_count());
    forest.reset();
    std::size_t merges = 0;
    for (std::size_t i = 0; i < d.crossing_count(); ++i) {
        const auto& c = d.crossings()[i];
        if (s[i] == Split::A) {
            merges += forest.unite(c[0], c[1]);
            merges += forest.unite(c[2], c[3]);
        } else {
            merges += forest.unite(c[1], c[2]);
            merges += forest.unite(c[3], c[0]);
        }
    }
    return d.edge_count() - merges + d.free_circles();
}

IntPolynomial state_polynomial(const ShadowDiagram& d, const EnumerationOptions& opts) {
    auto hist = state_histogram(d, opts);
    std::vector<Int> coeffs(hist.size());
    for (std::size_t k = 0; k < hist.size(); ++k) coeffs[k] = static_cast<Int>(hist[k]);
    return IntPolynomial(std::move(coeffs));
}

std::uint64_t count_states_with_circles(const ShadowDiagram& d, std::size_t k, const EnumerationOptions& opts) {
    check_cap(d, opts);
    if (k > d.edge_count() + d.free_circles()) return 0;
    auto hist = state_histogram(d, opts);
    return hist[k];
}

ShadowDiagram disjoint_union(const ShadowDiagram& d1, const ShadowDiagram& d2) {
    std::vector<Crossing> crossings(d1.crossings().begin(), d1.crossings().end());
    const auto offset = static_cast<EdgeId>(d1.edge_count());
    for (Crossing c : d2.crossings()) {
        for (auto& e : c) e += offset;
        crossings.push_back(c);
    }
    return ShadowDiagram::make(d1.edge_count() + d2.edge_count(), std::move(crossings),
                               d1.free_circles() + d2.free_circles());
}

SpliceSite default_splice_site(const ShadowDiagram& d) {
    if (d.edge_count() > 0) return SpliceSite::at_edge(0);
    if (d.free_circles() > 0) return SpliceSite::at_free_circle();
    throw Error(Errc::invalid_argument, "nothing to splice: the diagram is empty");
}

std::vector<SpliceSite> admissible_splice_sites(const ShadowDiagram& d) {
    std::vector<SpliceSite> out;
    for (EdgeId e = 0; e < d.edge_count(); ++e) out.push_back(SpliceSite::at_edge(e));
    if (d.free_circles() > 0) out.push_back(SpliceSite::at_free_circle());
    return out;
}

ShadowDiagram connected_sum(const ShadowDiagram& d1, const ShadowDiagram& d2) {
    return connected_sum(d1, default_splice_site(d1), d2, default_splice_site(d2));
}

namespace {

void check_site(const ShadowDiagram& d, SpliceSite s) {
    if (d.edge_count() == 0 && d.free_circles() == 0)
        throw Error(Errc::invalid_argument, "nothing to splice: the diagram is empty");
    if (s.kind == SpliceSite::Kind::edge && s.edge >= d.edge_count())
        throw Error(Errc::invalid_argument, "splice edge " + std::to_string(s.edge) + " does not exist");
    if (s.kind == SpliceSite::Kind::free_circle && d.free_circles() == 0)
        throw Error(Errc::invalid_argument, "splice site is a free circle but the diagram has none");
}

// (crossing index, port index) of the two ports an edge occupies, scan order.
std::array<std::pair<std::size_t, std::size_t>, 2> ports_of(std::span<const Crossing> crossings, EdgeId e) {
    std::array<std::pair<std::size_t, std::size_t>, 2> out{};
    std::size_t found = 0;
    for (std::size_t i = 0; i < crossings.size() && found < 2; ++i)
        for (std::size_t p = 0; p < 4 && found < 2; ++p)
            if (crossings[i][p] == e) out[found++] = {i, p};
    return out;
}

} // namespace

ShadowDiagram connected_sum(const ShadowDiagram& d1, SpliceSite s1, const ShadowDiagram& d2, SpliceSite s2,
                            bool cross_pairing) {
    check_site(d1, s1);
    check_site(d2, s2);
    auto joined = disjoint_union(d1, d2);
    const bool free1 = s1.kind == SpliceSite::Kind::free_circle;
    const bool free2 = s2.kind == SpliceSite::Kind::free_circle;
    std::vector<Crossing> crossings(joined.crossings().begin(), joined.crossings().end());

    if (free1 || free2) {
        // Splicing into a free circle absorbs it; the other summand is untouched.
        return ShadowDiagram::make(joined.edge_count(), std::move(crossings), joined.free_circles() - 1);
    }

    const EdgeId e = s1.edge;
    const EdgeId f = s2.edge + static_cast<EdgeId>(d1.edge_count());
    const auto p = ports_of(crossings, e);
    const auto q = ports_of(crossings, f);
    // e keeps P1 and takes one of f's ports; f takes P2.
    const auto& q_for_e = cross_pairing ? q[1] : q[0];
    crossings[q_for_e.first][q_for_e.second] = e;
    crossings[p[1].first][p[1].second] = f;
    return ShadowDiagram::make(joined.edge_count(), std::move(crossings), joined.free_circles());
}

} // namespace kstates
