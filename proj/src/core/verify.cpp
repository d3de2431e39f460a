#include "verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "closed_forms.hpp"
#include "reference_tables.hpp"
#include "tables.hpp"
#include "tangle.hpp"

namespace kstates {

bool VerifyReport::all_passed() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

std::string VerifyReport::to_text() const {
    std::string out;
    for (const auto& s : suites) out += (s.passed ? "PASS " : "FAIL ") + s.name + ": " + s.detail + '\n';
    return out;
}

ShadowDiagram random_diagram(std::mt19937_64& rng, std::size_t crossings, std::size_t max_free) {
    std::vector<std::size_t> ports(4 * crossings);
    for (std::size_t i = 0; i < ports.size(); ++i) ports[i] = i;
    std::shuffle(ports.begin(), ports.end(), rng);

    std::vector<Crossing> cs(crossings);
    for (std::size_t e = 0; e < ports.size() / 2; ++e) {
        for (std::size_t port : {ports[2 * e], ports[2 * e + 1]}) cs[port / 4][port % 4] = static_cast<EdgeId>(e);
    }
    std::size_t free_circles = std::uniform_int_distribution<std::size_t>(0, max_free)(rng);
    if (crossings == 0 && free_circles == 0) free_circles = 1;
    return ShadowDiagram::make(2 * crossings, std::move(cs), free_circles);
}

namespace {

// First counterexample found by a suite; empty while everything agrees.
using Failure = std::optional<std::string>;

std::string at(std::uint32_t n, std::uint32_t r, std::size_t k, Int expected, Int got) {
    std::ostringstream os;
    os << "n=" << n << " r=" << r << " k=" << k << " expected=" << expected << " got=" << got;
    return os.str();
}

Failure compare(const IntPolynomial& expected, const IntPolynomial& got, std::uint32_t n, std::uint32_t r,
                const std::string& what) {
    const std::size_t len = std::max(expected.coeffs().size(), got.coeffs().size());
    for (std::size_t k = 0; k < len; ++k)
        if (expected.coeff(k) != got.coeff(k)) return at(n, r, k, expected.coeff(k), got.coeff(k)) + " (" + what + ")";
    return std::nullopt;
}

Failure compare_values(Int expected, Int got, const std::string& what) {
    if (expected == got) return std::nullopt;
    return what + " expected=" + std::to_string(expected) + " got=" + std::to_string(got);
}

class Verifier {
public:
    explicit Verifier(const VerifyOptions& opts) : opts_(opts) {}

    VerifyReport run() {
        VerifyReport report;
        auto suite = [&](std::string name, std::function<Failure(std::string&)> body) {
            SuiteResult res{std::move(name), true, ""};
            try {
                if (auto fail = body(res.detail)) {
                    res.passed = false;
                    res.detail = *fail;
                }
            } catch (const std::exception& e) {
                res.passed = false;
                res.detail = std::string("error: ") + e.what();
            }
            report.suites.push_back(std::move(res));
        };
        suite("grand-equivalence", [&](std::string& d) { return grand_equivalence(d); });
        suite("coefficient-formula", [&](std::string& d) { return coefficient_formula(d); });
        suite("special-coefficients", [&](std::string& d) { return special_coefficients(d); });
        suite("state-count", [&](std::string& d) { return state_count(d); });
        suite("family-recurrences", [&](std::string& d) { return family_recurrences(d); });
        suite("twist-knot-identity", [&](std::string& d) { return twist_knot(d); });
        suite("symmetry", [&](std::string& d) { return symmetry(d); });
        suite("degree-leading", [&](std::string& d) { return degree_leading(d); });
        suite("degenerate-families", [&](std::string& d) { return degenerate_families(d); });
        suite("structural-laws", [&](std::string& d) { return structural_laws(d); });
        suite("tables-golden", [&](std::string& d) { return tables_golden(d); });
        return report;
    }

private:
    IntPolynomial closed(std::uint32_t n, std::uint32_t r) const {
        auto p = b_nr_closed(n, r);
        if (opts_.fault && opts_.fault->n == n && opts_.fault->r == r) {
            std::vector<Int> c(p.coeffs().begin(), p.coeffs().end());
            c.resize(std::max<std::size_t>(c.size(), opts_.fault->k + 1), 0);
            c[opts_.fault->k] = checked_add(c[opts_.fault->k], opts_.fault->delta);
            p = IntPolynomial(std::move(c));
        }
        return p;
    }

    IntPolynomial enumerated(std::uint32_t n, std::uint32_t r) const {
        return state_polynomial(build_two_bridge(n, r), opts_.enumeration);
    }

    template <class F>
    Failure grid(F&& check) const {
        for (std::uint32_t n = 0; n <= opts_.max_n; ++n)
            for (std::uint32_t r = 0; r <= opts_.max_r; ++r)
                if (auto f = check(n, r)) return f;
        return std::nullopt;
    }

    std::size_t grid_size() const { return std::size_t{opts_.max_n + 1} * (opts_.max_r + 1); }

    Failure grand_equivalence(std::string& detail) const {
        detail = std::to_string(grid_size()) + " diagrams, 4 routes each";
        return grid([&](std::uint32_t n, std::uint32_t r) -> Failure {
            const auto reference = enumerated(n, r);
            if (auto f = compare(reference, closed(n, r), n, r, "enumeration vs closed form")) return f;
            if (auto f = compare(reference, b_nr_recurrence(n, r), n, r, "enumeration vs recurrence")) return f;
            return compare(reference, b_nr_classes(n, r).sum(), n, r, "enumeration vs class sum");
        });
    }

    Failure coefficient_formula(std::string& detail) const {
        const std::uint32_t max_k = std::max<std::uint32_t>(14, opts_.max_n + opts_.max_r + 1);
        detail = "k = 0.." + std::to_string(max_k) + " over " + std::to_string(grid_size()) + " pairs";
        return grid([&](std::uint32_t n, std::uint32_t r) -> Failure {
            const auto p = closed(n, r);
            for (std::uint32_t k = 0; k <= max_k; ++k) {
                const Int formula = coeff_formula(n, r, k);
                if (formula != p.coeff(k)) return at(n, r, k, formula, p.coeff(k)) + " (coefficient formula vs closed form)";
                if (formula < 0) return at(n, r, k, 0, formula) + " (negative state count)";
            }
            return std::nullopt;
        });
    }

    Failure special_coefficients(std::string& detail) const {
        detail = "b(n,r;1) = nr+1 and b(n,r;2)";
        return grid([&](std::uint32_t n, std::uint32_t r) -> Failure {
            const auto p = closed(n, r);
            if (coeff_k1(n, r) != p.coeff(1)) return at(n, r, 1, coeff_k1(n, r), p.coeff(1)) + " (nr+1 vs closed form)";
            if (coeff_k2(n, r) != p.coeff(2)) return at(n, r, 2, coeff_k2(n, r), p.coeff(2)) + " (k=2 formula vs closed form)";
            return std::nullopt;
        });
    }

    Failure state_count(std::string& detail) const {
        detail = "p(1) = 2^(n+r) and one-circle states = nr+1";
        return grid([&](std::uint32_t n, std::uint32_t r) -> Failure {
            const Int total = pow2(n + r);
            if (Int got = closed(n, r).eval(1); got != total)
                return "n=" + std::to_string(n) + " r=" + std::to_string(r) + " expected=" + std::to_string(total) +
                       " got=" + std::to_string(got) + " (closed form at x=1)";
            const auto ones = static_cast<Int>(count_states_with_circles(build_two_bridge(n, r), 1, opts_.enumeration));
            if (ones != coeff_k1(n, r)) return at(n, r, 1, coeff_k1(n, r), ones) + " (enumerated one-circle states)";
            return std::nullopt;
        });
    }

    Failure family_recurrences(std::string& detail) const {
        detail = "n = 0..8";
        const IntPolynomial x{0, 1}, one{1}, x_plus_one{1, 1};
        for (std::uint32_t n = 0; n <= 8; ++n) {
            if (n >= 1) {
                if (auto f = compare(x * b_n0(n - 1) + b_n0(n - 1), b_n0(n), n, 0, "B(n,0) recurrence")) return f;
                if (auto f = compare(b_n0(n - 1) + b_ninf(n - 1), b_ninf(n), n, 0, "B(n,inf) recurrence")) return f;
            }
            if (auto f = compare(x_plus_one * alpha(n) + one, alpha(n + 1), n + 1, 0, "alpha recurrence")) return f;
            if (auto f = compare(shift_up(alpha(n), 2) + x, b_n0(n), n, 0, "B(n,0) = x^2 alpha + x")) return f;
            if (auto f = compare(shift_up(alpha(n), 1) + IntPolynomial::monomial(1, 2), b_ninf(n), n, 0,
                                 "B(n,inf) = x alpha + x^2"))
                return f;
            if (auto f = compare(b_n0(n), b_n0_recurrence(n), n, 0, "iterated B(n,0)")) return f;
            if (auto f = compare(b_ninf(n), b_ninf_recurrence(n), n, 0, "iterated B(n,inf)")) return f;
        }
        return std::nullopt;
    }

    Failure twist_knot(std::string& detail) const {
        detail = "B(n,2) = B(n,0) + 2 B(n,inf) + x B(n,inf), n = 0..8";
        const IntPolynomial x{0, 1};
        for (std::uint32_t n = 0; n <= 8; ++n) {
            const auto rhs = b_n0(n) + scale(b_ninf(n), 2) + x * b_ninf(n);
            if (auto f = compare(rhs, closed(n, 2), n, 2, "twist-knot identity")) return f;
        }
        return std::nullopt;
    }

    Failure symmetry(std::string& detail) const {
        detail = "B(n,r) = B(r,n) by closed form and by enumeration";
        return grid([&](std::uint32_t n, std::uint32_t r) -> Failure {
            if (auto f = compare(closed(r, n), closed(n, r), n, r, "closed form of B(r,n) vs B(n,r)")) return f;
            if (n + r <= opts_.enumeration.max_crossings)
                return compare(enumerated(r, n), enumerated(n, r), n, r, "enumeration of B(r,n) vs B(n,r)");
            return std::nullopt;
        });
    }

    Failure degree_leading(std::string& detail) const {
        detail = "d(n,r), leading coefficients, torus sequences";
        if (auto f = grid([&](std::uint32_t n, std::uint32_t r) -> Failure {
                const auto p = closed(n, r);
                const auto deg = static_cast<Int>(p.degree().value_or(0));
                const std::string where = "n=" + std::to_string(n) + " r=" + std::to_string(r) + " ";
                if (auto f = compare_values(degree_formula(n, r), deg, where + "degree")) return f;
                if (auto f = compare_values(degree_formula(r, n), degree_formula(n, r), where + "d(r,n) vs d(n,r)")) return f;
                if (auto f = compare_values(leading_coeff(r, n), p.leading(), where + "leading coefficient")) return f;
                return std::nullopt;
            }))
            return f;
        for (std::uint32_t n = 0; n <= opts_.max_n; ++n)
            if (auto f = compare_values(n + 1, degree_formula(n, 0), "n=" + std::to_string(n) + " d(n,0)")) return f;

        // Stated sequences for the infinite column.
        static constexpr Int kTorusDegree[] = {2, 2, 2, 3, 4, 5, 6, 7, 8};
        static constexpr Int kTorusLeading[] = {1, 1, 2, 1, 1, 1, 1, 1};
        for (std::uint32_t n = 0; n < std::size(kTorusDegree); ++n)
            if (auto f = compare_values(kTorusDegree[n], static_cast<Int>(b_ninf(n).degree().value_or(0)),
                                        "n=" + std::to_string(n) + " r=inf degree"))
                return f;
        for (std::uint32_t n = 0; n < std::size(kTorusLeading); ++n)
            if (auto f = compare_values(kTorusLeading[n], leading_coeff(n, ExtendedCount::infinity()),
                                        "n=" + std::to_string(n) + " r=inf leading coefficient"))
                return f;
        return std::nullopt;
    }

    Failure degenerate_families(std::string& detail) const {
        detail = "torus shadows k = 0..8, B(k,inf) = B(k-1,1), B(n,0), B(0,r)";
        for (std::uint32_t k = 0; k <= 8; ++k) {
            const auto torus = state_polynomial(build_torus(k), opts_.enumeration);
            if (auto f = compare(b_ninf(k), torus, k, 0, "torus shadow vs B(k,inf) formula")) return f;
            if (k >= 1) {
                const auto via_builder = state_polynomial(build_two_bridge(k, ExtendedCount::infinity()), opts_.enumeration);
                if (auto f = compare(closed(k - 1, 1), via_builder, k - 1, 1, "B(k,inf) shadow vs closed B(k-1,1)")) return f;
            }
            if (auto f = compare(b_n0(k), enumerated(k, 0), k, 0, "B(n,0) shadow")) return f;
            if (auto f = compare(b_n0(k), enumerated(0, k), 0, k, "B(0,r) shadow")) return f;
        }
        return std::nullopt;
    }

    Failure structural_laws(std::string& detail) const {
        std::mt19937_64 rng(opts_.seed);
        std::uniform_int_distribution<std::size_t> size(0, 4);
        const IntPolynomial x{0, 1};
        std::size_t splices = 0;
        for (std::size_t i = 0; i < opts_.random_pairs; ++i) {
            const auto d1 = random_diagram(rng, size(rng));
            const auto d2 = random_diagram(rng, size(rng));
            const auto p1 = state_polynomial(d1, opts_.enumeration);
            const auto p2 = state_polynomial(d2, opts_.enumeration);
            const auto product = p1 * p2;
            const std::string pair = "pair " + std::to_string(i) + " (seed " + std::to_string(opts_.seed) + ")";
            if (product != state_polynomial(disjoint_union(d1, d2), opts_.enumeration))
                return pair + ": disjoint union polynomial differs from the product";
            for (auto s1 : admissible_splice_sites(d1)) {
                for (auto s2 : admissible_splice_sites(d2)) {
                    for (bool cross : {false, true}) {
                        ++splices;
                        const auto sum = state_polynomial(connected_sum(d1, s1, d2, s2, cross), opts_.enumeration);
                        if (x * sum != product) return pair + ": connected sum law fails for a splice choice";
                    }
                }
            }
        }
        detail = std::to_string(opts_.random_pairs) + " random pairs, " + std::to_string(splices) + " splice choices";
        return std::nullopt;
    }

    Failure tables_golden(std::string& detail) const {
        std::size_t entries = 0;
        std::string notes;
        for (auto name : {TableName::bn0k, TableName::bn1k, TableName::bn2k, TableName::bnnk, TableName::bnr1,
                          TableName::bnr2, TableName::leading, TableName::degree}) {
            auto printed = printed_table(name);
            for (const auto& e : printed_errata()) {
                if (e.table != name) continue;
                printed[e.n][e.j] = e.corrected;
                notes += std::string("; known misprint ") + std::string(to_string(name)) + " (" + std::to_string(e.n) +
                         "," + std::to_string(e.j) + ") printed " + std::to_string(e.printed) + ", corrected " +
                         std::to_string(e.corrected);
            }
            const auto rendered = render_table({name, printed.size()});
            for (std::size_t n = 0; n < printed.size(); ++n) {
                if (rendered[n].size() != printed[n].size())
                    return std::string(to_string(name)) + " row " + std::to_string(n) + " has " +
                           std::to_string(rendered[n].size()) + " entries, expected " + std::to_string(printed[n].size());
                for (std::size_t j = 0; j < printed[n].size(); ++j, ++entries)
                    if (rendered[n][j] != printed[n][j])
                        return std::string(to_string(name)) + " n=" + std::to_string(n) +
                               (TableSpec{name}.kind() == TableKind::triangle ? " k=" : " r=") + std::to_string(j) +
                               " expected=" + std::to_string(printed[n][j]) + " got=" + std::to_string(rendered[n][j]);
            }
        }
        detail = std::to_string(entries) + " printed entries" + notes;
        return std::nullopt;
    }

    const VerifyOptions& opts_;
};

} // namespace

VerifyReport run_verify(const VerifyOptions& opts) {
    const std::size_t cap = std::min(opts.enumeration.max_crossings, kAbsoluteMaxCrossings);
    if (std::size_t{opts.max_n} + opts.max_r > cap)
        throw Error(Errc::cap_exceeded, "max-n + max-r = " + std::to_string(opts.max_n + opts.max_r) +
                                            " exceeds the enumeration cap " + std::to_string(cap));
    return Verifier(opts).run();
}

} // namespace kstates
