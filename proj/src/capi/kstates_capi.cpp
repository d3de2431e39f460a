// extern "C" surface over the kstates core. Exceptions never cross this
// boundary: each entry point maps kstates::Error codes onto kst_status and
// records the message for kst_last_error().

#include "kstates/kstates.h"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <string>

#include "closed_forms.hpp"
#include "tables.hpp"
#include "two_bridge.hpp"
#include "verify.hpp"

struct kst_poly {
    kstates::IntPolynomial value;
};

struct kst_diagram {
    kstates::ShadowDiagram value;
};

struct kst_table {
    kstates::Table value;
    kstates::TableName name;
};

static_assert(static_cast<int>(kstates::Method::closed) == KST_METHOD_CLOSED);
static_assert(static_cast<int>(kstates::Method::recurrence) == KST_METHOD_RECURRENCE);
static_assert(static_cast<int>(kstates::Method::classes) == KST_METHOD_CLASSES);
static_assert(static_cast<int>(kstates::Method::enumerate) == KST_METHOD_ENUMERATE);

namespace {

thread_local std::string last_error;

kst_status to_status(kstates::Errc code) {
    using kstates::Errc;
    switch (code) {
    case Errc::invalid_argument: return KST_ERR_INVALID_ARGUMENT;
    case Errc::overflow: return KST_ERR_OVERFLOW;
    case Errc::not_divisible: return KST_ERR_NOT_DIVISIBLE;
    case Errc::cap_exceeded: return KST_ERR_CAP_EXCEEDED;
    case Errc::unsupported: return KST_ERR_UNSUPPORTED;
    case Errc::unknown_name: return KST_ERR_UNKNOWN_NAME;
    }
    return KST_ERR_INTERNAL;
}

template <class F>
kst_status guarded(F&& body) noexcept {
    try {
        body();
        return KST_OK;
    } catch (const kstates::Error& e) {
        last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
    } catch (const std::exception& e) {
        last_error = e.what();
    } catch (...) {
        last_error = "unknown failure";
    }
    return KST_ERR_INTERNAL;
}

void require(bool ok, const char* what) {
    if (!ok) throw kstates::Error(kstates::Errc::invalid_argument, what);
}

kstates::ExtendedCount count(std::int64_t v) {
    if (v == KST_INF) return kstates::ExtendedCount::infinity();
    require(v >= 0 && v <= std::numeric_limits<std::uint32_t>::max(), "half-twist count must be >= 0 or KST_INF");
    return kstates::ExtendedCount(static_cast<std::uint32_t>(v));
}

std::uint32_t finite(std::int64_t v) {
    require(v != KST_INF, "this argument must be finite");
    return count(v).value();
}

char* dup_string(const std::string& s) {
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

kst_poly* wrap(kstates::IntPolynomial p) { return new kst_poly{std::move(p)}; }
kst_diagram* wrap(kstates::ShadowDiagram d) { return new kst_diagram{std::move(d)}; }

std::size_t resolve_cap(std::size_t max_crossings) {
    if (max_crossings != 0) return max_crossings;
    std::size_t cap = 0;
    if (kst_status s = kst_enumeration_cap(&cap); s != KST_OK) throw kstates::Error(kstates::Errc::invalid_argument, last_error);
    return cap;
}

} // namespace

extern "C" {

const char* kst_last_error(void) { return last_error.c_str(); }

const char* kst_status_name(kst_status status) {
    switch (status) {
    case KST_OK: return "ok";
    case KST_ERR_INVALID_ARGUMENT: return "invalid argument";
    case KST_ERR_OVERFLOW: return "overflow";
    case KST_ERR_NOT_DIVISIBLE: return "not divisible";
    case KST_ERR_CAP_EXCEEDED: return "enumeration cap exceeded";
    case KST_ERR_UNSUPPORTED: return "unsupported";
    case KST_ERR_UNKNOWN_NAME: return "unknown name";
    case KST_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void kst_string_free(char* s) { std::free(s); }

kst_status kst_poly_from_coeffs(const int64_t* coeffs, size_t count, kst_poly** out) {
    return guarded([&] {
        require(out && (coeffs || count == 0), "null argument");
        *out = wrap(kstates::IntPolynomial(std::vector<kstates::Int>(coeffs, coeffs + count)));
    });
}

kst_status kst_poly_parse(const char* text, kst_poly** out) {
    return guarded([&] {
        require(text && out, "null argument");
        *out = wrap(kstates::parse_coeffs(text));
    });
}

void kst_poly_free(kst_poly* p) { delete p; }

size_t kst_poly_length(const kst_poly* p) { return p ? p->value.coeffs().size() : 0; }

int64_t kst_poly_coeff(const kst_poly* p, size_t k) { return p ? p->value.coeff(k) : 0; }

int64_t kst_poly_degree(const kst_poly* p) {
    if (!p || p->value.is_zero()) return -1;
    return static_cast<int64_t>(*p->value.degree());
}

int64_t kst_poly_leading(const kst_poly* p) { return p ? p->value.leading() : 0; }

int kst_poly_equal(const kst_poly* p, const kst_poly* q) { return p && q && p->value == q->value; }

kst_status kst_poly_add(const kst_poly* p, const kst_poly* q, kst_poly** out) {
    return guarded([&] {
        require(p && q && out, "null argument");
        *out = wrap(p->value + q->value);
    });
}

kst_status kst_poly_mul(const kst_poly* p, const kst_poly* q, kst_poly** out) {
    return guarded([&] {
        require(p && q && out, "null argument");
        *out = wrap(p->value * q->value);
    });
}

kst_status kst_poly_div_x(const kst_poly* p, kst_poly** out) {
    return guarded([&] {
        require(p && out, "null argument");
        *out = wrap(kstates::exact_div_by_x(p->value));
    });
}

kst_status kst_poly_eval(const kst_poly* p, int64_t t, int64_t* out) {
    return guarded([&] {
        require(p && out, "null argument");
        *out = p->value.eval(t);
    });
}

kst_status kst_poly_format(const kst_poly* p, kst_poly_style style, char** out) {
    return guarded([&] {
        require(p && out, "null argument");
        *out = dup_string(style == KST_STYLE_HUMAN ? kstates::format_human(p->value) : kstates::format_coeffs(p->value));
    });
}

kst_status kst_enumeration_cap(size_t* out) {
    return guarded([&] {
        require(out, "null argument");
        const char* env = std::getenv("KSTATES_MAX_CROSSINGS");
        if (!env || !*env) {
            *out = kstates::kDefaultMaxCrossings;
            return;
        }
        char* end = nullptr;
        errno = 0;
        unsigned long v = std::strtoul(env, &end, 10);
        if (errno != 0 || *end != '\0' || env[0] == '-' || v < 1 || v > kstates::kAbsoluteMaxCrossings)
            throw kstates::Error(kstates::Errc::invalid_argument,
                                 "KSTATES_MAX_CROSSINGS must be an integer in [1, " +
                                     std::to_string(kstates::kAbsoluteMaxCrossings) + "], got '" + env + "'");
        *out = v;
    });
}

kst_status kst_diagram_new(size_t edge_count, const uint32_t* crossings, size_t crossing_count, size_t free_circles,
                           kst_diagram** out) {
    return guarded([&] {
        require(out && (crossings || crossing_count == 0), "null argument");
        std::vector<kstates::Crossing> cs(crossing_count);
        for (std::size_t i = 0; i < crossing_count; ++i)
            for (std::size_t p = 0; p < 4; ++p) cs[i][p] = crossings[4 * i + p];
        *out = wrap(kstates::ShadowDiagram::make(edge_count, std::move(cs), free_circles));
    });
}

kst_status kst_diagram_two_bridge(int64_t n, int64_t r, kst_diagram** out) {
    return guarded([&] {
        require(out, "null argument");
        *out = wrap(kstates::build_two_bridge(count(n), count(r)));
    });
}

kst_status kst_diagram_torus(int64_t k, kst_diagram** out) {
    return guarded([&] {
        require(out, "null argument");
        *out = wrap(kstates::build_torus(finite(k)));
    });
}

void kst_diagram_free(kst_diagram* d) { delete d; }

size_t kst_diagram_edge_count(const kst_diagram* d) { return d ? d->value.edge_count() : 0; }
size_t kst_diagram_crossing_count(const kst_diagram* d) { return d ? d->value.crossing_count() : 0; }
size_t kst_diagram_free_circles(const kst_diagram* d) { return d ? d->value.free_circles() : 0; }

kst_status kst_diagram_crossing(const kst_diagram* d, size_t index, uint32_t out[4]) {
    return guarded([&] {
        require(d && out, "null argument");
        require(index < d->value.crossing_count(), "crossing index out of range");
        const auto& c = d->value.crossings()[index];
        for (std::size_t p = 0; p < 4; ++p) out[p] = c[p];
    });
}

kst_status kst_diagram_circle_count(const kst_diagram* d, const uint8_t* splits, size_t count, size_t* out) {
    return guarded([&] {
        require(d && out && (splits || count == 0), "null argument");
        std::vector<kstates::Split> s(count);
        for (std::size_t i = 0; i < count; ++i) {
            require(splits[i] <= 1, "split values must be 0 (A) or 1 (B)");
            s[i] = splits[i] ? kstates::Split::B : kstates::Split::A;
        }
        *out = kstates::circle_count(d->value, kstates::StateMask(std::move(s)));
    });
}

kst_status kst_diagram_state_polynomial(const kst_diagram* d, size_t max_crossings, unsigned threads, kst_poly** out) {
    return guarded([&] {
        require(d && out, "null argument");
        *out = wrap(kstates::state_polynomial(d->value, {resolve_cap(max_crossings), threads}));
    });
}

kst_status kst_diagram_count_states(const kst_diagram* d, size_t circles, size_t max_crossings, uint64_t* out) {
    return guarded([&] {
        require(d && out, "null argument");
        *out = kstates::count_states_with_circles(d->value, circles, {resolve_cap(max_crossings), 0});
    });
}

kst_status kst_diagram_disjoint_union(const kst_diagram* a, const kst_diagram* b, kst_diagram** out) {
    return guarded([&] {
        require(a && b && out, "null argument");
        *out = wrap(kstates::disjoint_union(a->value, b->value));
    });
}

kst_status kst_diagram_connected_sum(const kst_diagram* a, const kst_diagram* b, kst_diagram** out) {
    return guarded([&] {
        require(a && b && out, "null argument");
        *out = wrap(kstates::connected_sum(a->value, b->value));
    });
}

kst_status kst_diagram_connected_sum_at(const kst_diagram* a, int64_t edge_a, const kst_diagram* b, int64_t edge_b,
                                        int cross_pairing, kst_diagram** out) {
    return guarded([&] {
        require(a && b && out, "null argument");
        auto site = [](int64_t e) {
            if (e == KST_FREE_CIRCLE) return kstates::SpliceSite::at_free_circle();
            require(e >= 0 && e <= std::numeric_limits<kstates::EdgeId>::max(), "edge id out of range");
            return kstates::SpliceSite::at_edge(static_cast<kstates::EdgeId>(e));
        };
        *out = wrap(kstates::connected_sum(a->value, site(edge_a), b->value, site(edge_b), cross_pairing != 0));
    });
}

kst_status kst_method_parse(const char* name, kst_method* out) {
    return guarded([&] {
        require(name && out, "null argument");
        *out = static_cast<kst_method>(kstates::parse_method(name));
    });
}

kst_status kst_two_bridge_poly(int64_t n, int64_t r, kst_method method, size_t max_crossings, kst_poly** out) {
    return guarded([&] {
        require(out, "null argument");
        require(method >= KST_METHOD_CLOSED && method <= KST_METHOD_ENUMERATE, "unknown method");
        const auto m = static_cast<kstates::Method>(method);
        kstates::EnumerationOptions opts;
        if (m == kstates::Method::enumerate) opts.max_crossings = resolve_cap(max_crossings);
        *out = wrap(kstates::two_bridge_polynomial(count(n), count(r), m, opts));
    });
}

kst_status kst_alpha(int64_t n, kst_poly** out) {
    return guarded([&] {
        require(out, "null argument");
        *out = wrap(kstates::alpha(finite(n)));
    });
}

kst_status kst_state_classes(int64_t n, int64_t r, kst_poly* out[4]) {
    return guarded([&] {
        require(out, "null argument");
        auto c = kstates::b_nr_classes(finite(n), finite(r));
        out[0] = wrap(std::move(c.first_twists));
        out[1] = wrap(std::move(c.second_twists));
        out[2] = wrap(std::move(c.mixed));
        out[3] = wrap(std::move(c.single));
    });
}

kst_status kst_coeff(int64_t n, int64_t r, int64_t k, int64_t* out) {
    return guarded([&] {
        require(out, "null argument");
        require(k >= 0 && k <= std::numeric_limits<std::uint32_t>::max(), "k must be nonnegative");
        const auto cn = count(n), cr = count(r);
        if (cn.is_finite() && cr.is_finite()) {
            *out = kstates::coeff_formula(cn.value(), cr.value(), static_cast<std::uint32_t>(k));
        } else {
            *out = kstates::two_bridge_polynomial(cn, cr, kstates::Method::closed).coeff(static_cast<std::size_t>(k));
        }
    });
}

kst_status kst_coeff_k1(int64_t n, int64_t r, int64_t* out) {
    return guarded([&] {
        require(out, "null argument");
        *out = kstates::coeff_k1(finite(n), finite(r));
    });
}

kst_status kst_coeff_k2(int64_t n, int64_t r, int64_t* out) {
    return guarded([&] {
        require(out, "null argument");
        *out = kstates::coeff_k2(finite(n), finite(r));
    });
}

kst_status kst_degree_formula(int64_t n, int64_t r, int64_t* out) {
    return guarded([&] {
        require(out, "null argument");
        *out = kstates::degree_formula(finite(n), finite(r));
    });
}

kst_status kst_leading_coeff(int64_t n, int64_t r, int64_t* out) {
    return guarded([&] {
        require(out, "null argument");
        *out = kstates::leading_coeff(count(n), count(r));
    });
}

kst_status kst_table_render(const char* name, size_t rows, kst_table** out) {
    return guarded([&] {
        require(name && out, "null argument");
        const auto table_name = kstates::parse_table_name(name);
        *out = new kst_table{kstates::render_table({table_name, rows}), table_name};
    });
}

void kst_table_free(kst_table* t) { delete t; }

size_t kst_table_rows(const kst_table* t) { return t ? t->value.size() : 0; }

size_t kst_table_row_length(const kst_table* t, size_t row) {
    return t && row < t->value.size() ? t->value[row].size() : 0;
}

int64_t kst_table_entry(const kst_table* t, size_t row, size_t col) {
    if (!t || row >= t->value.size() || col >= t->value[row].size()) return 0;
    return t->value[row][col];
}

kst_status kst_table_format(const kst_table* t, const char* format, char** out) {
    return guarded([&] {
        require(t && format && out, "null argument");
        *out = dup_string(kstates::format_table(t->value, t->name, kstates::parse_table_format(format)));
    });
}

kst_status kst_sequence(const char* name, size_t terms, const char* order, int64_t* out, size_t capacity,
                        size_t* written) {
    return guarded([&] {
        require(name && order && written && (out || capacity == 0), "null argument");
        const auto seq =
            kstates::emit_sequence(kstates::parse_table_name(name), terms, kstates::parse_reading_order(order));
        const std::size_t n = std::min(seq.size(), capacity);
        std::copy_n(seq.begin(), n, out);
        *written = n;
    });
}

kst_status kst_sequence_bfile(const char* name, size_t terms, const char* order, int64_t offset, char** out) {
    return guarded([&] {
        require(name && order && out, "null argument");
        const auto seq =
            kstates::emit_sequence(kstates::parse_table_name(name), terms, kstates::parse_reading_order(order));
        *out = dup_string(kstates::format_bfile(seq, offset));
    });
}

void kst_verify_options_init(kst_verify_options* opts) {
    if (!opts) return;
    *opts = kst_verify_options{};
    opts->max_n = 7;
    opts->max_r = 7;
    opts->seed = kstates::kDefaultVerifySeed;
    opts->random_pairs = 200;
    opts->fault_delta = 1;
}

kst_status kst_verify(const kst_verify_options* opts, int* all_passed, char** report) {
    return guarded([&] {
        require(opts && all_passed && report, "null argument");
        kstates::VerifyOptions v;
        v.max_n = opts->max_n;
        v.max_r = opts->max_r;
        v.seed = opts->seed;
        v.random_pairs = opts->random_pairs;
        v.enumeration = {resolve_cap(opts->max_crossings), opts->threads};
        if (opts->inject_fault) v.fault = kstates::Fault{opts->fault_n, opts->fault_r, opts->fault_k, opts->fault_delta};
        const auto result = kstates::run_verify(v);
        *report = dup_string(result.to_text());
        *all_passed = result.all_passed() ? 1 : 0;
    });
}

} // extern "C"
