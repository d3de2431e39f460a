// kstates command-line tool. Links only the C API.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource cap (enumeration cap or 64-bit overflow).

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kstates/kstates.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PolyDeleter {
    void operator()(kst_poly* p) const { kst_poly_free(p); }
};
struct TableDeleter {
    void operator()(kst_table* t) const { kst_table_free(t); }
};
struct StringDeleter {
    void operator()(char* s) const { kst_string_free(s); }
};
using PolyPtr = std::unique_ptr<kst_poly, PolyDeleter>;
using TablePtr = std::unique_ptr<kst_table, TableDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

int exit_code_for(kst_status s) {
    switch (s) {
    case KST_OK: return kExitOk;
    case KST_ERR_INVALID_ARGUMENT:
    case KST_ERR_UNSUPPORTED:
    case KST_ERR_UNKNOWN_NAME: return kExitUsage;
    case KST_ERR_CAP_EXCEEDED:
    case KST_ERR_OVERFLOW: return kExitCap;
    default: return kExitVerifyFailed;
    }
}

// Thrown by check(); carries the exit code for the failing status.
struct ApiFailure {
    int code;
};

void check(kst_status s) {
    if (s == KST_OK) return;
    std::cerr << "kstates: " << kst_last_error() << '\n';
    throw ApiFailure{exit_code_for(s)};
}

std::int64_t parse_count(const std::string& text, const char* what) {
    if (text == "inf") return KST_INF;
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        if (text.empty() || text[0] == '-' || text[0] == '+') throw std::invalid_argument(text);
        v = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size() || v > UINT32_MAX)
        throw UsageError(std::string(what) + " must be a nonnegative integer or 'inf', got '" + text + "'");
    return static_cast<std::int64_t>(v);
}

void require_finite(std::int64_t v, const char* what) {
    if (v == KST_INF) throw UsageError(std::string(what) + " must be finite for enumeration");
}

void reject_inf_pair(std::int64_t n, std::int64_t r) {
    if (n == KST_INF && r == KST_INF)
        throw UsageError("C(inf, inf) is not a two-bridge shadow; at most one of n, r may be 'inf'");
}

std::string format_poly(const kst_poly* p, kst_poly_style style) {
    char* raw = nullptr;
    check(kst_poly_format(p, style, &raw));
    StringPtr s(raw);
    return s.get();
}

struct PolyArgs {
    std::string n, r;
    std::string method = "closed";
    std::string format = "coeffs";
};

int cmd_poly(const PolyArgs& a) {
    const auto n = parse_count(a.n, "n");
    const auto r = parse_count(a.r, "r");
    reject_inf_pair(n, r);
    kst_method method{};
    check(kst_method_parse(a.method.c_str(), &method));
    if (method == KST_METHOD_ENUMERATE) {
        require_finite(n, "n");
        require_finite(r, "r");
    }
    kst_poly* raw = nullptr;
    check(kst_two_bridge_poly(n, r, method, 0, &raw));
    PolyPtr p(raw);
    std::cout << format_poly(p.get(), a.format == "human" ? KST_STYLE_HUMAN : KST_STYLE_COEFFS) << '\n';
    return kExitOk;
}

struct CoeffArgs {
    std::string n, r;
    std::int64_t k = 0;
};

int cmd_coeff(const CoeffArgs& a) {
    const auto n = parse_count(a.n, "n");
    const auto r = parse_count(a.r, "r");
    reject_inf_pair(n, r);
    std::int64_t value = 0;
    check(kst_coeff(n, r, a.k, &value));
    std::cout << value << '\n';
    return kExitOk;
}

struct EnumerateArgs {
    std::string n, r;
    bool histogram = false;
};

int cmd_enumerate(const EnumerateArgs& a) {
    const auto n = parse_count(a.n, "n");
    const auto r = parse_count(a.r, "r");
    require_finite(n, "n");
    require_finite(r, "r");
    kst_poly* raw = nullptr;
    check(kst_two_bridge_poly(n, r, KST_METHOD_ENUMERATE, 0, &raw));
    PolyPtr p(raw);
    if (!a.histogram) {
        std::cout << format_poly(p.get(), KST_STYLE_COEFFS) << '\n';
        return kExitOk;
    }
    for (std::size_t k = 0; k < kst_poly_length(p.get()); ++k)
        if (auto c = kst_poly_coeff(p.get(), k); c != 0) std::cout << k << ' ' << c << '\n';
    return kExitOk;
}

struct TableArgs {
    std::string name;
    std::size_t rows = 8;
    std::string format = "csv";
};

int cmd_table(const TableArgs& a) {
    kst_table* raw = nullptr;
    check(kst_table_render(a.name.c_str(), a.rows, &raw));
    TablePtr t(raw);
    char* text = nullptr;
    check(kst_table_format(t.get(), a.format.c_str(), &text));
    StringPtr s(text);
    std::cout << s.get();
    return kExitOk;
}

struct SeqArgs {
    std::string name;
    std::size_t terms = 10;
    std::string order = "by-rows";
    std::int64_t offset = 0;
};

int cmd_seq(const SeqArgs& a) {
    char* text = nullptr;
    check(kst_sequence_bfile(a.name.c_str(), a.terms, a.order.c_str(), a.offset, &text));
    StringPtr s(text);
    std::cout << s.get();
    return kExitOk;
}

struct VerifyArgs {
    std::uint32_t max_n = 7;
    std::uint32_t max_r = 7;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::size_t pairs = 200;
    unsigned threads = 0;
    std::string fault;
};

int cmd_verify(const VerifyArgs& a) {
    kst_verify_options opts;
    kst_verify_options_init(&opts);
    opts.max_n = a.max_n;
    opts.max_r = a.max_r;
    if (a.seed_given) opts.seed = a.seed;
    opts.random_pairs = a.pairs;
    opts.threads = a.threads;
    if (!a.fault.empty()) {
        unsigned n = 0, r = 0, k = 0;
        char tail = 0;
        if (std::sscanf(a.fault.c_str(), "%u,%u,%u%c", &n, &r, &k, &tail) != 3)
            throw UsageError("--inject-fault expects N,R,K");
        opts.inject_fault = 1;
        opts.fault_n = n;
        opts.fault_r = r;
        opts.fault_k = k;
    }
    int passed = 0;
    char* report = nullptr;
    check(kst_verify(&opts, &passed, &report));
    StringPtr s(report);
    std::cout << s.get();
    return passed ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kauffman-state generating polynomials of two-bridge knot shadows C(n,r)", "kstates"};
    app.require_subcommand(1);
    app.footer("Environment: KSTATES_MAX_CROSSINGS overrides the enumeration cap (default 30, max 62).\n"
               "Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 resource cap.");

    PolyArgs poly;
    auto* poly_cmd = app.add_subcommand("poly", "Print the generating polynomial of C(n,r)");
    poly_cmd->add_option("n", poly.n, "Half-twists in the first region (integer or 'inf')")->required();
    poly_cmd->add_option("r", poly.r, "Half-twists in the second region (integer or 'inf')")->required();
    poly_cmd->add_option("--method", poly.method, "closed | recurrence | classes | enumerate")
        ->check(CLI::IsMember({"closed", "recurrence", "classes", "enumerate"}));
    poly_cmd->add_option("--format", poly.format, "coeffs | human")->check(CLI::IsMember({"coeffs", "human"}));

    CoeffArgs coeff;
    auto* coeff_cmd = app.add_subcommand("coeff", "Number of states of C(n,r) with exactly k circles");
    coeff_cmd->add_option("n", coeff.n)->required();
    coeff_cmd->add_option("r", coeff.r)->required();
    coeff_cmd->add_option("k", coeff.k)->required()->check(CLI::NonNegativeNumber);

    EnumerateArgs enumerate;
    auto* enum_cmd = app.add_subcommand("enumerate", "Brute-force state census over the constructed shadow");
    enum_cmd->add_option("n", enumerate.n)->required();
    enum_cmd->add_option("r", enumerate.r)->required();
    enum_cmd->add_flag("--histogram", enumerate.histogram, "Print 'k count' lines instead of coefficients");

    TableArgs table;
    auto* table_cmd = app.add_subcommand("table", "Render one of the coefficient tables");
    table_cmd->add_option("name", table.name, "bn0k bn1k bn2k bnnk bnr1 bnr2 leading degree")->required();
    table_cmd->add_option("--rows", table.rows, "Number of rows (n = 0..rows-1)")->check(CLI::PositiveNumber);
    table_cmd->add_option("--format", table.format, "csv | tsv | markdown")
        ->check(CLI::IsMember({"csv", "tsv", "markdown"}));

    SeqArgs seq;
    auto* seq_cmd = app.add_subcommand("seq", "Flatten a table into b-file lines 'index value'");
    seq_cmd->add_option("name", seq.name)->required();
    seq_cmd->add_option("--terms", seq.terms)->check(CLI::PositiveNumber);
    seq_cmd->add_option("--order", seq.order, "by-rows | by-antidiagonals")
        ->check(CLI::IsMember({"by-rows", "by-antidiagonals"}));
    seq_cmd->add_option("--offset", seq.offset, "Index of the first term");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run every cross-validation suite");
    verify_cmd->add_option("--max-n", verify.max_n);
    verify_cmd->add_option("--max-r", verify.max_r);
    auto* seed_opt = verify_cmd->add_option("--seed", verify.seed, "Seed for the random diagram suite");
    verify_cmd->add_option("--pairs", verify.pairs, "Random diagram pairs for the structural laws");
    verify_cmd->add_option("--threads", verify.threads, "Enumeration threads (0 = hardware)");
    verify_cmd->add_option("--inject-fault", verify.fault)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    verify.seed_given = seed_opt->count() > 0;

    try {
        if (*poly_cmd) return cmd_poly(poly);
        if (*coeff_cmd) return cmd_coeff(coeff);
        if (*enum_cmd) return cmd_enumerate(enumerate);
        if (*table_cmd) return cmd_table(table);
        if (*seq_cmd) return cmd_seq(seq);
        if (*verify_cmd) return cmd_verify(verify);
    } catch (const UsageError& e) {
        std::cerr << "kstates: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ApiFailure& f) {
        return f.code;
    }
    return kExitUsage;
}
