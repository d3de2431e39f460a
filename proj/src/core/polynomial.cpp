#include "polynomial.hpp"

#include <charconv>
#include <sstream>

namespace kstates {

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::monomial(Int c, std::size_t power) {
    std::vector<Int> v(power + 1, 0);
    v[power] = c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::binomial_power(std::size_t n) {
    std::vector<Int> v(n + 1);
    for (std::size_t k = 0; k <= n; ++k) v[k] = binomial(static_cast<Int>(n), static_cast<Int>(k));
    return IntPolynomial(std::move(v));
}

std::optional<std::size_t> IntPolynomial::degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

Int IntPolynomial::eval(Int t) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = checked_add(checked_mul(acc, t), *it);
    return acc;
}

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q) {
    auto a = p.coeffs(), b = q.coeffs();
    std::vector<Int> out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = checked_add(out[i], b[i]);
    return IntPolynomial(std::move(out));
}

IntPolynomial scale(const IntPolynomial& p, Int c) {
    std::vector<Int> out(p.coeffs().begin(), p.coeffs().end());
    for (auto& v : out) v = checked_mul(v, c);
    return IntPolynomial(std::move(out));
}

IntPolynomial sub(const IntPolynomial& p, const IntPolynomial& q) {
    auto a = p.coeffs(), b = q.coeffs();
    std::vector<Int> out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = checked_sub(out[i], b[i]);
    return IntPolynomial(std::move(out));
}

IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    auto a = p.coeffs(), b = q.coeffs();
    std::vector<Int> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial exact_div_by_x(const IntPolynomial& p) {
    if (p.coeff(0) != 0) throw Error(Errc::not_divisible, "polynomial is not divisible by x (nonzero constant term)");
    if (p.is_zero()) return {};
    auto c = p.coeffs();
    return IntPolynomial(std::vector<Int>(c.begin() + 1, c.end()));
}

IntPolynomial shift_up(const IntPolynomial& p, std::size_t powers) {
    if (p.is_zero()) return {};
    std::vector<Int> out(powers, 0);
    out.insert(out.end(), p.coeffs().begin(), p.coeffs().end());
    return IntPolynomial(std::move(out));
}

std::string format_coeffs(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        if (k) out += ' ';
        out += std::to_string(p.coeffs()[k]);
    }
    return out;
}

std::string format_human(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        Int c = p.coeffs()[k];
        if (c == 0) continue;
        bool negative = c < 0;
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        // Magnitude via unsigned so INT64_MIN prints correctly.
        auto mag = negative ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
        if (k == 0 || mag != 1) out += std::to_string(mag);
        if (k >= 1) out += 'x';
        if (k >= 2) out += '^' + std::to_string(k);
    }
    return out;
}

IntPolynomial parse_coeffs(std::string_view text) {
    std::vector<Int> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n')) ++pos;
        if (pos == text.size()) break;
        Int value = 0;
        auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec == std::errc::result_out_of_range) throw Error(Errc::overflow, "coefficient does not fit in 64 bits");
        if (ec != std::errc()) throw Error(Errc::invalid_argument, "malformed coefficient list: '" + std::string(text) + "'");
        pos = static_cast<std::size_t>(end - text.data());
        if (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' && text[pos] != '\n')
            throw Error(Errc::invalid_argument, "malformed coefficient list: '" + std::string(text) + "'");
        out.push_back(value);
    }
    if (out.empty()) throw Error(Errc::invalid_argument, "empty coefficient list");
    return IntPolynomial(std::move(out));
}

} // namespace kstates
