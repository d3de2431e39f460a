#include "tables.hpp"

#include "closed_forms.hpp"

namespace kstates {

TableName parse_table_name(std::string_view name) {
    if (name == "bn0k") return TableName::bn0k;
    if (name == "bn1k") return TableName::bn1k;
    if (name == "bn2k") return TableName::bn2k;
    if (name == "bnnk") return TableName::bnnk;
    if (name == "bnr1") return TableName::bnr1;
    if (name == "bnr2") return TableName::bnr2;
    if (name == "leading") return TableName::leading;
    if (name == "degree") return TableName::degree;
    throw Error(Errc::unknown_name, "unknown table '" + std::string(name) + "'");
}

std::string_view to_string(TableName name) {
    switch (name) {
    case TableName::bn0k: return "bn0k";
    case TableName::bn1k: return "bn1k";
    case TableName::bn2k: return "bn2k";
    case TableName::bnnk: return "bnnk";
    case TableName::bnr1: return "bnr1";
    case TableName::bnr2: return "bnr2";
    case TableName::leading: return "leading";
    case TableName::degree: return "degree";
    }
    return "?";
}

TableFormat parse_table_format(std::string_view name) {
    if (name == "csv") return TableFormat::csv;
    if (name == "tsv") return TableFormat::tsv;
    if (name == "markdown") return TableFormat::markdown;
    throw Error(Errc::unknown_name, "unknown table format '" + std::string(name) + "'");
}

ReadingOrder parse_reading_order(std::string_view name) {
    if (name == "by-rows") return ReadingOrder::by_rows;
    if (name == "by-antidiagonals") return ReadingOrder::by_antidiagonals;
    throw Error(Errc::unknown_name, "unknown reading order '" + std::string(name) + "'");
}

namespace {

TableKind kind_of(TableName name) {
    switch (name) {
    case TableName::bn0k:
    case TableName::bn1k:
    case TableName::bn2k:
    case TableName::bnnk:
        return TableKind::triangle;
    default:
        return TableKind::square;
    }
}

IntPolynomial triangle_row(TableName name, std::uint32_t n) {
    switch (name) {
    case TableName::bn0k: return b_n0(n);
    case TableName::bn1k: return special_rows(SpecialRow::r1, n);
    case TableName::bn2k: return special_rows(SpecialRow::r2, n);
    case TableName::bnnk: return special_rows(SpecialRow::diag, n);
    default: break;
    }
    throw Error(Errc::invalid_argument, "not a triangle table");
}

} // namespace

TableKind TableSpec::kind() const noexcept { return kind_of(name); }

Int table_entry(TableName name, std::uint32_t n, std::uint32_t j) {
    switch (name) {
    case TableName::bnr1: return coeff_k1(n, j);
    case TableName::bnr2: return coeff_k2(n, j);
    case TableName::leading: return leading_coeff(n, j);
    case TableName::degree: return degree_formula(n, j);
    default: return triangle_row(name, n).coeff(j);
    }
}

std::size_t row_length(TableName name, std::uint32_t n) {
    if (kind_of(name) == TableKind::square) return kSquareWidth;
    return triangle_row(name, n).coeffs().size();
}

Table render_table(const TableSpec& spec) {
    if (spec.rows == 0) throw Error(Errc::invalid_argument, "a table needs at least one row");
    Table out;
    out.reserve(spec.rows);
    for (std::uint32_t n = 0; n < spec.rows; ++n) {
        if (spec.kind() == TableKind::triangle) {
            auto p = triangle_row(spec.name, n);
            out.emplace_back(p.coeffs().begin(), p.coeffs().end());
        } else {
            std::vector<Int> row(kSquareWidth);
            for (std::uint32_t r = 0; r < kSquareWidth; ++r) row[r] = table_entry(spec.name, n, r);
            out.push_back(std::move(row));
        }
    }
    return out;
}

std::string format_table(const Table& table, TableName name, TableFormat format) {
    std::string out;
    if (format != TableFormat::markdown) {
        const char sep = format == TableFormat::csv ? ',' : '\t';
        for (const auto& row : table) {
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (j) out += sep;
                out += std::to_string(row[j]);
            }
            out += '\n';
        }
        return out;
    }

    std::size_t width = 0;
    for (const auto& row : table) width = std::max(width, row.size());
    out += kind_of(name) == TableKind::triangle ? "| n \\\\ k |" : "| n \\\\ r |";
    for (std::size_t j = 0; j < width; ++j) out += ' ' + std::to_string(j) + " |";
    out += "\n|---|";
    for (std::size_t j = 0; j < width; ++j) out += "---:|";
    out += '\n';
    for (std::size_t n = 0; n < table.size(); ++n) {
        out += "| " + std::to_string(n) + " |";
        for (std::size_t j = 0; j < width; ++j)
            out += j < table[n].size() ? ' ' + std::to_string(table[n][j]) + " |" : std::string("  |");
        out += '\n';
    }
    return out;
}

std::vector<Int> emit_sequence(TableName name, std::size_t terms, ReadingOrder order) {
    if (terms == 0) throw Error(Errc::invalid_argument, "at least one term is required");
    std::vector<Int> out;
    out.reserve(terms);
    if (order == ReadingOrder::by_rows) {
        for (std::uint32_t n = 0; out.size() < terms; ++n) {
            const std::size_t len = row_length(name, n);
            for (std::uint32_t j = 0; j < len && out.size() < terms; ++j) out.push_back(table_entry(name, n, j));
        }
        return out;
    }
    for (std::uint32_t s = 0; out.size() < terms; ++s) {
        for (std::uint32_t n = 0; n <= s && out.size() < terms; ++n) {
            const std::uint32_t j = s - n;
            if (j < row_length(name, n) || kind_of(name) == TableKind::square) out.push_back(table_entry(name, n, j));
        }
    }
    return out;
}

std::string format_bfile(const std::vector<Int>& seq, std::int64_t offset) {
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i)
        out += std::to_string(offset + static_cast<std::int64_t>(i)) + ' ' + std::to_string(seq[i]) + '\n';
    return out;
}

} // namespace kstates
