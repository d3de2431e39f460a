#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "checked.hpp"

namespace kstates {

enum class TableName { bn0k, bn1k, bn2k, bnnk, bnr1, bnr2, leading, degree };
enum class TableKind { triangle, square };
enum class TableFormat { csv, tsv, markdown };
enum class ReadingOrder { by_rows, by_antidiagonals };

inline constexpr std::size_t kSquareWidth = 8;

TableName parse_table_name(std::string_view name);
std::string_view to_string(TableName name);
TableFormat parse_table_format(std::string_view name);
ReadingOrder parse_reading_order(std::string_view name);

struct TableSpec {
    TableName name = TableName::bn0k;
    std::size_t rows = 8;

    /// Triangles run over k and end at the last nonzero coefficient;
    /// squares run over r = 0..7.
    TableKind kind() const noexcept;
};

using Table = std::vector<std::vector<Int>>;

/// Entry (n, j) where j is k for triangles and r for squares.
Int table_entry(TableName name, std::uint32_t n, std::uint32_t j);

/// Number of entries in row n.
std::size_t row_length(TableName name, std::uint32_t n);

Table render_table(const TableSpec& spec);

/// csv/tsv: one line per row, no header. markdown: header "n \\ k" or
/// "n \\ r", ragged rows padded with empty cells.
std::string format_table(const Table& table, TableName name, TableFormat format);

/// First `terms` entries of the named array in the requested reading order.
/// Antidiagonal s is read from (0, s) down to (s, 0); cells beyond a
/// triangle row are skipped.
std::vector<Int> emit_sequence(TableName name, std::size_t terms, ReadingOrder order);

/// b-file lines "index value".
std::string format_bfile(const std::vector<Int>& seq, std::int64_t offset = 0);

} // namespace kstates
