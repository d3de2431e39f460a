#pragma once

#include <span>

#include "tables.hpp"

namespace kstates {

/// Rows n = 0..7 of each table exactly as printed.
Table printed_table(TableName name);

struct PrintedErratum {
    TableName table;
    std::uint32_t n;
    std::uint32_t j;
    Int printed;
    Int corrected;
};

/// Printed entries known to be misprints, with their corrected values.
std::span<const PrintedErratum> printed_errata();

} // namespace kstates
