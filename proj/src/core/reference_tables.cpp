#include "reference_tables.hpp"

namespace kstates {

// Transcribed verbatim from the printed tables, including the misprint
// listed in printed_errata().
Table printed_table(TableName name) {
    switch (name) {
    case TableName::bn0k:
        return {
            {0, 1},
            {0, 1, 1},
            {0, 1, 2, 1},
            {0, 1, 3, 3, 1},
            {0, 1, 4, 6, 4, 1},
            {0, 1, 5, 10, 10, 5, 1},
            {0, 1, 6, 15, 20, 15, 6, 1},
            {0, 1, 7, 21, 35, 35, 21, 7, 1},
        };
    case TableName::bn1k:
        return {
            {0, 1, 1},
            {0, 2, 2},
            {0, 3, 4, 1},
            {0, 4, 7, 4, 1},
            {0, 5, 11, 10, 5, 1},
            {0, 6, 16, 20, 15, 6, 1},
            {0, 7, 22, 35, 35, 21, 7, 1},
            {0, 8, 29, 56, 70, 56, 28, 8, 1},
        };
    case TableName::bn2k:
        return {
            {0, 1, 2, 1},
            {0, 3, 4, 1},
            {0, 5, 8, 3},
            {0, 7, 14, 9, 2},
            {0, 9, 22, 21, 10, 2},
            {0, 11, 32, 41, 30, 12, 2},
            {0, 13, 44, 71, 70, 42, 14, 2},
            {0, 15, 58, 113, 140, 112, 56, 16, 2},
        };
    case TableName::bnnk:
        return {
            {0, 1},
            {0, 2, 2},
            {0, 5, 8, 3},
            {0, 10, 24, 21, 8, 1},
            {0, 17, 56, 80, 64, 30, 8, 1},
            {0, 26, 110, 220, 270, 220, 122, 45, 10, 1},
            {0, 37, 192, 495, 820, 952, 804, 497, 220, 66, 12, 1},
            {0, 50, 308, 973, 2030, 3059, 3472, 3017, 2004, 1001, 364, 91, 14, 1},
        };
    case TableName::bnr1:
        return {
            {1, 1, 1, 1, 1, 1, 1, 1},
            {1, 2, 3, 4, 5, 6, 7, 8},
            {1, 3, 5, 7, 9, 11, 13, 15},
            {1, 4, 7, 10, 13, 16, 19, 22},
            {1, 5, 9, 13, 17, 21, 25, 29},
            {1, 6, 11, 16, 21, 26, 31, 36},
            {1, 7, 13, 19, 25, 31, 37, 43},
            {1, 8, 15, 22, 29, 36, 43, 50},
        };
    case TableName::bnr2:
        return {
            {0, 1, 2, 3, 4, 5, 6, 7},
            {1, 2, 4, 7, 11, 16, 22, 29},
            {2, 4, 8, 14, 22, 32, 44, 58},
            {3, 7, 14, 24, 37, 53, 72, 94},
            {4, 11, 22, 37, 56, 79, 106, 137},
            {5, 16, 32, 53, 79, 110, 146, 187},
            {6, 22, 44, 72, 106, 146, 192, 244},
            {7, 29, 58, 94, 137, 187, 244, 308},
        };
    case TableName::leading:
        return {
            {1, 1, 1, 1, 1, 1, 1, 1},
            {1, 2, 1, 1, 1, 1, 1, 1},
            {1, 1, 3, 2, 2, 2, 2, 1},
            {1, 1, 2, 1, 1, 1, 1, 1},
            {1, 1, 2, 1, 1, 1, 1, 1},
            {1, 1, 2, 1, 1, 1, 1, 1},
            {1, 1, 2, 1, 1, 1, 1, 1},
            {1, 1, 2, 1, 1, 1, 1, 1},
        };
    case TableName::degree:
        return {
            {1, 2, 3, 4, 5, 6, 7, 8},
            {2, 2, 3, 4, 5, 6, 7, 8},
            {3, 3, 3, 4, 5, 6, 7, 8},
            {4, 4, 4, 5, 6, 7, 8, 9},
            {5, 5, 5, 6, 7, 8, 9, 10},
            {6, 6, 6, 7, 8, 9, 10, 11},
            {7, 7, 7, 8, 9, 10, 11, 12},
            {8, 8, 8, 9, 10, 11, 12, 13},
        };
    }
    return {};
}

std::span<const PrintedErratum> printed_errata() {
    // Leading coefficient of B(2,7): the printed 1 contradicts the symmetric
    // entry (7,2) = 2 and the last coefficient of the bn2k row n = 7.
    static const PrintedErratum errata[] = {
        {TableName::leading, 2, 7, 1, 2},
    };
    return errata;
}

} // namespace kstates
