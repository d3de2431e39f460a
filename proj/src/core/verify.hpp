#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "diagram.hpp"

namespace kstates {

inline constexpr std::uint64_t kDefaultVerifySeed = 1729;

/// Test hook: adds `delta` to coefficient k of the closed-form B(n,r)
/// wherever the verifier consults it.
struct Fault {
    std::uint32_t n = 0;
    std::uint32_t r = 0;
    std::uint32_t k = 0;
    Int delta = 1;
};

struct VerifyOptions {
    std::uint32_t max_n = 7;
    std::uint32_t max_r = 7;
    std::uint64_t seed = kDefaultVerifySeed;
    std::size_t random_pairs = 200;
    std::optional<Fault> fault;
    EnumerationOptions enumeration;
};

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::string detail; ///< summary on success, first counterexample on failure
};

struct VerifyReport {
    std::vector<SuiteResult> suites;

    bool all_passed() const;
    /// One "PASS name: detail" / "FAIL name: detail" line per suite.
    std::string to_text() const;
};

/// Runs every cross-check suite. Throws Errc::cap_exceeded up front when
/// max_n + max_r exceeds the enumeration cap.
VerifyReport run_verify(const VerifyOptions& opts);

/// A random shadow diagram: `crossings` crossings whose 4m ports are paired
/// uniformly at random, plus up to `max_free` free circles. Never empty.
ShadowDiagram random_diagram(std::mt19937_64& rng, std::size_t crossings, std::size_t max_free = 1);

} // namespace kstates
