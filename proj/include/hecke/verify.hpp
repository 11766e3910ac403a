#pragma once

// Cross-checks of the closed-form criteria against brute-force oracles.

#include "hecke/classifier.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hecke {

struct VerifyLimits {
    /// Largest group enumerated by BFS.
    std::uint64_t max_order = 6'000'000;
    bool include_e7 = false;
    unsigned max_rank = 12;     ///< multiplicity-oracle
    unsigned max_e = 40;        ///< multiplicity-oracle
    unsigned morita_max_n = 40; ///< morita-consistency
    unsigned morita_max_e = 20;
    unsigned kunneth_pairs = 500;
    unsigned kunneth_length = 64;
    std::uint64_t seed = 20240917;
};

struct SuiteResult {
    std::string name;
    std::uint64_t checks = 0;
    /// One line per failed check, with the counterexample.
    std::vector<std::string> failures;
    bool passed() const noexcept { return failures.empty(); }
};

using Progress = std::function<void(const std::string&)>;

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(const std::string& name, const VerifyLimits& limits, const Progress& progress = {});

/// Irreducible types whose BFS enumeration stays within the limits:
/// A <= 9, B <= 7, D <= 8, G2, F4, E6, optionally E7, I2(m) for m <= 60.
std::vector<IrreducibleType> enumerable_types(const VerifyLimits& limits);

/// Status of the generic-Q type-B algebra read off its Morita decomposition:
/// the worst over m = 0..n of H(A_{m-1}) x H(A_{n-m-1}), each summand
/// classified factorwise and combined by the product rule.
Status morita_generic_b_status(unsigned n, unsigned e);

} // namespace hecke
