#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rankmac/codes.hpp"

namespace rankmac {

enum class CheckStatus { Held, Failed, Skipped };

/// Aggregated outcome of one named identity across all its instances in a
/// sweep. A single failing instance fails the identity; its reproducer is
/// kept in detail.
struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Held;
    long held = 0;
    long failed = 0;
    long skipped = 0;
    std::string detail;
};

struct VerifyOptions {
    std::vector<long> qs{2};
    int max_m = 3;
    int max_n = 4;
    std::uint64_t cap = 1ull << 20;
    std::uint64_t seed = 1;
    int random_per_cell = 2;  // random generators per (q, m, n, k)
    int poly_trials = 100;    // randomized polynomial identity trials
};

struct VerifySummary {
    std::vector<CheckResult> results;
    long held = 0;
    long failed = 0;
    long skipped = 0;
    bool all_ok() const { return failed == 0; }
};

struct CorpusEntry {
    LinearCode code;
    std::string label;
};

/// Deterministic code corpus for a grid: zero, whole-space, repetition and
/// Gabidulin codes for every cell, plus seeded random generators. Cells whose
/// enumeration would exceed the cap are left out.
std::vector<CorpusEntry> build_corpus(const VerifyOptions& opts);

/// Run every identity suite on the grid.
VerifySummary run_verify(const VerifyOptions& opts);

}  // namespace rankmac
