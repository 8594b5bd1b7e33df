#pragma once

#include "qclaw/json_io.hpp"

#include <string>
#include <vector>

namespace qclaw {

struct GoldenCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct GoldenReport {
    std::string suite;
    std::vector<GoldenCheck> checks;
    bool pass() const;
};

/// $QCLAW_GOLDEN_DIR, or the data directory of the source tree.
std::string golden_dir();
Json load_golden(const std::string& name);

/// Exchange matrix of a quiver: b_ij = #(i -> j) - #(j -> i), columns at the
/// unfrozen positions.
IntMatrix quiver_matrix(const IndexSet& index, const std::vector<std::pair<int, int>>& arrows);

/// Signed words for (w0, w0): all shuffles of one reduced pair, plus the pairs
/// using other reduced words of w0 (type A2).
std::vector<SignedWord> longest_pair_corpus(const std::string& type);

/// Small named seeds with a compatible Lambda: "A2f", "A3f" (type A with one
/// frozen vertex attached to the first and last mutable vertex) and "A4"
/// (linear A4, all mutable).
QuantumSeed named_seed(const std::string& name);

/// Suites "sl3", "a1", "a2". Throws UnknownSuite.
GoldenReport run_golden(const std::string& suite);

Json to_json(const GoldenReport& r);

} // namespace qclaw
