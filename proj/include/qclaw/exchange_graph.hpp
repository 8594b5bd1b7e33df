#pragma once

#include "qclaw/seed.hpp"

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qclaw {

struct MutateMove {
    int vertex;
    friend bool operator==(const MutateMove&, const MutateMove&) = default;
};

struct PermuteMove {
    Permutation sigma;
    friend bool operator==(const PermuteMove&, const PermuteMove&) = default;
};

using Move = std::variant<MutateMove, PermuteMove>;
using MutationPath = std::vector<Move>;

QuantumSeed apply_path(const QuantumSeed& s, const MutationPath& path);
/// Vertices mutated along the path, in order.
std::vector<int> mutation_sequence(const MutationPath& path);

/// Identifies the variable at a position, for matching seeds up to relabeling.
using VertexKeyFn = std::function<std::string(const QuantumSeed&, int pos)>;

std::string variable_key(const QuantumSeed& s, int pos);

/// What a search must reach: exchange data plus one key per position.
struct SeedTarget {
    IndexSet index;
    IntMatrix B;
    std::optional<IntMatrix> Lambda;
    std::vector<std::string> keys;
};

/// Exact identity key of a seed (variables, B, Lambda), optionally up to relabeling.
std::string seed_identity(const QuantumSeed& s, bool moduloPermutation);

SeedTarget target_of(const QuantumSeed& s, const VertexKeyFn& key = variable_key);

/// Relabeling taking `s` onto `target` when one exists.
std::optional<Permutation> match_up_to_permutation(const QuantumSeed& s, const std::vector<std::string>& keys,
                                                   const SeedTarget& target);

/// Breadth-first search over mutations (and a final relabeling when allowed).
std::optional<MutationPath> search_path(const QuantumSeed& from, const SeedTarget& to, const VertexKeyFn& key,
                                        int maxDepth, bool usePermutations);

/// Seeds compared by (index, B, Lambda, variables).
std::optional<MutationPath> find_mutation_path(const QuantumSeed& a, const QuantumSeed& b, int maxDepth,
                                               bool usePermutations);

struct ExchangeGraph {
    std::vector<QuantumSeed> seeds;
    /// BFS tree: parent index (-1 for the root) and the vertex mutated to get here.
    std::vector<int> parent;
    std::vector<int> via;
    std::vector<int> depth;
    bool truncated = false;
};

/// BFS closure under mutations. With `moduloPermutation` seeds that differ
/// only by a relabeling are identified.
ExchangeGraph enumerate_exchange_graph(const QuantumSeed& s, int maxSeeds, bool moduloPermutation = false);

/// Number of distinct unordered clusters among the seeds.
size_t count_clusters(const std::vector<QuantumSeed>& seeds);

struct GreenToRed {
    MutationPath path;
    /// sigma(k) for each unfrozen k.
    std::map<int, int> sigma;
};

/// Searches for Sigma with deg x_{sigma k}(Sigma s) = -f_k on unfrozen coordinates.
std::optional<GreenToRed> find_green_to_red(const QuantumSeed& s, int maxDepth);

} // namespace qclaw
