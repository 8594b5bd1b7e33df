#pragma once

#include "qclaw/seed.hpp"

#include <random>

namespace qclaw {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultRngSeed = 20240611;

int uniform_int(Rng& rng, int lo, int hi);

/// Sum of up to `maxTerms` terms c q^{e/2} with |e| <= halfExpRange, 0 < |c| <= coeffRange.
Coefficient random_coefficient(Rng& rng, int maxTerms = 3, int halfExpRange = 4, int coeffRange = 3);

/// Random element with up to `terms` terms and exponents in [lo, hi];
/// coordinates in `nonnegPositions` are drawn from [0, hi].
TorusElement random_torus_element(const ContextPtr& ctx, Rng& rng, int terms, int lo, int hi,
                                  const std::vector<int>& nonnegPositions = {});

/// Random full-rank skew-symmetrizable exchange matrix with `unfrozen`
/// mutable and `frozen` frozen vertices, entries bounded by maxEntry, together
/// with a compatible Lambda.
QuantumSeed random_compatible_seed(Rng& rng, int unfrozen, int frozen, int maxEntry = 3);

} // namespace qclaw
