#pragma once

#include "qclaw/exchange_graph.hpp"
#include "qclaw/sampling.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qclaw {

/// mu_k s with variables reset to the coordinates of its own torus.
QuantumSeed own_mutation(const QuantumSeed& s, int k);

/// Rewrites z, given in the own torus of s, in the own torus of `next`
/// = own_mutation(s, k). nullopt when the result is not Laurent.
std::optional<TorusElement> reexpress_step(const TorusElement& z, const QuantumSeed& s, int k,
                                           const QuantumSeed& next);

/// Iterated reexpress_step along a sequence of mutations; nullopt (not Laurent)
/// as soon as one step fails.
std::optional<TorusElement> reexpress_in_seed(const TorusElement& z, const QuantumSeed& s,
                                              const std::vector<int>& mutations);

struct MembershipReport {
    TorusElement element;
    /// Per enumerated seed: true/false when z was carried there, nullopt when
    /// an ancestor on the BFS tree was not Laurent.
    std::vector<std::optional<bool>> perSeed;
    std::vector<std::string> seedNames;
    /// nu_j in the initial seed, by frozen label.
    std::map<int, Int> frozenOrders;
    bool inU = false;
    /// inU and nu_j >= 0 in the initial seed.
    bool inBarU = false;
    /// inU and nu_j >= 0 in every seed where z is Laurent.
    bool inBarUAllSeeds = false;
    /// Enumeration hit maxSeeds.
    bool partial = false;
};

MembershipReport check_membership(const TorusElement& z, const QuantumSeed& s, int maxSeeds);

/// nu_j(z) >= 1 for the frozen label j.
bool frozen_divides(const QuantumSeed& s, int j, const TorusElement& z);

struct WitnessReport {
    int checked = 0;
    int excluded = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

/// nu_j(a*b) = 0 for sampled a, b with nu_j = 0, and x_j a x_j^{-1} stays in
/// the partially compactified torus.
WitnessReport frozen_is_prime_witness(const QuantumSeed& s, int j, int samples, Rng& rng);

struct HarnessReport {
    int samples = 0;
    int attempts = 0;
    int inA = 0;
    int notDivChecked = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

/// Elements z = a * F^{-1} = U^{-1} * a' with a, a' in the upper cluster
/// algebra, F frozen and U unfrozen monomials, are checked to lie in it; also
/// checks that no frozen variable divides an unfrozen cluster monomial.
HarnessReport intersection_harness(const QuantumSeed& s, int samples, Rng& rng, int maxSeeds = 200);

/// Freezes the unfrozen labels F; variables and Lambda unchanged.
QuantumSeed freeze_vertices(const QuantumSeed& s, const std::vector<int>& F);

/// Removes vertex j; variables are the coordinates of the new own torus.
QuantumSeed delete_vertex(const QuantumSeed& s, int j);

/// b_jk = 0 for every unfrozen k.
bool is_non_essential(const QuantumSeed& s, int j);

/// Drops the terms with m_j > 0 and deletes coordinate j. z is in the
/// reference torus of s; the result is in the reference torus of `deleted`.
/// Throws NonEssentialViolated, NegativeOrder.
TorusElement pi_quotient(const QuantumSeed& s, int j, const TorusElement& z, const QuantumSeed& deleted);
TorusElement pi_quotient(const QuantumSeed& s, int j, const TorusElement& z);

} // namespace qclaw
