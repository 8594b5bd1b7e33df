#pragma once

#include "qclaw/torus.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qclaw {

/// A classical or quantum seed.
///
/// `B` has rows indexed by all positions of `index` and columns by the
/// unfrozen positions in increasing order. `vars[p]` is the cluster variable
/// at position p, written in a fixed reference torus shared by all variables.
/// Vertices are addressed by label in the seed-level API.
struct QuantumSeed {
    IndexSet index;
    IntMatrix B;
    std::optional<IntMatrix> Lambda;
    std::vector<TorusElement> vars;
    std::string name;

    int size() const { return index.size(); }
    bool is_quantum() const { return Lambda.has_value(); }
    const ContextPtr& reference() const { return vars.at(0).context(); }
    const TorusElement& var(int label) const { return vars.at(index.position(label)); }
    /// b_{ik} for vertex labels i and unfrozen k.
    Int b(int i, int k) const;
    /// Lambda, or zero for classical seeds.
    IntMatrix lambda_or_zero() const;

    friend bool operator==(const QuantumSeed& a, const QuantumSeed& b);
};

/// Seed whose variables are the coordinate monomials x^{f_i} of its own torus.
QuantumSeed make_seed(IndexSet index, IntMatrix B, std::optional<IntMatrix> Lambda, std::string name = {});

/// The same seed data with variables reset to coordinates of its own torus.
QuantumSeed with_own_torus(const QuantumSeed& s);

/// Checks shapes, skew-symmetrizability, compatibility and variable contexts.
void validate_seed(const QuantumSeed& s);

/// Positive integers d with d_i b_ik = -d_k b_ki on the unfrozen block.
/// Throws NotSkewSymmetrizable.
IntVector skew_symmetrizer(const IndexSet& index, const IntMatrix& B);

/// Returns d' with sum_j L_ij b_jk = -delta_ik d'_k; throws Incompatible.
IntVector check_compatible_pair(const IndexSet& index, const IntMatrix& B, const IntMatrix& L);

/// A skew-symmetric L compatible with B, if one can be found.
std::optional<IntMatrix> find_compatible_lambda(const IndexSet& index, const IntMatrix& B);

IntMatrix mutate_matrix(const IndexSet& index, const IntMatrix& B, int k);
LatticeVector tropical_phi(const IndexSet& index, const LatticeVector& m, int k, const IntMatrix& B);
IntMatrix mutate_lambda(const IndexSet& index, const IntMatrix& L, const IntMatrix& B, int k);

/// The normalized monomial X^v of the seed's own lattice (v >= 0),
/// expressed in the reference torus.
TorusElement seed_monomial(const QuantumSeed& s, const IntVector& v);

/// Exponent vectors v1 = sum_j [-b_jk]_+ f_j and v2 = sum_i [b_ik]_+ f_i.
std::pair<IntVector, IntVector> exchange_exponents(const QuantumSeed& s, int k);

/// mu_k; throws NotUnfrozen, or NotLaurent when the exchange division fails.
QuantumSeed mutate_seed(const QuantumSeed& s, int k);

/// Label permutation sigma: vertex i of s becomes vertex sigma(i).
using Permutation = std::map<int, int>;

QuantumSeed permute_seed(const QuantumSeed& s, const Permutation& sigma);
/// Like permute_seed, but the frozen set is transported along sigma.
QuantumSeed relabel_seed(const QuantumSeed& s, const Permutation& sigma);
QuantumSeed opposite_seed(const QuantumSeed& s);

} // namespace qclaw
