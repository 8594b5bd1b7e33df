#pragma once

#include "qclaw/cartan.hpp"
#include "qclaw/exchange_graph.hpp"
#include "qclaw/signed_word.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qclaw {

/// The pair of weights (gamma, delta) labelling a generalized minor.
struct WeightLabel {
    Weight gamma;
    Weight delta;

    std::string key() const;
    friend bool operator==(const WeightLabel&, const WeightLabel&) = default;
};

struct BZSeed {
    CartanData cartan;
    SignedWord word;
    QuantumSeed seed;
    /// Labels by seed position.
    std::vector<WeightLabel> weights;
    WeylWord u;
    WeylWord w;

    const WeightLabel& weight(int label) const { return weights.at(seed.index.position(label)); }
};

/// Throws NotReducedPair, NonIntegerLambda, Incompatible.
BZSeed build_bz_seed(const CartanData& c, const SignedWord& word);

/// Bi-weight of a homogeneous element of the seed's reference torus, computed
/// from the labels of the coordinates. Throws NotHomogeneous.
WeightLabel weight_of(const BZSeed& s, const TorusElement& z);

struct BZFlip {
    BZSeed seed;
    Move move;
};

/// Flip at k: a relabeling when |i_k| != |i_{k+1}|, else mu_k.
BZFlip flip_bz(const BZSeed& s, int k);

/// Exponent vector prod_p x_{j_p}^{-c_pm} of the frozen-weighted term of the
/// flip relation at k, located by the case analysis of the exchange matrix.
IntVector flip_frozen_exponent(const BZSeed& s, int k);

struct QPowerReport {
    int k = 0;
    /// Twice the exponents alpha and beta.
    int alpha2 = 0;
    int beta2 = 0;
    bool relation_holds = false;
    bool frozen_term_matches = false;
    bool pass() const { return relation_holds && frozen_term_matches && alpha2 == -2 && beta2 == 0; }
};

/// Compares x_k(mu_k s) x_k(s) with q^a x_{k[1]} x_{k[-1]} + q^b prod x_j^{-c_pm}
/// in the seed's own torus.
QPowerReport verify_flip_qpowers(const BZSeed& s, int k);

/// Positions k with (i_k, i_{k+1}) = (m, -m).
std::vector<int> admissible_flip_positions(const SignedWord& w);

/// Mutation path (with a final relabeling) from a to b; seeds are matched by
/// exchange matrix, Lambda and weight labels.
std::optional<MutationPath> connect_bz(const BZSeed& a, const BZSeed& b, int maxDepth);

/// apply_path(a, p) equals b in labels, frozen set, B, Lambda and weight labels.
bool bz_path_reaches(const BZSeed& a, const MutationPath& p, const BZSeed& b);

} // namespace qclaw
