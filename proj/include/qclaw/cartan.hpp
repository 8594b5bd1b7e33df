#pragma once

#include "qclaw/lattice.hpp"

#include <string_view>
#include <vector>

namespace qclaw {

/// Finite-type Cartan matrix c_ij = <alpha_i^vee, alpha_j> with symmetrizers d_i.
struct CartanData {
    IntMatrix C;
    IntVector d;

    int rank() const { return static_cast<int>(C.rows()); }

    /// "A1".."A9", "B2", "C2", "G2".
    static CartanData preset(std::string_view name);
    static CartanData type_A(int n);
    void validate() const;

    friend bool operator==(const CartanData&, const CartanData&) = default;
};

/// Weights in fundamental-weight coordinates.
using Weight = IntVector;
/// Letters in [1, r].
using WeylWord = std::vector<int>;

Weight fundamental_weight(const CartanData& c, int i);
Weight simple_root(const CartanData& c, int i);

/// Gram matrix G_ij = <varpi_i, varpi_j>, the solution of G C = D.
Matrix<Rational> gram_matrix(const CartanData& c);
Rational weight_pairing(const CartanData& c, const Weight& a, const Weight& b);

/// s_i(lambda) = lambda - lambda_i alpha_i.
Weight reflect(const CartanData& c, int i, const Weight& lam);
/// s_{k_1}(s_{k_2}(...(lambda))).
Weight act_by_word(const CartanData& c, const WeylWord& w, const Weight& lam);

/// beta_k = s_{i_1} ... s_{i_{k-1}} alpha_{i_k}.
std::vector<Weight> roots_of_word(const CartanData& c, const WeylWord& w);
/// Coordinates in the basis of simple roots.
Vector<Rational> root_coordinates(const CartanData& c, const Weight& lam);
bool is_positive_root(const CartanData& c, const Weight& beta);
bool is_reduced(const CartanData& c, const WeylWord& w);

/// <rho^vee, beta> for a root beta.
Rational height(const CartanData& c, const Weight& beta);

} // namespace qclaw
