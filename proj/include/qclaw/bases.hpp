#pragma once

#include "qclaw/cartan.hpp"
#include "qclaw/seed.hpp"
#include "qclaw/signed_word.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qclaw {

/// The word (zeta^op, eta) with all letters positive.
SignedWord unshuffled_word(int rank, const WeylWord& zeta, const WeylWord& eta);

/// The skew form nu on Z^{[1,l]} built from the roots of zeta and eta.
IntMatrix nu_matrix(const CartanData& c, const WeylWord& zeta, const WeylWord& eta);
/// Lambda_kj = nu(f_[k^min,k], f_[j^min,j]).
IntMatrix gy_lambda(const CartanData& c, const WeylWord& zeta, const WeylWord& eta);

/// The seed on [1,l] with exchange matrix Bdot(iota) and Lambda = -gy_lambda.
QuantumSeed unshuffled_seed(const CartanData& c, const WeylWord& zeta, const WeylWord& eta);

/// Interval variables W_[j,k], keyed by (j, k).
struct IntervalTable {
    SignedWord iota;
    QuantumSeed seed;
    std::map<std::pair<int, int>, TorusElement> entries;
    std::map<std::pair<int, int>, LatticeVector> degrees;

    int length() const { return iota.length(); }
    /// W_k = W_[k,k]
    const TorusElement& W(int k) const { return entries.at({k, k}); }
};

/// All admissible (j, k): j <= k with |i_j| = |i_k|.
std::vector<std::pair<int, int>> interval_pairs(const SignedWord& iota);
/// f_k - f_{j[-1]}, with f_{j[-1]} = 0 when j = j^min.
LatticeVector interval_degree(const SignedWord& iota, int j, int k);

/// Breadth-first search for cluster variables of the interval degrees.
/// The seed's variables must be the coordinates of its own torus.
/// Throws IncompleteTable.
IntervalTable find_interval_variables(const QuantumSeed& s, const SignedWord& iota, int maxDepth);

using MultiIndex = std::vector<int>;
using StandardExpansion = std::map<MultiIndex, Coefficient>;

enum class Order { Lex, Rev };

bool lex_less(const MultiIndex& a, const MultiIndex& b);
/// a <_rev b iff a^op <_lex b^op.
bool rev_less(const MultiIndex& a, const MultiIndex& b);
bool order_less(Order o, const MultiIndex& a, const MultiIndex& b);

struct StraighteningReport {
    int k = 0;
    int j = 0;
    TorusElement defect;
    StandardExpansion expansion;
    bool supported = false;
};

/// Standard monomials M(c), the KL basis and expansions for one interval table.
class StandardBasis {
public:
    explicit StandardBasis(IntervalTable table);

    const IntervalTable& table() const { return table_; }
    const DominanceOrder& order() const { return order_; }
    int length() const { return table_.length(); }

    /// gamma_k = deg W_k.
    const LatticeVector& gamma(int k) const { return gamma_.at(k - 1); }
    LatticeVector degree_of(const MultiIndex& c) const;
    /// c with sum c_j gamma_j = m; nullopt when some c_j < 0.
    std::optional<MultiIndex> multi_index_of(const LatticeVector& m) const;

    /// [W_1^{c_1} * ... * W_l^{c_l}]
    const TorusElement& monomial(const MultiIndex& c);
    StandardExpansion expand(const TorusElement& z);
    TorusElement synthesize(const StandardExpansion& e);

    StraighteningReport straightening(int k, int j);

    /// The KL element; unitriangularity is checked against `o`.
    /// Throws NonTerminating when more than `budget` elements are needed.
    const TorusElement& kl(const MultiIndex& c, Order o = Order::Lex, int budget = 10000);

private:
    const TorusElement& kl_element(const MultiIndex& c, int budget);

    IntervalTable table_;
    DominanceOrder order_;
    std::vector<LatticeVector> gamma_;
    std::map<MultiIndex, TorusElement> monomials_;
    std::map<MultiIndex, TorusElement> kl_;
};

inline TorusElement standard_monomial(StandardBasis& b, const MultiIndex& c) { return b.monomial(c); }
inline StandardExpansion expand_in_standard_basis(StandardBasis& b, const TorusElement& z) { return b.expand(z); }
inline StraighteningReport verify_straightening(StandardBasis& b, int k, int j) { return b.straightening(k, j); }
inline TorusElement kl_basis_element(StandardBasis& b, const MultiIndex& c, Order o) { return b.kl(c, o); }

/// All c in N^l with |c| <= total.
std::vector<MultiIndex> multi_indices_up_to(int length, int total);

struct TriangularReport {
    int elements = 0;
    int products_checked = 0;
    int products_skipped = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

/// Bar-invariance, pointedness with distinct degrees, and the unitriangular
/// decomposition of [x_i * C_m] within the sample. Products whose expansion
/// leaves the sample are counted as skipped.
TriangularReport check_triangular_axioms(const QuantumSeed& s, const std::vector<TorusElement>& sample);

} // namespace qclaw
