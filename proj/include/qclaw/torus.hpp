#pragma once

#include "qclaw/coefficient.hpp"
#include "qclaw/lattice.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace qclaw {

/// The quantization form of a quantum torus: lambda(g, h) = g^T L h.
class TorusContext {
public:
    explicit TorusContext(IntMatrix lambda);
    static std::shared_ptr<const TorusContext> make(IntMatrix lambda);
    static std::shared_ptr<const TorusContext> commutative(Eigen::Index dim);

    Eigen::Index dimension() const { return lambda_.rows(); }
    const IntMatrix& lambda() const { return lambda_; }
    Int pairing(const IntVector& g, const IntVector& h) const;

private:
    IntMatrix lambda_;
};

using ContextPtr = std::shared_ptr<const TorusContext>;

bool same_context(const ContextPtr& a, const ContextPtr& b);

struct TorusTerm {
    LatticeVector exponent;
    Coefficient coeff;
};

/// Finite sum of monomials x^m with Coefficient weights in a quantum torus.
/// Terms are sorted lexicographically by exponent and never zero.
class TorusElement {
public:
    TorusElement() = default;
    explicit TorusElement(ContextPtr ctx);

    static TorusElement zero(ContextPtr ctx) { return TorusElement(std::move(ctx)); }
    static TorusElement one(ContextPtr ctx);
    /// c * x^m
    static TorusElement monomial(ContextPtr ctx, const LatticeVector& m, const Coefficient& c = 1);
    /// Builds from arbitrary terms, merging repeats and dropping zeros.
    static TorusElement from_terms(ContextPtr ctx, std::vector<TorusTerm> terms);

    const ContextPtr& context() const { return ctx_; }
    Eigen::Index dimension() const { return ctx_->dimension(); }
    const std::vector<TorusTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    /// Coefficient of x^m (zero when absent).
    Coefficient coefficient(const LatticeVector& m) const;

    TorusElement bar() const;
    TorusElement scaled(const Coefficient& c) const;
    /// Same terms in another context of equal dimension.
    TorusElement with_context(ContextPtr ctx) const;

    TorusElement& operator+=(const TorusElement& o);
    TorusElement& operator-=(const TorusElement& o);
    TorusElement operator-() const;
    friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
    friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
    /// Star product.
    friend TorusElement operator*(const TorusElement& a, const TorusElement& b);

    /// Equality of terms; contexts must agree.
    friend bool operator==(const TorusElement& a, const TorusElement& b);

    /// Canonical single-line text, used for hashing and deduplication.
    std::string key() const;

private:
    void combine(const TorusElement& o, int sign);

    ContextPtr ctx_;
    std::vector<TorusTerm> terms_;
};

inline TorusElement star_product(const TorusElement& a, const TorusElement& b) { return a * b; }
inline TorusElement bar_element(const TorusElement& a) { return a.bar(); }

/// a^n for n >= 0 under the star product.
TorusElement power(const TorusElement& a, int n);

/// c with d * c = a; throws Error("NotDivisible") when no torus quotient exists.
TorusElement exact_divide(const TorusElement& a, const TorusElement& d);
/// c with c * d = a.
TorusElement exact_divide_right(const TorusElement& a, const TorusElement& d);
std::optional<TorusElement> try_divide(const TorusElement& a, const TorusElement& d);
std::optional<TorusElement> try_divide_right(const TorusElement& a, const TorusElement& d);

/// nu_j: minimum of m_j over the support. Throws ZeroElement on zero.
Int vanishing_order(const TorusElement& z, int pos);
bool in_compactified_torus(const TorusElement& z, const std::vector<int>& frozenPositions);

/// Specialization q^{1/2} -> 1 into the commutative torus.
TorusElement semiclassical_limit(const TorusElement& z);

/// Dominance order m' <= m iff m' - m lies in B N^+, for B of full column rank.
class DominanceOrder {
public:
    explicit DominanceOrder(const IntMatrix& btilde);

    const IntMatrix& matrix() const { return b_; }
    /// n with B n = diff when it exists over the integers (any signs).
    std::optional<IntVector> cone_coordinates(const IntVector& diff) const;
    bool leq(const LatticeVector& lower, const LatticeVector& upper) const;
    bool less(const LatticeVector& lower, const LatticeVector& upper) const;

private:
    IntMatrix b_;
    std::vector<Eigen::Index> rows_;
    Matrix<Rational> inv_;
};

bool dominance_leq(const LatticeVector& m1, const LatticeVector& m2, const IntMatrix& btilde);

struct Degree {
    LatticeVector degree;
    bool pointed = false;
};

/// Unique maximal degree; throws NoUniqueMaxDegree or ZeroElement.
Degree degree_and_pointedness(const TorusElement& z, const DominanceOrder& order);
/// Rescales so the leading coefficient is 1; throws LeadingCoefficientNotUnit.
TorusElement normalize(const TorusElement& z, const DominanceOrder& order);

/// Support elements not strictly below another support element.
std::vector<LatticeVector> maximal_degrees(const TorusElement& z, const DominanceOrder& order);

} // namespace qclaw
