#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qclaw {

using Int = std::int64_t;
using Rational = boost::multiprecision::cpp_rational;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Int>;
using IntVector = Vector<Int>;
using LatticeVector = IntVector;

/// Base class of all library errors; `kind()` names the error condition.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

inline Int pos(Int x) { return x > 0 ? x : 0; }

IntVector unit_vector(Eigen::Index n, Eigen::Index i);

bool lex_less(const IntVector& a, const IntVector& b);

struct LexLess {
    bool operator()(const IntVector& a, const IntVector& b) const { return lex_less(a, b); }
};

bool is_skew_symmetric(const IntMatrix& m);

std::string vector_key(const IntVector& v);

/// Vertex labels with a frozen/unfrozen partition.
///
/// Positions are 0-based indices into `labels()`. Exchange-matrix columns are
/// the unfrozen positions in increasing order.
class IndexSet {
public:
    IndexSet() = default;
    IndexSet(std::vector<int> labels, const std::vector<int>& frozenLabels);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<int>& labels() const { return labels_; }
    int label(int pos) const { return labels_.at(pos); }
    int position(int label) const;
    bool contains(int label) const;
    bool is_frozen(int pos) const { return frozen_.at(pos); }

    const std::vector<int>& unfrozen() const { return unfrozen_; }
    const std::vector<int>& frozen_positions() const { return frozenPos_; }
    std::vector<int> frozen_labels() const;
    std::vector<int> unfrozen_labels() const;

    /// Column of an unfrozen position, -1 for frozen ones.
    int column(int pos) const { return column_.at(pos); }

    friend bool operator==(const IndexSet& a, const IndexSet& b) {
        return a.labels_ == b.labels_ && a.frozen_ == b.frozen_;
    }

private:
    std::vector<int> labels_;
    std::vector<bool> frozen_;
    std::vector<int> unfrozen_;
    std::vector<int> frozenPos_;
    std::vector<int> column_;
};

template <class Scalar>
Matrix<Scalar> cast_matrix(const IntMatrix& m) {
    Matrix<Scalar> r(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Scalar(m(i, j));
    return r;
}

/// Reduced row echelon form over a field, computed exactly.
template <class Scalar>
struct RowEchelon {
    Matrix<Scalar> rref;
    std::vector<Eigen::Index> pivots;

    explicit RowEchelon(Matrix<Scalar> a) : rref(std::move(a)) {
        Eigen::Index row = 0;
        for (Eigen::Index col = 0; col < rref.cols() && row < rref.rows(); ++col) {
            Eigen::Index p = row;
            while (p < rref.rows() && rref(p, col) == Scalar(0)) ++p;
            if (p == rref.rows()) continue;
            rref.row(p).swap(rref.row(row));
            Scalar inv = Scalar(1) / rref(row, col);
            for (Eigen::Index j = 0; j < rref.cols(); ++j) rref(row, j) *= inv;
            for (Eigen::Index i = 0; i < rref.rows(); ++i) {
                if (i == row || rref(i, col) == Scalar(0)) continue;
                Scalar f = rref(i, col);
                for (Eigen::Index j = 0; j < rref.cols(); ++j) rref(i, j) -= f * rref(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
    }

    Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

template <class Scalar>
Eigen::Index exact_rank(const Matrix<Scalar>& a) {
    return RowEchelon<Scalar>(a).rank();
}

/// One solution of a x = b with free variables set to zero, or nullopt.
template <class Scalar>
std::optional<Vector<Scalar>> solve_exact(const Matrix<Scalar>& a, const Vector<Scalar>& b) {
    Matrix<Scalar> aug(a.rows(), a.cols() + 1);
    aug.leftCols(a.cols()) = a;
    aug.col(a.cols()) = b;
    RowEchelon<Scalar> e(aug);
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
    Vector<Scalar> x = Vector<Scalar>::Zero(a.cols());
    for (Eigen::Index r = 0; r < e.rank(); ++r) x(e.pivots[r]) = e.rref(r, a.cols());
    return x;
}

/// Columns span the right kernel of a.
template <class Scalar>
Matrix<Scalar> kernel_basis(const Matrix<Scalar>& a) {
    RowEchelon<Scalar> e(a);
    std::vector<bool> isPivot(a.cols(), false);
    for (auto p : e.pivots) isPivot[p] = true;
    Matrix<Scalar> k = Matrix<Scalar>::Zero(a.cols(), a.cols() - e.rank());
    Eigen::Index c = 0;
    for (Eigen::Index f = 0; f < a.cols(); ++f) {
        if (isPivot[f]) continue;
        k(f, c) = Scalar(1);
        for (Eigen::Index r = 0; r < e.rank(); ++r) k(e.pivots[r], c) = -e.rref(r, f);
        ++c;
    }
    return k;
}

/// Inverse of a square matrix over a field; nullopt when singular.
template <class Scalar>
std::optional<Matrix<Scalar>> inverse_exact(const Matrix<Scalar>& a) {
    const Eigen::Index n = a.rows();
    Matrix<Scalar> aug(n, 2 * n);
    aug.leftCols(n) = a;
    aug.rightCols(n) = Matrix<Scalar>::Identity(n, n);
    RowEchelon<Scalar> e(aug);
    if (e.rank() < n || e.pivots[n - 1] >= n) return std::nullopt;
    Matrix<Scalar> inv(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) inv(i, j) = e.rref(i, n + j);
    return inv;
}

/// Rational entry as an integer; nullopt when not integral.
std::optional<Int> to_integer(const Rational& r);

} // namespace qclaw
