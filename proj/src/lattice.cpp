#include "qclaw/lattice.hpp"

#include <algorithm>

namespace qclaw {

IntVector unit_vector(Eigen::Index n, Eigen::Index i) {
    IntVector v = IntVector::Zero(n);
    v(i) = 1;
    return v;
}

bool lex_less(const IntVector& a, const IntVector& b) {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

bool is_skew_symmetric(const IntMatrix& m) {
    return m.rows() == m.cols() && m == -m.transpose();
}

std::string vector_key(const IntVector& v) {
    std::string s;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v(i));
    }
    return s;
}

IndexSet::IndexSet(std::vector<int> labels, const std::vector<int>& frozenLabels)
    : labels_(std::move(labels)), frozen_(labels_.size(), false), column_(labels_.size(), -1) {
    for (size_t i = 0; i < labels_.size(); ++i)
        for (size_t j = i + 1; j < labels_.size(); ++j)
            if (labels_[i] == labels_[j]) throw Error("DuplicateLabel", std::to_string(labels_[i]));
    for (int f : frozenLabels) frozen_[position(f)] = true;
    for (int p = 0; p < size(); ++p) {
        if (frozen_[p]) {
            frozenPos_.push_back(p);
        } else {
            column_[p] = static_cast<int>(unfrozen_.size());
            unfrozen_.push_back(p);
        }
    }
}

int IndexSet::position(int label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw Error("UnknownVertex", std::to_string(label));
    return static_cast<int>(it - labels_.begin());
}

bool IndexSet::contains(int label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::vector<int> IndexSet::frozen_labels() const {
    std::vector<int> r;
    for (int p : frozenPos_) r.push_back(labels_[p]);
    return r;
}

std::vector<int> IndexSet::unfrozen_labels() const {
    std::vector<int> r;
    for (int p : unfrozen_) r.push_back(labels_[p]);
    return r;
}

std::optional<Int> to_integer(const Rational& r) {
    if (boost::multiprecision::denominator(r) != 1) return std::nullopt;
    return static_cast<Int>(boost::multiprecision::numerator(r));
}

} // namespace qclaw
