#include "qclaw/cartan.hpp"

namespace qclaw {

CartanData CartanData::type_A(int n) {
    CartanData c{IntMatrix::Zero(n, n), IntVector::Ones(n)};
    for (int i = 0; i < n; ++i) {
        c.C(i, i) = 2;
        if (i + 1 < n) c.C(i, i + 1) = c.C(i + 1, i) = -1;
    }
    return c;
}

CartanData CartanData::preset(std::string_view name) {
    if (name.size() == 2 && name[0] == 'A' && name[1] >= '1' && name[1] <= '9') return type_A(name[1] - '0');
    CartanData c{IntMatrix(2, 2), IntVector(2)};
    if (name == "B2") {
        c.C << 2, -1, -2, 2;
        c.d << 2, 1;
    } else if (name == "C2") {
        c.C << 2, -2, -1, 2;
        c.d << 1, 2;
    } else if (name == "G2") {
        c.C << 2, -1, -3, 2;
        c.d << 3, 1;
    } else {
        throw Error("UnknownCartanType", std::string(name));
    }
    return c;
}

void CartanData::validate() const {
    const int r = rank();
    if (C.cols() != r || d.size() != r) throw Error("InvalidCartan", "shape");
    for (int i = 0; i < r; ++i) {
        if (C(i, i) != 2) throw Error("InvalidCartan", "diagonal must be 2");
        if (d(i) <= 0) throw Error("InvalidCartan", "symmetrizers must be positive");
        for (int j = 0; j < r; ++j) {
            if (i != j && C(i, j) > 0) throw Error("InvalidCartan", "positive off-diagonal entry");
            if (d(i) * C(i, j) != d(j) * C(j, i)) throw Error("InvalidCartan", "not symmetrized by d");
        }
    }
    if (!inverse_exact(cast_matrix<Rational>(C))) throw Error("SingularCartan", "not of finite type");
}

Weight fundamental_weight(const CartanData& c, int i) {
    return unit_vector(c.rank(), i - 1);
}

Weight simple_root(const CartanData& c, int i) {
    return c.C.col(i - 1);
}

Matrix<Rational> gram_matrix(const CartanData& c) {
    auto inv = inverse_exact(cast_matrix<Rational>(c.C));
    if (!inv) throw Error("SingularCartan", "Cartan matrix is not invertible");
    Matrix<Rational> g(c.rank(), c.rank());
    for (int i = 0; i < c.rank(); ++i)
        for (int j = 0; j < c.rank(); ++j) g(i, j) = Rational(c.d(i)) * (*inv)(i, j);
    return g;
}

Rational weight_pairing(const CartanData& c, const Weight& a, const Weight& b) {
    Matrix<Rational> g = gram_matrix(c);
    Rational s = 0;
    for (int i = 0; i < c.rank(); ++i)
        for (int j = 0; j < c.rank(); ++j)
            if (a(i) != 0 && b(j) != 0) s += g(i, j) * a(i) * b(j);
    return s;
}

Weight reflect(const CartanData& c, int i, const Weight& lam) {
    return lam - lam(i - 1) * simple_root(c, i);
}

Weight act_by_word(const CartanData& c, const WeylWord& w, const Weight& lam) {
    Weight r = lam;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = reflect(c, *it, r);
    return r;
}

std::vector<Weight> roots_of_word(const CartanData& c, const WeylWord& w) {
    std::vector<Weight> out;
    for (size_t k = 0; k < w.size(); ++k) {
        WeylWord prefix(w.begin(), w.begin() + static_cast<long>(k));
        out.push_back(act_by_word(c, prefix, simple_root(c, w[k])));
    }
    return out;
}

Vector<Rational> root_coordinates(const CartanData& c, const Weight& lam) {
    Vector<Rational> rhs(c.rank());
    for (int i = 0; i < c.rank(); ++i) rhs(i) = Rational(lam(i));
    auto x = solve_exact(cast_matrix<Rational>(c.C), rhs);
    if (!x) throw Error("SingularCartan", "Cartan matrix is not invertible");
    return *x;
}

bool is_positive_root(const CartanData& c, const Weight& beta) {
    auto a = root_coordinates(c, beta);
    bool nonzero = false;
    for (int i = 0; i < a.size(); ++i) {
        if (a(i) < 0) return false;
        nonzero = nonzero || a(i) != 0;
    }
    return nonzero;
}

bool is_reduced(const CartanData& c, const WeylWord& w) {
    for (int letter : w)
        if (letter < 1 || letter > c.rank()) throw Error("LetterOutOfRange", std::to_string(letter));
    for (const auto& beta : roots_of_word(c, w))
        if (!is_positive_root(c, beta)) return false;
    return true;
}

Rational height(const CartanData& c, const Weight& beta) {
    auto a = root_coordinates(c, beta);
    Rational s = 0;
    for (int i = 0; i < a.size(); ++i) s += a(i);
    return s;
}

} // namespace qclaw
