#include "qclaw/seed.hpp"

#include <numeric>
#include <set>

namespace qclaw {

Int QuantumSeed::b(int i, int k) const {
    int c = index.column(index.position(k));
    if (c < 0) throw Error("NotUnfrozen", std::to_string(k));
    return B(index.position(i), c);
}

IntMatrix QuantumSeed::lambda_or_zero() const {
    return Lambda ? *Lambda : IntMatrix::Zero(size(), size());
}

bool operator==(const QuantumSeed& a, const QuantumSeed& b) {
    return a.index == b.index && a.B == b.B && a.Lambda == b.Lambda && a.vars == b.vars;
}

QuantumSeed make_seed(IndexSet index, IntMatrix B, std::optional<IntMatrix> Lambda, std::string name) {
    QuantumSeed s{std::move(index), std::move(B), std::move(Lambda), {}, std::move(name)};
    const int n = s.size();
    auto ctx = TorusContext::make(s.lambda_or_zero());
    for (int p = 0; p < n; ++p) s.vars.push_back(TorusElement::monomial(ctx, unit_vector(n, p)));
    validate_seed(s);
    return s;
}

QuantumSeed with_own_torus(const QuantumSeed& s) {
    return make_seed(s.index, s.B, s.Lambda, s.name);
}

IntVector skew_symmetrizer(const IndexSet& index, const IntMatrix& B) {
    const auto& uf = index.unfrozen();
    const int m = static_cast<int>(uf.size());
    std::vector<Rational> d(m, Rational(0));
    for (int root = 0; root < m; ++root) {
        if (d[root] != 0) continue;
        d[root] = 1;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int k = 0; k < m; ++k) {
                Int bik = B(uf[i], k), bki = B(uf[k], i);
                if (bik == 0 && bki == 0) continue;
                if (bik == 0 || bki == 0 || (bik > 0) == (bki > 0))
                    throw Error("NotSkewSymmetrizable", "sign pattern of the unfrozen block");
                Rational dk = -d[i] * bik / bki;
                if (d[k] == 0) {
                    d[k] = dk;
                    stack.push_back(k);
                } else if (d[k] != dk) {
                    throw Error("NotSkewSymmetrizable", "inconsistent symmetrizer");
                }
            }
        }
    }
    for (int k = 0; k < m; ++k)
        if (B(uf[k], k) != 0) throw Error("NotSkewSymmetrizable", "nonzero diagonal entry");
    BigInt l = 1;
    for (const auto& x : d) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x));
    IntVector out(m);
    Int g = 0;
    for (int k = 0; k < m; ++k) {
        out(k) = static_cast<Int>(boost::multiprecision::numerator(Rational(d[k] * l)));
        g = std::gcd(g, out(k));
    }
    if (g > 1) out /= g;
    return out;
}

IntVector check_compatible_pair(const IndexSet& index, const IntMatrix& B, const IntMatrix& L) {
    const int n = index.size();
    if (L.rows() != n || L.cols() != n || B.rows() != n ||
        B.cols() != static_cast<Eigen::Index>(index.unfrozen().size()))
        throw Error("DimensionMismatch", "compatible pair shapes");
    if (!is_skew_symmetric(L)) throw Error("Incompatible", "Lambda is not skew-symmetric");
    IntMatrix P = L * B;
    IntVector d(B.cols());
    for (Eigen::Index c = 0; c < B.cols(); ++c) {
        int p = index.unfrozen()[c];
        for (int i = 0; i < n; ++i)
            if (i != p && P(i, c) != 0)
                throw Error("Incompatible", "off-diagonal entry at row " + std::to_string(index.label(i)));
        d(c) = -P(p, c);
        if (d(c) <= 0) throw Error("Incompatible", "non-positive d' at " + std::to_string(index.label(p)));
    }
    return d;
}

std::optional<IntMatrix> find_compatible_lambda(const IndexSet& index, const IntMatrix& B) {
    const int n = index.size();
    const auto& uf = index.unfrozen();
    const int m = static_cast<int>(uf.size());
    IntVector sym;
    try {
        sym = skew_symmetrizer(index, B);
    } catch (const Error&) {
        return std::nullopt;
    }
    std::vector<std::pair<int, int>> vars;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) vars.emplace_back(i, j);
    Matrix<Rational> A = Matrix<Rational>::Zero(n * m, static_cast<Eigen::Index>(vars.size()));
    Vector<Rational> rhs = Vector<Rational>::Zero(n * m);
    for (size_t v = 0; v < vars.size(); ++v) {
        auto [i, j] = vars[v];
        for (int c = 0; c < m; ++c) {
            A(i * m + c, v) += B(j, c);
            A(j * m + c, v) -= B(i, c);
        }
    }
    for (int c = 0; c < m; ++c) rhs(uf[c] * m + c) = -Rational(sym(c));
    auto sol = solve_exact(A, rhs);
    if (!sol) return std::nullopt;
    BigInt l = 1;
    for (Eigen::Index v = 0; v < sol->size(); ++v)
        l = boost::multiprecision::lcm(l, boost::multiprecision::denominator((*sol)(v)));
    IntMatrix L = IntMatrix::Zero(n, n);
    for (size_t v = 0; v < vars.size(); ++v) {
        auto [i, j] = vars[v];
        Int x = static_cast<Int>(boost::multiprecision::numerator(Rational((*sol)(v) * l)));
        L(i, j) = x;
        L(j, i) = -x;
    }
    check_compatible_pair(index, B, L);
    return L;
}

namespace {

int unfrozen_column(const IndexSet& index, int k) {
    int c = index.column(index.position(k));
    if (c < 0) throw Error("NotUnfrozen", std::to_string(k));
    return c;
}

} // namespace

IntMatrix mutate_matrix(const IndexSet& index, const IntMatrix& B, int k) {
    const int kc = unfrozen_column(index, k);
    const int kp = index.position(k);
    IntMatrix out = B;
    for (Eigen::Index i = 0; i < B.rows(); ++i)
        for (Eigen::Index j = 0; j < B.cols(); ++j) {
            if (i == kp || j == kc) {
                out(i, j) = -B(i, j);
            } else {
                out(i, j) = B(i, j) + pos(B(i, kc)) * pos(B(kp, j)) - pos(-B(i, kc)) * pos(-B(kp, j));
            }
        }
    return out;
}

LatticeVector tropical_phi(const IndexSet& index, const LatticeVector& m, int k, const IntMatrix& B) {
    const int kc = unfrozen_column(index, k);
    const int kp = index.position(k);
    LatticeVector out = m;
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        if (i == kp) {
            out(i) = -m(kp);
        } else {
            out(i) = m(i) + pos(B(i, kc)) * pos(m(kp)) - pos(-B(i, kc)) * pos(-m(kp));
        }
    }
    return out;
}

IntMatrix mutate_lambda(const IndexSet& index, const IntMatrix& L, const IntMatrix& B, int k) {
    IntMatrix Bp = mutate_matrix(index, B, k);
    IntMatrix E = IntMatrix::Identity(L.rows(), L.cols());
    for (Eigen::Index i = 0; i < L.rows(); ++i) E.col(i) = tropical_phi(index, unit_vector(L.rows(), i), k, Bp);
    return E.transpose() * L * E;
}

TorusElement seed_monomial(const QuantumSeed& s, const IntVector& v) {
    const int n = s.size();
    TorusElement r = TorusElement::one(s.reference());
    Int twist = 0;
    IntMatrix L = s.lambda_or_zero();
    for (int i = 0; i < n; ++i) {
        if (v(i) < 0) throw Error("NegativeExponent", "seed monomials need v >= 0");
        for (int j = i + 1; j < n; ++j) twist += L(i, j) * v(i) * v(j);
        if (v(i) > 0) r = r * power(s.vars[i], static_cast<int>(v(i)));
    }
    return r.scaled(qpow(static_cast<int>(-twist)));
}

std::pair<IntVector, IntVector> exchange_exponents(const QuantumSeed& s, int k) {
    const int kc = unfrozen_column(s.index, k);
    const int n = s.size();
    IntVector v1 = IntVector::Zero(n), v2 = IntVector::Zero(n);
    for (int i = 0; i < n; ++i) {
        v1(i) = pos(-s.B(i, kc));
        v2(i) = pos(s.B(i, kc));
    }
    return {v1, v2};
}

QuantumSeed mutate_seed(const QuantumSeed& s, int k) {
    const int kp = s.index.position(k);
    auto [v1, v2] = exchange_exponents(s, k);
    IntMatrix L = s.lambda_or_zero();
    IntVector fk = unit_vector(s.size(), kp);
    TorusElement numer = seed_monomial(s, v1).scaled(qpow(static_cast<int>(fk.dot(L * v1))));
    numer += seed_monomial(s, v2).scaled(qpow(static_cast<int>(fk.dot(L * v2))));
    auto xk = try_divide(numer, s.vars[kp]);
    if (!xk) throw Error("NotLaurent", "exchange division failed at vertex " + std::to_string(k));
    QuantumSeed out = s;
    out.B = mutate_matrix(s.index, s.B, k);
    if (s.Lambda) out.Lambda = mutate_lambda(s.index, *s.Lambda, s.B, k);
    out.vars[kp] = std::move(*xk);
    return out;
}

QuantumSeed relabel_seed(const QuantumSeed& s, const Permutation& sigma) {
    const int n = s.size();
    std::vector<int> to(n);
    std::set<int> seen;
    std::vector<int> frozen;
    for (int p = 0; p < n; ++p) {
        int l = s.index.label(p);
        auto it = sigma.find(l);
        int img = it == sigma.end() ? l : it->second;
        to[p] = s.index.position(img);
        if (!seen.insert(img).second) throw Error("NotAPermutation", "repeated image " + std::to_string(img));
        if (s.index.is_frozen(p)) frozen.push_back(img);
    }
    QuantumSeed out = s;
    out.index = IndexSet(s.index.labels(), frozen);
    out.B = IntMatrix::Zero(n, s.B.cols());
    for (int i = 0; i < n; ++i) {
        out.vars[to[i]] = s.vars[i];
        for (int j : s.index.unfrozen()) out.B(to[i], out.index.column(to[j])) = s.B(i, s.index.column(j));
        if (s.Lambda)
            for (int j = 0; j < n; ++j) (*out.Lambda)(to[i], to[j]) = (*s.Lambda)(i, j);
    }
    return out;
}

QuantumSeed permute_seed(const QuantumSeed& s, const Permutation& sigma) {
    for (const auto& [from, img] : sigma)
        if (s.index.is_frozen(s.index.position(from)) != s.index.is_frozen(s.index.position(img)))
            throw Error("PermutationMixesFrozen", std::to_string(from) + " -> " + std::to_string(img));
    return relabel_seed(s, sigma);
}

QuantumSeed opposite_seed(const QuantumSeed& s) {
    QuantumSeed out = s;
    out.B = -s.B;
    if (s.Lambda) out.Lambda = IntMatrix(-*s.Lambda);
    return out;
}

void validate_seed(const QuantumSeed& s) {
    const int n = s.size();
    if (s.B.rows() != n || s.B.cols() != static_cast<Eigen::Index>(s.index.unfrozen().size()))
        throw Error("DimensionMismatch", "exchange matrix shape");
    skew_symmetrizer(s.index, s.B);
    if (s.Lambda) check_compatible_pair(s.index, s.B, *s.Lambda);
    if (static_cast<int>(s.vars.size()) != n) throw Error("DimensionMismatch", "number of variables");
    for (const auto& v : s.vars)
        if (!v.context() || !same_context(v.context(), s.vars[0].context()))
            throw Error("ContextMismatch", "variables must share a reference torus");
}

} // namespace qclaw
