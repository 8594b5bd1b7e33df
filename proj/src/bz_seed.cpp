#include "qclaw/bz_seed.hpp"

#include <algorithm>

namespace qclaw {

std::string WeightLabel::key() const {
    return vector_key(gamma) + '|' + vector_key(delta);
}

namespace {

WeylWord reversed(WeylWord w) {
    std::reverse(w.begin(), w.end());
    return w;
}

/// (u_{<=k} varpi, w^{-1}_{>k} varpi) for k in [1,l].
WeightLabel label_at(const CartanData& c, const SignedWord& word, int k, const Weight& lam) {
    WeylWord u, winvTail;
    for (int t = 1; t <= word.length(); ++t) {
        int a = word.letter(t);
        if (t <= k && a < 0) u.push_back(-a);
        if (t > k && a > 0) winvTail.push_back(a);
    }
    return {act_by_word(c, u, lam), act_by_word(c, reversed(winvTail), lam)};
}

} // namespace

BZSeed build_bz_seed(const CartanData& c, const SignedWord& word) {
    c.validate();
    if (c.rank() != word.rank()) throw Error("RankMismatch", "Cartan rank differs from word rank");
    BZSeed s{c, word, {}, {}, word.negative_subword(), word.positive_subword()};
    if (!is_reduced(c, s.u) || !is_reduced(c, s.w))
        throw Error("NotReducedPair", "signed word " + word.to_string());
    const IndexSet index = word_index(word, false);
    const WeylWord winv = reversed(s.w);
    for (int k : index.labels()) {
        Weight lam = fundamental_weight(c, word.abs_letter(k));
        if (k < 0) {
            s.weights.push_back({lam, act_by_word(c, winv, lam)});
            continue;
        }
        WeightLabel l = label_at(c, word, k, lam);
        WeylWord wle;
        for (int t = 1; t <= k; ++t)
            if (word.letter(t) > 0) wle.push_back(word.letter(t));
        if (act_by_word(c, winv, act_by_word(c, wle, lam)) != l.delta)
            throw Error("NotReducedPair", "delta conventions disagree at " + std::to_string(k));
        s.weights.push_back(std::move(l));
    }
    const int n = index.size();
    Matrix<Rational> g = gram_matrix(c);
    auto pair = [&](const Weight& a, const Weight& b) {
        Rational r = 0;
        for (int i = 0; i < c.rank(); ++i)
            for (int j = 0; j < c.rank(); ++j)
                if (a(i) != 0 && b(j) != 0) r += g(i, j) * a(i) * b(j);
        return r;
    };
    IntMatrix L = IntMatrix::Zero(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < a; ++b) {
            Rational v = pair(s.weights[a].gamma, s.weights[b].gamma) - pair(s.weights[a].delta, s.weights[b].delta);
            auto iv = to_integer(v);
            if (!iv)
                throw Error("NonIntegerLambda",
                            "entry " + std::to_string(index.label(a)) + "," + std::to_string(index.label(b)));
            L(a, b) = *iv;
            L(b, a) = -*iv;
        }
    IntMatrix B = -build_B_matrix(word, c, false);
    s.seed = make_seed(index, std::move(B), std::move(L), "BZ(" + word.to_string() + ")");
    return s;
}

WeightLabel weight_of(const BZSeed& s, const TorusElement& z) {
    if (z.is_zero()) throw Error("ZeroElement", "zero has no weight");
    std::optional<WeightLabel> out;
    const int r = s.cartan.rank();
    for (const auto& t : z.terms()) {
        WeightLabel l{Weight::Zero(r), Weight::Zero(r)};
        for (Eigen::Index i = 0; i < t.exponent.size(); ++i) {
            l.gamma += t.exponent(i) * s.weights[i].gamma;
            l.delta += t.exponent(i) * s.weights[i].delta;
        }
        if (out && !(*out == l)) throw Error("NotHomogeneous", "terms carry different weights");
        out = std::move(l);
    }
    return *out;
}

BZFlip flip_bz(const BZSeed& s, int k) {
    FlipResult fr = flip(s.word, k);
    BZSeed out = s;
    out.word = fr.word;
    const int p = s.seed.index.position(k);
    if (!fr.mutation) {
        Permutation sigma{{k, k + 1}, {k + 1, k}};
        out.seed = relabel_seed(s.seed, sigma);
        std::swap(out.weights[p], out.weights[p + 1]);
        out.seed.name = "BZ(" + fr.word.to_string() + ")";
        return {std::move(out), PermuteMove{sigma}};
    }
    const int m = s.word.abs_letter(k);
    Weight sm = reflect(s.cartan, m, fundamental_weight(s.cartan, m));
    out.seed = mutate_seed(s.seed, k);
    out.weights[p] = label_at(s.cartan, s.word, k, sm);
    out.seed.name = "BZ(" + fr.word.to_string() + ")";
    return {std::move(out), MutateMove{k}};
}

IntVector flip_frozen_exponent(const BZSeed& s, int k) {
    const SignedWord& w = s.word;
    const int m = w.abs_letter(k);
    IntVector v = IntVector::Zero(s.seed.size());
    for (int p = 1; p <= w.rank(); ++p) {
        if (p == m) continue;
        int j = 0;
        for (int t = k - 1; t >= 1 && j == 0; --t)
            if (w.abs_letter(t) == p) j = t;
        if (j == 0)
            for (int t = -w.rank(); t <= -1; ++t)
                if (w.abs_letter(t) == p) j = t;
        v(s.seed.index.position(j)) += -s.cartan.C(p - 1, m - 1);
    }
    return v;
}

QPowerReport verify_flip_qpowers(const BZSeed& s, int k) {
    const SignedWord& w = s.word;
    if (k < 1 || k >= w.length() || w.abs_letter(k) != w.abs_letter(k + 1) || w.sign(k) == w.sign(k + 1))
        throw Error("PreconditionViolated", "flip relation needs (m,-m) or (-m,m) at " + std::to_string(k));
    QuantumSeed own = with_own_torus(s.seed);
    const int n = own.size();
    const int kp = own.index.position(k);
    const int up = own.index.position(*w.next(k));
    const int down = own.index.position(*w.prev(k));
    const TorusContext& ctx = *own.reference();
    QuantumSeed mu = mutate_seed(own, k);
    TorusElement lhs = mu.vars[kp] * own.vars[kp];
    auto [v1, v2] = exchange_exponents(own, k);
    QPowerReport rep;
    rep.k = k;
    IntVector a = unit_vector(n, up) + unit_vector(n, down);
    IntVector fk = unit_vector(n, kp);
    rep.alpha2 = static_cast<int>(ctx.pairing(a, fk) - ctx.lambda()(up, down));
    rep.beta2 = static_cast<int>(ctx.pairing(v2, fk));
    TorusElement t1 = own.vars[up] * own.vars[down];
    TorusElement t2 = seed_monomial(own, v2);
    TorusElement rhs = t1.scaled(qpow(rep.alpha2)) + t2.scaled(qpow(rep.beta2));
    rep.relation_holds = v1 == a && lhs == rhs;
    rep.frozen_term_matches = v2 == flip_frozen_exponent(s, k);
    return rep;
}

std::vector<int> admissible_flip_positions(const SignedWord& w) {
    std::vector<int> out;
    for (int k = 1; k < w.length(); ++k)
        if (w.letter(k) > 0 && w.letter(k + 1) == -w.letter(k)) out.push_back(k);
    return out;
}

std::optional<MutationPath> connect_bz(const BZSeed& a, const BZSeed& b, int maxDepth) {
    if (!(a.cartan == b.cartan) || a.u.size() != b.u.size() || a.w.size() != b.w.size() ||
        a.seed.index.labels() != b.seed.index.labels())
        throw Error("IncomparableSeeds", "BZ seeds of different shapes");
    VertexKeyFn key = [&a](const QuantumSeed& s, int pos) { return weight_of(a, s.vars[pos]).key(); };
    SeedTarget target{b.seed.index, b.seed.B, b.seed.Lambda, {}};
    for (const auto& l : b.weights) target.keys.push_back(l.key());
    return search_path(a.seed, target, key, maxDepth, true);
}

bool bz_path_reaches(const BZSeed& a, const MutationPath& p, const BZSeed& b) {
    const QuantumSeed s = apply_path(a.seed, p);
    if (!(s.index == b.seed.index) || s.B != b.seed.B || s.Lambda != b.seed.Lambda) return false;
    for (int q = 0; q < s.size(); ++q)
        if (!(weight_of(a, s.vars[q]) == b.weights[q])) return false;
    return true;
}

} // namespace qclaw
