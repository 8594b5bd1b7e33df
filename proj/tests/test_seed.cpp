#include "checks.hpp"

#include <doctest.h>

using namespace qclaw;

namespace {

/// Matrix mutation written out entrywise from the exchange rule.
IntMatrix mutate_oracle(const IndexSet& index, const IntMatrix& B, int k) {
    const int ck = index.column(index.position(k));
    const int pk = index.position(k);
    IntMatrix out = B;
    for (int i = 0; i < B.rows(); ++i)
        for (int j = 0; j < B.cols(); ++j) {
            if (i == pk || j == ck) {
                out(i, j) = -B(i, j);
            } else {
                const Int bik = B(i, ck);
                const Int bkj = B(pk, j);
                out(i, j) = B(i, j) + (bik > 0 && bkj > 0 ? bik * bkj : 0) - (bik < 0 && bkj < 0 ? bik * bkj : 0);
            }
        }
    return out;
}

Rational evaluate(const TorusElement& z, const std::vector<Rational>& x) {
    Rational total = 0;
    for (const auto& t : z.terms()) {
        Rational term = Rational(t.coeff.at_one());
        for (int i = 0; i < t.exponent.size(); ++i) {
            const Int e = t.exponent(i);
            for (Int r = 0; r < (e < 0 ? -e : e); ++r) term = e > 0 ? Rational(term * x[i]) : Rational(term / x[i]);
        }
        total += term;
    }
    return total;
}

IntMatrix m22(Int a, Int b, Int c, Int d) {
    IntMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

} // namespace

TEST_CASE("matrix mutation agrees with the entrywise rule and is an involution") {
    Rng rng(41);
    for (int t = 0; t < 200; ++t) {
        const int uf = uniform_int(rng, 2, 4);
        const QuantumSeed s = random_compatible_seed(rng, uf, uf % 2 == 1 ? 1 : uniform_int(rng, 0, 1), 3);
        for (int k : s.index.unfrozen_labels()) {
            const IntMatrix Bk = mutate_matrix(s.index, s.B, k);
            CHECK(Bk == mutate_oracle(s.index, s.B, k));
            CHECK(mutate_matrix(s.index, Bk, k) == s.B);
            const IntMatrix Lk = mutate_lambda(s.index, *s.Lambda, s.B, k);
            CHECK(is_skew_symmetric(Lk));
            CHECK(mutate_lambda(s.index, Lk, Bk, k) == *s.Lambda);
        }
    }
}

TEST_CASE("quantum A1 exchange relation") {
    IndexSet index({1, 2}, {2});
    IntMatrix B(2, 1);
    B << 0, 1;
    const QuantumSeed s = make_seed(index, B, m22(0, -1, 1, 0));
    CHECK(check_compatible_pair(index, B, *s.Lambda) == IntVector::Ones(1));
    const QuantumSeed mu = mutate_seed(s, 1);
    const auto& ctx = s.reference();
    IntVector f1(2), f2(2);
    f1 << 1, 0;
    f2 << 0, 1;
    const TorusElement expected =
        TorusElement::monomial(ctx, -f1) * (TorusElement::one(ctx) + TorusElement::monomial(ctx, f2, qpow(-1)));
    CHECK(mu.var(1) == expected);
    CHECK(mu.var(1) == TorusElement::monomial(ctx, -f1) + TorusElement::monomial(ctx, f2 - f1));
    CHECK(mu.var(1).bar() == mu.var(1));
}

TEST_CASE("classical A2 pentagon recurrence") {
    IndexSet index({1, 2}, {});
    const QuantumSeed s = make_seed(index, m22(0, 1, -1, 0), std::nullopt);
    const std::vector<Rational> pt{Rational(2), Rational(3)};
    std::vector<Rational> seq{pt[0], pt[1]};
    for (int n = 2; n < 8; ++n) seq.push_back((seq[n - 1] + 1) / seq[n - 2]);
    QuantumSeed cur = s;
    for (int n = 2; n < 8; ++n) {
        const int k = n % 2 == 0 ? 1 : 2;
        cur = mutate_seed(cur, k);
        CHECK(evaluate(cur.var(k), pt) == seq[n]);
    }
    CHECK(seq[5] == seq[0]);
    CHECK(seq[6] == seq[1]);
}

TEST_CASE("cluster variables are bar-invariant") {
    for (const char* name : {"A2f", "A3f"}) {
        const QuantumSeed s = named_seed(name);
        for (const auto& x : enumerate_exchange_graph(s, 1000, true).seeds) {
            for (const auto& v : x.vars) CHECK(v.bar() == v);
            CHECK(checks::quasi_commutation_holds(x));
        }
    }
}

TEST_CASE("finite type cluster counts are Catalan numbers") {
    CHECK(count_clusters(enumerate_exchange_graph(named_seed("A2f"), 1000).seeds) == 5);
    CHECK(count_clusters(enumerate_exchange_graph(named_seed("A3f"), 5000).seeds) == 14);
    const auto g = enumerate_exchange_graph(named_seed("A4"), 1000, true);
    CHECK(!g.truncated);
    CHECK(g.seeds.size() == 42);
    CHECK(count_clusters(g.seeds) == 42);
    CHECK(enumerate_exchange_graph(named_seed("A4"), 10).truncated);
}

TEST_CASE("mutation paths") {
    const QuantumSeed s = named_seed("A3f");
    const MutationPath p{MutateMove{1}, MutateMove{2}, MutateMove{3}};
    const QuantumSeed t = apply_path(s, p);
    auto found = find_mutation_path(s, t, 6, false);
    REQUIRE(found);
    CHECK(apply_path(s, *found) == t);
    CHECK(found->size() <= 3);
    const QuantumSeed r = permute_seed(t, {{1, 3}, {3, 1}, {2, 2}, {4, 4}});
    auto withPerm = find_mutation_path(s, r, 6, true);
    REQUIRE(withPerm);
    CHECK(apply_path(s, *withPerm) == r);
    CHECK(mutation_sequence(p) == std::vector<int>{1, 2, 3});
}

TEST_CASE("permutations respect frozen vertices") {
    const QuantumSeed s = named_seed("A2f");
    CHECK_THROWS_AS(permute_seed(s, {{1, 3}, {3, 1}, {2, 2}}), Error);
    const QuantumSeed r = relabel_seed(s, {{1, 3}, {3, 1}, {2, 2}});
    CHECK(r.index.frozen_labels() == std::vector<int>{1});
    CHECK(relabel_seed(r, {{1, 3}, {3, 1}, {2, 2}}) == s);
}

TEST_CASE("compatibility") {
    const QuantumSeed s = named_seed("A3f");
    IntMatrix bad = *s.Lambda;
    bad(0, 1) += 1;
    bad(1, 0) -= 1;
    CHECK_THROWS_AS(check_compatible_pair(s.index, s.B, bad), Error);
    CHECK_THROWS_AS(mutate_seed(s, 4), Error);
    CHECK_THROWS_AS(mutate_seed(s, 9), Error);
    IndexSet index({1, 2}, {});
    CHECK_THROWS_AS(make_seed(index, m22(0, 1, -1, 0), m22(0, 1, 1, 0)), Error);
}

TEST_CASE("mutation laws on random compatible seeds") {
    const auto o = checks::mutation_laws(200);
    CHECK_MESSAGE(o.pass, o.detail);
}

TEST_CASE("Laurent phenomenon along all short paths") {
    for (const char* name : {"A2f", "A3f"}) {
        const auto o = checks::laurent_paths(named_seed(name), 6);
        CHECK_MESSAGE(o.pass, o.detail);
    }
}
