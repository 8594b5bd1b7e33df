#include "checks.hpp"

#include <doctest.h>

using namespace qclaw;

namespace {

LatticeVector vec(std::initializer_list<Int> v) {
    LatticeVector out(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (Int x : v) out(i++) = x;
    return out;
}

StandardBasis sl2() { return checks::desk_basis("A1", {1}, {1}); }

} // namespace

TEST_CASE("unshuffled word and seed") {
    const CartanData a2 = CartanData::preset("A2");
    const SignedWord iota = unshuffled_word(2, {1, 2}, {2, 1});
    CHECK(iota.letters() == std::vector<int>{2, 1, 2, 1});
    const QuantumSeed s = unshuffled_seed(a2, {1, 2, 1}, {1, 2, 1});
    CHECK(s.size() == 6);
    CHECK(s.index.frozen_labels() == std::vector<int>{5, 6});
    const IntMatrix nu = nu_matrix(a2, {1, 2, 1}, {1, 2, 1});
    CHECK(nu == -nu.transpose());
    CHECK_THROWS_AS(unshuffled_seed(a2, {1, 1}, {1}), Error);
}

TEST_CASE("interval pairs and degrees") {
    const SignedWord iota(2, {1, 2, 1, 1, 2, 1});
    const auto pairs = interval_pairs(iota);
    CHECK(pairs.size() == 6 + 3 + 1 + 1 + 2);
    CHECK(interval_degree(iota, 1, 1) == vec({1, 0, 0, 0, 0, 0}));
    CHECK(interval_degree(iota, 3, 4) == vec({-1, 0, 0, 1, 0, 0}));
    CHECK(interval_degree(iota, 1, 6) == vec({0, 0, 0, 0, 0, 1}));
}

TEST_CASE("sl2 interval variables") {
    StandardBasis b = sl2();
    const ContextPtr& ctx = b.table().seed.reference();
    const TorusElement x1 = TorusElement::monomial(ctx, vec({1, 0}));
    const TorusElement x2 = TorusElement::monomial(ctx, vec({0, 1}));
    CHECK(b.table().W(1) == x1);
    CHECK(b.table().W(2) == TorusElement::monomial(ctx, vec({-1, 1})) + TorusElement::monomial(ctx, vec({-1, 0})));
    CHECK(b.table().entries.at({1, 2}) == x2);
    CHECK(b.gamma(1) == vec({1, 0}));
    CHECK(b.gamma(2) == vec({-1, 1}));
}

TEST_CASE("sl2 standard monomial and KL element") {
    StandardBasis b = sl2();
    const ContextPtr& ctx = b.table().seed.reference();
    const TorusElement x2 = TorusElement::monomial(ctx, vec({0, 1}));
    const TorusElement one = TorusElement::one(ctx);
    CHECK(b.monomial({1, 1}) == x2 + one.scaled(qpow(-2)));
    CHECK(b.kl({1, 1}) == x2);
    CHECK(b.kl({1, 1}, Order::Rev) == x2);
    CHECK(b.monomial({0, 0}) == one);
    CHECK(b.degree_of({1, 1}) == vec({0, 1}));
    CHECK(b.multi_index_of(vec({0, 1})) == MultiIndex{1, 1});
    CHECK_FALSE(b.multi_index_of(vec({-1, 0})).has_value());
}

TEST_CASE("sl2 KL element by exhaustive search") {
    StandardBasis b = sl2();
    const TorusElement m = b.monomial({1, 1});
    const TorusElement one = b.monomial({0, 0});
    std::vector<Coefficient> found;
    for (int n1 = -2; n1 <= 2; ++n1)
        for (int n2 = -2; n2 <= 2; ++n2)
            for (int n3 = -2; n3 <= 2; ++n3)
                for (int n4 = -2; n4 <= 2; ++n4) {
                    const Coefficient a = Coefficient::monomial(-1, n1) + Coefficient::monomial(-2, n2) +
                                          Coefficient::monomial(-3, n3) + Coefficient::monomial(-4, n4);
                    const TorusElement z = m + one.scaled(a);
                    if (z.bar() == z) found.push_back(a);
                }
    REQUIRE(found.size() == 1);
    CHECK(m + one.scaled(found[0]) == b.kl({1, 1}));
}

TEST_CASE("dominance refines both orders on multi-indices") {
    for (auto [type, word] : {std::pair<std::string, WeylWord>{"A1", {1}}, {"A2", {1, 2, 1}}}) {
        StandardBasis b = checks::desk_basis(type, word, word);
        const auto cs = multi_indices_up_to(b.length(), type == "A1" ? 4 : 2);
        for (const auto& c : cs)
            for (const auto& d : cs) {
                if (!b.order().less(b.degree_of(d), b.degree_of(c))) continue;
                CHECK(lex_less(d, c));
                CHECK(rev_less(d, c));
            }
    }
}

TEST_CASE("lex and rev orders") {
    CHECK(lex_less(MultiIndex{0, 1}, MultiIndex{1, 0}));
    CHECK_FALSE(lex_less(MultiIndex{1, 0}, MultiIndex{0, 1}));
    CHECK(rev_less(MultiIndex{1, 0}, MultiIndex{0, 1}));
    CHECK(rev_less(MultiIndex{2, 0, 1}, MultiIndex{0, 1, 1}));
    CHECK_FALSE(rev_less(MultiIndex{1, 1}, MultiIndex{1, 1}));
    CHECK(order_less(Order::Rev, MultiIndex{1, 0}, MultiIndex{0, 1}));
    CHECK(order_less(Order::Lex, MultiIndex{0, 1}, MultiIndex{1, 0}));
    CHECK(multi_indices_up_to(2, 2).size() == 6);
    CHECK(multi_indices_up_to(3, 2).size() == 10);
}

TEST_CASE("standard and triangular bases") {
    const checks::Outcome o = checks::bases_desk(3);
    CHECK_MESSAGE(o.pass, o.detail);
}

TEST_CASE("straightening relations") {
    const checks::Outcome o = checks::straightening_all();
    CHECK_MESSAGE(o.pass, o.detail);
    StandardBasis b = sl2();
    const StraighteningReport r = b.straightening(2, 1);
    CHECK(r.supported);
    CHECK_THROWS_AS(b.straightening(1, 1), Error);
}

TEST_CASE("elements outside the span") {
    StandardBasis b = sl2();
    const ContextPtr& ctx = b.table().seed.reference();
    CHECK_THROWS_AS(b.expand(TorusElement::monomial(ctx, vec({-2, 0}))), Error);
    CHECK_THROWS_AS(b.monomial({-1, 0}), Error);
    CHECK_THROWS_AS(b.monomial({1}), Error);
    CHECK(b.expand(TorusElement::zero(ctx)).empty());
}

TEST_CASE("triangular axioms on sl2 samples") {
    StandardBasis b = sl2();
    const QuantumSeed& s = b.table().seed;
    const TriangularReport small = check_triangular_axioms(s, {TorusElement::one(s.reference()), b.table().W(1)});
    CHECK(small.pass());
    std::vector<TorusElement> sample;
    for (const auto& c : multi_indices_up_to(2, 3)) sample.push_back(b.kl(c));
    const TriangularReport r = check_triangular_axioms(s, sample);
    CHECK(r.pass());
    CHECK(r.elements == 10);
    CHECK(r.products_checked > 0);
    const TriangularReport bad = check_triangular_axioms(s, {b.monomial({1, 1})});
    CHECK_FALSE(bad.pass());
}
