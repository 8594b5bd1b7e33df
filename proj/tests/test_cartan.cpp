#include "qclaw/cartan.hpp"

#include <doctest.h>

using namespace qclaw;

namespace {

Weight rho(const CartanData& c) { return Weight::Ones(c.rank()); }

} // namespace

TEST_CASE("presets are symmetrizable") {
    for (const char* n : {"A1", "A2", "A3", "B2", "C2", "G2"}) {
        const CartanData c = CartanData::preset(n);
        CHECK_NOTHROW(c.validate());
        const IntMatrix DC = c.d.asDiagonal() * c.C;
        CHECK(DC == DC.transpose());
    }
    CHECK_THROWS_AS(CartanData::preset("E9"), Error);
}

TEST_CASE("Gram matrix of fundamental weights") {
    const CartanData a1 = CartanData::preset("A1");
    CHECK(weight_pairing(a1, fundamental_weight(a1, 1), fundamental_weight(a1, 1)) == Rational(1, 2));
    const CartanData a2 = CartanData::preset("A2");
    CHECK(weight_pairing(a2, fundamental_weight(a2, 1), fundamental_weight(a2, 1)) == Rational(2, 3));
    CHECK(weight_pairing(a2, fundamental_weight(a2, 1), fundamental_weight(a2, 2)) == Rational(1, 3));
    for (const char* n : {"A3", "B2", "G2"}) {
        const CartanData c = CartanData::preset(n);
        for (int i = 1; i <= c.rank(); ++i)
            for (int j = 1; j <= c.rank(); ++j) {
                const Rational p = weight_pairing(c, simple_root(c, i), fundamental_weight(c, j));
                CHECK(p == Rational(i == j ? c.d(i - 1) : 0));
            }
    }
}

TEST_CASE("Weyl group relations") {
    for (const char* n : {"A2", "A3", "B2", "G2"}) {
        const CartanData c = CartanData::preset(n);
        const Weight lam = rho(c) + fundamental_weight(c, 1);
        for (int i = 1; i <= c.rank(); ++i) {
            CHECK(reflect(c, i, reflect(c, i, lam)) == lam);
            CHECK(weight_pairing(c, reflect(c, i, lam), reflect(c, i, lam)) == weight_pairing(c, lam, lam));
        }
    }
    const CartanData a2 = CartanData::preset("A2");
    const Weight lam = fundamental_weight(a2, 1) * 3 + fundamental_weight(a2, 2);
    CHECK(act_by_word(a2, {1, 2, 1}, lam) == act_by_word(a2, {2, 1, 2}, lam));
    const CartanData b2 = CartanData::preset("B2");
    CHECK(act_by_word(b2, {1, 2, 1, 2}, rho(b2)) == act_by_word(b2, {2, 1, 2, 1}, rho(b2)));
    const CartanData g2 = CartanData::preset("G2");
    CHECK(act_by_word(g2, {1, 2, 1, 2, 1, 2}, rho(g2)) == act_by_word(g2, {2, 1, 2, 1, 2, 1}, rho(g2)));
}

TEST_CASE("longest element sends rho to -rho") {
    CHECK(act_by_word(CartanData::preset("A2"), {1, 2, 1}, Weight::Ones(2)) == -Weight::Ones(2));
    CHECK(act_by_word(CartanData::preset("B2"), {1, 2, 1, 2}, Weight::Ones(2)) == -Weight::Ones(2));
    CHECK(act_by_word(CartanData::preset("G2"), {1, 2, 1, 2, 1, 2}, Weight::Ones(2)) == -Weight::Ones(2));
    CHECK(act_by_word(CartanData::preset("A3"), {1, 2, 1, 3, 2, 1}, Weight::Ones(3)) == -Weight::Ones(3));
}

TEST_CASE("roots of reduced words are distinct positive roots") {
    const CartanData a3 = CartanData::preset("A3");
    const WeylWord w0{1, 2, 1, 3, 2, 1};
    CHECK(is_reduced(a3, w0));
    const auto roots = roots_of_word(a3, w0);
    REQUIRE(roots.size() == 6);
    for (size_t i = 0; i < roots.size(); ++i) {
        CHECK(is_positive_root(a3, roots[i]));
        for (size_t j = 0; j < i; ++j) CHECK(roots[i] != roots[j]);
    }
    Rational total = 0;
    for (const auto& r : roots) total += height(a3, r);
    CHECK(total == 3 * 1 + 2 * 2 + 1 * 3);
    CHECK(!is_reduced(a3, {1, 1}));
    CHECK(!is_reduced(a3, {1, 2, 1, 2}));
    CHECK(is_reduced(CartanData::preset("G2"), {1, 2, 1, 2, 1, 2}));
    CHECK(!is_reduced(CartanData::preset("G2"), {1, 2, 1, 2, 1, 2, 1}));
}
