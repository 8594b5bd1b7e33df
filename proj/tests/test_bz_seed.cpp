#include "checks.hpp"

#include <doctest.h>

using namespace qclaw;

TEST_CASE("A1 seed of (1,-1)") {
    const CartanData a1 = CartanData::preset("A1");
    const BZSeed s = build_bz_seed(a1, SignedWord(1, {1, -1}));
    const Weight w = fundamental_weight(a1, 1);
    CHECK(s.seed.index.labels() == std::vector<int>{-1, 1, 2});
    CHECK(s.seed.index.frozen_labels() == std::vector<int>{-1, 2});
    CHECK(s.weight(-1) == WeightLabel{w, -w});
    CHECK(s.weight(1) == WeightLabel{w, w});
    CHECK(s.weight(2) == WeightLabel{-w, w});
    CHECK(s.u == WeylWord{1});
    CHECK(s.w == WeylWord{1});
}

TEST_CASE("exchange matrix and Lambda from weights") {
    for (const char* type : {"A1", "A2"}) {
        const CartanData c = CartanData::preset(type);
        for (const auto& word : longest_pair_corpus(type)) {
            const BZSeed s = build_bz_seed(c, word);
            CHECK(s.seed.B == -build_B_matrix(word, c, false));
            REQUIRE(s.seed.Lambda);
            const int n = s.seed.size();
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < a; ++b) {
                    const Rational v = weight_pairing(c, s.weights[a].gamma, s.weights[b].gamma) -
                                       weight_pairing(c, s.weights[a].delta, s.weights[b].delta);
                    CHECK(Rational((*s.seed.Lambda)(a, b)) == v);
                    CHECK((*s.seed.Lambda)(b, a) == -(*s.seed.Lambda)(a, b));
                }
        }
    }
}

TEST_CASE("compatibility constants") {
    const CartanData a2 = CartanData::preset("A2");
    for (const auto& word : longest_pair_corpus("A2")) {
        const BZSeed s = build_bz_seed(a2, word);
        const IntVector d = check_compatible_pair(s.seed.index, s.seed.B, *s.seed.Lambda);
        CHECK((d.array() == 2).all());
    }
    const CartanData a1 = CartanData::preset("A1");
    const BZSeed s = build_bz_seed(a1, SignedWord(1, {1, -1}));
    CHECK((check_compatible_pair(s.seed.index, s.seed.B, *s.seed.Lambda).array() == 2).all());
}

TEST_CASE("weights are additive") {
    const CartanData a2 = CartanData::preset("A2");
    const BZSeed s = build_bz_seed(a2, SignedWord(2, {1, 2, -1, 1, -2, -1}));
    const auto& ctx = s.seed.reference();
    for (int a = 0; a < s.seed.size(); ++a)
        for (int b = 0; b < s.seed.size(); ++b) {
            const TorusElement z = s.seed.vars[a] * s.seed.vars[b];
            const WeightLabel w = weight_of(s, z);
            CHECK(w.gamma == s.weights[a].gamma + s.weights[b].gamma);
            CHECK(w.delta == s.weights[a].delta + s.weights[b].delta);
        }
    CHECK_THROWS_AS(weight_of(s, TorusElement::zero(ctx)), Error);
    CHECK_THROWS_AS(weight_of(s, s.seed.vars[0] + s.seed.vars[1]), Error);
}

TEST_CASE("mutating flips produce homogeneous variables with the new label") {
    const CartanData a2 = CartanData::preset("A2");
    int checked = 0;
    for (const auto& word : longest_pair_corpus("A2")) {
        const BZSeed s = build_bz_seed(a2, word);
        for (int k = 1; k < word.length(); ++k) {
            if (word.sign(k) == word.sign(k + 1)) continue;
            const BZFlip f = flip_bz(s, k);
            CHECK(f.seed.word == flip(word, k).word);
            if (!std::holds_alternative<MutateMove>(f.move)) continue;
            CHECK(weight_of(s, f.seed.seed.var(k)) == f.seed.weight(k));
            ++checked;
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("flips reproduce the seed of the flipped word") {
    for (const char* type : {"A1", "A2"}) {
        const CartanData c = CartanData::preset(type);
        for (const auto& word : longest_pair_corpus(type)) {
            const BZSeed s = build_bz_seed(c, word);
            for (int k = 1; k < word.length(); ++k) {
                if (word.sign(k) == word.sign(k + 1)) continue;
                const BZFlip f = flip_bz(s, k);
                const BZSeed target = build_bz_seed(c, flip(word, k).word);
                CHECK(bz_path_reaches(s, MutationPath{f.move}, target));
                CHECK(std::holds_alternative<MutateMove>(f.move) == (word.abs_letter(k) == word.abs_letter(k + 1)));
            }
        }
    }
}

TEST_CASE("different letters flip by a relabeling") {
    const CartanData a2 = CartanData::preset("A2");
    const BZSeed s = build_bz_seed(a2, SignedWord(2, {1, -2, 2, -1}));
    const BZFlip f = flip_bz(s, 1);
    REQUIRE(std::holds_alternative<PermuteMove>(f.move));
    CHECK(f.seed.word.letters() == std::vector<int>{-2, 1, 2, -1});
}

TEST_CASE("flip q-powers") {
    const CartanData a2 = CartanData::preset("A2");
    const SignedWord w(2, {1, 2, 1, -1, -2, -1});
    CHECK(admissible_flip_positions(w) == std::vector<int>{3});
    const QPowerReport r = verify_flip_qpowers(build_bz_seed(a2, w), 3);
    CHECK(r.relation_holds);
    CHECK(r.frozen_term_matches);
    CHECK(r.alpha2 == -2);
    CHECK(r.beta2 == 0);
    CHECK(r.pass());
    CHECK_THROWS_AS(verify_flip_qpowers(build_bz_seed(a2, w), 1), Error);
}

TEST_CASE("q-powers at (-m,m) positions") {
    const CartanData a1 = CartanData::preset("A1");
    const QPowerReport r = verify_flip_qpowers(build_bz_seed(a1, SignedWord(1, {-1, 1})), 1);
    CHECK(r.alpha2 == 2);
    CHECK(r.beta2 == 2);
    CHECK_FALSE(r.pass());
    CHECK(admissible_flip_positions(SignedWord(1, {-1, 1})).empty());
}

TEST_CASE("q-powers do not depend on the letters of the extra vertices") {
    const CartanData a2 = CartanData::preset("A2");
    for (const auto& word : longest_pair_corpus("A2")) {
        const SignedWord other(2, word.letters(), {1, 2});
        for (int k : admissible_flip_positions(word)) {
            const QPowerReport a = verify_flip_qpowers(build_bz_seed(a2, word), k);
            const QPowerReport b = verify_flip_qpowers(build_bz_seed(a2, other), k);
            CHECK(a.alpha2 == b.alpha2);
            CHECK(a.beta2 == b.beta2);
            CHECK(b.pass());
        }
    }
}

TEST_CASE("flip q-powers on the corpus") {
    const checks::Outcome o = checks::flip_qpowers_corpus();
    CHECK_MESSAGE(o.pass, o.detail);
}

TEST_CASE("any two shuffles are connected by mutations") {
    const checks::Outcome a1 = checks::theorem_a("A1", 12);
    CHECK_MESSAGE(a1.pass, a1.detail);
    const checks::Outcome a2 = checks::theorem_a("A2", 12);
    CHECK_MESSAGE(a2.pass, a2.detail);
}

TEST_CASE("invalid words") {
    const CartanData a1 = CartanData::preset("A1");
    CHECK_THROWS_AS(build_bz_seed(a1, SignedWord(1, {1, 1})), Error);
    CHECK_THROWS_AS(build_bz_seed(CartanData::preset("A2"), SignedWord(1, {1})), Error);
}
