#include "qclaw/sampling.hpp"
#include "qclaw/signed_word.hpp"

#include <doctest.h>

using namespace qclaw;

namespace {

constexpr int kInf = 1 << 20;

int letter_of(const std::vector<int>& word, int, int k) { return k < 0 ? -k : word[k - 1]; }

int next_of(const std::vector<int>& word, int r, int k) {
    const int a = std::abs(letter_of(word, r, k));
    for (int t = std::max(k + 1, 1); t <= static_cast<int>(word.size()); ++t)
        if (std::abs(word[t - 1]) == a) return t;
    return kInf;
}

int sgn(const std::vector<int>& word, int r, int k) {
    if (k == kInf) return 0;
    return letter_of(word, r, k) > 0 ? 1 : -1;
}

int entry(const std::vector<int>& word, const CartanData& c, int j, int k) {
    const int r = c.rank();
    const int j1 = next_of(word, r, j);
    const int k1 = next_of(word, r, k);
    const int ej = sgn(word, r, j);
    const int ek = sgn(word, r, k);
    const int cjk = static_cast<int>(c.C(std::abs(letter_of(word, r, j)) - 1, std::abs(letter_of(word, r, k)) - 1));
    if (k == j1) return ek;
    if (j == k1) return -ej;
    if (j < k && k < j1 && j1 < k1 && sgn(word, r, j1) == ek) return ek * cjk;
    if (j < k && k < k1 && k1 < j1 && ek == -sgn(word, r, k1)) return ek * cjk;
    if (k < j && j < k1 && k1 < j1 && sgn(word, r, k1) == ej) return -ej * cjk;
    if (k < j && j < j1 && j1 < k1 && ej == -sgn(word, r, j1)) return -ej * cjk;
    return 0;
}

IntMatrix oracle_B(const std::vector<int>& word, const CartanData& c, bool dotted) {
    const int r = c.rank();
    const int l = static_cast<int>(word.size());
    std::vector<int> rows, cols;
    if (!dotted)
        for (int t = -r; t <= -1; ++t) rows.push_back(t);
    for (int t = 1; t <= l; ++t) {
        rows.push_back(t);
        if (next_of(word, r, t) <= l) cols.push_back(t);
    }
    IntMatrix B(rows.size(), cols.size());
    for (size_t a = 0; a < rows.size(); ++a)
        for (size_t b = 0; b < cols.size(); ++b) B(a, b) = entry(word, c, rows[a], cols[b]);
    return B;
}

std::vector<int> random_word(Rng& rng, int r, int len) {
    std::vector<int> w;
    for (int t = 0; t < len; ++t) {
        const int a = static_cast<int>(uniform_int(rng, 1, r));
        w.push_back(uniform_int(rng, 0, 1) ? a : -a);
    }
    return w;
}

Eigen::Index rank_of(const IntMatrix& B) { return exact_rank<Rational>(B.cast<Rational>()); }

} // namespace

TEST_CASE("shift navigation") {
    const SignedWord w(2, {1, 2, 1, 1, 2, 1});
    CHECK(w.next(1) == 3);
    CHECK(w.next(3) == 4);
    CHECK(w.next(4) == 6);
    CHECK(w.next(2) == 5);
    CHECK_FALSE(w.next(5).has_value());
    CHECK_FALSE(w.next(6).has_value());
    CHECK(w.next(-1) == 1);
    CHECK(w.next(-2) == 2);
    CHECK(w.shift(1, 3) == 6);
    CHECK(w.prev(6) == 4);
    CHECK(w.min_occurrence(1) == 1);
    CHECK(w.min_occurrence(6) == 1);
    CHECK(w.max_occurrence(2) == 5);
    CHECK(w.max_occurrence(1) == 6);
}

TEST_CASE("unfrozen vertices") {
    CHECK(SignedWord(2, {1, 2, 1, 1, 2, 1}).unfrozen() == std::vector<int>{1, 2, 3, 4});
    CHECK(SignedWord(2, {1, 2}).unfrozen().empty());
    CHECK(SignedWord(1, {1, 1}).unfrozen() == std::vector<int>{1});
    const SignedWord w(2, {1, -2, 1});
    CHECK(w.ddot_labels() == std::vector<int>{-2, -1, 1, 2, 3});
    CHECK(w.dot_labels() == std::vector<int>{1, 2, 3});
}

TEST_CASE("parse and invalid letters") {
    CHECK(SignedWord::parse(2, "1,-2,1").letters() == std::vector<int>{1, -2, 1});
    CHECK_THROWS_AS(SignedWord(2, {3}), Error);
    CHECK_THROWS_AS(SignedWord(2, {0}), Error);
    CHECK_THROWS_AS(SignedWord(2, {1}, {1, 1}), Error);
}

TEST_CASE("exchange matrix of (1,1) in A1") {
    const CartanData a1 = CartanData::preset("A1");
    const IntMatrix B = build_B_matrix(SignedWord(1, {1, 1}), a1, true);
    REQUIRE(B.rows() == 2);
    REQUIRE(B.cols() == 1);
    CHECK(B(0, 0) == 0);
    CHECK(B(1, 0) == -1);
}

TEST_CASE("exchange matrix agrees with the case rule") {
    Rng rng(kDefaultRngSeed);
    for (const char* type : {"A1", "A2", "A3", "B2", "G2"}) {
        const CartanData c = CartanData::preset(type);
        for (int trial = 0; trial < 40; ++trial) {
            const auto word = random_word(rng, c.rank(), static_cast<int>(uniform_int(rng, 1, 7)));
            const SignedWord w(c.rank(), word);
            CHECK(build_B_matrix(w, c, false) == oracle_B(word, c, false));
            CHECK(build_B_matrix(w, c, true) == oracle_B(word, c, true));
        }
    }
}

TEST_CASE("reversing all signs negates the dotted matrix") {
    Rng rng(kDefaultRngSeed + 1);
    const CartanData c = CartanData::preset("A3");
    for (int trial = 0; trial < 50; ++trial) {
        auto word = random_word(rng, 3, static_cast<int>(uniform_int(rng, 2, 8)));
        auto neg = word;
        for (int& a : neg) a = -a;
        CHECK(build_B_matrix(SignedWord(3, neg), c, true) == -build_B_matrix(SignedWord(3, word), c, true));
    }
}

TEST_CASE("left reflection leaves the dotted matrix unchanged") {
    Rng rng(kDefaultRngSeed + 2);
    const CartanData c = CartanData::preset("B2");
    for (int trial = 0; trial < 50; ++trial) {
        const SignedWord w(2, random_word(rng, 2, static_cast<int>(uniform_int(rng, 1, 7))));
        const SignedWord v = left_reflection(w);
        CHECK(v.letter(1) == -w.letter(1));
        CHECK(build_B_matrix(v, c, true) == build_B_matrix(w, c, true));
        CHECK(left_reflection(v) == w);
    }
    CHECK_THROWS_AS(left_reflection(SignedWord(1, {})), Error);
}

TEST_CASE("double dotted matrix has full rank") {
    Rng rng(kDefaultRngSeed + 3);
    for (const char* type : {"A2", "A3", "C2", "G2"}) {
        const CartanData c = CartanData::preset(type);
        for (int trial = 0; trial < 20; ++trial) {
            const SignedWord w(c.rank(), random_word(rng, c.rank(), static_cast<int>(uniform_int(rng, 2, 8))));
            const IntMatrix B = build_B_matrix(w, c, false);
            CHECK(rank_of(B) == B.cols());
        }
    }
}

TEST_CASE("flips") {
    const SignedWord w(2, {1, -2, 1, -1});
    const FlipResult a = flip(w, 1);
    CHECK(a.word.letters() == std::vector<int>{-2, 1, 1, -1});
    CHECK_FALSE(a.mutation.has_value());
    const FlipResult b = flip(w, 3);
    CHECK(b.word.letters() == std::vector<int>{1, -2, -1, 1});
    CHECK(b.mutation == 3);
    CHECK_THROWS_AS(flip(SignedWord(1, {1, 1}), 1), Error);
    CHECK_THROWS_AS(flip(w, 4), Error);
    CHECK_THROWS_AS(flip(w, 0), Error);
}

TEST_CASE("equal-letter flips act on the matrix by mutation") {
    Rng rng(kDefaultRngSeed + 4);
    const CartanData c = CartanData::preset("A2");
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const SignedWord w(2, random_word(rng, 2, static_cast<int>(uniform_int(rng, 2, 7))));
        for (int k = 1; k < w.length(); ++k) {
            if (w.letter(k) != -w.letter(k + 1)) continue;
            const IndexSet index = word_index(w, false);
            const IntMatrix mutated = mutate_matrix(index, build_B_matrix(w, c, false), k);
            CHECK(build_B_matrix(flip(w, k).word, c, false) == mutated);
            ++checked;
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("flip paths") {
    const SignedWord from(2, {1, 2, -1, -2});
    const SignedWord to(2, {-1, 1, -2, 2});
    const auto path = flip_path(from, to);
    CHECK(path.size() == 3);
    SignedWord cur = from;
    for (int k : path) cur = flip(cur, k).word;
    CHECK(cur == to);
    CHECK_THROWS_AS(flip_path(from, SignedWord(2, {1, 1, -2, -2})), Error);
}

TEST_CASE("shuffles") {
    const auto all = shuffles(2, {1, 2, 1}, {1, 2, 1});
    CHECK(all.size() == 20);
    for (const auto& s : all) {
        CHECK(s.positive_subword() == WeylWord{1, 2, 1});
        CHECK(s.negative_subword() == WeylWord{1, 2, 1});
        SignedWord cur = all.front();
        for (int k : flip_path(all.front(), s)) cur = flip(cur, k).word;
        CHECK(cur == s);
    }
    CHECK(shuffles(1, {1}, {}).size() == 1);
}
