#include "qclaw/signed_word.hpp"

#include <sstream>

namespace qclaw {

SignedWord::SignedWord(int rank, std::vector<int> letters, std::vector<int> negExtension)
    : rank_(rank), letters_(std::move(letters)), neg_(std::move(negExtension)) {
    if (rank_ < 1) throw Error("InvalidWord", "rank must be positive");
    for (int a : letters_)
        if (a == 0 || a > rank_ || a < -rank_) throw Error("LetterOutOfRange", std::to_string(a));
    if (neg_.empty())
        for (int t = rank_; t >= 1; --t) neg_.push_back(t);
    std::vector<bool> seen(rank_ + 1, false);
    if (static_cast<int>(neg_.size()) != rank_) throw Error("InvalidWord", "negExtension must have r letters");
    for (int a : neg_) {
        if (a < 1 || a > rank_ || seen[a]) throw Error("InvalidWord", "negExtension must permute [1,r]");
        seen[a] = true;
    }
}

SignedWord SignedWord::parse(int rank, const std::string& text) {
    std::vector<int> letters;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        size_t used = 0;
        int v = std::stoi(item, &used);
        if (item.find_first_not_of(" \t", used) != std::string::npos) throw Error("ParseError", text);
        letters.push_back(v);
    }
    return SignedWord(rank, std::move(letters));
}

bool SignedWord::in_range(int k) const {
    return (k >= -rank_ && k <= -1) || (k >= 1 && k <= length());
}

int SignedWord::letter(int k) const {
    if (!in_range(k)) throw Error("IndexOutOfRange", std::to_string(k));
    return k < 0 ? neg_[k + rank_] : letters_[k - 1];
}

int SignedWord::abs_letter(int k) const {
    int a = letter(k);
    return a < 0 ? -a : a;
}

std::optional<int> SignedWord::shift(int k, int d) const {
    if (!in_range(k)) throw Error("IndexOutOfRange", std::to_string(k));
    const int a = abs_letter(k);
    int cur = k;
    for (; d > 0; --d) {
        int j = cur < 0 ? 1 : cur + 1;
        while (j <= length() && abs_letter(j) != a) ++j;
        if (j > length()) return std::nullopt;
        cur = j;
    }
    for (; d < 0; ++d) {
        if (cur < 0) return std::nullopt;
        int j = cur - 1;
        while (j >= 1 && abs_letter(j) != a) --j;
        if (j < 1) {
            for (j = -rank_; j <= -1 && abs_letter(j) != a; ++j) {}
        }
        cur = j;
    }
    return cur;
}

int SignedWord::min_occurrence(int k) const {
    if (k < 1 || k > length()) throw Error("IndexOutOfRange", std::to_string(k));
    int cur = k;
    while (true) {
        auto p = prev(cur);
        if (!p || *p < 1) return cur;
        cur = *p;
    }
}

int SignedWord::max_occurrence(int k) const {
    if (k < 1 || k > length()) throw Error("IndexOutOfRange", std::to_string(k));
    int cur = k;
    while (auto n = next(cur)) cur = *n;
    return cur;
}

std::vector<int> SignedWord::unfrozen() const {
    std::vector<int> out;
    for (int k = 1; k <= length(); ++k)
        if (next(k)) out.push_back(k);
    return out;
}

std::vector<int> SignedWord::ddot_labels() const {
    std::vector<int> out;
    for (int k = -rank_; k <= -1; ++k) out.push_back(k);
    for (int k = 1; k <= length(); ++k) out.push_back(k);
    return out;
}

std::vector<int> SignedWord::dot_labels() const {
    std::vector<int> out;
    for (int k = 1; k <= length(); ++k) out.push_back(k);
    return out;
}

WeylWord SignedWord::negative_subword() const {
    WeylWord out;
    for (int a : letters_)
        if (a < 0) out.push_back(-a);
    return out;
}

WeylWord SignedWord::positive_subword() const {
    WeylWord out;
    for (int a : letters_)
        if (a > 0) out.push_back(a);
    return out;
}

std::string SignedWord::to_string() const {
    std::string s;
    for (size_t i = 0; i < letters_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(letters_[i]);
    }
    return s;
}

IndexSet word_index(const SignedWord& w, bool dotted) {
    std::vector<int> labels = dotted ? w.dot_labels() : w.ddot_labels();
    std::vector<int> frozen;
    for (int k : labels)
        if (k < 0 || !w.next(k)) frozen.push_back(k);
    return IndexSet(labels, frozen);
}

IntMatrix build_B_matrix(const SignedWord& w, const CartanData& c, bool dotted) {
    if (c.rank() < w.rank()) throw Error("RankMismatch", "Cartan rank below word rank");
    const IndexSet index = word_index(w, dotted);
    const auto uf = w.unfrozen();
    constexpr long inf = 1L << 40;
    auto nxt = [&](int k) -> long {
        auto n = w.next(k);
        return n ? *n : inf;
    };
    IntMatrix B = IntMatrix::Zero(index.size(), static_cast<Eigen::Index>(uf.size()));
    for (int row = 0; row < index.size(); ++row) {
        const int j = index.label(row);
        for (size_t col = 0; col < uf.size(); ++col) {
            const int k = uf[col];
            const long j1 = nxt(j), k1 = nxt(k);
            const Int ek = w.sign(k);
            const Int cjk = c.C(w.abs_letter(j) - 1, w.abs_letter(k) - 1);
            Int v = 0;
            if (k == j1) {
                v = ek;
            } else if (j == k1) {
                v = -w.sign(j);
            } else if (j < k && k < j1 && j1 < k1 && w.sign(static_cast<int>(j1)) == ek) {
                v = ek * cjk;
            } else if (j < k && k < k1 && k1 < j1 && ek == -w.sign(static_cast<int>(k1))) {
                v = ek * cjk;
            } else if (k < j && j < k1 && k1 < j1 && w.sign(static_cast<int>(k1)) == w.sign(j)) {
                v = -w.sign(j) * cjk;
            } else if (k < j && j < j1 && j1 < k1 && w.sign(j) == -w.sign(static_cast<int>(j1))) {
                v = -w.sign(j) * cjk;
            }
            B(row, static_cast<Eigen::Index>(col)) = v;
        }
    }
    return B;
}

SignedWord left_reflection(const SignedWord& w) {
    if (w.length() == 0) throw Error("EmptyWord", "left reflection of the empty word");
    auto letters = w.letters();
    letters[0] = -letters[0];
    return SignedWord(w.rank(), letters, w.neg_extension());
}

FlipResult flip(const SignedWord& w, int k) {
    if (k < 1 || k >= w.length()) throw Error("IndexOutOfRange", std::to_string(k));
    if (w.sign(k) == w.sign(k + 1))
        throw Error("SameSign", "letters at " + std::to_string(k) + " and " + std::to_string(k + 1));
    auto letters = w.letters();
    std::swap(letters[k - 1], letters[k]);
    FlipResult r{SignedWord(w.rank(), letters, w.neg_extension()), std::nullopt};
    if (w.abs_letter(k) == w.abs_letter(k + 1)) r.mutation = k;
    return r;
}

std::vector<int> flip_path(const SignedWord& from, const SignedWord& to) {
    if (from.rank() != to.rank() || from.length() != to.length() || from.positive_subword() != to.positive_subword() ||
        from.negative_subword() != to.negative_subword())
        throw Error("NotAShuffle", from.to_string() + " -> " + to.to_string());
    std::vector<int> cur = from.letters();
    const auto& target = to.letters();
    std::vector<int> path;
    for (size_t t = 0; t < target.size(); ++t) {
        size_t p = t;
        while ((cur[p] > 0) != (target[t] > 0)) ++p;
        for (; p > t; --p) {
            std::swap(cur[p - 1], cur[p]);
            path.push_back(static_cast<int>(p));
        }
    }
    return path;
}

std::vector<SignedWord> shuffles(int rank, const WeylWord& positive, const WeylWord& negative) {
    std::vector<SignedWord> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, size_t a, size_t b) -> void {
        if (a == positive.size() && b == negative.size()) {
            out.emplace_back(rank, cur);
            return;
        }
        if (a < positive.size()) {
            cur.push_back(positive[a]);
            self(self, a + 1, b);
            cur.pop_back();
        }
        if (b < negative.size()) {
            cur.push_back(-negative[b]);
            self(self, a, b + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

} // namespace qclaw
