#pragma once

#include "qclaw/cartan.hpp"
#include "qclaw/seed.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qclaw {

/// A word over [-r,-1] and [1,r] together with the letters i_{-r..-1}
/// attached to the extra vertices of the index set [-r,-1] u [1,l].
class SignedWord {
public:
    SignedWord() = default;
    SignedWord(int rank, std::vector<int> letters, std::vector<int> negExtension = {});

    /// Parses "1,2,-1,-2".
    static SignedWord parse(int rank, const std::string& text);

    int rank() const { return rank_; }
    int length() const { return static_cast<int>(letters_.size()); }
    const std::vector<int>& letters() const { return letters_; }
    /// (i_{-r}, ..., i_{-1})
    const std::vector<int>& neg_extension() const { return neg_; }

    /// Letter at k in [-r,-1] u [1,l].
    int letter(int k) const;
    int sign(int k) const { return letter(k) > 0 ? 1 : -1; }
    int abs_letter(int k) const;
    bool in_range(int k) const;

    /// k[d]; nullopt stands for +infinity (or below the word for negative shifts).
    std::optional<int> shift(int k, int d) const;
    std::optional<int> next(int k) const { return shift(k, 1); }
    std::optional<int> prev(int k) const { return shift(k, -1); }
    /// Extremal occurrences in [1,l] of the letter |i_k|, k in [1,l].
    int min_occurrence(int k) const;
    int max_occurrence(int k) const;

    /// {k in [1,l] : k[1] <= l}
    std::vector<int> unfrozen() const;
    /// [-r..-1, 1..l]
    std::vector<int> ddot_labels() const;
    std::vector<int> dot_labels() const;

    /// Subwords of absolute values of negative (resp. positive) letters.
    WeylWord negative_subword() const;
    WeylWord positive_subword() const;

    std::string to_string() const;

    friend bool operator==(const SignedWord&, const SignedWord&) = default;

private:
    int rank_ = 0;
    std::vector<int> letters_;
    std::vector<int> neg_;
};

/// Index set of the dotted ([1,l]) or double-dotted ([-r,-1] u [1,l]) seed.
IndexSet word_index(const SignedWord& w, bool dotted);

/// The matrix with the seven-case rule, rows Ï (or İ when dotted), columns İ_uf.
IntMatrix build_B_matrix(const SignedWord& w, const CartanData& c, bool dotted);

SignedWord left_reflection(const SignedWord& w);

struct FlipResult {
    SignedWord word;
    std::optional<int> mutation;
};

/// Swaps letters k, k+1 of opposite signs. Throws SameSign.
FlipResult flip(const SignedWord& w, int k);

/// Flip positions turning `from` into the shuffle `to`. Throws NotAShuffle.
std::vector<int> flip_path(const SignedWord& from, const SignedWord& to);

/// All shuffles of the given positive word with the negation of `negative`.
std::vector<SignedWord> shuffles(int rank, const WeylWord& positive, const WeylWord& negative);

} // namespace qclaw
