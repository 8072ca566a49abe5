#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace pbw {

/// A noncommutative monomial: a finite sequence of 1-based generator
/// indices. The empty word is the unit monomial of degree 0.
struct Word {
    std::vector<int> idx;

    Word() = default;
    Word(std::initializer_list<int> init) : idx(init) {}
    explicit Word(std::vector<int> init) : idx(std::move(init)) {}

    int degree() const { return static_cast<int>(idx.size()); }
    bool empty() const { return idx.empty(); }

    /// True when the indices are nondecreasing (an ordered monomial).
    bool is_sorted() const;

    /// Number of index pairs out of order; 0 iff is_sorted().
    int inversions() const;

    int max_index() const;

    Word concat(const Word& other) const;
    Word subword(int from, int len) const;

    bool operator==(const Word&) const = default;
};

/// Canonical total order on words: ascending degree, then lexicographic on
/// the index sequences. Used for printing and for pivot bookkeeping.
std::strong_ordering canonical_compare(const Word& a, const Word& b);

struct CanonicalWordLess {
    bool operator()(const Word& a, const Word& b) const {
        return canonical_compare(a, b) < 0;
    }
};

/// Renders "X1*X2" (or display names when given); the unit word prints "1".
std::string render(const Word& w, const std::vector<std::string>* names = nullptr);

/// All n^m words of degree m over generators 1..n, in lexicographic order.
std::vector<Word> words_of_degree(int n, int m);

} // namespace pbw
