#pragma once

#include <compare>
#include <vector>

#include "pbw/rational.hpp"
#include "pbw/word.hpp"

namespace pbw {

/// An exponent vector (a1,...,an). Multi-indices label equipollence classes
/// of words: two words are equipollent exactly when they have the same
/// multi-index of generator multiplicities.
struct MultiIndex {
    std::vector<int> exp;

    MultiIndex() = default;
    MultiIndex(std::initializer_list<int> init) : exp(init) {}
    explicit MultiIndex(std::vector<int> init) : exp(std::move(init)) {}

    int size() const { return static_cast<int>(exp.size()); }
    int total() const;

    bool operator==(const MultiIndex&) const = default;
};

/// Reverse lexicographic order on multi-indices of equal total: a < b iff
/// for some k, a[k] < b[k] and the entries after position k all agree.
/// (m,0,...,0) is least and (0,...,0,m) greatest. Throws on unequal totals.
std::strong_ordering revlex_compare(const MultiIndex& a, const MultiIndex& b);

/// Map comparator: ascending total degree, then lexicographic.
struct GradedLexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// All multi-indices of total m over n slots, sorted by revlex. The count is
/// binomial(n+m-1, m).
std::vector<MultiIndex> multi_indices(int n, int m);

/// Multinomial coefficient |a|! / (a1! ... an!), the number of distinct
/// words in the equipollence class of a.
BigInt multinomial(const MultiIndex& a);

/// The multiplicity vector of w over generators 1..n; two words map to the
/// same multi-index iff they are equipollent.
MultiIndex equipollence_class(const Word& w, int n);

/// The ordered representative X1^a1 ... Xn^an of the class.
Word sorted_word(const MultiIndex& a);

/// Every distinct word in the class of a, in lexicographic order.
std::vector<Word> class_words(const MultiIndex& a);

} // namespace pbw
