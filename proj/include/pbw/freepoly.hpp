#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pbw/rational.hpp"
#include "pbw/word.hpp"

namespace pbw {

/// An element of the free associative algebra on generators X1..Xn: a finite
/// map from words to nonzero rational coefficients. Values are immutable in
/// spirit; every operation returns a fresh polynomial and never mutates its
/// inputs, so values may be shared freely across threads.
class FreePoly {
public:
    using TermMap = std::map<Word, Rational, CanonicalWordLess>;

    FreePoly() = default;
    explicit FreePoly(int gen_count);

    static FreePoly zero(int n) { return FreePoly(n); }
    static FreePoly unit(int n, Rational c = Rational(1));
    static FreePoly generator(int n, int i);
    static FreePoly monomial(int n, Word w, Rational c = Rational(1));

    int gen_count() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Degree of the top word; disengaged for the zero polynomial (the
    /// "minus infinity" sentinel, below every natural number).
    std::optional<int> degree() const;

    Rational coeff(const Word& w) const;

    /// Adds c * w, pruning the term if the sum cancels to zero.
    void add_term(const Word& w, const Rational& c);

    FreePoly& operator+=(const FreePoly& rhs);
    FreePoly& operator-=(const FreePoly& rhs);
    FreePoly operator+(const FreePoly& rhs) const;
    FreePoly operator-(const FreePoly& rhs) const;
    FreePoly operator-() const;

    /// Bilinear extension of word concatenation.
    FreePoly operator*(const FreePoly& rhs) const;
    FreePoly& operator*=(const Rational& c);

    bool operator==(const FreePoly&) const = default;

    /// Restriction to the words of length m; summing over all m recovers
    /// the polynomial.
    FreePoly homogeneous_component(int m) const;

    /// True when all words present share one length. Zero is homogeneous.
    bool is_homogeneous() const;

private:
    void require_same_generators(const FreePoly& other) const;

    int n_ = 0;
    TermMap terms_;
};

FreePoly operator*(const Rational& c, const FreePoly& p);
FreePoly pow(const FreePoly& p, int e);

/// Canonical text rendering: terms grouped by descending degree and
/// lexicographically within a degree, "+/-" separated, coefficients in
/// lowest terms, unit coefficients omitted, "0" for the zero polynomial.
/// This rendering is the golden-file contract of the CLI.
std::string render(const FreePoly& p, const std::vector<std::string>* names = nullptr);

} // namespace pbw
