#pragma once

#include <map>
#include <string>

#include "pbw/freepoly.hpp"
#include "pbw/multi_index.hpp"
#include "pbw/rational.hpp"

namespace pbw {

/// An element of the commutative polynomial algebra on x1..xn, stored as a
/// finite map from exponent vectors to nonzero coefficients.
class SymPoly {
public:
    using TermMap = std::map<MultiIndex, Rational, GradedLexLess>;

    SymPoly() = default;
    explicit SymPoly(int gen_count);

    static SymPoly zero(int n) { return SymPoly(n); }
    static SymPoly unit(int n, Rational c = Rational(1));
    static SymPoly variable(int n, int i);
    static SymPoly monomial(int n, MultiIndex a, Rational c = Rational(1));

    int gen_count() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const MultiIndex& a) const;
    void add_term(const MultiIndex& a, const Rational& c);

    SymPoly& operator+=(const SymPoly& rhs);
    SymPoly operator+(const SymPoly& rhs) const;
    SymPoly operator-(const SymPoly& rhs) const;
    SymPoly operator*(const SymPoly& rhs) const;
    SymPoly& operator*=(const Rational& c);

    bool operator==(const SymPoly&) const = default;

    SymPoly homogeneous_component(int m) const;
    std::optional<int> degree() const;

private:
    int n_ = 0;
    TermMap terms_;
};

SymPoly operator*(const Rational& c, const SymPoly& p);
SymPoly pow(const SymPoly& p, int e);

/// The commutative image of a noncommutative polynomial: each word collapses
/// onto its equipollence class.
SymPoly commutative_image(const FreePoly& p);

std::string render(const SymPoly& p);

} // namespace pbw
