#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pbw/freepoly.hpp"
#include "pbw/lie.hpp"
#include "pbw/matrix.hpp"

namespace pbw {

inline constexpr std::size_t kDefaultDimensionCap = 100000;

/// Pivot preference for the echelon form: words with more inversions are
/// eliminated first (ties broken by the canonical order, larger first), so
/// coset representatives end up supported on ordered monomials.
bool pivot_priority_greater(const Word& a, const Word& b);

struct EchelonRow {
    Word pivot;
    FreePoly poly; // pivot coefficient 1; pivot absent from every other row
};

/// Row-reduced basis of a subspace of the degree-filtered word space. This
/// is the brute-force ground truth the rewriting engine is checked against:
/// it never consults the reducer.
class EchelonSpace {
public:
    EchelonSpace(int gen_count, int degree_bound);

    int gen_count() const { return n_; }
    int degree_bound() const { return degree_bound_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<EchelonRow>& rows() const { return rows_; }

    /// Fully reduces p against the rows; the result is the canonical coset
    /// representative. Throws DomainError when deg(p) exceeds the bound.
    FreePoly reduce(FreePoly p) const;

    /// True iff p reduces to zero, i.e. p lies in the spanned subspace.
    bool member(const FreePoly& p) const;

    /// Inserts the row span of v (reduces, normalizes, back-eliminates).
    void insert(FreePoly v);

private:
    int n_ = 0;
    int degree_bound_ = 0;
    std::vector<EchelonRow> rows_; // kept sorted by pivot priority, highest first
};

/// Reduced echelon basis of the span of all trinomial products
/// P(XiXj - XjXi - [Xi,Xj])Q of total degree <= degree_bound, with P and Q
/// ranging over all words. Refuses (ResourceError) when the word space
/// would exceed the cap.
EchelonSpace trinomial_span(const BracketTable& t, int degree_bound,
                            std::size_t dim_cap = kDefaultDimensionCap);

/// dim of the degree-filtered word space minus the rank of the trinomial
/// span. For a validated Lie table this equals binomial(n+d, d).
std::size_t quotient_dimension(const BracketTable& t, int degree_bound,
                               std::size_t dim_cap = kDefaultDimensionCap);

struct PbwIndependenceReport {
    int degree_bound = 0;
    std::size_t rank = 0;
    std::size_t quotient_dim = 0;
    BigInt expected_dim;
    bool ordered_monomials_independent = false; // no ordered combination falls in the span
    bool ordered_monomials_span = false;        // every word reduces to ordered support

    bool pass() const { return ordered_monomials_independent && ordered_monomials_span; }

    /// Plain-text summary; the last line is exactly `PASS` or `FAIL <reason>`.
    std::string text() const;
};

PbwIndependenceReport check_pbw_independence(const ValidatedLie& lie, int degree_bound,
                                             std::size_t dim_cap = kDefaultDimensionCap);

/// One square matrix per generator; the commutator of each assigned pair
/// must match the assignment of the table bracket (checked at
/// construction, so differential tests against evaluate are sound).
class MatrixAssignment {
public:
    MatrixAssignment(const BracketTable& t, std::vector<RationalMatrix> matrices);

    int gen_count() const { return n_; }
    std::size_t dim() const { return dim_; }
    const RationalMatrix& matrix(int i) const;

private:
    int n_ = 0;
    std::size_t dim_ = 0;
    std::vector<RationalMatrix> matrices_;
};

/// Multiplicative-linear evaluation: words map to matrix products, the unit
/// word to the identity.
RationalMatrix evaluate(const FreePoly& p, const MatrixAssignment& assignment);

} // namespace pbw
