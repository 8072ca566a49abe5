#include "pbw/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "pbw/errors.hpp"
#include "pbw/rewrite.hpp"

namespace pbw {

bool pivot_priority_greater(const Word& a, const Word& b) {
    const int ia = a.inversions(), ib = b.inversions();
    if (ia != ib)
        return ia > ib;
    return canonical_compare(a, b) > 0;
}

EchelonSpace::EchelonSpace(int gen_count, int degree_bound)
    : n_(gen_count), degree_bound_(degree_bound) {
    if (gen_count < 0 || degree_bound < 0)
        throw DomainError("echelon space needs gen_count, degree_bound >= 0");
}

FreePoly EchelonSpace::reduce(FreePoly p) const {
    if (p.gen_count() != n_)
        throw DomainError("generator-count mismatch");
    if (p.degree().value_or(0) > degree_bound_)
        throw DomainError("polynomial degree exceeds the echelon bound");
    // Rows are mutually reduced, so one pass in any order suffices.
    for (const EchelonRow& row : rows_) {
        const Rational c = p.coeff(row.pivot);
        if (c != 0)
            p -= c * row.poly;
    }
    return p;
}

bool EchelonSpace::member(const FreePoly& p) const {
    return reduce(p).is_zero();
}

void EchelonSpace::insert(FreePoly v) {
    v = reduce(std::move(v));
    if (v.is_zero())
        return;
    const Word* pivot = nullptr;
    for (const auto& [w, c] : v.terms())
        if (!pivot || pivot_priority_greater(w, *pivot))
            pivot = &w;
    const Word pivot_word = *pivot;
    v *= Rational(1) / v.coeff(pivot_word);
    for (EchelonRow& row : rows_) {
        const Rational c = row.poly.coeff(pivot_word);
        if (c != 0)
            row.poly -= c * v;
    }
    EchelonRow fresh{pivot_word, std::move(v)};
    const auto position = std::lower_bound(
        rows_.begin(), rows_.end(), fresh, [](const EchelonRow& a, const EchelonRow& b) {
            return pivot_priority_greater(a.pivot, b.pivot);
        });
    rows_.insert(position, std::move(fresh));
}

namespace {

std::size_t filtered_dimension(int n, int d, std::size_t cap) {
    BigInt total = 0;
    BigInt power = 1;
    for (int m = 0; m <= d; ++m) {
        total += power;
        power *= n;
        if (total > cap)
            throw ResourceError("word space of degree <= " + std::to_string(d) + " needs " +
                                total.str() + "+ dimensions, over the cap of " +
                                std::to_string(cap));
    }
    return static_cast<std::size_t>(total);
}

} // namespace

EchelonSpace trinomial_span(const BracketTable& t, int degree_bound, std::size_t dim_cap) {
    if (t.n < 1)
        throw DomainError("table needs at least one generator");
    filtered_dimension(t.n, degree_bound, dim_cap);
    EchelonSpace space(t.n, degree_bound);
    for (int total = 2; total <= degree_bound; ++total)
        for (int left = 0; left + 2 <= total; ++left) {
            const int right = total - 2 - left;
            for (const Word& prefix : words_of_degree(t.n, left))
                for (const Word& suffix : words_of_degree(t.n, right))
                    for (int a = 1; a <= t.n; ++a)
                        for (int b = a + 1; b <= t.n; ++b)
                            space.insert(trinomial(t, prefix, a, b, suffix));
        }
    return space;
}

std::size_t quotient_dimension(const BracketTable& t, int degree_bound, std::size_t dim_cap) {
    const std::size_t dim = filtered_dimension(t.n, degree_bound, dim_cap);
    return dim - trinomial_span(t, degree_bound, dim_cap).rank();
}

PbwIndependenceReport check_pbw_independence(const ValidatedLie& lie, int degree_bound,
                                             std::size_t dim_cap) {
    const BracketTable& t = lie.table;
    const std::size_t dim = filtered_dimension(t.n, degree_bound, dim_cap);
    const EchelonSpace space = trinomial_span(t, degree_bound, dim_cap);

    PbwIndependenceReport report;
    report.degree_bound = degree_bound;
    report.rank = space.rank();
    report.quotient_dim = dim - space.rank();
    report.expected_dim = binomial(t.n + degree_bound, degree_bound);

    // (a) Independence: a nonzero span element supported on ordered words
    // would surface as a row whose pivot is ordered (the pivot preference
    // puts unsorted words first, so an ordered pivot means an all-ordered
    // row).
    report.ordered_monomials_independent = true;
    for (const EchelonRow& row : space.rows())
        if (row.pivot.is_sorted())
            report.ordered_monomials_independent = false;

    // (b) Spanning: every word's coset representative uses ordered words
    // only.
    report.ordered_monomials_span = true;
    for (int m = 0; m <= degree_bound && report.ordered_monomials_span; ++m)
        for (const Word& w : words_of_degree(t.n, m)) {
            const FreePoly reduced = space.reduce(FreePoly::monomial(t.n, w));
            for (const auto& [word, c] : reduced.terms())
                if (!word.is_sorted()) {
                    report.ordered_monomials_span = false;
                    break;
                }
            if (!report.ordered_monomials_span)
                break;
        }
    return report;
}

std::string PbwIndependenceReport::text() const {
    std::ostringstream out;
    out << "pbw independence check (degree <= " << degree_bound << ")\n";
    out << "span rank: " << rank << "\n";
    out << "quotient dimension: " << quotient_dim << "\n";
    out << "expected dimension: " << expected_dim.str() << "\n";
    out << "ordered monomials independent: " << (ordered_monomials_independent ? "yes" : "no")
        << "\n";
    out << "ordered monomials span the quotient: " << (ordered_monomials_span ? "yes" : "no")
        << "\n";
    if (pass()) {
        out << "PASS\n";
    } else {
        out << "FAIL ";
        if (!ordered_monomials_independent)
            out << "a combination of ordered monomials lies in the trinomial span";
        else
            out << "some coset has no ordered representative";
        out << "\n";
    }
    return out.str();
}

MatrixAssignment::MatrixAssignment(const BracketTable& t, std::vector<RationalMatrix> matrices)
    : n_(t.n), matrices_(std::move(matrices)) {
    if (static_cast<int>(matrices_.size()) != n_)
        throw DomainError("assignment needs one matrix per generator");
    if (n_ == 0)
        throw DomainError("assignment needs at least one generator");
    dim_ = matrices_[0].rows();
    for (const RationalMatrix& m : matrices_)
        if (m.rows() != dim_ || m.cols() != dim_)
            throw DomainError("assignment matrices must be square of one common size");
    // Commutators must realize the table bracket; this makes evaluate-based
    // differential tests sound by construction.
    for (int i = 1; i <= n_; ++i)
        for (int k = i + 1; k <= n_; ++k) {
            RationalMatrix commutator =
                matrices_[i - 1] * matrices_[k - 1] - matrices_[k - 1] * matrices_[i - 1];
            RationalMatrix expected(dim_, dim_);
            const FreePoly bracket_value = t.bracket_generators(i, k);
            for (const auto& [w, c] : bracket_value.terms())
                expected = expected + c * matrices_[w.idx[0] - 1];
            if (!(commutator == expected))
                throw DomainError("matrix commutator of generators " + std::to_string(i) + "," +
                                  std::to_string(k) + " does not realize the bracket");
        }
}

const RationalMatrix& MatrixAssignment::matrix(int i) const {
    if (i < 1 || i > n_)
        throw DomainError("generator index out of range");
    return matrices_[i - 1];
}

RationalMatrix evaluate(const FreePoly& p, const MatrixAssignment& assignment) {
    if (p.gen_count() != assignment.gen_count())
        throw DomainError("generator-count mismatch between polynomial and assignment");
    RationalMatrix result(assignment.dim(), assignment.dim());
    for (const auto& [w, c] : p.terms()) {
        RationalMatrix product = RationalMatrix::identity(assignment.dim());
        for (int i : w.idx)
            product = product * assignment.matrix(i);
        result = result + c * product;
    }
    return result;
}

} // namespace pbw
