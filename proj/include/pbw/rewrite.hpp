#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pbw/freepoly.hpp"
#include "pbw/lie.hpp"
#include "pbw/matrix.hpp"
#include "pbw/multi_index.hpp"

namespace pbw {

/// The trinomial product P(XiXj - XjXi - [Xi,Xj])Q. These products span the
/// defining ideal of the enveloping algebra: an element is equivalent to
/// zero exactly when it is a linear combination of them.
FreePoly trinomial(const BracketTable& t, const Word& prefix, int i, int j, const Word& suffix);

/// The polynomial equivalent to P*Xi*Xj*Q with the pair transposed:
/// P*Xj*Xi*Q + P*[Xi,Xj]*Q. The correction term has degree exactly one
/// less.
FreePoly swap_rewrite(const BracketTable& t, const Word& prefix, int i, int j,
                      const Word& suffix);

enum class Orientation { forward, backward };

/// One application of the trinomial relation at a position. `scale` is the
/// positive magnitude of the coefficient the application carried; the sign
/// rides on the orientation (forward = +, backward = -).
struct RewriteStep {
    Word prefix;
    int i = 0;
    int j = 0;
    Word suffix;
    Orientation orient = Orientation::forward;
    Rational scale = Rational(1);
};

/// A sequence of rewrite steps. For a trace recorded by a reduction,
/// expand(trace) equals input - output; for a witness it equals the witness
/// value. Every intermediate difference lies in the trinomial span.
struct RewriteTrace {
    std::vector<RewriteStep> steps;
};

/// Sum of the signed, scaled trinomial products of the steps.
FreePoly expand(const RewriteTrace& trace, const BracketTable& t);

/// One step per line: `P | i j | Q | +/-`, words in canonical form (unit
/// word prints "1"); a trailing `| a/b` field appears when the scale is not
/// one.
std::string render(const RewriteTrace& trace, const std::vector<std::string>* names = nullptr);

/// The canonical strategy sorts the first unsorted word by its leftmost
/// descent; the randomized strategy picks admissible swaps uniformly. Both
/// reach the same normal form over a validated table.
enum class Strategy { canonical, randomized };

struct ReduceOptions {
    bool force = false; // proceed on a non-Lie table; the result is marked non-canonical
    Strategy strategy = Strategy::canonical;
    std::uint64_t seed = 0;
    bool want_trace = true;
};

struct NormalForm {
    FreePoly value;
    bool canonical = true; // false only when forced through a non-Lie table
    RewriteTrace trace;
};

/// The regular normal form: the unique regular polynomial equivalent to p
/// over a validated table. Peels the top homogeneous component, replaces it
/// by its regular equipollent, rewrites the difference one degree down
/// through transposition paths, and recurses.
NormalForm reduce_to_regular(const FreePoly& p, const BracketTable& t,
                             const ReduceOptions& options = {});

/// The ordered-monomial normal form: the unique equivalent polynomial
/// supported on nondecreasing words. Straightening strictly decreases
/// (degree, inversion count) lexicographically, so it terminates.
NormalForm pbw_normal_form(const FreePoly& p, const BracketTable& t,
                           const ReduceOptions& options = {});

/// True iff p - q reduces to zero, i.e. p and q represent the same element
/// of the enveloping algebra. Requires a validated table.
bool equivalent(const FreePoly& p, const FreePoly& q, const BracketTable& t);

/// Exact change of coordinates between the symmetrized basis {sym(a)} and
/// the ordered-monomial basis {X^a} for |a| <= max_degree. The two matrices
/// are mutual inverses.
struct BasisChange {
    std::vector<MultiIndex> basis; // canonical order: by degree, then by sorted word
    RationalMatrix sym_to_ordered;
    RationalMatrix ordered_to_sym;
};

BasisChange basis_change(const ValidatedLie& lie, int max_degree,
                         std::size_t dim_cap = 100000);

/// For a table with a nonzero Jacobi residue on (i,j,k): a nonzero regular
/// degree-1 polynomial (the residue itself) together with an explicit
/// combination of trinomial products that expands to it exactly — a regular
/// polynomial equivalent to zero, certifying that normal forms cannot be
/// unique. Throws SemanticError when the residue vanishes.
struct Witness {
    FreePoly value;
    RewriteTrace trace;
};

Witness nonuniqueness_witness(const BracketTable& t, int i, int j, int k);

} // namespace pbw
