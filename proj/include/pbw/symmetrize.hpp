#pragma once

#include <vector>

#include "pbw/freepoly.hpp"
#include "pbw/multi_index.hpp"
#include "pbw/sympoly.hpp"

namespace pbw {

inline constexpr int kDefaultDigitBudget = 10000;

/// The symmetrized monomial of the class a: the average over all orderings
/// of the factors, equivalently 1/multinomial(a) times the sum of all
/// distinct words in the class. The result is regular.
FreePoly sym(const MultiIndex& a);

/// The symmetrization map: the linear extension of sym over classes. A
/// vector-space isomorphism of the commutative algebra onto the regular
/// polynomials (it is not multiplicative), but it does send powers of linear
/// forms to the corresponding noncommutative powers.
FreePoly phi(const SymPoly& p);

/// True iff within every equipollence class, either all words of the class
/// appear with one common coefficient or none appear. Equivalently: p is a
/// linear combination of powers of linear forms; equivalently its
/// coefficients are constant under all index permutations of each word.
bool is_regular(const FreePoly& p);

/// The unique regular polynomial equipollent to a homogeneous p: each
/// class's total coefficient is redistributed uniformly over the class.
/// Idempotent, and preserves per-class coefficient sums.
FreePoly regular_equipollent(const FreePoly& p);

/// Inverse of phi on regular polynomials: the coefficient of x^a is
/// multinomial(a) times p's per-word coefficient on the class a.
SymPoly phi_inverse(const FreePoly& p);

/// A tuple (c1,...,cn) of positive integers with c^b >= r * c^a whenever
/// a precedes b in the reverse lexicographic order on classes of total m.
/// Built as c1 = 1, ck = r * c(k-1)^m, so entries grow doubly
/// exponentially; refuses (ResourceError) once an entry would exceed the
/// digit budget.
std::vector<BigInt> revlex_dominating_tuple(int n, int m, const BigInt& r,
                                            int digit_budget = kDefaultDigitBudget);

/// A linear form c1*X1 + ... + cn*Xn.
struct LinearForm {
    std::vector<Rational> coefficients;

    int size() const { return static_cast<int>(coefficients.size()); }
    FreePoly as_freepoly() const;
    SymPoly as_sympoly() const;

    bool operator==(const LinearForm&) const = default;
};

struct PowerSummand {
    Rational coeff;
    LinearForm form;
    int exponent = 0;
};

/// A representation p = sum of coeff * form^exponent; re-expanding is exact.
struct PowerDecomposition {
    std::vector<PowerSummand> summands;

    FreePoly expand(int n) const;
};

/// Writes a regular homogeneous polynomial as a combination of at most
/// binomial(n+m-1, m) m-th powers of linear forms. Decompositions are not
/// unique; the contract is exact re-expansion. Proceeds by induction over
/// the classes in reverse lexicographic order, at each step solving for the
/// next symmetrized monomial inside the power of a dominating-tuple form.
PowerDecomposition power_decomposition(const FreePoly& p,
                                       int digit_budget = kDefaultDigitBudget);

} // namespace pbw
