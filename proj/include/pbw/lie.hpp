#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pbw/freepoly.hpp"
#include "pbw/rational.hpp"

namespace pbw {

/// Structure constants of a bracket on basis generators X1..Xn. Only pairs
/// with i < k are stored; antisymmetry is enforced by the representation
/// ([Xk,Xi] = -[Xi,Xk], [Xi,Xi] = 0) rather than checked. The Jacobi
/// identity is NOT assumed; validate() checks it.
struct BracketTable {
    using SparseVector = std::map<int, Rational>;

    int n = 0;
    std::map<std::pair<int, int>, SparseVector> entries;
    std::vector<std::string> names; // display names; identity is by index

    /// Records [Xi,Xk] = sum over (s, c) of c*Xs, normalizing orientation.
    void set_bracket(int i, int k, const SparseVector& value);

    /// [Xi,Xk] as a degree <= 1 polynomial, for any orientation of (i,k).
    FreePoly bracket_generators(int i, int k) const;

    std::string name_of(int i) const;
    std::vector<std::string> display_names() const;

    void check_index(int i) const;
};

/// Bilinear extension of the bracket to degree-1 homogeneous polynomials
/// (zero allowed). Throws DomainError if an operand has a word of length
/// != 1.
FreePoly bracket(const BracketTable& t, const FreePoly& p, const FreePoly& q);

/// The cyclic double-bracket sum [[Xi,Xj],Xk] + [[Xj,Xk],Xi] + [[Xk,Xi],Xj].
/// Vanishing for every triple is exactly the Jacobi identity.
FreePoly jacobi_residue(const BracketTable& t, int i, int j, int k);

struct JacobiViolation {
    int i, j, k;
    FreePoly residue;
};

/// A table whose Jacobi identity has been checked on every strictly
/// increasing triple of basis indices; the certificate lists them.
struct ValidatedLie {
    BracketTable table;
    std::vector<std::array<int, 3>> certificate;
};

struct ValidationResult {
    std::optional<ValidatedLie> lie; // engaged iff every residue vanished
    std::vector<JacobiViolation> violations;

    bool ok() const { return lie.has_value(); }
};

/// Checks jacobi_residue on all triples 1 <= i < j < k <= n. Failure is a
/// structured report listing every violating triple, not an exception.
ValidationResult validate(const BracketTable& t);

enum class Family { abelian, heisenberg, gl };

/// Built-in algebra families at any finite size:
///   abelian(n)    — n generators, all brackets zero;
///   heisenberg(n) — 2n+1 generators P1..Pn, Q1..Qn, R with
///                   [Pj,Qk] = -delta_jk R and R central;
///   gl(n)         — n^2 generators Xij (row-major) with
///                   [Xij,Xkl] = delta_jk Xil - delta_li Xkj.
BracketTable builtin(Family family, int n);

Family parse_family(const std::string& name);

} // namespace pbw
