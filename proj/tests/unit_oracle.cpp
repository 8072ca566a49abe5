#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "pbw/errors.hpp"
#include "pbw/oracle.hpp"
#include "pbw/rewrite.hpp"
#include "pbw/symmetrize.hpp"

using namespace pbw;

namespace {

BracketTable bad_table() {
    BracketTable t;
    t.n = 3;
    t.set_bracket(1, 2, {{3, Rational(1)}});
    t.set_bracket(2, 3, {{1, Rational(1)}});
    t.set_bracket(3, 1, {{1, Rational(1)}});
    return t;
}

FreePoly random_poly(std::mt19937_64& rng, int n, int max_degree, int terms) {
    std::uniform_int_distribution<int> degree_pick(0, max_degree);
    std::uniform_int_distribution<int> index_pick(1, n);
    std::uniform_int_distribution<int> num_pick(-5, 5);
    std::uniform_int_distribution<int> den_pick(1, 4);
    FreePoly p(n);
    for (int t = 0; t < terms; ++t) {
        Word w;
        const int d = degree_pick(rng);
        for (int k = 0; k < d; ++k)
            w.idx.push_back(index_pick(rng));
        p.add_term(w, Rational(num_pick(rng), den_pick(rng)));
    }
    return p;
}

RationalMatrix elementary(std::size_t size, std::size_t r, std::size_t c, Rational v = Rational(1)) {
    RationalMatrix m(size, size);
    m.at(r, c) = v;
    return m;
}

// X1 -> E12, X2 -> E23, X3 -> -E13 realizes the 3-generator Heisenberg table.
MatrixAssignment heisenberg_assignment() {
    return MatrixAssignment(builtin(Family::heisenberg, 1),
                            {elementary(3, 0, 1), elementary(3, 1, 2),
                             elementary(3, 0, 2, Rational(-1))});
}

// the defining assignment Xij -> Eij of gl(2)
MatrixAssignment gl2_assignment() {
    return MatrixAssignment(builtin(Family::gl, 2), {elementary(2, 0, 0), elementary(2, 0, 1),
                                                     elementary(2, 1, 0), elementary(2, 1, 1)});
}

} // namespace

TEST_CASE("trinomial span ranks on small tables") {
    // abelian(2) at degree 2: the single row X1X2 - X2X1
    const EchelonSpace ab = trinomial_span(builtin(Family::abelian, 2), 2);
    CHECK(ab.rank() == 1);
    CHECK(ab.rows()[0].pivot == Word{2, 1});

    // heisenberg(1) at degree 2: one trinomial per generator pair
    CHECK(trinomial_span(builtin(Family::heisenberg, 1), 2).rank() == 3);

    // trinomials have degree >= 2, so the span below degree 2 is empty
    CHECK(trinomial_span(bad_table(), 1).rank() == 0);
    CHECK(trinomial_span(bad_table(), 0).rank() == 0);
}

TEST_CASE("membership") {
    const BracketTable h1 = builtin(Family::heisenberg, 1);
    const EchelonSpace space = trinomial_span(h1, 3);

    CHECK(space.member(trinomial(h1, Word{}, 1, 2, Word{})));
    CHECK(space.member(trinomial(h1, Word{3}, 2, 1, Word{})));
    CHECK(space.member(FreePoly(3)));

    // the quotient contains all of the Lie algebra: no nonzero linear
    // polynomial is equivalent to zero over a validated table
    CHECK_FALSE(space.member(FreePoly::generator(3, 3)));
    CHECK_FALSE(space.member(FreePoly::generator(3, 1) - FreePoly::generator(3, 2)));

    CHECK_THROWS_AS(space.member(FreePoly::monomial(3, Word{1, 1, 2, 2})), DomainError);
}

TEST_CASE("quotient dimensions at desk scale") {
    CHECK(quotient_dimension(builtin(Family::abelian, 2), 2) == 6);   // binom(4,2)
    CHECK(quotient_dimension(builtin(Family::heisenberg, 1), 2) == 10); // binom(5,2)
    CHECK(quotient_dimension(builtin(Family::gl, 2), 2) == 15);       // binom(6,2)

    // the degree-1 residue of the bad table collapses into the span
    CHECK(quotient_dimension(bad_table(), 3) < 20); // binom(6,3) would be 20
}

TEST_CASE("jacobi necessity, quantitatively") {
    const BracketTable bad = bad_table();
    const FreePoly residue = jacobi_residue(bad, 1, 2, 3);
    REQUIRE(residue == FreePoly::generator(3, 3));

    const EchelonSpace space = trinomial_span(bad, 3);
    CHECK(space.member(residue)); // nonzero, regular, degree 1 - yet equivalent to zero
    CHECK(is_regular(residue));

    // the witness trace lands in the span as well, step by step
    const Witness witness = nonuniqueness_witness(bad, 1, 2, 3);
    CHECK(space.member(expand(witness.trace, bad)));
}

TEST_CASE("pbw independence reports") {
    const ValidatedLie h1 = *validate(builtin(Family::heisenberg, 1)).lie;
    const PbwIndependenceReport report = check_pbw_independence(h1, 3);
    CHECK(report.pass());
    CHECK(report.quotient_dim == 20);
    CHECK(report.expected_dim == 20);
    const std::string text = report.text();
    CHECK(text.find("PASS") != std::string::npos);
    CHECK(text.ends_with("PASS\n"));

    const ValidatedLie ab = *validate(builtin(Family::abelian, 2)).lie;
    CHECK(check_pbw_independence(ab, 4).pass());

    // heisenberg(1) at degree 4, gl(2) at degree 3, abelian(3) at degree 4:
    // all pass with quotient 35
    for (const auto& [lie, degree] :
         {std::pair{*validate(builtin(Family::heisenberg, 1)).lie, 4},
          std::pair{*validate(builtin(Family::gl, 2)).lie, 3},
          std::pair{*validate(builtin(Family::abelian, 3)).lie, 4}}) {
        const PbwIndependenceReport full = check_pbw_independence(lie, degree);
        CHECK(full.pass());
        CHECK(full.quotient_dim == 35);
        CHECK(full.expected_dim == 35);
    }
}

TEST_CASE("oracle agrees with both reducers on random inputs") {
    std::mt19937_64 rng(601);
    ReduceOptions quiet;
    quiet.want_trace = false;
    for (const BracketTable& t : {builtin(Family::heisenberg, 1), builtin(Family::gl, 2),
                                  builtin(Family::abelian, 4)}) {
        const int d = t.n >= 4 ? 3 : 4;
        const EchelonSpace space = trinomial_span(t, d);
        for (int trial = 0; trial < 25; ++trial) {
            const FreePoly p = random_poly(rng, t.n, d, 4);
            CHECK(space.member(p - pbw_normal_form(p, t, quiet).value));
            CHECK(space.member(p - reduce_to_regular(p, t, quiet).value));
        }
    }
}

TEST_CASE("canonical coset representatives equal the pbw normal form") {
    ReduceOptions quiet;
    quiet.want_trace = false;
    for (const BracketTable& t : {builtin(Family::heisenberg, 1), builtin(Family::gl, 2)}) {
        const int d = t.n >= 4 ? 2 : 3;
        const EchelonSpace space = trinomial_span(t, d);
        for (int m = 0; m <= d; ++m)
            for (const Word& w : words_of_degree(t.n, m)) {
                const FreePoly monomial = FreePoly::monomial(t.n, w);
                CHECK(space.reduce(monomial) == pbw_normal_form(monomial, t, quiet).value);
            }
    }
}

TEST_CASE("ordered monomials do not collapse under the reducer") {
    const BracketTable h1 = builtin(Family::heisenberg, 1);
    ReduceOptions quiet;
    quiet.want_trace = false;
    for (int m = 0; m <= 4; ++m)
        for (const MultiIndex& a : multi_indices(3, m)) {
            const FreePoly ordered = FreePoly::monomial(3, sorted_word(a));
            CHECK(pbw_normal_form(ordered, h1, quiet).value == ordered);
        }
}

TEST_CASE("dimension caps refuse oversized requests") {
    CHECK_THROWS_AS(trinomial_span(builtin(Family::heisenberg, 2), 8, 1000), ResourceError);
    CHECK_THROWS_AS(quotient_dimension(builtin(Family::gl, 3), 6, 500), ResourceError);
}

TEST_CASE("matrix assignments validate the bracket at construction") {
    CHECK_NOTHROW(heisenberg_assignment());
    CHECK_NOTHROW(gl2_assignment());

    // swapping two matrices breaks the commutator relations
    CHECK_THROWS_AS(MatrixAssignment(builtin(Family::heisenberg, 1),
                                     {elementary(3, 1, 2), elementary(3, 0, 1),
                                      elementary(3, 0, 2, Rational(-1))}),
                    DomainError);
    CHECK_THROWS_AS(MatrixAssignment(builtin(Family::heisenberg, 1), {elementary(3, 0, 1)}),
                    DomainError);
}

TEST_CASE("evaluate on the heisenberg assignment") {
    const MatrixAssignment assignment = heisenberg_assignment();
    // E23*E12 = 0 and E12*E23 - E13 = 0, matching the normal form X2X1 -> X1X2 + X3
    CHECK(evaluate(FreePoly::monomial(3, Word{2, 1}), assignment).is_zero());
    CHECK(evaluate(FreePoly::monomial(3, Word{1, 2}) + FreePoly::generator(3, 3), assignment)
              .is_zero());
    CHECK(evaluate(FreePoly::unit(3), assignment) == RationalMatrix::identity(3));
}

TEST_CASE("evaluate is an algebra map and is blind to the quotient") {
    std::mt19937_64 rng(602);
    ReduceOptions quiet;
    quiet.want_trace = false;

    const MatrixAssignment h = heisenberg_assignment();
    const BracketTable h1 = builtin(Family::heisenberg, 1);
    const MatrixAssignment g = gl2_assignment();
    const BracketTable gl2 = builtin(Family::gl, 2);

    for (int trial = 0; trial < 30; ++trial) {
        const FreePoly p = random_poly(rng, 3, 3, 4);
        const FreePoly q = random_poly(rng, 3, 3, 4);
        CHECK(evaluate(p * q, h) == evaluate(p, h) * evaluate(q, h));
        CHECK(evaluate(p, h) == evaluate(pbw_normal_form(p, h1, quiet).value, h));

        const FreePoly u = random_poly(rng, 4, 3, 4);
        CHECK(evaluate(u, g) == evaluate(pbw_normal_form(u, gl2, quiet).value, g));
    }

    // abelian tables evaluate through commuting diagonals
    BracketTable ab = builtin(Family::abelian, 2);
    RationalMatrix d1(2, 2), d2(2, 2);
    d1.at(0, 0) = 2;
    d1.at(1, 1) = 3;
    d2.at(0, 0) = 5;
    d2.at(1, 1) = 7;
    const MatrixAssignment diag(ab, {d1, d2});
    CHECK(evaluate(FreePoly::monomial(2, Word{1, 2}), diag) ==
          evaluate(FreePoly::monomial(2, Word{2, 1}), diag));
}
