#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "pbw/cli.hpp"
#include "pbw/errors.hpp"
#include "pbw/lie.hpp"
#include "pbw/parse.hpp"

using namespace pbw;

namespace {

const std::string kData = PBW_TEST_DATA_DIR;

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli_run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("expression parsing against an algebra") {
    const BracketTable h1 = builtin(Family::heisenberg, 1);

    const FreePoly commutator = parse_expression("X1*X2 - X2*X1", h1).poly;
    CHECK(commutator.term_count() == 2);

    // named generators resolve through the table; [P,Q] expands to -R
    CHECK(parse_expression("[P, Q]", h1).poly == -FreePoly::generator(3, 3));
    CHECK(parse_expression("[Q, P]", h1).poly == FreePoly::generator(3, 3));

    const FreePoly cube = parse_expression("(X1+X2)^3", h1).poly;
    CHECK(cube.term_count() == 8);
    CHECK(cube.degree() == 3);

    // precedence: ^ over * over +/-, unary minus as 0 - term
    CHECK(parse_expression("2*X1^2", h1).poly ==
          Rational(2) * FreePoly::monomial(3, Word{1, 1}));
    CHECK(parse_expression("-X1 + X2", h1).poly ==
          FreePoly::generator(3, 2) - FreePoly::generator(3, 1));
    CHECK(parse_expression("1/2*P*Q", h1).poly ==
          Rational(1, 2) * FreePoly::monomial(3, Word{1, 2}));
    CHECK(parse_expression("3/4", h1).poly == FreePoly::unit(3, Rational(3, 4)));
}

TEST_CASE("expression parse errors carry positions") {
    const BracketTable h1 = builtin(Family::heisenberg, 1);

    CHECK_THROWS_WITH_AS(parse_expression("X1 + ", h1), doctest::Contains("column 6"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_expression("Z9", h1), doctest::Contains("unknown generator"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_expression("X9", h1), doctest::Contains("out of range"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_expression("[P*Q, R]", h1),
                         doctest::Contains("degree-1 homogeneous"), ParseError);
    CHECK_THROWS_AS(parse_expression("X1 X2", h1), ParseError); // '*' is mandatory
    CHECK_THROWS_AS(parse_expression("(X1", h1), ParseError);
    CHECK_THROWS_AS(parse_expression("X1^-2", h1), ParseError);
    CHECK_THROWS_AS(parse_expression("", h1), ParseError);

    // brackets need a context
    CHECK_THROWS_WITH_AS(parse_expression("[X1, X2]"), doctest::Contains("algebra context"),
                         ParseError);
}

TEST_CASE("normalize golden output") {
    const CliResult ordered =
        run({"normalize", "--basis", "ordered", kData + "/heisenberg1.alg", "Q*P"});
    CHECK(ordered.code == 0);
    CHECK(ordered.out == "P*Q + R\n");

    const CliResult regular =
        run({"normalize", "--basis", "regular", kData + "/heisenberg1.alg", "P*Q"});
    CHECK(regular.code == 0);
    CHECK(regular.out == "1/2*P*Q + 1/2*Q*P - 1/2*R\n");

    const CliResult traced =
        run({"normalize", "--basis", "ordered", "--trace", kData + "/heisenberg1.alg", "Q*P"});
    CHECK(traced.code == 0);
    CHECK(traced.out == "P*Q + R\n1 | 2 1 | 1 | +\n");
}

TEST_CASE("check exit codes across valid, invalid, and malformed files") {
    const CliResult valid = run({"check", kData + "/heisenberg1.alg"});
    CHECK(valid.code == 0);
    CHECK(valid.out.find("valid Lie algebra") != std::string::npos);

    const CliResult invalid = run({"check", kData + "/bad_jacobi.alg"});
    CHECK(invalid.code == 1);
    CHECK(invalid.out.find("(1,2,3)") != std::string::npos);
    CHECK(invalid.out.find("X3") != std::string::npos);

    const CliResult malformed = run({"check", kData + "/malformed.alg"});
    CHECK(malformed.code == 2);
    CHECK(malformed.err.find("malformed.alg:2") != std::string::npos);

    CHECK(run({"check", kData + "/no_such_file.alg"}).code == 2);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"normalize", kData + "/heisenberg1.alg"}).code == 2); // missing expr
    CHECK(run({"normalize", "--basis", "sideways", kData + "/heisenberg1.alg", "P"}).code == 2);
    CHECK(run({"residue", kData + "/heisenberg1.alg", "1", "2"}).code == 2);
    CHECK(run({"builtin", "unknown", "2"}).code == 2);
    CHECK(run({"normalize", "--basis", "ordered", kData + "/heisenberg1.alg", "Q**P"}).code ==
          2);
}

TEST_CASE("semantic failures exit 1") {
    // a command requiring a Lie algebra refuses a Jacobi violation
    const CliResult refused =
        run({"normalize", "--basis", "ordered", kData + "/bad_jacobi.alg", "X2*X1"});
    CHECK(refused.code == 1);
    CHECK(refused.err.find("Jacobi") != std::string::npos);

    // unless forced, in which case the result is marked non-canonical
    const CliResult forced = run(
        {"normalize", "--basis", "ordered", "--force", kData + "/bad_jacobi.alg", "X2*X1"});
    CHECK(forced.code == 0);
    CHECK(forced.out == "X1*X2 - X3\n");
    CHECK(forced.err.find("not canonical") != std::string::npos);

    // witness on a valid table has nothing to certify
    CHECK(run({"witness", kData + "/heisenberg1.alg", "1", "2", "3"}).code == 1);

    const CliResult witness = run({"witness", kData + "/bad_jacobi.alg", "1", "2", "3"});
    CHECK(witness.code == 0);
    CHECK(witness.out.substr(0, 3) == "X3\n");
}

TEST_CASE("residue, oracle, decompose, symmetrize, builtin behave") {
    const CliResult residue = run({"residue", kData + "/bad_jacobi.alg", "1", "2", "3"});
    CHECK(residue.code == 0);
    CHECK(residue.out == "X3\n");

    const CliResult oracle = run({"oracle", "--max-degree", "3", kData + "/heisenberg1.alg"});
    CHECK(oracle.code == 0);
    CHECK(oracle.out.find("quotient dimension: 20") != std::string::npos);
    CHECK(oracle.out.ends_with("PASS\n"));

    CHECK(run({"oracle", "--max-degree", "3", kData + "/bad_jacobi.alg"}).code == 1);
    CHECK(run({"oracle", "--max-degree", "12", kData + "/heisenberg1.alg"}).code == 3);

    const CliResult decompose = run({"decompose", "2", "X1*X2 + X2*X1"});
    CHECK(decompose.code == 0);
    CHECK(decompose.out.find("^2") != std::string::npos);
    CHECK(run({"decompose", "2", "X1*X2"}).code == 2); // not regular

    const CliResult symmetrize = run({"symmetrize", "X1*X2"});
    CHECK(symmetrize.code == 0);
    CHECK(symmetrize.out == "1/2*X1*X2 + 1/2*X2*X1\n");

    const CliResult emitted = run({"builtin", "heisenberg", "1"});
    CHECK(emitted.code == 0);
    CHECK(emitted.out.find("bracket 1 2 : -1 3") != std::string::npos);

    const CliResult matrices =
        run({"basis-matrix", "--max-degree", "1", kData + "/heisenberg1.alg"});
    CHECK(matrices.code == 0);
    CHECK(matrices.out.find("basis: 1 P Q R") != std::string::npos);
}

TEST_CASE("identical invocations are byte-identical") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"oracle", "--max-degree", "3", kData + "/heisenberg1.alg"},
          std::vector<std::string>{"normalize", "--basis", "regular",
                                   kData + "/heisenberg1.alg", "Q*P*Q"},
          std::vector<std::string>{"basis-matrix", "--max-degree", "2",
                                   kData + "/heisenberg1.alg"}}) {
        const CliResult first = run(args);
        const CliResult second = run(args);
        CHECK(first.out == second.out);
        CHECK(first.code == second.code);
    }
}
