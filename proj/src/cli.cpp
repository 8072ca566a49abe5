#include "pbw/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "pbw/algebra_io.hpp"
#include "pbw/errors.hpp"
#include "pbw/oracle.hpp"
#include "pbw/parse.hpp"
#include "pbw/rewrite.hpp"
#include "pbw/symmetrize.hpp"

namespace pbw {

namespace {

// The expression positional is literal text; "-" reads standard input and
// "@path" reads a file.
std::string read_expression_argument(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in)
            throw ParseError("cannot open expression file '" + arg.substr(1) + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }
    return arg;
}

void print_violations(std::ostream& out, const BracketTable& table,
                      const std::vector<JacobiViolation>& violations) {
    const std::vector<std::string> names = table.display_names();
    out << "not a Lie algebra: " << violations.size() << " failing Jacobi triple(s)\n";
    for (const JacobiViolation& v : violations)
        out << "  (" << v.i << "," << v.j << "," << v.k << "): residue "
            << render(v.residue, &names) << "\n";
}

int run_check(std::ostream& out, const std::string& spec) {
    const BracketTable table = load_algebra_file(spec);
    const ValidationResult result = validate(table);
    if (result.ok()) {
        out << "valid Lie algebra: " << table.n << " generator(s), "
            << result.lie->certificate.size() << " Jacobi triple(s) verified\n";
        return 0;
    }
    print_violations(out, table, result.violations);
    return 1;
}

int run_normalize(std::ostream& out, std::ostream& err, const std::string& spec,
                  const std::string& expr_arg, const std::string& basis, bool trace,
                  bool force) {
    if (basis != "regular" && basis != "ordered")
        throw ParseError("--basis must be 'regular' or 'ordered'");
    const BracketTable table = load_algebra_file(spec);
    const std::vector<std::string> names = table.display_names();
    const ParsedExpression parsed =
        parse_expression(read_expression_argument(expr_arg), table);
    ReduceOptions options;
    options.force = force;
    options.want_trace = trace;
    const NormalForm nf = basis == "regular" ? reduce_to_regular(parsed.poly, table, options)
                                             : pbw_normal_form(parsed.poly, table, options);
    out << render(nf.value, &names) << "\n";
    if (trace)
        out << render(nf.trace, &names);
    if (!nf.canonical)
        err << "warning: the table is not a Lie algebra; the result is not canonical\n";
    return 0;
}

int run_symmetrize(std::ostream& out, const std::string& expr_arg) {
    const ParsedExpression parsed = parse_expression(read_expression_argument(expr_arg));
    out << render(phi(commutative_image(parsed.poly))) << "\n";
    return 0;
}

int run_decompose(std::ostream& out, const std::string& spec_or_n,
                  const std::string& expr_arg) {
    const bool numeric = !spec_or_n.empty() &&
                         std::all_of(spec_or_n.begin(), spec_or_n.end(),
                                     [](unsigned char c) { return std::isdigit(c); });
    std::vector<std::string> names;
    ParsedExpression parsed;
    const std::string text = read_expression_argument(expr_arg);
    if (numeric) {
        if (spec_or_n.size() > 6)
            throw ParseError("generator count too large");
        const int n = std::stoi(spec_or_n);
        if (n < 1)
            throw ParseError("generator count must be >= 1");
        parsed = parse_expression(text, n);
        for (int i = 1; i <= n; ++i)
            names.push_back("X" + std::to_string(i));
    } else {
        const BracketTable table = load_algebra_file(spec_or_n);
        names = table.display_names();
        parsed = parse_expression(text, table);
    }
    const PowerDecomposition pd = power_decomposition(parsed.poly);
    if (pd.summands.empty()) {
        out << "0\n";
        return 0;
    }
    for (const PowerSummand& s : pd.summands)
        out << to_string(s.coeff) << " * (" << render(s.form.as_freepoly(), &names) << ")^"
            << s.exponent << "\n";
    return 0;
}

int run_residue(std::ostream& out, const std::string& spec, int i, int j, int k) {
    const BracketTable table = load_algebra_file(spec);
    const std::vector<std::string> names = table.display_names();
    out << render(jacobi_residue(table, i, j, k), &names) << "\n";
    return 0;
}

int run_witness(std::ostream& out, const std::string& spec, int i, int j, int k) {
    const BracketTable table = load_algebra_file(spec);
    const std::vector<std::string> names = table.display_names();
    const Witness witness = nonuniqueness_witness(table, i, j, k);
    out << render(witness.value, &names) << "\n";
    out << render(witness.trace, &names);
    return 0;
}

int run_oracle(std::ostream& out, const std::string& spec, int max_degree) {
    const BracketTable table = load_algebra_file(spec);
    const ValidationResult result = validate(table);
    if (!result.ok()) {
        print_violations(out, table, result.violations);
        return 1;
    }
    const PbwIndependenceReport report = check_pbw_independence(*result.lie, max_degree);
    out << report.text();
    return report.pass() ? 0 : 1;
}

int run_basis_matrix(std::ostream& out, const std::string& spec, int max_degree) {
    const BracketTable table = load_algebra_file(spec);
    const ValidationResult result = validate(table);
    if (!result.ok()) {
        print_violations(out, table, result.violations);
        return 1;
    }
    const std::vector<std::string> names = table.display_names();
    const BasisChange bc = basis_change(*result.lie, max_degree);
    out << "basis:";
    for (const MultiIndex& a : bc.basis)
        out << " " << render(sorted_word(a), &names);
    out << "\nsym-to-ordered:\n" << bc.sym_to_ordered.str();
    out << "ordered-to-sym:\n" << bc.ordered_to_sym.str();
    return 0;
}

int run_builtin(std::ostream& out, const std::string& family, int n) {
    out << algebra_text(builtin(parse_family(family), n));
    return 0;
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact normal forms in universal enveloping algebras"};
    app.name("pbw");
    app.require_subcommand(1);

    std::string spec, expr, basis = "ordered", family, spec_or_n;
    int index_i = 0, index_j = 0, index_k = 0;
    int max_degree = 0, size_n = 0;
    bool trace = false, force = false;

    CLI::App* check = app.add_subcommand("check", "validate an algebra file");
    check->add_option("spec", spec, "algebra file")->required();

    CLI::App* normalize =
        app.add_subcommand("normalize", "reduce an expression to a normal form");
    normalize->add_option("--basis", basis, "normal form flavor: regular or ordered")
        ->default_str("ordered");
    normalize->add_flag("--trace", trace, "print the rewrite steps");
    normalize->add_flag("--force", force, "proceed on a non-Lie table (non-canonical result)");
    normalize->add_option("spec", spec, "algebra file")->required();
    normalize->add_option("expr", expr, "expression ('-' for stdin, '@file' for a file)")
        ->required();

    CLI::App* symmetrize_cmd =
        app.add_subcommand("symmetrize", "symmetrize the commutative reading of an expression");
    symmetrize_cmd->add_option("expr", expr, "expression")->required();

    CLI::App* decompose =
        app.add_subcommand("decompose", "write a regular polynomial as powers of linear forms");
    decompose->add_option("spec-or-n", spec_or_n, "algebra file or a generator count")
        ->required();
    decompose->add_option("expr", expr, "expression")->required();

    CLI::App* residue = app.add_subcommand("residue", "print a Jacobi residue");
    residue->add_option("spec", spec, "algebra file")->required();
    residue->add_option("i", index_i)->required();
    residue->add_option("j", index_j)->required();
    residue->add_option("k", index_k)->required();

    CLI::App* witness = app.add_subcommand("witness", "print a non-uniqueness witness");
    witness->add_option("spec", spec, "algebra file")->required();
    witness->add_option("i", index_i)->required();
    witness->add_option("j", index_j)->required();
    witness->add_option("k", index_k)->required();

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force PBW independence check");
    oracle->add_option("--max-degree", max_degree, "degree bound")->required();
    oracle->add_option("spec", spec, "algebra file")->required();

    CLI::App* basis_matrix =
        app.add_subcommand("basis-matrix", "symmetrized vs ordered basis conversion matrices");
    basis_matrix->add_option("--max-degree", max_degree, "degree bound")->required();
    basis_matrix->add_option("spec", spec, "algebra file")->required();

    CLI::App* builtin_cmd = app.add_subcommand("builtin", "emit a built-in algebra file");
    builtin_cmd->add_option("family", family, "abelian, heisenberg, or gl")->required();
    builtin_cmd->add_option("n", size_n, "family size")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(check))
            return run_check(out, spec);
        if (app.got_subcommand(normalize))
            return run_normalize(out, err, spec, expr, basis, trace, force);
        if (app.got_subcommand(symmetrize_cmd))
            return run_symmetrize(out, expr);
        if (app.got_subcommand(decompose))
            return run_decompose(out, spec_or_n, expr);
        if (app.got_subcommand(residue))
            return run_residue(out, spec, index_i, index_j, index_k);
        if (app.got_subcommand(witness))
            return run_witness(out, spec, index_i, index_j, index_k);
        if (app.got_subcommand(oracle))
            return run_oracle(out, spec, max_degree);
        if (app.got_subcommand(basis_matrix))
            return run_basis_matrix(out, spec, max_degree);
        if (app.got_subcommand(builtin_cmd))
            return run_builtin(out, family, size_n);
        err << "error: no command given\n";
        return 2;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const SemanticError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int k = 1; k < argc; ++k)
        args.emplace_back(argv[k]);
    return cli_run(args, std::cout, std::cerr);
}

} // namespace pbw
