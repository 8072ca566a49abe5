#include "pbw/rewrite.hpp"

#include <algorithm>
#include <random>

#include "pbw/errors.hpp"
#include "pbw/symmetrize.hpp"

namespace pbw {

FreePoly trinomial(const BracketTable& t, const Word& prefix, int i, int j, const Word& suffix) {
    t.check_index(i);
    t.check_index(j);
    const FreePoly left = FreePoly::monomial(t.n, prefix);
    const FreePoly right = FreePoly::monomial(t.n, suffix);
    FreePoly middle = FreePoly::monomial(t.n, Word{i, j});
    middle -= FreePoly::monomial(t.n, Word{j, i});
    middle -= t.bracket_generators(i, j);
    return left * middle * right;
}

FreePoly swap_rewrite(const BracketTable& t, const Word& prefix, int i, int j,
                      const Word& suffix) {
    t.check_index(i);
    t.check_index(j);
    Word transposed = prefix;
    transposed.idx.push_back(j);
    transposed.idx.push_back(i);
    transposed.idx.insert(transposed.idx.end(), suffix.idx.begin(), suffix.idx.end());
    FreePoly result = FreePoly::monomial(t.n, std::move(transposed));
    result += FreePoly::monomial(t.n, prefix) * t.bracket_generators(i, j) *
              FreePoly::monomial(t.n, suffix);
    return result;
}

FreePoly expand(const RewriteTrace& trace, const BracketTable& t) {
    FreePoly result(t.n);
    for (const RewriteStep& step : trace.steps) {
        FreePoly product = trinomial(t, step.prefix, step.i, step.j, step.suffix);
        product *= step.orient == Orientation::forward ? step.scale : Rational(-step.scale);
        result += product;
    }
    return result;
}

std::string render(const RewriteTrace& trace, const std::vector<std::string>* names) {
    std::string out;
    for (const RewriteStep& step : trace.steps) {
        out += render(step.prefix, names);
        out += " | " + std::to_string(step.i) + " " + std::to_string(step.j) + " | ";
        out += render(step.suffix, names);
        out += step.orient == Orientation::forward ? " | +" : " | -";
        if (step.scale != 1)
            out += " | " + to_string(step.scale);
        out += '\n';
    }
    return out;
}

namespace {

struct TableGate {
    bool canonical = true;
};

// Validates unless forced; a non-Lie table without force is a refusal that
// names the first failing triple.
TableGate ensure_lie(const BracketTable& t, bool force) {
    ValidationResult v = validate(t);
    if (v.ok())
        return {true};
    if (!force) {
        const JacobiViolation& first = v.violations.front();
        throw SemanticError("table is not a Lie algebra: Jacobi fails on triple (" +
                            std::to_string(first.i) + "," + std::to_string(first.j) + "," +
                            std::to_string(first.k) + ") with residue " +
                            render(first.residue, nullptr) +
                            " (pass --force to compute a non-canonical result)");
    }
    return {false};
}

int pick_descent(const Word& w, Strategy strategy, std::mt19937_64& rng) {
    std::vector<int> descents;
    for (int k = 0; k + 1 < w.degree(); ++k)
        if (w.idx[k] > w.idx[k + 1])
            descents.push_back(k);
    if (descents.empty())
        return -1;
    if (strategy == Strategy::canonical)
        return descents.front();
    std::uniform_int_distribution<std::size_t> pick(0, descents.size() - 1);
    return descents[pick(rng)];
}

void log_step(RewriteTrace& trace, bool want_trace, Word prefix, int i, int j, Word suffix,
              const Rational& signed_scale) {
    if (!want_trace || signed_scale == 0)
        return;
    RewriteStep step;
    step.prefix = std::move(prefix);
    step.i = i;
    step.j = j;
    step.suffix = std::move(suffix);
    step.orient = signed_scale > 0 ? Orientation::forward : Orientation::backward;
    step.scale = abs(signed_scale);
    trace.steps.push_back(std::move(step));
}

struct SortedWord {
    Word sorted;
    FreePoly correction; // degree one below the input word
    std::vector<RewriteStep> steps;
};

// Transposition path from w to its ordered representative. Each swap
// contributes the correction P*[Xi,Xj]*Q and one unscaled step.
SortedWord sort_word(const BracketTable& t, const Word& w, Strategy strategy,
                     std::mt19937_64& rng, bool want_steps) {
    SortedWord result;
    result.correction = FreePoly(t.n);
    Word current = w;
    for (;;) {
        const int k = pick_descent(current, strategy, rng);
        if (k < 0)
            break;
        Word prefix = current.subword(0, k);
        Word suffix = current.subword(k + 2, current.degree() - k - 2);
        const int i = current.idx[k];
        const int j = current.idx[k + 1];
        result.correction += FreePoly::monomial(t.n, prefix) * t.bracket_generators(i, j) *
                             FreePoly::monomial(t.n, suffix);
        if (want_steps) {
            RewriteStep step;
            step.prefix = std::move(prefix);
            step.i = i;
            step.j = j;
            step.suffix = std::move(suffix);
            result.steps.push_back(std::move(step));
        }
        std::swap(current.idx[k], current.idx[k + 1]);
    }
    result.sorted = std::move(current);
    return result;
}

} // namespace

NormalForm reduce_to_regular(const FreePoly& p, const BracketTable& t,
                             const ReduceOptions& options) {
    if (p.gen_count() != t.n)
        throw DomainError("polynomial and table disagree on the generator count");
    NormalForm result;
    result.canonical = ensure_lie(t, options.force).canonical;
    result.value = FreePoly(t.n);
    std::mt19937_64 rng(options.seed);

    FreePoly remainder = p;
    while (!remainder.is_zero()) {
        const int m = *remainder.degree();
        const FreePoly top = remainder.homogeneous_component(m);
        const FreePoly top_regular = regular_equipollent(top);
        result.value += top_regular;

        // top - top_regular has zero coefficient sum on every class, so the
        // ordered representatives cancel and only the transposition
        // corrections survive, one degree down.
        FreePoly next = remainder - top;
        const FreePoly difference = top - top_regular;
        for (const auto& [w, c] : difference.terms()) {
            SortedWord sorted = sort_word(t, w, options.strategy, rng, options.want_trace);
            next += c * sorted.correction;
            for (RewriteStep& step : sorted.steps)
                log_step(result.trace, options.want_trace, std::move(step.prefix), step.i,
                         step.j, std::move(step.suffix), c);
        }
        remainder = std::move(next);
    }
    return result;
}

NormalForm pbw_normal_form(const FreePoly& p, const BracketTable& t,
                           const ReduceOptions& options) {
    if (p.gen_count() != t.n)
        throw DomainError("polynomial and table disagree on the generator count");
    NormalForm result;
    result.canonical = ensure_lie(t, options.force).canonical;
    std::mt19937_64 rng(options.seed);

    FreePoly f = p;
    for (;;) {
        const Word* chosen = nullptr;
        if (options.strategy == Strategy::canonical) {
            for (const auto& [w, c] : f.terms())
                if (!w.is_sorted()) {
                    chosen = &w;
                    break;
                }
        } else {
            std::vector<const Word*> unsorted;
            for (const auto& [w, c] : f.terms())
                if (!w.is_sorted())
                    unsorted.push_back(&w);
            if (!unsorted.empty()) {
                std::uniform_int_distribution<std::size_t> pick(0, unsorted.size() - 1);
                chosen = unsorted[pick(rng)];
            }
        }
        if (!chosen)
            break;

        const Word w = *chosen; // copy; f is edited below
        const Rational c = f.coeff(w);
        const int k = pick_descent(w, options.strategy, rng);
        Word prefix = w.subword(0, k);
        Word suffix = w.subword(k + 2, w.degree() - k - 2);
        const int i = w.idx[k];
        const int j = w.idx[k + 1];

        f.add_term(w, -c);
        FreePoly replacement = swap_rewrite(t, prefix, i, j, suffix);
        replacement *= c;
        f += replacement;
        log_step(result.trace, options.want_trace, std::move(prefix), i, j, std::move(suffix), c);
    }
    result.value = std::move(f);
    return result;
}

bool equivalent(const FreePoly& p, const FreePoly& q, const BracketTable& t) {
    ReduceOptions options;
    options.want_trace = false;
    return pbw_normal_form(p - q, t, options).value.is_zero();
}

BasisChange basis_change(const ValidatedLie& lie, int max_degree, std::size_t dim_cap) {
    if (max_degree < 0)
        throw DomainError("degree bound must be >= 0");
    const BracketTable& t = lie.table;

    BasisChange result;
    BigInt size = binomial(t.n + max_degree, max_degree);
    if (size > dim_cap)
        throw ResourceError("basis for degree <= " + std::to_string(max_degree) + " needs " +
                            size.str() + " elements, over the cap of " + std::to_string(dim_cap));
    for (int m = 0; m <= max_degree; ++m) {
        std::vector<MultiIndex> layer = multi_indices(t.n, m);
        std::sort(layer.begin(), layer.end(), [](const MultiIndex& a, const MultiIndex& b) {
            return canonical_compare(sorted_word(a), sorted_word(b)) < 0;
        });
        result.basis.insert(result.basis.end(), layer.begin(), layer.end());
    }

    const std::size_t dim = result.basis.size();
    std::map<Word, std::size_t, CanonicalWordLess> row_of;
    for (std::size_t k = 0; k < dim; ++k)
        row_of.emplace(sorted_word(result.basis[k]), k);

    RationalMatrix forward(dim, dim);
    ReduceOptions options;
    options.want_trace = false;
    for (std::size_t col = 0; col < dim; ++col) {
        const FreePoly nf = pbw_normal_form(sym(result.basis[col]), t, options).value;
        for (const auto& [w, c] : nf.terms()) {
            auto it = row_of.find(w);
            if (it == row_of.end())
                throw Error("internal: normal form left the ordered basis"); // unreachable
            forward.at(it->second, col) = c;
        }
    }
    result.sym_to_ordered = forward;
    result.ordered_to_sym = forward.inverse();
    return result;
}

Witness nonuniqueness_witness(const BracketTable& t, int i, int j, int k) {
    FreePoly residue = jacobi_residue(t, i, j, k);
    if (residue.is_zero())
        throw SemanticError("jacobi residue vanishes on (" + std::to_string(i) + "," +
                            std::to_string(j) + "," + std::to_string(k) +
                            "); every regular sum of trinomials is zero and no witness exists");

    Witness witness;
    witness.value = std::move(residue);

    const std::array<std::array<int, 3>, 3> cyclic = {{{i, j, k}, {j, k, i}, {k, i, j}}};
    for (const auto& [a, b, c] : cyclic) {
        // Degree-3 closed chain: -(XaXb - XbXa - [Xa,Xb])Xc + Xc(XaXb - XbXa - [Xa,Xb]).
        RewriteStep left;
        left.i = a;
        left.j = b;
        left.suffix = Word{c};
        left.orient = Orientation::backward;
        witness.trace.steps.push_back(std::move(left));

        RewriteStep right;
        right.prefix = Word{c};
        right.i = a;
        right.j = b;
        right.orient = Orientation::forward;
        witness.trace.steps.push_back(std::move(right));
    }
    for (const auto& [a, b, c] : cyclic) {
        // Degree-2 closing products: -(XsXc - XcXs - [Xs,Xc]) scaled by the
        // structure constant of Xs in [Xa,Xb].
        const FreePoly bracket_ab = t.bracket_generators(a, b);
        for (const auto& [w, coeff] : bracket_ab.terms()) {
            const int s = w.idx[0];
            if (s == c)
                continue; // the trinomial on a repeated pair is identically zero
            RewriteStep closing;
            closing.i = s;
            closing.j = c;
            closing.orient = coeff > 0 ? Orientation::backward : Orientation::forward;
            closing.scale = abs(coeff);
            witness.trace.steps.push_back(std::move(closing));
        }
    }
    return witness;
}

} // namespace pbw
