#include "pbw/symmetrize.hpp"

#include <cassert>

#include "pbw/errors.hpp"

namespace pbw {

FreePoly sym(const MultiIndex& a) {
    const int n = a.size();
    FreePoly result(n);
    const Rational weight(BigInt(1), multinomial(a));
    for (const Word& w : class_words(a))
        result.add_term(w, weight);
    return result;
}

FreePoly phi(const SymPoly& p) {
    FreePoly result(p.gen_count());
    for (const auto& [a, c] : p.terms())
        result += c * sym(a);
    return result;
}

bool is_regular(const FreePoly& p) {
    const int n = p.gen_count();
    // Regularity is graded; check class-by-class within each degree. A class
    // qualifies when all of its words appear with one common coefficient.
    std::map<MultiIndex, std::pair<Rational, BigInt>, GradedLexLess> classes;
    for (const auto& [w, c] : p.terms()) {
        MultiIndex a = equipollence_class(w, n);
        auto [it, inserted] = classes.emplace(a, std::make_pair(c, BigInt(1)));
        if (!inserted) {
            if (it->second.first != c)
                return false;
            ++it->second.second;
        }
    }
    for (const auto& [a, seen] : classes)
        if (seen.second != multinomial(a))
            return false;
    return true;
}

FreePoly regular_equipollent(const FreePoly& p) {
    if (!p.is_homogeneous())
        throw DomainError("regular_equipollent requires homogeneous input");
    const int n = p.gen_count();
    std::map<MultiIndex, Rational, GradedLexLess> class_sums;
    for (const auto& [w, c] : p.terms())
        class_sums[equipollence_class(w, n)] += c;
    FreePoly result(n);
    for (const auto& [a, total] : class_sums)
        result += total * sym(a);
    return result;
}

SymPoly phi_inverse(const FreePoly& p) {
    if (!is_regular(p))
        throw DomainError("phi_inverse requires a regular polynomial");
    const int n = p.gen_count();
    SymPoly result(n);
    std::map<MultiIndex, Rational, GradedLexLess> per_word;
    for (const auto& [w, c] : p.terms())
        per_word.emplace(equipollence_class(w, n), c); // first word of each class wins
    for (const auto& [a, c] : per_word)
        result.add_term(a, Rational(multinomial(a)) * c);
    return result;
}

std::vector<BigInt> revlex_dominating_tuple(int n, int m, const BigInt& r, int digit_budget) {
    if (n < 1 || m < 0 || r < 1)
        throw DomainError("revlex_dominating_tuple requires n >= 1, m >= 0, r >= 1");
    std::vector<BigInt> c;
    c.reserve(n);
    c.push_back(1);
    for (int k = 2; k <= n; ++k) {
        BigInt next = r * boost::multiprecision::pow(c.back(), static_cast<unsigned>(m));
        if (decimal_digits(next) > static_cast<std::size_t>(digit_budget))
            throw ResourceError("dominating tuple entry c" + std::to_string(k) + " exceeds the " +
                                std::to_string(digit_budget) + "-digit budget (n=" +
                                std::to_string(n) + ", m=" + std::to_string(m) + ")");
        c.push_back(std::move(next));
    }
    return c;
}

FreePoly LinearForm::as_freepoly() const {
    FreePoly result(size());
    for (int i = 0; i < size(); ++i)
        result.add_term(Word{i + 1}, coefficients[i]);
    return result;
}

SymPoly LinearForm::as_sympoly() const {
    SymPoly result(size());
    for (int i = 0; i < size(); ++i) {
        MultiIndex a(std::vector<int>(size(), 0));
        a.exp[i] = 1;
        result.add_term(a, coefficients[i]);
    }
    return result;
}

FreePoly PowerDecomposition::expand(int n) const {
    FreePoly result(n);
    for (const auto& s : summands) {
        if (s.form.size() != n)
            throw DomainError("linear form size does not match generator count");
        result += s.coeff * pow(s.form.as_freepoly(), s.exponent);
    }
    return result;
}

namespace {

// Combination of m-th powers, keyed by the form's coefficient vector.
using PowerCombo = std::map<std::vector<Rational>, Rational>;

void add_scaled(PowerCombo& target, const PowerCombo& source, const Rational& scale) {
    if (scale == 0)
        return;
    for (const auto& [form, c] : source) {
        auto [it, inserted] = target.emplace(form, c * scale);
        if (!inserted) {
            it->second += c * scale;
            if (it->second == 0)
                target.erase(it);
        }
    }
}

BigInt floor_nonnegative(const Rational& x) {
    assert(x >= 0);
    return numerator(x) / denominator(x);
}

} // namespace

PowerDecomposition power_decomposition(const FreePoly& p, int digit_budget) {
    if (!p.is_homogeneous())
        throw DomainError("power_decomposition requires homogeneous input");
    if (!is_regular(p))
        throw DomainError("power_decomposition requires a regular polynomial");

    PowerDecomposition result;
    if (p.is_zero())
        return result;

    const int n = p.gen_count();
    const int m = *p.degree();
    if (n == 0) {
        result.summands.push_back({p.coeff(Word{}), LinearForm{}, 0});
        return result;
    }

    const std::vector<MultiIndex> classes = multi_indices(n, m);
    const int count = static_cast<int>(classes.size());
    std::vector<BigInt> binom(count);
    for (int t = 0; t < count; ++t)
        binom[t] = multinomial(classes[t]);

    // State of the induction: for each processed class t, a representation
    //   sym(classes[t]) = powers[t] + sum over u > step of lam[t][u] * sym(classes[u])
    // where powers[t] is a combination of m-th powers of linear forms.
    std::vector<PowerCombo> powers(count);
    std::vector<std::vector<Rational>> lam(count, std::vector<Rational>(count, Rational(0)));

    // First class is (m,0,...,0): its symmetrized monomial is X1^m.
    std::vector<Rational> first_form(n, Rational(0));
    first_form[0] = 1;
    powers[0].emplace(first_form, Rational(1));

    for (int step = 1; step < count; ++step) {
        Rational max_weight(0);
        for (int t = 0; t < step; ++t) {
            Rational weight = Rational(binom[t]) * abs(lam[t][step]);
            if (weight > max_weight)
                max_weight = weight;
        }
        const BigInt r = floor_nonnegative(Rational(count) * max_weight) + 1;
        const std::vector<BigInt> tuple = revlex_dominating_tuple(n, m, r, digit_budget);

        std::vector<BigInt> tuple_power(count);
        for (int u = 0; u < count; ++u) {
            BigInt value = 1;
            for (int k = 0; k < n; ++k)
                value *= boost::multiprecision::pow(tuple[k],
                                                    static_cast<unsigned>(classes[u].exp[k]));
            tuple_power[u] = std::move(value);
        }

        Rational denom = Rational(binom[step] * tuple_power[step]);
        for (int t = 0; t < step; ++t)
            denom += Rational(binom[t] * tuple_power[t]) * lam[t][step];
        assert(denom > 0); // guaranteed by the choice of r

        // Solve for sym(classes[step]) inside (c1 X1 + ... + cn Xn)^m.
        std::vector<Rational> form(n);
        for (int k = 0; k < n; ++k)
            form[k] = Rational(tuple[k]);
        PowerCombo solved;
        solved.emplace(form, Rational(1) / denom);
        for (int t = 0; t < step; ++t)
            add_scaled(solved, powers[t], -Rational(binom[t] * tuple_power[t]) / denom);
        powers[step] = std::move(solved);

        for (int u = step + 1; u < count; ++u) {
            Rational tail = Rational(binom[u] * tuple_power[u]);
            for (int t = 0; t < step; ++t)
                tail += Rational(binom[t] * tuple_power[t]) * lam[t][u];
            lam[step][u] = -tail / denom;
        }

        // Substitute the solved class back into the earlier representations.
        for (int t = 0; t < step; ++t) {
            const Rational a = lam[t][step];
            if (a == 0)
                continue;
            add_scaled(powers[t], powers[step], a);
            for (int u = step + 1; u < count; ++u)
                lam[t][u] += a * lam[step][u];
            lam[t][step] = 0;
        }
    }

    // p = sum over classes of (per-word coefficient) * multinomial * sym.
    PowerCombo total;
    for (int t = 0; t < count; ++t) {
        const Rational per_word = p.coeff(sorted_word(classes[t]));
        if (per_word == 0)
            continue;
        add_scaled(total, powers[t], per_word * Rational(binom[t]));
    }
    for (const auto& [form, coeff] : total)
        result.summands.push_back({coeff, LinearForm{form}, m});
    return result;
}

} // namespace pbw
