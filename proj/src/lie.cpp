#include "pbw/lie.hpp"

#include "pbw/errors.hpp"

namespace pbw {

void BracketTable::check_index(int i) const {
    if (i < 1 || i > n)
        throw DomainError("generator index " + std::to_string(i) + " out of range 1.." +
                          std::to_string(n));
}

void BracketTable::set_bracket(int i, int k, const SparseVector& value) {
    check_index(i);
    check_index(k);
    if (i == k) {
        if (!value.empty())
            throw DomainError("[X" + std::to_string(i) + ",X" + std::to_string(i) +
                              "] must be zero");
        return;
    }
    SparseVector stored;
    for (const auto& [s, c] : value) {
        check_index(s);
        if (c != 0)
            stored.emplace(s, i < k ? c : Rational(-c));
    }
    const auto key = i < k ? std::make_pair(i, k) : std::make_pair(k, i);
    if (stored.empty())
        entries.erase(key);
    else
        entries[key] = std::move(stored);
}

FreePoly BracketTable::bracket_generators(int i, int k) const {
    check_index(i);
    check_index(k);
    FreePoly result(n);
    if (i == k)
        return result;
    const auto key = i < k ? std::make_pair(i, k) : std::make_pair(k, i);
    auto it = entries.find(key);
    if (it == entries.end())
        return result;
    const Rational orientation(i < k ? 1 : -1);
    for (const auto& [s, c] : it->second)
        result.add_term(Word{s}, orientation * c);
    return result;
}

std::string BracketTable::name_of(int i) const {
    if (i >= 1 && i <= static_cast<int>(names.size()) && !names[i - 1].empty())
        return names[i - 1];
    return "X" + std::to_string(i);
}

std::vector<std::string> BracketTable::display_names() const {
    std::vector<std::string> result;
    result.reserve(n);
    for (int i = 1; i <= n; ++i)
        result.push_back(name_of(i));
    return result;
}

namespace {

// Degree-1 homogeneous (or zero) polynomials are the Lie algebra elements.
void require_linear(const FreePoly& p, const char* role) {
    for (const auto& [w, c] : p.terms())
        if (w.degree() != 1)
            throw DomainError(std::string(role) + " operand of bracket is not degree-1 homogeneous");
}

} // namespace

FreePoly bracket(const BracketTable& t, const FreePoly& p, const FreePoly& q) {
    if (p.gen_count() != t.n || q.gen_count() != t.n)
        throw DomainError("bracket operands must live over the table's generators");
    require_linear(p, "left");
    require_linear(q, "right");
    FreePoly result(t.n);
    for (const auto& [wp, cp] : p.terms())
        for (const auto& [wq, cq] : q.terms()) {
            FreePoly g = t.bracket_generators(wp.idx[0], wq.idx[0]);
            g *= cp * cq;
            result += g;
        }
    return result;
}

FreePoly jacobi_residue(const BracketTable& t, int i, int j, int k) {
    t.check_index(i);
    t.check_index(j);
    t.check_index(k);
    const FreePoly xi = FreePoly::generator(t.n, i);
    const FreePoly xj = FreePoly::generator(t.n, j);
    const FreePoly xk = FreePoly::generator(t.n, k);
    FreePoly result = bracket(t, bracket(t, xi, xj), xk);
    result += bracket(t, bracket(t, xj, xk), xi);
    result += bracket(t, bracket(t, xk, xi), xj);
    return result;
}

ValidationResult validate(const BracketTable& t) {
    if (t.n < 1)
        throw DomainError("a bracket table needs at least one generator");
    ValidationResult result;
    std::vector<std::array<int, 3>> certificate;
    for (int i = 1; i <= t.n; ++i)
        for (int j = i + 1; j <= t.n; ++j)
            for (int k = j + 1; k <= t.n; ++k) {
                FreePoly residue = jacobi_residue(t, i, j, k);
                if (residue.is_zero())
                    certificate.push_back({i, j, k});
                else
                    result.violations.push_back({i, j, k, std::move(residue)});
            }
    if (result.violations.empty())
        result.lie = ValidatedLie{t, std::move(certificate)};
    return result;
}

BracketTable builtin(Family family, int n) {
    if (n < 1)
        throw DomainError("builtin families require n >= 1");
    BracketTable t;
    switch (family) {
    case Family::abelian: {
        t.n = n;
        break;
    }
    case Family::heisenberg: {
        t.n = 2 * n + 1;
        t.names.resize(t.n);
        const int r = 2 * n + 1;
        for (int j = 1; j <= n; ++j) {
            t.names[j - 1] = n == 1 ? "P" : "P" + std::to_string(j);
            t.names[n + j - 1] = n == 1 ? "Q" : "Q" + std::to_string(j);
        }
        t.names[r - 1] = "R";
        for (int j = 1; j <= n; ++j)
            t.set_bracket(j, n + j, {{r, Rational(-1)}});
        break;
    }
    case Family::gl: {
        t.n = n * n;
        t.names.resize(t.n);
        auto index = [n](int i, int j) { return (i - 1) * n + j; };
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                t.names[index(i, j) - 1] = "X" + std::to_string(i) + std::to_string(j);
        // [Xij, Xkl] = delta_jk Xil - delta_li Xkj
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k)
                    for (int l = 1; l <= n; ++l) {
                        const int a = index(i, j), b = index(k, l);
                        if (a >= b)
                            continue;
                        BracketTable::SparseVector v;
                        if (j == k)
                            v[index(i, l)] += Rational(1);
                        if (l == i)
                            v[index(k, j)] += Rational(-1);
                        t.set_bracket(a, b, v);
                    }
        break;
    }
    }
    return t;
}

Family parse_family(const std::string& name) {
    if (name == "abelian")
        return Family::abelian;
    if (name == "heisenberg")
        return Family::heisenberg;
    if (name == "gl")
        return Family::gl;
    throw ParseError("unknown algebra family '" + name + "' (expected abelian, heisenberg, or gl)");
}

} // namespace pbw
