#include "pbw/sympoly.hpp"

#include "pbw/errors.hpp"

namespace pbw {

SymPoly::SymPoly(int gen_count) : n_(gen_count) {
    if (gen_count < 0)
        throw DomainError("generator count must be >= 0");
}

SymPoly SymPoly::unit(int n, Rational c) {
    SymPoly p(n);
    p.add_term(MultiIndex(std::vector<int>(n, 0)), c);
    return p;
}

SymPoly SymPoly::variable(int n, int i) {
    if (i < 1 || i > n)
        throw DomainError("variable index out of range");
    MultiIndex a(std::vector<int>(n, 0));
    a.exp[i - 1] = 1;
    SymPoly p(n);
    p.add_term(a, Rational(1));
    return p;
}

SymPoly SymPoly::monomial(int n, MultiIndex a, Rational c) {
    SymPoly p(n);
    p.add_term(std::move(a), c);
    return p;
}

Rational SymPoly::coeff(const MultiIndex& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SymPoly::add_term(const MultiIndex& a, const Rational& c) {
    if (c == 0)
        return;
    if (a.size() != n_)
        throw DomainError("multi-index length mismatch");
    for (int e : a.exp)
        if (e < 0)
            throw DomainError("negative exponent");
    auto [it, inserted] = terms_.emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

SymPoly& SymPoly::operator+=(const SymPoly& rhs) {
    if (n_ != rhs.n_)
        throw DomainError("generator-count mismatch");
    for (const auto& [a, c] : rhs.terms_)
        add_term(a, c);
    return *this;
}

SymPoly SymPoly::operator+(const SymPoly& rhs) const {
    SymPoly result = *this;
    result += rhs;
    return result;
}

SymPoly SymPoly::operator-(const SymPoly& rhs) const {
    SymPoly result = *this;
    SymPoly neg = rhs;
    neg *= Rational(-1);
    result += neg;
    return result;
}

SymPoly SymPoly::operator*(const SymPoly& rhs) const {
    if (n_ != rhs.n_)
        throw DomainError("generator-count mismatch");
    SymPoly result(n_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : rhs.terms_) {
            MultiIndex sum = a;
            for (int k = 0; k < sum.size(); ++k)
                sum.exp[k] += b.exp[k];
            result.add_term(sum, ca * cb);
        }
    return result;
}

SymPoly& SymPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [a, coeff] : terms_)
        coeff *= c;
    return *this;
}

SymPoly operator*(const Rational& c, const SymPoly& p) {
    SymPoly result = p;
    result *= c;
    return result;
}

SymPoly pow(const SymPoly& p, int e) {
    if (e < 0)
        throw DomainError("negative exponent");
    SymPoly result = SymPoly::unit(p.gen_count());
    for (int k = 0; k < e; ++k)
        result = result * p;
    return result;
}

SymPoly commutative_image(const FreePoly& p) {
    SymPoly result(p.gen_count());
    for (const auto& [w, c] : p.terms())
        result.add_term(equipollence_class(w, p.gen_count()), c);
    return result;
}

SymPoly SymPoly::homogeneous_component(int m) const {
    SymPoly result(n_);
    for (const auto& [a, c] : terms_)
        if (a.total() == m)
            result.terms_.emplace(a, c);
    return result;
}

std::optional<int> SymPoly::degree() const {
    if (terms_.empty())
        return std::nullopt;
    return terms_.rbegin()->first.total();
}

std::string render(const SymPoly& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [a, c] = *it;
        const bool negative = c < 0;
        if (first) {
            if (negative)
                out += '-';
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = negative ? Rational(-c) : c;
        std::string vars;
        for (int k = 0; k < a.size(); ++k) {
            if (a.exp[k] == 0)
                continue;
            if (!vars.empty())
                vars += '*';
            vars += "x" + std::to_string(k + 1);
            if (a.exp[k] > 1)
                vars += "^" + std::to_string(a.exp[k]);
        }
        if (vars.empty())
            out += to_string(mag);
        else if (mag == 1)
            out += vars;
        else
            out += to_string(mag) + "*" + vars;
    }
    return out;
}

} // namespace pbw
