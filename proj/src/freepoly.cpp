#include "pbw/freepoly.hpp"

#include <algorithm>

#include "pbw/errors.hpp"

namespace pbw {

FreePoly::FreePoly(int gen_count) : n_(gen_count) {
    if (gen_count < 0)
        throw DomainError("generator count must be >= 0");
}

FreePoly FreePoly::unit(int n, Rational c) {
    FreePoly p(n);
    p.add_term(Word{}, c);
    return p;
}

FreePoly FreePoly::generator(int n, int i) {
    if (i < 1 || i > n)
        throw DomainError("generator index " + std::to_string(i) + " out of range 1.." +
                          std::to_string(n));
    FreePoly p(n);
    p.add_term(Word{i}, Rational(1));
    return p;
}

FreePoly FreePoly::monomial(int n, Word w, Rational c) {
    FreePoly p(n);
    p.add_term(std::move(w), c);
    return p;
}

std::optional<int> FreePoly::degree() const {
    if (terms_.empty())
        return std::nullopt;
    return terms_.rbegin()->first.degree();
}

Rational FreePoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void FreePoly::add_term(const Word& w, const Rational& c) {
    if (c == 0)
        return;
    for (int i : w.idx)
        if (i < 1 || i > n_)
            throw DomainError("word index " + std::to_string(i) + " out of range 1.." +
                              std::to_string(n_));
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void FreePoly::require_same_generators(const FreePoly& other) const {
    if (n_ != other.n_)
        throw DomainError("generator-count mismatch: " + std::to_string(n_) + " vs " +
                          std::to_string(other.n_));
}

FreePoly& FreePoly::operator+=(const FreePoly& rhs) {
    require_same_generators(rhs);
    for (const auto& [w, c] : rhs.terms_)
        add_term(w, c);
    return *this;
}

FreePoly& FreePoly::operator-=(const FreePoly& rhs) {
    require_same_generators(rhs);
    for (const auto& [w, c] : rhs.terms_)
        add_term(w, -c);
    return *this;
}

FreePoly FreePoly::operator+(const FreePoly& rhs) const {
    FreePoly result = *this;
    result += rhs;
    return result;
}

FreePoly FreePoly::operator-(const FreePoly& rhs) const {
    FreePoly result = *this;
    result -= rhs;
    return result;
}

FreePoly FreePoly::operator-() const {
    FreePoly result(n_);
    for (const auto& [w, c] : terms_)
        result.terms_.emplace(w, -c);
    return result;
}

FreePoly FreePoly::operator*(const FreePoly& rhs) const {
    require_same_generators(rhs);
    FreePoly result(n_);
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : rhs.terms_)
            result.add_term(wa.concat(wb), ca * cb);
    return result;
}

FreePoly& FreePoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coeff] : terms_)
        coeff *= c;
    return *this;
}

FreePoly operator*(const Rational& c, const FreePoly& p) {
    FreePoly result = p;
    result *= c;
    return result;
}

FreePoly pow(const FreePoly& p, int e) {
    if (e < 0)
        throw DomainError("negative exponent");
    FreePoly result = FreePoly::unit(p.gen_count());
    for (int k = 0; k < e; ++k)
        result = result * p;
    return result;
}

FreePoly FreePoly::homogeneous_component(int m) const {
    if (m < 0)
        throw DomainError("degree must be >= 0");
    FreePoly result(n_);
    for (const auto& [w, c] : terms_)
        if (w.degree() == m)
            result.terms_.emplace(w, c);
    return result;
}

bool FreePoly::is_homogeneous() const {
    if (terms_.empty())
        return true;
    return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

std::string render(const FreePoly& p, const std::vector<std::string>* names) {
    if (p.is_zero())
        return "0";

    // Leading terms first: descending degree, lexicographic within a degree.
    // The term map iterates ascending, so walk degree blocks from the back.
    std::vector<std::pair<const Word*, const Rational*>> order;
    order.reserve(p.term_count());
    auto it = p.terms().rbegin();
    while (it != p.terms().rend()) {
        const int d = it->first.degree();
        auto block_end = it;
        while (block_end != p.terms().rend() && block_end->first.degree() == d)
            ++block_end;
        std::vector<std::pair<const Word*, const Rational*>> block;
        for (auto b = it; b != block_end; ++b)
            block.emplace_back(&b->first, &b->second);
        std::reverse(block.begin(), block.end());
        order.insert(order.end(), block.begin(), block.end());
        it = block_end;
    }

    std::string out;
    bool first = true;
    for (const auto& [w, c] : order) {
        const bool negative = *c < 0;
        if (first) {
            if (negative)
                out += '-';
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = negative ? Rational(-*c) : *c;
        if (w->empty()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += render(*w, names);
        } else {
            out += to_string(mag) + "*" + render(*w, names);
        }
    }
    return out;
}

} // namespace pbw
