#include "pbw/multi_index.hpp"

#include <algorithm>
#include <numeric>

#include "pbw/errors.hpp"

namespace pbw {

int MultiIndex::total() const {
    return std::accumulate(exp.begin(), exp.end(), 0);
}

std::strong_ordering revlex_compare(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size())
        throw DomainError("revlex_compare requires equal lengths");
    if (a.total() != b.total())
        throw DomainError("revlex_compare requires equal totals");
    for (int k = a.size() - 1; k >= 0; --k) {
        if (a.exp[k] != b.exp[k])
            return a.exp[k] <=> b.exp[k];
    }
    return std::strong_ordering::equal;
}

bool GradedLexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
    const int ta = a.total(), tb = b.total();
    if (ta != tb)
        return ta < tb;
    return a.exp < b.exp;
}

std::vector<MultiIndex> multi_indices(int n, int m) {
    if (n < 1 || m < 0)
        throw DomainError("multi_indices requires n >= 1 and m >= 0");
    std::vector<MultiIndex> result;
    MultiIndex current(std::vector<int>(n, 0));
    // Enumerate compositions recursively, then sort by revlex.
    std::vector<int> stack;
    auto emit = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == n - 1) {
            current.exp[slot] = remaining;
            result.push_back(current);
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            current.exp[slot] = v;
            self(self, slot + 1, remaining - v);
        }
    };
    emit(emit, 0, m);
    std::sort(result.begin(), result.end(),
              [](const MultiIndex& a, const MultiIndex& b) { return revlex_compare(a, b) < 0; });
    return result;
}

BigInt multinomial(const MultiIndex& a) {
    BigInt result = 1;
    int seen = 0;
    for (int e : a.exp) {
        if (e < 0)
            throw DomainError("negative exponent in multi-index");
        for (int k = 1; k <= e; ++k) {
            ++seen;
            result *= seen;
            result /= k;
        }
    }
    return result;
}

MultiIndex equipollence_class(const Word& w, int n) {
    MultiIndex a(std::vector<int>(n, 0));
    for (int i : w.idx) {
        if (i < 1 || i > n)
            throw DomainError("word index out of range");
        ++a.exp[i - 1];
    }
    return a;
}

Word sorted_word(const MultiIndex& a) {
    Word w;
    for (int i = 0; i < a.size(); ++i)
        for (int k = 0; k < a.exp[i]; ++k)
            w.idx.push_back(i + 1);
    return w;
}

std::vector<Word> class_words(const MultiIndex& a) {
    std::vector<Word> result;
    Word w = sorted_word(a);
    do {
        result.push_back(w);
    } while (std::next_permutation(w.idx.begin(), w.idx.end()));
    return result;
}

} // namespace pbw
