#include "pbw/word.hpp"

#include <algorithm>

#include "pbw/errors.hpp"

namespace pbw {

bool Word::is_sorted() const {
    return std::is_sorted(idx.begin(), idx.end());
}

int Word::inversions() const {
    int count = 0;
    for (std::size_t p = 0; p < idx.size(); ++p)
        for (std::size_t q = p + 1; q < idx.size(); ++q)
            if (idx[p] > idx[q])
                ++count;
    return count;
}

int Word::max_index() const {
    int m = 0;
    for (int i : idx)
        m = std::max(m, i);
    return m;
}

Word Word::concat(const Word& other) const {
    Word result = *this;
    result.idx.insert(result.idx.end(), other.idx.begin(), other.idx.end());
    return result;
}

Word Word::subword(int from, int len) const {
    if (from < 0 || len < 0 || from + len > degree())
        throw DomainError("subword range out of bounds");
    return Word(std::vector<int>(idx.begin() + from, idx.begin() + from + len));
}

std::strong_ordering canonical_compare(const Word& a, const Word& b) {
    if (a.idx.size() != b.idx.size())
        return a.idx.size() <=> b.idx.size();
    return std::lexicographical_compare_three_way(a.idx.begin(), a.idx.end(),
                                                  b.idx.begin(), b.idx.end());
}

std::string render(const Word& w, const std::vector<std::string>* names) {
    if (w.empty())
        return "1";
    std::string out;
    for (std::size_t k = 0; k < w.idx.size(); ++k) {
        if (k > 0)
            out += '*';
        const int i = w.idx[k];
        if (names && i >= 1 && i <= static_cast<int>(names->size()) && !(*names)[i - 1].empty())
            out += (*names)[i - 1];
        else
            out += "X" + std::to_string(i);
    }
    return out;
}

std::vector<Word> words_of_degree(int n, int m) {
    if (n < 0 || m < 0)
        throw DomainError("words_of_degree requires n, m >= 0");
    std::vector<Word> result;
    Word current(std::vector<int>(m, 1));
    if (m == 0) {
        result.push_back(current);
        return result;
    }
    if (n == 0)
        return result; // no words of positive degree without generators
    while (true) {
        result.push_back(current);
        int k = m - 1;
        while (k >= 0 && current.idx[k] == n)
            current.idx[k--] = 1;
        if (k < 0)
            break;
        ++current.idx[k];
    }
    return result;
}

} // namespace pbw
