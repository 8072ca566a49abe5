#include "pbw/algebra_io.hpp"

#include <fstream>
#include <sstream>

#include "pbw/errors.hpp"

namespace pbw {

namespace {

[[noreturn]] void fail(const std::string& source, int line, const std::string& message) {
    throw ParseError(source + ":" + std::to_string(line) + ": " + message);
}

int parse_index(const std::string& token, const std::string& source, int line) {
    bool digits = !token.empty() && token.size() <= 9;
    for (char c : token)
        digits = digits && c >= '0' && c <= '9';
    if (!digits)
        fail(source, line, "expected a positive generator index, got '" + token + "'");
    const int value = std::stoi(token);
    if (value < 1)
        fail(source, line, "expected a positive generator index, got '" + token + "'");
    return value;
}

} // namespace

BracketTable load_algebra(std::istream& in, const std::string& source) {
    BracketTable table;
    bool have_dim = false;
    // Orientation rule for duplicate detection: everything is normalized to
    // i < k before comparison.
    std::map<std::pair<int, int>, std::pair<BracketTable::SparseVector, int>> seen;

    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        if (hash != std::string::npos)
            raw.erase(hash);
        std::istringstream tokens(raw);
        std::string keyword;
        if (!(tokens >> keyword))
            continue;

        if (keyword == "dim") {
            if (have_dim)
                fail(source, line, "duplicate dim line");
            std::string value;
            if (!(tokens >> value))
                fail(source, line, "dim requires a generator count");
            table.n = parse_index(value, source, line);
            table.names.assign(table.n, "");
            have_dim = true;
            std::string extra;
            if (tokens >> extra)
                fail(source, line, "unexpected token '" + extra + "' after dim");
        } else if (keyword == "name") {
            if (!have_dim)
                fail(source, line, "name before dim");
            std::string index_token, name;
            if (!(tokens >> index_token >> name))
                fail(source, line, "name requires an index and a string");
            const int i = parse_index(index_token, source, line);
            if (i > table.n)
                fail(source, line, "name index " + std::to_string(i) + " exceeds dim");
            if (!table.names[i - 1].empty() && table.names[i - 1] != name)
                fail(source, line, "conflicting names for generator " + std::to_string(i));
            table.names[i - 1] = name;
        } else if (keyword == "bracket") {
            if (!have_dim)
                fail(source, line, "bracket before dim");
            std::string i_token, k_token, colon;
            if (!(tokens >> i_token >> k_token >> colon) || colon != ":")
                fail(source, line, "bracket requires the form: bracket <i> <k> : <coeff> <s> ...");
            const int i = parse_index(i_token, source, line);
            const int k = parse_index(k_token, source, line);
            if (i > table.n || k > table.n)
                fail(source, line, "bracket index exceeds dim");
            if (i == k)
                fail(source, line, "bracket of a generator with itself must be zero; omit the line");

            BracketTable::SparseVector value;
            std::string coeff_token, s_token;
            while (tokens >> coeff_token) {
                if (!(tokens >> s_token))
                    fail(source, line, "coefficient '" + coeff_token + "' lacks a generator index");
                Rational c;
                try {
                    c = parse_rational(coeff_token);
                } catch (const ParseError& e) {
                    fail(source, line, e.what());
                }
                const int s = parse_index(s_token, source, line);
                if (s > table.n)
                    fail(source, line, "bracket target index exceeds dim");
                value[s] += c;
            }
            // Normalize to the i < k orientation for duplicate detection.
            BracketTable::SparseVector normalized;
            for (const auto& [s, c] : value)
                if (c != 0)
                    normalized.emplace(s, i < k ? c : Rational(-c));
            const auto key = i < k ? std::make_pair(i, k) : std::make_pair(k, i);
            auto found = seen.find(key);
            if (found != seen.end()) {
                if (found->second.first != normalized)
                    fail(source, line,
                         "inconsistent duplicate bracket for generators " +
                             std::to_string(key.first) + "," + std::to_string(key.second) +
                             " (first given on line " + std::to_string(found->second.second) + ")");
            } else {
                seen.emplace(key, std::make_pair(normalized, line));
                table.set_bracket(key.first, key.second, normalized);
            }
        } else {
            fail(source, line, "unknown keyword '" + keyword + "'");
        }
    }
    if (!have_dim)
        throw ParseError(source + ": missing dim line");
    return table;
}

BracketTable load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open algebra file '" + path + "'");
    return load_algebra(in, path);
}

BracketTable parse_algebra(const std::string& text, const std::string& source) {
    std::istringstream in(text);
    return load_algebra(in, source);
}

std::string algebra_text(const BracketTable& t) {
    std::ostringstream out;
    out << "dim " << t.n << "\n";
    for (int i = 1; i <= t.n; ++i) {
        const std::string name = t.name_of(i);
        if (name != "X" + std::to_string(i))
            out << "name " << i << " " << name << "\n";
    }
    for (const auto& [key, value] : t.entries) {
        out << "bracket " << key.first << " " << key.second << " :";
        for (const auto& [s, c] : value)
            out << " " << to_string(c) << " " << s;
        out << "\n";
    }
    return out.str();
}

} // namespace pbw
