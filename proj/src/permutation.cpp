#include "patsep/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace patsep {

Permutation::Permutation(std::vector<int> vals) : vals_(std::move(vals)) {
    inv_.resize(vals_.size());
    for (int p = 0; p < static_cast<int>(vals_.size()); ++p)
        inv_[vals_[p] - 1] = p + 1;
}

Permutation Permutation::from_one_line(std::vector<int> values) {
    if (values.empty()) throw EmptyInput("permutation must have length >= 1");
    const int n = static_cast<int>(values.size());
    std::vector<char> seen(n, 0);
    for (int v : values) {
        if (v < 1 || v > n)
            throw NotABijection("value " + std::to_string(v) + " not in [1, " +
                                std::to_string(n) + "]");
        if (seen[v - 1])
            throw NotABijection("duplicate value " + std::to_string(v));
        seen[v - 1] = 1;
    }
    return Permutation(std::move(values));
}

Permutation Permutation::identity(int n) {
    if (n < 1) throw EmptyInput("permutation must have length >= 1");
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    if (tokens.empty()) throw ParseError("empty permutation text");

    auto parse_int = [](const std::string& tok) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw ParseError("not an integer: '" + tok + "'");
        return v;
    };

    std::vector<int> values;
    if (tokens.size() == 1 && tokens[0].size() >= 2 &&
        std::all_of(tokens[0].begin(), tokens[0].end(),
                    [](char c) { return c >= '1' && c <= '9'; })) {
        // compact digit string, only valid for n <= 9
        for (char c : tokens[0]) values.push_back(c - '0');
    } else {
        for (const auto& tok : tokens) values.push_back(parse_int(tok));
    }
    return from_one_line(std::move(values));
}

std::string Permutation::str() const {
    std::ostringstream os;
    for (int p = 0; p < size(); ++p) {
        if (p) os << ' ';
        os << vals_[p];
    }
    return os.str();
}

std::string Selector::str() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < length(); ++i) {
        if (i) os << ',';
        os << indices[i];
    }
    os << ')';
    return os.str();
}

void validate_selector(const Selector& sel, int n) {
    if (sel.indices.empty())
        throw SelectorOutOfRange("selector must be non-empty");
    int prev = 0;
    for (int i : sel.indices) {
        if (i <= prev || i > n)
            throw SelectorOutOfRange("selector " + sel.str() +
                                     " is not strictly increasing in [1, " +
                                     std::to_string(n) + "]");
        prev = i;
    }
}

}  // namespace patsep
