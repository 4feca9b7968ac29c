/*
 * word.hpp
 * --------
 * Monomials of the free noncommutative algebra: finite sequences of
 * generator indices.  The empty word is the unit monomial.
 *
 * Monomial order is degree-lexicographic: shorter words first, ties
 * broken letter by letter from the left with smaller generator index
 * first.  The leading monomial of a polynomial is the greatest word.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace platdga {

using GenId = std::uint32_t;
using Word = std::vector<GenId>;

inline Word unit_word() { return {}; }

inline Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

// Strict degree-lexicographic comparison.
inline bool deglex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

struct DegLexLess {
    bool operator()(const Word& a, const Word& b) const { return deglex_less(a, b); }
};

// Position of the first occurrence of pat as a contiguous subword, or -1.
inline int find_subword(const Word& w, const Word& pat) {
    if (pat.empty()) return 0;
    if (pat.size() > w.size()) return -1;
    for (std::size_t i = 0; i + pat.size() <= w.size(); ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < pat.size(); ++j)
            if (w[i + j] != pat[j]) { ok = false; break; }
        if (ok) return static_cast<int>(i);
    }
    return -1;
}

inline Word subrange(const Word& w, std::size_t from, std::size_t len) {
    return Word(w.begin() + static_cast<long>(from),
                w.begin() + static_cast<long>(from + len));
}

// Default generator naming: 1 -> "x_1".
inline std::string default_gen_name(GenId g) { return "x_" + std::to_string(g); }

inline std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += " ";
        out += default_gen_name(w[i]);
    }
    return out;
}

}  // namespace platdga
