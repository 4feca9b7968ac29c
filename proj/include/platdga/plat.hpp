/*
 * plat.hpp
 * --------
 * Plat-position fronts: a positive braid word whose strands are capped in
 * pairs by left and right cusps.
 *
 * Conventions.  Strand positions are counted 1..n from the top.  Letter k
 * crosses the strands at positions k and k+1; one letter per column.  Left
 * cusps pair positions (2i-1, 2i) at the far left, right cusps likewise at
 * the far right, numbered i = 1.. n/2 from the top.  Generators are the
 * crossings x_1..x_m in word order followed by the right cusps
 * x_{m+1}..x_{m+n/2} from top to bottom.
 *
 * The oriented trace walks the closed curve once, fixing the orientation
 * so the topmost left cusp is traversed downward.  It yields component
 * count, crossing signs, cusp directions and Maslov potentials; tb and the
 * rotation number follow.  The rotation number is defined up to sign, the
 * reported value uses the orientation above.
 */
#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "platdga/word.hpp"

namespace platdga {

struct braid_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct not_a_knot_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PlatBraid {
    unsigned strands = 2;             // positive even
    std::vector<unsigned> word;       // letters in [1, strands-1]
};

inline void validate(const PlatBraid& b) {
    if (b.strands < 2 || b.strands % 2 != 0)
        throw braid_error("strand count must be a positive even integer, got " +
                          std::to_string(b.strands));
    for (unsigned k : b.word)
        if (k < 1 || k >= b.strands)
            throw braid_error("letter " + std::to_string(k) + " out of range for " +
                              std::to_string(b.strands) + " strands");
}

// Parse a comma- or whitespace-separated list of letters.  strands == 0
// infers the count as max letter + 1 rounded up to even.
inline PlatBraid parse_plat_word(const std::string& text, unsigned strands = 0) {
    PlatBraid b;
    std::string cleaned = text;
    for (char& c : cleaned)
        if (c == ',') c = ' ';
    std::istringstream in(cleaned);
    std::string tok;
    unsigned maxletter = 0;
    while (in >> tok) {
        std::size_t used = 0;
        long v;
        try {
            v = std::stol(tok, &used);
        } catch (const std::exception&) {
            throw braid_error("non-integer token '" + tok + "' in braid word");
        }
        if (used != tok.size())
            throw braid_error("non-integer token '" + tok + "' in braid word");
        if (v < 1) throw braid_error("letter " + std::to_string(v) + " out of range");
        b.word.push_back(static_cast<unsigned>(v));
        maxletter = std::max(maxletter, static_cast<unsigned>(v));
    }
    if (strands == 0) {
        strands = maxletter + 1;
        if (strands % 2) ++strands;
        if (strands < 2) strands = 2;
    }
    b.strands = strands;
    validate(b);
    return b;
}

// Normalized comma-separated rendering; parse round-trips through this.
inline std::string word_string(const PlatBraid& b) {
    std::string out;
    for (std::size_t i = 0; i < b.word.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(b.word[i]);
    }
    return out;
}

struct CrossingRec {
    unsigned column;  // 1-based position of the letter in the word
    unsigned level;   // crosses positions (level, level+1)
};

struct FrontDiagram {
    PlatBraid braid;
    std::vector<CrossingRec> crossings;  // generator g = index + 1
    unsigned ncusps = 0;                 // cusp i is generator m + i

    unsigned nletters() const { return static_cast<unsigned>(crossings.size()); }
    unsigned ngen() const { return nletters() + ncusps; }
    GenId cusp_gen(unsigned i) const { return nletters() + i; }
    bool is_cusp(GenId g) const { return g > nletters() && g <= ngen(); }
    unsigned cusp_index(GenId g) const { return g - nletters(); }  // 1-based
};

inline FrontDiagram build_front(const PlatBraid& braid) {
    validate(braid);
    FrontDiagram f;
    f.braid = braid;
    f.crossings.reserve(braid.word.size());
    for (std::size_t t = 0; t < braid.word.size(); ++t)
        f.crossings.push_back({static_cast<unsigned>(t + 1), braid.word[t]});
    f.ncusps = braid.strands / 2;
    return f;
}

// Result of walking the plat closure once.  Node (gap, pos) is the point of
// the strand at position pos between columns gap and gap+1; gaps run 0..m.
struct OrientedTrace {
    unsigned strands = 0;
    unsigned ncols = 0;
    int components = 0;
    // +1 rightward, -1 leftward, 0 unvisited/undefined (per node, knot case)
    std::vector<std::vector<signed char>> dir;
    std::vector<std::vector<int>> mu;  // Maslov potential per node
    std::vector<signed char> left_cusp_down;    // per cusp, +1 down / -1 up
    std::vector<signed char> right_cusp_down;
    std::vector<bool> right_cusp_entered_lower; // arrived at the lower branch first
    int monodromy = 0;                          // potential shift around the cycle
};

inline OrientedTrace trace_closure(const PlatBraid& braid) {
    validate(braid);
    const unsigned n = braid.strands;
    const unsigned m = static_cast<unsigned>(braid.word.size());
    OrientedTrace tr;
    tr.strands = n;
    tr.ncols = m;
    tr.dir.assign(m + 1, std::vector<signed char>(n + 1, 0));
    tr.mu.assign(m + 1, std::vector<int>(n + 1, 0));
    tr.left_cusp_down.assign(n / 2, 0);
    tr.right_cusp_down.assign(n / 2, 0);
    tr.right_cusp_entered_lower.assign(n / 2, false);

    auto cusp_mate = [](unsigned p) { return (p % 2) ? p + 1 : p - 1; };
    // Position map across column t (1-based), same map both directions.
    auto across = [&](unsigned t, unsigned p) {
        unsigned k = braid.word[t - 1];
        if (p == k) return k + 1;
        if (p == k + 1) return k;
        return p;
    };

    std::vector<std::vector<char>> seen(m + 1, std::vector<char>(n + 1, 0));

    // Walk one cycle starting at node (0, start_pos) heading into the left
    // cusp.  State = (gap, pos, moving); the walk terminates when the state
    // recurs.  Directions, cusp passes and potentials are recorded only for
    // the component containing the topmost left cusp.
    auto walk = [&](unsigned start_pos, bool record) {
        unsigned g = 0, p = start_pos;
        int moving = -1;
        int pot = 0;
        for (;;) {
            seen[g][p] = 1;
            if (record) {
                tr.mu[g][p] = pot;
                tr.dir[g][p] = static_cast<signed char>(moving);
            }
            if (moving > 0) {
                if (g == m) {
                    unsigned q = cusp_mate(p);
                    bool down = (q == p + 1);
                    unsigned ci = (std::min(p, q) + 1) / 2;  // 1-based
                    if (record) {
                        tr.right_cusp_down[ci - 1] = down ? +1 : -1;
                        tr.right_cusp_entered_lower[ci - 1] = !down;
                    }
                    pot += down ? -1 : +1;
                    p = q;
                    moving = -1;
                } else {
                    p = across(g + 1, p);
                    ++g;
                }
            } else {
                if (g == 0) {
                    unsigned q = cusp_mate(p);
                    bool down = (q == p + 1);
                    unsigned ci = (std::min(p, q) + 1) / 2;
                    if (record) tr.left_cusp_down[ci - 1] = down ? +1 : -1;
                    pot += down ? -1 : +1;
                    p = q;
                    moving = +1;
                } else {
                    p = across(g, p);
                    --g;
                }
            }
            if (g == 0 && p == start_pos && moving == -1) {
                if (record) tr.monodromy = pot;
                break;
            }
        }
    };

    walk(1, true);
    tr.components = 1;
    for (unsigned p = 1; p <= n; p += 2) {
        if (!seen[0][p]) {
            walk(p, false);
            ++tr.components;
        }
    }
    return tr;
}

struct ClassicalInvariants {
    int tb = 0;
    int r = 0;
};

// Crossing sign under the front convention (descending strand in front):
// +1 when both strands are traversed in the same horizontal direction.
inline int crossing_sign(const OrientedTrace& tr, const PlatBraid& braid, unsigned column) {
    unsigned k = braid.word[column - 1];
    signed char d1 = tr.dir[column - 1][k];
    signed char d2 = tr.dir[column - 1][k + 1];
    return (d1 == d2) ? +1 : -1;
}

inline ClassicalInvariants classical_invariants(const FrontDiagram& f) {
    OrientedTrace tr = trace_closure(f.braid);
    if (tr.components != 1)
        throw not_a_knot_error("plat closure has " + std::to_string(tr.components) +
                               " components; invariants are defined for knots only");
    int writhe = 0;
    for (unsigned t = 1; t <= tr.ncols; ++t) writhe += crossing_sign(tr, f.braid, t);
    int down = 0, up = 0;
    for (signed char d : tr.left_cusp_down) (d > 0 ? down : up) += 1;
    for (signed char d : tr.right_cusp_down) (d > 0 ? down : up) += 1;
    ClassicalInvariants inv;
    inv.tb = writhe - static_cast<int>(f.ncusps);
    inv.r = (down - up) / 2;
    return inv;
}

inline bool is_knot(const PlatBraid& braid) {
    return trace_closure(braid).components == 1;
}

}  // namespace platdga
