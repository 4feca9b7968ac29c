/*
 * grading.hpp
 * -----------
 * Maslov-potential gradings for plat fronts.  Right cusps have grading 1;
 * a crossing is graded by the potential difference of its two strands
 * (descending minus ascending).  Potentials are fixed by value 0 on the
 * upper strand of the topmost left cusp; around the knot they shift by
 * 2r, so gradings live mod 2|r| when r != 0 and in Z otherwise.
 */
#pragma once

#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "platdga/plat.hpp"

namespace platdga {

struct GradingTable {
    int r = 0;
    int modulus = 0;            // 2|r|, 0 when r == 0
    std::vector<int> raw;       // per generator (1-based), integer representative

    int reduced(GenId g) const {
        int v = raw[g];
        if (modulus == 0) return v;
        return ((v % modulus) + modulus) % modulus;
    }
    int parity(GenId g) const { return raw[g] & 1; }
};

inline GradingTable compute_gradings(const FrontDiagram& f, const OrientedTrace& tr) {
    if (tr.components != 1)
        throw not_a_knot_error("gradings require a connected knot front");
    int down = 0, up = 0;
    for (signed char d : tr.left_cusp_down) (d > 0 ? down : up) += 1;
    for (signed char d : tr.right_cusp_down) (d > 0 ? down : up) += 1;
    int r = (down - up) / 2;
    // Monodromy of the potential around the knot must match the cusp count.
    if (std::abs(tr.monodromy) != 2 * std::abs(r))
        throw std::logic_error("Maslov potential monodromy inconsistent with rotation number");

    GradingTable g;
    g.r = r;
    g.modulus = 2 * std::abs(r);
    g.raw.assign(f.ngen() + 1, 0);
    for (GenId x = 1; x <= f.nletters(); ++x) {
        unsigned t = f.crossings[x - 1].column;
        unsigned k = f.crossings[x - 1].level;
        // Strand entering at position k descends through the crossing.
        g.raw[x] = tr.mu[t - 1][k] - tr.mu[t - 1][k + 1];
    }
    for (unsigned i = 1; i <= f.ncusps; ++i) g.raw[f.cusp_gen(i)] = 1;
    return g;
}

}  // namespace platdga
