// The Littlewood-Richardson engine: rule-based counting, the LR polytope,
// the nonvanishing decision, stretching polynomials, and the generic
// odd-denominator decision wrapper.
#pragma once

#include "gct/partition.hpp"
#include "gct/polytope.hpp"

namespace gct {

struct LRInstance {
    Partition alpha, beta, gamma;

    // |gamma| = |alpha| + |beta| and alpha contained in gamma; every
    // operation treats ill-posed instances as c = 0.
    bool well_posed() const {
        return gamma.size() == alpha.size() + beta.size() && alpha.contained_in(gamma);
    }
    int max_height() const {
        return std::max({alpha.height(), beta.height(), gamma.height()});
    }
    LRInstance scaled(int k) const {
        return {alpha.scaled(k), beta.scaled(k), gamma.scaled(k)};
    }
};

// Number of semistandard fillings of gamma/alpha with content beta whose row
// word is a reverse lattice word, by backtracking enumeration.
long long lr_count(const LRInstance& inst);

// The polytope in variables r^i_j (i, j <= n) whose integer points are the
// LR tableaux: nonnegativity, shape and content equalities, tableau
// constraints, and the reverse-lattice-word constraints.
RationalPolytope lr_polytope(const LRInstance& inst, int n);
RationalPolytope lr_polytope(const LRInstance& inst);  // n = max height

// True iff the LR polytope is rationally nonempty; correctness rests on the
// saturation theorem.
bool decide_nonvanishing(const LRInstance& inst);

// c(k alpha, k beta, k gamma).
long long stretch_lr(const LRInstance& inst, int k);

// Fits the stretching function as a period-1 polynomial through
// k = 1..kmax-1 and validates the held-out sample k = kmax; a validation
// failure throws (it would contradict polynomiality or means kmax is too
// small for the degree).
Quasipolynomial fit_stretching(const LRInstance& inst, int kmax);

// Generic type-B-style decision layer: positivity under PH2 reduces to
// P cap Z_(2)^d being nonempty.
bool decide_nonvanishing_z2(const RationalPolytope& P);

}  // namespace gct
