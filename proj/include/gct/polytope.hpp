// Exact rational polytopes: feasibility and optimization by simplex,
// affine spans, lattice-point counting, Ehrhart quasipolynomials and series.
#pragma once

#include <optional>
#include <utility>

#include "gct/rational.hpp"

namespace gct {

// {x : Ax <= b} intersected with the nonnegative orthant when nonneg is set.
struct RationalPolytope {
    IntMat A;
    IntVec b;
    bool nonneg = false;

    RationalPolytope() = default;
    RationalPolytope(IntMat A_, IntVec b_, bool nonneg_);

    int dim() const { return A.empty() ? 0 : static_cast<int>(A[0].size()); }
    int rows() const { return static_cast<int>(A.size()); }

    // Dilation kP = {Ax <= k b} (the orthant is a cone, so it is unchanged).
    RationalPolytope dilated(const Int& k) const;
};

// {x : Cx = d}; an empty C means the whole space.
struct AffineSubspace {
    IntMat C;
    IntVec d;
    int ambient_dim = 0;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status;
    Rat value;     // objective at optimum (when optimal)
    RatVec point;  // an optimal (or feasible) point
};

// maximize c.x over P, exact; Bland's rule makes the result deterministic.
LpResult maximize(const RationalPolytope& P, const RatVec& c);
LpResult minimize(const RationalPolytope& P, const RatVec& c);

// A rational point of P if nonempty (works for unbounded P too).
std::optional<RatVec> feasible(const RationalPolytope& P);

// The affine hull {x : Cx = d}, found by detecting implicit equalities.
// Throws on empty P.
AffineSubspace affine_span(const RationalPolytope& P);

// Dimension of the affine hull (rank computation over Q). Throws on empty P.
int affine_dim(const RationalPolytope& P);

// Exact integer bounding box [lo_i, hi_i] containing P, or nullopt if P is
// unbounded in some coordinate. Cheap interval propagation over the rows is
// tried first; coordinates it cannot bound fall back to exact LPs.
std::optional<std::pair<IntVec, IntVec>> bounding_box(const RationalPolytope& P);

// |P cap Z^d| by depth-first enumeration over the bounding box with
// per-coordinate pruning. Throws if P is unbounded.
long long count_lattice_points(const RationalPolytope& P);

// Period ell and constituents f_1..f_ell (f_i applies when k = i mod ell;
// the class of 0 is served by f_ell). Coefficients ascending by degree.
class Quasipolynomial {
  public:
    Quasipolynomial() : period_(1), coeffs_(1) {}
    Quasipolynomial(int period, std::vector<RatVec> coeffs);

    int period() const { return period_; }
    const std::vector<RatVec>& coefficients() const { return coeffs_; }
    const RatVec& constituent(int i) const { return coeffs_.at(i - 1); }

    Rat evaluate(const Int& k) const;
    int degree() const;  // -1 when identically zero
    // Smallest i with f_i not identically zero; 0 when all are zero.
    int index() const;
    bool is_zero() const { return index() == 0; }
    bool is_positive() const;
    bool is_saturated() const;

    bool operator==(const Quasipolynomial&) const = default;

  private:
    int period_;
    std::vector<RatVec> coeffs_;
};

// Vertices of a bounded P as basic solutions over constraint subsets.
std::vector<RatVec> enumerate_vertices(const RationalPolytope& P);

// Fits k -> |kP cap Z^d|. The period candidate starts at the lcm of vertex
// denominators and doubles on validation failure up to period_cap.
Quasipolynomial ehrhart_quasipolynomial(const RationalPolytope& P, int period_cap = 64);

// Integer polynomials (A, B) with B = (1 - t^ell)^{D+1} and A/B matching
// sum_k f(k) t^k through degree_cap; deg A < deg B.
std::pair<IntVec, IntVec> ehrhart_series(const RationalPolytope& P, int degree_cap,
                                         int period_cap = 64);
std::pair<IntVec, IntVec> ehrhart_series(const Quasipolynomial& q, int degree_cap);

// Exact polynomial fit through (k, value) samples; coefficients ascending,
// trailing zeros trimmed.
RatVec polynomial_fit(const std::vector<std::pair<Int, Rat>>& samples);
Rat polynomial_eval(const RatVec& coeffs, const Int& k);

}  // namespace gct
