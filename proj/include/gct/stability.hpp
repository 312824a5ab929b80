// Finite-group invariant theory (Reynolds averaging, Molien series,
// polarization), torus weights, the null-cone half-space criterion, and the
// most-efficient destabilizing one-parameter subgroup.
#pragma once

#include <optional>

#include "gct/polynomial.hpp"
#include "gct/rational.hpp"

namespace gct {

// Closure of a generating set of exact rational matrices under
// multiplication; rejected beyond the element cap.
class FiniteMatrixGroup {
  public:
    explicit FiniteMatrixGroup(std::vector<RatMat> generators, std::size_t cap = 10000);

    int dim() const { return dim_; }
    const std::vector<RatMat>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }

  private:
    int dim_;
    std::vector<RatMat> elements_;
};

// (1/|G|) sum_g p(g x); the image is G-invariant and the map idempotent.
Polynomial reynolds(const FiniteMatrixGroup& G, const Polynomial& p);

// Coefficients z^0..z^cap of (1/|G|) sum_g 1/det(I - z rho(g)).
RatVec molien_series(const FiniteMatrixGroup& G, int degree_cap);

// D_XY p = sum_i Y_i dp/dX_i; the result lives in 2n variables, X first.
Polynomial polarize(const Polynomial& p);

struct WeightVector {
    std::vector<int> components;

    bool trace_zero() const;
    bool operator==(const WeightVector&) const = default;
    auto operator<=>(const WeightVector&) const = default;
};

// Exponent vectors of monomials with nonzero coefficient (diagonal torus
// scaling convention: diag(t) scales X^e by t^e). Throws on the zero
// polynomial.
std::vector<WeightVector> support_weights(const Polynomial& f);
// Same, with each variable carrying a caller-assigned weight vector; the
// monomial weight is the exponent-weighted sum.
std::vector<WeightVector> support_weights(const Polynomial& f,
                                          const std::vector<WeightVector>& var_weights);

// A primitive trace-zero integer lambda with <lambda, chi> > 0 for every
// support weight, when one exists (decided by exact LP).
std::optional<std::vector<Int>> torus_nullcone(const std::vector<WeightVector>& support);

struct KempfResult {
    std::vector<Int> lambda;  // primitive integer direction
    Rat efficiency_sq;        // e(lambda)^2 = squared norm of the min-norm hull point
    Int m;                    // min over support of <lambda, chi>
    Int norm_sq;              // |lambda|^2
};

// The efficiency-maximizing destabilizing direction for the standard torus:
// minimum-norm point of the convex hull of the trace-zero projections, by
// exhaustive subset enumeration with exact least squares.
std::optional<KempfResult> kempf_optimal(const std::vector<WeightVector>& support);

// Y^n coordinates: theta and its inverse.
std::vector<Int> theta(const std::vector<Int>& m);
std::vector<Int> theta_inverse(const std::vector<Int>& a);

}  // namespace gct
