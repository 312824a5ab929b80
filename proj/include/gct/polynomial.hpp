// Sparse multivariate polynomials over exact rationals.
#pragma once

#include <map>
#include <vector>

#include "gct/rational.hpp"

namespace gct {

// Exponent vectors are fixed-length (nvars); the term map is ordered
// lexicographically, so iteration order is deterministic and rbegin() is the
// lexicographically largest monomial.
class Polynomial {
  public:
    using Exp = std::vector<int>;
    using TermMap = std::map<Exp, Rat>;

    explicit Polynomial(int nvars) : nvars_(nvars) {}
    static Polynomial constant(int nvars, const Rat& c);
    static Polynomial variable(int nvars, int i);
    static Polynomial monomial(int nvars, Exp e, const Rat& c);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rat coeff(const Exp& e) const;
    void add_term(const Exp& e, const Rat& c);

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(const Rat& c) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial&) const = default;

    Polynomial pow(int k) const;

    int degree() const;          // total degree, -1 for the zero polynomial
    bool is_homogeneous() const;

    Rat evaluate(const RatVec& point) const;
    // Substitutes variable i by images[i]; images live in a common ring.
    Polynomial substitute(const std::vector<Polynomial>& images) const;
    Polynomial derivative(int i) const;
    // Relabels variable i to perm[i] (same variable count).
    Polynomial permuted(const std::vector<int>& perm) const;

    bool is_symmetric() const;   // invariance under all adjacent transpositions

  private:
    int nvars_;
    TermMap terms_;
};

// Elementary symmetric polynomial e_k in n variables.
Polynomial elementary_symmetric(int n, int k);
// Power sum p_k in n variables.
Polynomial power_sum(int n, int k);

}  // namespace gct
