// Pluecker coordinate algebra of Gr_d^n: van der Waerden syzygies, the
// straightening algorithm, and standard-monomial counts.
#pragma once

#include <map>
#include <vector>

#include "gct/rational.hpp"

namespace gct {

// A d-tuple of indices from 1..n; canonical form is strictly increasing with
// a sign, and a repeated index collapses to the zero bracket.
struct Bracket {
    std::vector<int> indices;  // strictly increasing in canonical form

    bool operator==(const Bracket&) const = default;
    auto operator<=>(const Bracket&) const = default;
};

// Sorts a tuple into a canonical bracket; sign = 0 flags the zero bracket.
std::pair<Bracket, int> canonicalize_bracket(std::vector<int> indices);

// A monomial is a sorted multiset of canonical brackets.
using BracketMonomial = std::vector<Bracket>;

class BracketPolynomial {
  public:
    using TermMap = std::map<BracketMonomial, Rat>;

    BracketPolynomial() = default;

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(BracketMonomial m, const Rat& c);

    BracketPolynomial& operator+=(const BracketPolynomial& rhs);
    BracketPolynomial operator*(const Rat& c) const;
    bool operator==(const BracketPolynomial&) const = default;

    // Evaluates every bracket as the corresponding maximal minor of a d x n
    // matrix (columns selected by the bracket indices).
    Rat evaluate(const RatMat& matrix) const;

  private:
    TermMap terms_;
};

// The quadratic van der Waerden relation [[alpha, beta, gamma]] for
// parameters s in 1..d, |alpha| = s-1, |beta| = d+1, |gamma| = d-s.
BracketPolynomial vdw_syzygy(int s, const std::vector<int>& alpha,
                             const std::vector<int>& beta,
                             const std::vector<int>& gamma, int n, int d);

// Columnwise-weakly-increasing test on the sorted bracket list (rows of the
// associated tableau nondecreasing).
bool is_standard_monomial(const BracketMonomial& m);

// Rewrites to an evaluation-equal polynomial supported on standard monomials
// only, applying the syzygy at the first violating adjacent pair. The step
// cap turns any convention error into a loud failure.
BracketPolynomial straighten(const BracketPolynomial& p, int n, int d,
                             long long step_cap = 1000000);

// Number of standard monomials of degree s in Gr_d^n, by direct chain
// enumeration over brackets.
long long standard_monomial_count(int n, int d, int s);

// standard_monomial_count == SSYT count of the d x s rectangle with entries
// <= n == Schur polynomial of (s^d) at the all-ones point.
bool borel_weil_check(int n, int d, int s);

// All degree-2 syzygies for Gr_d^n (every parameter choice), used for the
// degree-2 span/rank check.
std::vector<BracketPolynomial> all_degree2_syzygies(int n, int d);

}  // namespace gct
