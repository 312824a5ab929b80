// Exact S_n characters via the Frobenius coefficient-extraction formula,
// Schur polynomials, Kostka numbers, Kronecker and plethysm constants, and
// Specht-module rank checks.
#pragma once

#include <map>
#include <optional>

#include "gct/partition.hpp"
#include "gct/polynomial.hpp"
#include "gct/rational.hpp"

namespace gct {

// Multiplicities (i_1,...,i_n): i_j = number of j-cycles; sum j*i_j = n.
class CycleType {
  public:
    explicit CycleType(std::vector<int> multiplicities);
    static CycleType from_partition(const Partition& mu);
    static CycleType identity(int n);

    const std::vector<int>& multiplicities() const { return mult_; }
    int multiplicity(int j) const {
        return j >= 1 && j <= static_cast<int>(mult_.size()) ? mult_[j - 1] : 0;
    }
    int degree() const { return n_; }

    // z(c) = prod_j j^{i_j} * i_j!; the class size is n!/z(c).
    Int centralizer_order() const;
    Int class_size() const;

    bool operator==(const CycleType&) const = default;

  private:
    std::vector<int> mult_;
    int n_;
};

Int frobenius_character(const Partition& lambda, const CycleType& c);

struct CharacterTable {
    int n;
    std::vector<Partition> partitions;   // row labels, descending lex
    std::vector<CycleType> cycle_types;  // column labels, same partition order
    IntMat values;                       // values[row][col] = chi_lambda(C)

    const Int& value(const Partition& lambda, const CycleType& c) const;
    int partition_index(const Partition& lambda) const;
};

CharacterTable character_table(int n);

// Sum of x(T) over semistandard tableaux of shape lambda with entries <= n;
// the zero polynomial when height(lambda) > n.
Polynomial schur_polynomial(const Partition& lambda, int n);

// Exact bialternant identity test at a point with distinct coordinates:
// S_lambda(x) * det(x_j^{n-i}) == det(x_j^{lambda_i + n - i}).
bool schur_bialternant_check(const Partition& lambda, int n, const RatVec& point);

// Number of SSYT of shape lambda and content mu.
long long kostka(const Partition& lambda, const std::vector<int>& mu);

// Writes a symmetric homogeneous polynomial as sum c_lambda S_lambda by
// repeatedly subtracting the Schur polynomial of the lexicographically
// largest surviving exponent. Throws if that exponent is not a partition
// (input not symmetric).
std::map<Partition, Rat> decompose_into_schur(const Polynomial& p);

// (chi_lambda chi_mu, chi_pi) as an exact class-weighted sum; checked
// integral and nonnegative.
Int kronecker_coefficient(const Partition& lambda, const Partition& mu,
                          const Partition& pi, const CharacterTable& table);
Int kronecker_coefficient(const Partition& lambda, const Partition& mu, const Partition& pi);

// Multiplicity of S_pi in the Schur-basis decomposition of S_lambda composed
// with S_mu over n inner variables. nullopt when height(pi) > n: the
// truncation at n variables cannot see such constituents.
std::optional<Int> plethysm_constant(const Partition& lambda, const Partition& mu,
                                     const Partition& pi, int n);

// Rank over Q of the span of the column-difference products f_T, T ranging
// over all numberings of shape lambda.
long long specht_rank(const Partition& lambda);

// Number of standard tableaux of shape lambda (independent oracle for
// dimension checks).
long long standard_tableau_count(const Partition& lambda);

}  // namespace gct
