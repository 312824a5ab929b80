#include "gct/characters.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gct {

CycleType::CycleType(std::vector<int> multiplicities) : mult_(std::move(multiplicities)) {
    while (!mult_.empty() && mult_.back() == 0) mult_.pop_back();
    long long n = 0;
    for (std::size_t j = 0; j < mult_.size(); ++j) {
        if (mult_[j] < 0) throw std::invalid_argument("cycle type with negative multiplicity");
        n += static_cast<long long>(j + 1) * mult_[j];
    }
    n_ = static_cast<int>(n);
}

CycleType CycleType::from_partition(const Partition& mu) {
    std::vector<int> mult(mu.height() ? mu.part(0) : 0, 0);
    for (int i = 0; i < mu.height(); ++i) ++mult[mu.part(i) - 1];
    return CycleType(std::move(mult));
}

CycleType CycleType::identity(int n) { return CycleType(std::vector<int>{n}); }

Int CycleType::centralizer_order() const {
    Int z = 1;
    for (std::size_t j = 0; j < mult_.size(); ++j) {
        for (int t = 0; t < mult_[j]; ++t) z *= Int(j + 1);
        for (int t = 2; t <= mult_[j]; ++t) z *= t;
    }
    return z;
}

Int CycleType::class_size() const {
    Int f = 1;
    for (int t = 2; t <= n_; ++t) f *= t;
    return f / centralizer_order();
}

namespace {

// Dense polynomial in k variables with every exponent bounded by B,
// used only for the Frobenius coefficient extraction. Index layout is
// mixed-radix with stride (B+1) per variable.
struct DensePoly {
    int k, B;
    std::vector<Int> coef;

    DensePoly(int k_, int B_) : k(k_), B(B_), coef(ipow(B_ + 1, k_)) {}

    static std::size_t ipow(int b, int e) {
        std::size_t r = 1;
        while (e-- > 0) r *= b;
        return r;
    }

    // this *= rhs, discarding any monomial with an exponent above B; sound
    // here because all factors have nonnegative exponents.
    void mul(const DensePoly& rhs) {
        std::vector<Int> out(coef.size());
        std::vector<int> ea(k), eb(k);
        for (std::size_t a = 0; a < coef.size(); ++a) {
            if (coef[a] == 0) continue;
            decode(a, ea);
            for (std::size_t b = 0; b < rhs.coef.size(); ++b) {
                if (rhs.coef[b] == 0) continue;
                rhs.decode(b, eb);
                bool ok = true;
                std::size_t idx = 0;
                for (int i = 0; i < k && ok; ++i) {
                    int e = ea[i] + eb[i];
                    if (e > B) ok = false;
                    idx = idx * (B + 1) + e;
                }
                if (ok) out[idx] += coef[a] * rhs.coef[b];
            }
        }
        coef.swap(out);
    }

    void decode(std::size_t idx, std::vector<int>& e) const {
        for (int i = k - 1; i >= 0; --i) {
            e[i] = static_cast<int>(idx % (B + 1));
            idx /= (B + 1);
        }
    }

    std::size_t encode(const std::vector<int>& e) const {
        std::size_t idx = 0;
        for (int i = 0; i < k; ++i) idx = idx * (B + 1) + e[i];
        return idx;
    }
};

}  // namespace

Int frobenius_character(const Partition& lambda, const CycleType& c) {
    if (lambda.size() != c.degree())
        throw std::invalid_argument("frobenius_character: |lambda| != degree of cycle type");
    int k = lambda.height();
    if (k == 0) return Int(1);  // S_0: trivial character of the trivial group
    int B = lambda.part(0) + k - 1;

    // Discriminant prod_{i<j} (X_i - X_j); the spelled-out Vandermonde
    // expansion keeps the sign convention that makes chi_{(1^n)} the sign
    // character.
    DensePoly acc(k, B);
    acc.coef[0] = 1;
    std::vector<int> e(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            DensePoly f(k, B);
            std::fill(e.begin(), e.end(), 0);
            e[i] = 1;
            f.coef[f.encode(e)] = 1;
            e[i] = 0;
            e[j] = 1;
            f.coef[f.encode(e)] = -1;
            e[j] = 0;
            acc.mul(f);
        }

    for (std::size_t j = 1; j <= c.multiplicities().size(); ++j) {
        int m = c.multiplicity(static_cast<int>(j));
        if (m == 0) continue;
        DensePoly pj(k, B);
        for (int i = 0; i < k; ++i) {
            if (static_cast<int>(j) > B) continue;
            std::fill(e.begin(), e.end(), 0);
            e[i] = static_cast<int>(j);
            pj.coef[pj.encode(e)] += 1;
        }
        for (int t = 0; t < m; ++t) acc.mul(pj);
    }

    for (int i = 0; i < k; ++i) e[i] = lambda.part(i) + k - 1 - i;
    return acc.coef[acc.encode(e)];
}

const Int& CharacterTable::value(const Partition& lambda, const CycleType& c) const {
    int row = partition_index(lambda);
    for (std::size_t col = 0; col < cycle_types.size(); ++col)
        if (cycle_types[col] == c) return values[row][col];
    throw std::invalid_argument("character table: unknown cycle type");
}

int CharacterTable::partition_index(const Partition& lambda) const {
    for (std::size_t i = 0; i < partitions.size(); ++i)
        if (partitions[i] == lambda) return static_cast<int>(i);
    throw std::invalid_argument("character table: unknown partition");
}

CharacterTable character_table(int n) {
    if (n < 1) throw std::invalid_argument("character_table: n must be >= 1");
    CharacterTable t;
    t.n = n;
    t.partitions = partitions_of(n);
    for (const Partition& mu : t.partitions)
        t.cycle_types.push_back(CycleType::from_partition(mu));
    t.values.resize(t.partitions.size());
    for (std::size_t r = 0; r < t.partitions.size(); ++r) {
        t.values[r].reserve(t.cycle_types.size());
        for (const CycleType& c : t.cycle_types)
            t.values[r].push_back(frobenius_character(t.partitions[r], c));
    }
    return t;
}

Polynomial schur_polynomial(const Partition& lambda, int n) {
    Polynomial p(n);
    if (lambda.height() > n) return p;
    for (const Tableau& t : enumerate_ssyt(SkewShape(lambda), n)) {
        std::vector<int> c = content(t);
        c.resize(n, 0);
        p.add_term(c, Rat(1));
    }
    return p;
}

static Rat det_rat(RatMat m) {
    // Gaussian elimination with exact pivoting.
    const std::size_t n = m.size();
    Rat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] / m[col][col];
            for (std::size_t cc = col; cc < n; ++cc) m[r][cc] -= f * m[col][cc];
        }
    }
    return det;
}

bool schur_bialternant_check(const Partition& lambda, int n, const RatVec& point) {
    if (static_cast<int>(point.size()) != n)
        throw std::invalid_argument("schur_bialternant_check: wrong point dimension");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (point[i] == point[j])
                throw std::invalid_argument(
                    "schur_bialternant_check: repeated coordinates (Vandermonde is zero)");
    auto power = [](const Rat& x, int e) {
        Rat r(1);
        for (int t = 0; t < e; ++t) r *= x;
        return r;
    };
    RatMat numer(n, RatVec(n)), denom(n, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            numer[i][j] = power(point[j], lambda.part(i) + n - 1 - i);
            denom[i][j] = power(point[j], n - 1 - i);
        }
    Rat lhs = schur_polynomial(lambda, n).evaluate(point) * det_rat(denom);
    return lhs == det_rat(numer);
}

long long kostka(const Partition& lambda, const std::vector<int>& mu) {
    long long musize = std::accumulate(mu.begin(), mu.end(), 0LL);
    if (lambda.size() != musize)
        throw std::invalid_argument("kostka: |lambda| != |mu|");
    if (lambda.empty()) return 1;
    long long count = 0;
    for (const Tableau& t : enumerate_ssyt(SkewShape(lambda), static_cast<int>(mu.size()))) {
        std::vector<int> c = content(t);
        c.resize(mu.size(), 0);
        if (std::equal(c.begin(), c.end(), mu.begin())) ++count;
    }
    return count;
}

std::map<Partition, Rat> decompose_into_schur(const Polynomial& p) {
    if (!p.is_homogeneous())
        throw std::invalid_argument("decompose_into_schur: polynomial not homogeneous");
    std::map<Partition, Rat> out;
    Polynomial rest = p;
    while (!rest.is_zero()) {
        // Copies: the subtraction below erases the leading term.
        Polynomial::Exp e = rest.terms().rbegin()->first;
        Rat c = rest.terms().rbegin()->second;
        for (std::size_t i = 0; i + 1 < e.size(); ++i)
            if (e[i] < e[i + 1])
                throw std::invalid_argument(
                    "decompose_into_schur: leading exponent is not a partition (not symmetric)");
        Partition lead{std::move(e)};
        rest -= schur_polynomial(lead, p.nvars()) * c;
        out[lead] = c;
    }
    return out;
}

Int kronecker_coefficient(const Partition& lambda, const Partition& mu,
                          const Partition& pi, const CharacterTable& table) {
    if (lambda.size() != table.n || mu.size() != table.n || pi.size() != table.n)
        throw std::invalid_argument("kronecker_coefficient: partitions must all have size n");
    int rl = table.partition_index(lambda);
    int rm = table.partition_index(mu);
    int rp = table.partition_index(pi);
    Rat sum(0);
    for (std::size_t col = 0; col < table.cycle_types.size(); ++col) {
        Rat term(table.values[rl][col] * table.values[rm][col] * table.values[rp][col]);
        sum += term / Rat(table.cycle_types[col].centralizer_order());
    }
    if (!is_integer(sum) || sum < 0)
        throw std::logic_error("kronecker_coefficient: non-integral or negative result");
    return num(sum);
}

Int kronecker_coefficient(const Partition& lambda, const Partition& mu, const Partition& pi) {
    if (lambda.size() != mu.size() || lambda.size() != pi.size())
        throw std::invalid_argument("kronecker_coefficient: size mismatch");
    return kronecker_coefficient(lambda, mu, pi,
                                 character_table(static_cast<int>(lambda.size())));
}

std::optional<Int> plethysm_constant(const Partition& lambda, const Partition& mu,
                                     const Partition& pi, int n) {
    if (mu.height() > n)
        throw std::invalid_argument("plethysm_constant: height(mu) > n");
    if (pi.height() > n) return std::nullopt;  // not determined at this n
    if (pi.size() != lambda.size() * mu.size()) return Int(0);

    // Monomial list of S_mu in n variables, with multiplicity: the torus
    // eigenvalues of the inner module.
    std::vector<Polynomial> images;
    for (const Tableau& t : enumerate_ssyt(SkewShape(mu), n)) {
        std::vector<int> c = content(t);
        c.resize(n, 0);
        images.push_back(Polynomial::monomial(n, c, Rat(1)));
    }
    int big_n = static_cast<int>(images.size());
    Polynomial composed = schur_polynomial(lambda, big_n).substitute(images);
    if (composed.is_zero()) return Int(0);
    if (!composed.is_symmetric())
        throw std::logic_error("plethysm_constant: composition is not symmetric");
    auto dec = decompose_into_schur(composed);
    auto it = dec.find(pi);
    if (it == dec.end()) return Int(0);
    if (!is_integer(it->second) || it->second < 0)
        throw std::logic_error("plethysm_constant: non-integral or negative multiplicity");
    return num(it->second);
}

namespace {

Polynomial specht_polynomial(const std::vector<std::vector<int>>& numbering, int n) {
    // f_T = prod_j prod_{i<i'} (X_{T_{ij}} - X_{T_{i'j}}), columns j.
    Polynomial f = Polynomial::constant(n, Rat(1));
    std::size_t cols = numbering.empty() ? 0 : numbering[0].size();
    for (std::size_t j = 0; j < cols; ++j) {
        std::vector<int> col;
        for (const auto& row : numbering)
            if (j < row.size()) col.push_back(row[j]);
        for (std::size_t a = 0; a < col.size(); ++a)
            for (std::size_t b = a + 1; b < col.size(); ++b)
                f = f * (Polynomial::variable(n, col[a] - 1) -
                         Polynomial::variable(n, col[b] - 1));
    }
    return f;
}

long long rank_of_rows(std::vector<RatVec> rows) {
    long long rank = 0;
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
        std::size_t piv = pivot_row;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[pivot_row]);
        for (std::size_t r = piv + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            Rat f = rows[r][col] / rows[pivot_row][col];
            for (std::size_t c = col; c < cols; ++c) rows[r][c] -= f * rows[pivot_row][c];
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

}  // namespace

long long specht_rank(const Partition& lambda) {
    int n = static_cast<int>(lambda.size());
    if (n == 0) return 1;
    if (n > 8) throw std::invalid_argument("specht_rank: enumeration bound exceeded");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<Polynomial> fs;
    do {
        std::vector<std::vector<int>> numbering(lambda.height());
        int pos = 0;
        for (int i = 0; i < lambda.height(); ++i)
            for (int j = 0; j < lambda.part(i); ++j) numbering[i].push_back(perm[pos++]);
        fs.push_back(specht_polynomial(numbering, n));
    } while (std::next_permutation(perm.begin(), perm.end()));

    // Index all monomials appearing anywhere, then do exact row reduction.
    std::map<Polynomial::Exp, std::size_t> index;
    for (const Polynomial& f : fs)
        for (const auto& [e, c] : f.terms())
            index.emplace(e, index.size());
    std::vector<RatVec> rows;
    rows.reserve(fs.size());
    for (const Polynomial& f : fs) {
        RatVec row(index.size(), Rat(0));
        for (const auto& [e, c] : f.terms()) row[index[e]] = c;
        rows.push_back(std::move(row));
    }
    return rank_of_rows(std::move(rows));
}

long long standard_tableau_count(const Partition& lambda) {
    // Branching recursion: remove the box containing n.
    if (lambda.empty()) return 1;
    long long total = 0;
    for (int i = 0; i < lambda.height(); ++i) {
        if (i + 1 < lambda.height() && lambda.part(i) == lambda.part(i + 1)) continue;
        std::vector<int> p = lambda.parts();
        p[i] -= 1;
        total += standard_tableau_count(Partition(p));
    }
    return total;
}

}  // namespace gct
