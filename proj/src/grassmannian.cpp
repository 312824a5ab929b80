#include "gct/grassmannian.hpp"

#include <algorithm>
#include <stdexcept>

#include "gct/characters.hpp"
#include "gct/partition.hpp"

namespace gct {

std::pair<Bracket, int> canonicalize_bracket(std::vector<int> indices) {
    int sign = 1;
    // Insertion sort, counting inversions for the sign.
    for (std::size_t i = 1; i < indices.size(); ++i)
        for (std::size_t j = i; j > 0 && indices[j - 1] > indices[j]; --j) {
            std::swap(indices[j - 1], indices[j]);
            sign = -sign;
        }
    for (std::size_t i = 1; i < indices.size(); ++i)
        if (indices[i - 1] == indices[i]) return {Bracket{}, 0};
    return {Bracket{std::move(indices)}, sign};
}

void BracketPolynomial::add_term(BracketMonomial m, const Rat& c) {
    if (c == 0) return;
    std::sort(m.begin(), m.end());
    auto [it, inserted] = terms_.emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BracketPolynomial& BracketPolynomial::operator+=(const BracketPolynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

BracketPolynomial BracketPolynomial::operator*(const Rat& c) const {
    BracketPolynomial out;
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

namespace {

Rat minor_det(const RatMat& matrix, const std::vector<int>& cols) {
    const std::size_t d = cols.size();
    RatMat m(d, RatVec(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m[i][j] = matrix[i][cols[j] - 1];
    Rat det(1);
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t piv = col;
        while (piv < d && m[piv][col] == 0) ++piv;
        if (piv == d) return Rat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < d; ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < d; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

}  // namespace

Rat BracketPolynomial::evaluate(const RatMat& matrix) const {
    Rat total(0);
    for (const auto& [m, c] : terms_) {
        Rat prod = c;
        for (const Bracket& b : m) prod *= minor_det(matrix, b.indices);
        total += prod;
    }
    return total;
}

namespace {

// Sign of the permutation sending [1..n] to [tuple, complement].
int split_sign(const std::vector<int>& tuple, const std::vector<int>& rest) {
    std::vector<int> perm(tuple);
    perm.insert(perm.end(), rest.begin(), rest.end());
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

void subsets_of(int universe, int k, std::vector<int>& acc,
                std::vector<std::vector<int>>& out, int start = 1) {
    if (static_cast<int>(acc.size()) == k) {
        out.push_back(acc);
        return;
    }
    for (int v = start; v <= universe; ++v) {
        acc.push_back(v);
        subsets_of(universe, k, acc, out, v + 1);
        acc.pop_back();
    }
}

}  // namespace

BracketPolynomial vdw_syzygy(int s, const std::vector<int>& alpha,
                             const std::vector<int>& beta,
                             const std::vector<int>& gamma, int n, int d) {
    if (s < 1 || s > d) throw std::invalid_argument("vdw_syzygy: s outside 1..d");
    if (static_cast<int>(alpha.size()) != s - 1)
        throw std::invalid_argument("vdw_syzygy: |alpha| must be s-1");
    if (static_cast<int>(beta.size()) != d + 1)
        throw std::invalid_argument("vdw_syzygy: |beta| must be d+1");
    if (static_cast<int>(gamma.size()) != d - s)
        throw std::invalid_argument("vdw_syzygy: |gamma| must be d-s");
    auto in_range = [n](const std::vector<int>& v) {
        return std::all_of(v.begin(), v.end(), [n](int x) { return x >= 1 && x <= n; });
    };
    if (!in_range(alpha) || !in_range(beta) || !in_range(gamma))
        throw std::invalid_argument("vdw_syzygy: index outside 1..n");

    BracketPolynomial out;
    std::vector<std::vector<int>> taus;
    std::vector<int> acc;
    subsets_of(d + 1, s, acc, taus);
    for (const auto& tau : taus) {
        std::vector<int> tau_star;
        for (int v = 1; v <= d + 1; ++v)
            if (std::find(tau.begin(), tau.end(), v) == tau.end()) tau_star.push_back(v);
        int sign = split_sign(tau, tau_star);

        std::vector<int> first(alpha);
        for (int v : tau_star) first.push_back(beta[v - 1]);
        std::vector<int> second;
        for (int v : tau) second.push_back(beta[v - 1]);
        second.insert(second.end(), gamma.begin(), gamma.end());

        auto [b1, s1] = canonicalize_bracket(std::move(first));
        if (s1 == 0) continue;
        auto [b2, s2] = canonicalize_bracket(std::move(second));
        if (s2 == 0) continue;
        out.add_term({std::move(b1), std::move(b2)}, Rat(sign * s1 * s2));
    }
    return out;
}

bool is_standard_monomial(const BracketMonomial& m) {
    for (std::size_t t = 0; t + 1 < m.size(); ++t)
        for (std::size_t r = 0; r < m[t].indices.size(); ++r)
            if (m[t].indices[r] > m[t + 1].indices[r]) return false;
    return true;
}

BracketPolynomial straighten(const BracketPolynomial& p, int n, int d,
                             long long step_cap) {
    BracketPolynomial work = p;
    for (long long step = 0; step < step_cap; ++step) {
        // First nonstandard monomial, first violating adjacent pair in it.
        const BracketMonomial* bad = nullptr;
        for (const auto& [m, c] : work.terms())
            if (!is_standard_monomial(m)) { bad = &m; break; }
        if (!bad) return work;

        std::size_t pos = 0;
        int srow = -1;
        for (std::size_t t = 0; t + 1 < bad->size() && srow < 0; ++t)
            for (std::size_t r = 0; r < (*bad)[t].indices.size(); ++r)
                if ((*bad)[t].indices[r] > (*bad)[t + 1].indices[r]) {
                    pos = t;
                    srow = static_cast<int>(r);
                    break;
                }

        const std::vector<int>& A = (*bad)[pos].indices;
        const std::vector<int>& B = (*bad)[pos + 1].indices;
        const int s = srow + 1;  // 1-based violation row: A_s > B_s
        std::vector<int> al(A.begin(), A.begin() + (s - 1));
        std::vector<int> be(B.begin(), B.begin() + s);
        be.insert(be.end(), A.begin() + (s - 1), A.end());
        std::vector<int> ga(B.begin() + s, B.end());
        BracketPolynomial syz = vdw_syzygy(s, al, be, ga, n, d);

        BracketMonomial pair{(*bad)[pos], (*bad)[pos + 1]};
        std::sort(pair.begin(), pair.end());
        Rat c0 = syz.terms().count(pair) ? syz.terms().at(pair) : Rat(0);
        if (c0 == 0)
            throw std::logic_error("straighten: syzygy lost the violating pair (convention bug)");

        BracketMonomial rest;
        for (std::size_t t = 0; t < bad->size(); ++t)
            if (t != pos && t != pos + 1) rest.push_back((*bad)[t]);
        Rat coeff = work.terms().at(*bad);

        // [A][B] = -(1/c0) * (syz - c0 [A][B]) as functions on the cone.
        BracketPolynomial replacement;
        for (const auto& [m, c] : syz.terms()) {
            if (m == pair) continue;
            BracketMonomial full(rest);
            full.insert(full.end(), m.begin(), m.end());
            replacement.add_term(std::move(full), c * coeff / c0 * Rat(-1));
        }
        work.add_term(*bad, -coeff);  // removes the nonstandard term
        work += replacement;
    }
    throw std::runtime_error("straighten: step cap exceeded (straightening must terminate)");
}

long long standard_monomial_count(int n, int d, int s) {
    if (s < 0) throw std::invalid_argument("standard_monomial_count: negative degree");
    if (s == 0) return 1;
    std::vector<std::vector<int>> tuples;
    std::vector<int> acc;
    subsets_of(n, d, acc, tuples);
    std::vector<Bracket> all;
    for (auto& t : tuples) all.push_back(Bracket{std::move(t)});
    std::sort(all.begin(), all.end());

    // Depth-first over weakly increasing (componentwise) chains of length s.
    long long count = 0;
    std::vector<const Bracket*> chain;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (static_cast<int>(chain.size()) == s) {
            ++count;
            return;
        }
        for (std::size_t i = start; i < all.size(); ++i) {
            if (!chain.empty()) {
                bool ok = true;
                for (std::size_t r = 0; r < all[i].indices.size() && ok; ++r)
                    ok = chain.back()->indices[r] <= all[i].indices[r];
                if (!ok) continue;
            }
            chain.push_back(&all[i]);
            self(self, i);
            chain.pop_back();
        }
    };
    rec(rec, 0);
    return count;
}

bool borel_weil_check(int n, int d, int s) {
    long long monomials = standard_monomial_count(n, d, s);
    std::vector<int> rect(d, s);
    Partition shape{rect};
    long long ssyt = static_cast<long long>(enumerate_ssyt(SkewShape(shape), n).size());
    Rat schur_at_ones = schur_polynomial(shape, n).evaluate(RatVec(n, Rat(1)));
    return Rat(monomials) == Rat(ssyt) && schur_at_ones == Rat(monomials);
}

std::vector<BracketPolynomial> all_degree2_syzygies(int n, int d) {
    std::vector<BracketPolynomial> out;
    for (int s = 1; s <= d; ++s) {
        std::vector<std::vector<int>> alphas, betas, gammas;
        std::vector<int> acc;
        subsets_of(n, s - 1, acc, alphas);
        subsets_of(n, d + 1, acc, betas);
        subsets_of(n, d - s, acc, gammas);
        for (const auto& al : alphas)
            for (const auto& be : betas)
                for (const auto& ga : gammas) {
                    BracketPolynomial syz = vdw_syzygy(s, al, be, ga, n, d);
                    if (!syz.is_zero()) out.push_back(std::move(syz));
                }
    }
    return out;
}

}  // namespace gct
