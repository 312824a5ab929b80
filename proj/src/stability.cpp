#include "gct/stability.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gct/polytope.hpp"

namespace gct {

namespace {

RatMat mat_mul(const RatMat& a, const RatMat& b) {
    const std::size_t n = a.size();
    RatMat c(n, RatVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

RatMat identity_matrix(int n) {
    RatMat id(n, RatVec(n, Rat(0)));
    for (int i = 0; i < n; ++i) id[i][i] = Rat(1);
    return id;
}

}  // namespace

FiniteMatrixGroup::FiniteMatrixGroup(std::vector<RatMat> generators, std::size_t cap) {
    if (generators.empty())
        throw std::invalid_argument("finite group: need at least one generator");
    dim_ = static_cast<int>(generators[0].size());
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != dim_)
            throw std::invalid_argument("finite group: generators of mixed dimension");
        for (const auto& row : g)
            if (static_cast<int>(row.size()) != dim_)
                throw std::invalid_argument("finite group: generator not square");
    }
    elements_.push_back(identity_matrix(dim_));
    std::size_t frontier = 0;
    while (frontier < elements_.size()) {
        RatMat g = elements_[frontier++];
        for (const auto& gen : generators) {
            RatMat h = mat_mul(g, gen);
            if (std::find(elements_.begin(), elements_.end(), h) == elements_.end()) {
                elements_.push_back(std::move(h));
                if (elements_.size() > cap)
                    throw std::invalid_argument("finite group: closure exceeds the element cap");
            }
        }
    }
}

Polynomial reynolds(const FiniteMatrixGroup& G, const Polynomial& p) {
    if (p.nvars() != G.dim())
        throw std::invalid_argument("reynolds: polynomial arity differs from group dimension");
    Polynomial sum(p.nvars());
    for (const RatMat& g : G.elements()) {
        std::vector<Polynomial> images;
        images.reserve(G.dim());
        for (int i = 0; i < G.dim(); ++i) {
            Polynomial row(G.dim());
            for (int j = 0; j < G.dim(); ++j) {
                if (g[i][j] == 0) continue;
                row += Polynomial::variable(G.dim(), j) * g[i][j];
            }
            images.push_back(std::move(row));
        }
        sum += p.substitute(images);
    }
    return sum * (Rat(1) / Rat(Int(G.order())));
}

namespace {

// det(I - z M) as a univariate polynomial (coefficients ascending), by
// first-column cofactor expansion memoized on row subsets.
RatVec char_like_det(const RatMat& M) {
    const int n = static_cast<int>(M.size());
    // entry(i, j): the (i,j) entry of I - zM as a degree<=1 polynomial.
    auto entry = [&](int i, int j) {
        RatVec e{Rat(i == j ? 1 : 0), -M[i][j]};
        return e;
    };
    auto mul = [](const RatVec& a, const RatVec& b) {
        RatVec c(a.size() + b.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
        }
        return c;
    };

    std::vector<RatVec> memo(std::size_t(1) << n);
    std::vector<bool> done(std::size_t(1) << n, false);
    // minor over the row set `mask`, using the last popcount(mask) columns.
    auto rec = [&](auto&& self, unsigned mask) -> const RatVec& {
        if (done[mask]) return memo[mask];
        done[mask] = true;
        int rows = __builtin_popcount(mask);
        if (rows == 0) {
            memo[mask] = {Rat(1)};
            return memo[mask];
        }
        int col = n - rows;
        RatVec acc{Rat(0)};
        int sign = 1;
        for (int i = 0; i < n; ++i) {
            if (!(mask & (1u << i))) continue;
            RatVec term = mul(entry(i, col), self(self, mask & ~(1u << i)));
            if (sign < 0)
                for (auto& x : term) x = -x;
            if (term.size() > acc.size()) acc.resize(term.size(), Rat(0));
            for (std::size_t t = 0; t < term.size(); ++t) acc[t] += term[t];
            sign = -sign;
        }
        memo[mask] = std::move(acc);
        return memo[mask];
    };
    RatVec det = rec(rec, (1u << n) - 1);
    det.resize(n + 1, Rat(0));
    return det;
}

}  // namespace

RatVec molien_series(const FiniteMatrixGroup& G, int degree_cap) {
    if (degree_cap < 0) throw std::invalid_argument("molien_series: negative degree cap");
    RatVec total(degree_cap + 1, Rat(0));
    for (const RatMat& g : G.elements()) {
        RatVec q = char_like_det(g);
        if (q[0] == 0)
            throw std::logic_error("molien_series: det(I - zM) has zero constant term");
        // Power-series inverse of q up to the cap.
        RatVec inv(degree_cap + 1, Rat(0));
        inv[0] = Rat(1) / q[0];
        for (int k = 1; k <= degree_cap; ++k) {
            Rat acc(0);
            for (int j = 1; j <= k && j < static_cast<int>(q.size()); ++j)
                acc += q[j] * inv[k - j];
            inv[k] = -acc / q[0];
        }
        for (int k = 0; k <= degree_cap; ++k) total[k] += inv[k];
    }
    Rat scale = Rat(1) / Rat(Int(G.order()));
    for (auto& x : total) x *= scale;
    return total;
}

Polynomial polarize(const Polynomial& p) {
    const int n = p.nvars();
    Polynomial out(2 * n);
    for (int i = 0; i < n; ++i) {
        Polynomial dp = p.derivative(i);
        for (const auto& [e, c] : dp.terms()) {
            Polynomial::Exp e2(2 * n, 0);
            std::copy(e.begin(), e.end(), e2.begin());
            e2[n + i] += 1;
            out.add_term(e2, c);
        }
    }
    return out;
}

bool WeightVector::trace_zero() const {
    return std::accumulate(components.begin(), components.end(), 0LL) == 0;
}

std::vector<WeightVector> support_weights(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("support_weights: zero polynomial");
    std::vector<WeightVector> out;
    for (const auto& [e, c] : f.terms()) {
        WeightVector w{e};
        if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(std::move(w));
    }
    return out;
}

std::vector<WeightVector> support_weights(const Polynomial& f,
                                          const std::vector<WeightVector>& var_weights) {
    if (f.is_zero()) throw std::invalid_argument("support_weights: zero polynomial");
    if (static_cast<int>(var_weights.size()) != f.nvars())
        throw std::invalid_argument("support_weights: one weight per variable required");
    const std::size_t m = var_weights.empty() ? 0 : var_weights[0].components.size();
    std::vector<WeightVector> out;
    for (const auto& [e, c] : f.terms()) {
        WeightVector w{std::vector<int>(m, 0)};
        for (int i = 0; i < f.nvars(); ++i)
            for (std::size_t t = 0; t < m; ++t)
                w.components[t] += e[i] * var_weights[i].components[t];
        if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(std::move(w));
    }
    return out;
}

namespace {

std::vector<Int> primitive_direction(const RatVec& p) {
    Int l(1);
    for (const Rat& x : p) l = lcm_int(l, den(x));
    std::vector<Int> v;
    Int g(0);
    for (const Rat& x : p) {
        Int xi = num(x * Rat(l));
        g = gcd(g, xi);
        v.push_back(std::move(xi));
    }
    if (g > 1)
        for (Int& x : v) x /= g;
    return v;
}

}  // namespace

std::optional<std::vector<Int>> torus_nullcone(const std::vector<WeightVector>& support) {
    if (support.empty()) throw std::invalid_argument("torus_nullcone: empty support");
    const int n = static_cast<int>(support[0].components.size());
    // Variables (lambda_1..lambda_n, m), free signs. Maximize m subject to
    // <lambda, chi> - m >= 0, -1 <= lambda_i <= 1, sum lambda = 0.
    IntMat A;
    IntVec b;
    for (const auto& chi : support) {
        IntVec row(n + 1, Int(0));
        for (int j = 0; j < n; ++j) row[j] = -chi.components[j];
        row[n] = 1;
        A.push_back(std::move(row));
        b.push_back(Int(0));
    }
    for (int j = 0; j < n; ++j) {
        IntVec row(n + 1, Int(0));
        row[j] = 1;
        A.push_back(row);
        b.push_back(Int(1));
        row[j] = -1;
        A.push_back(std::move(row));
        b.push_back(Int(1));
    }
    IntVec ones(n + 1, Int(1));
    ones[n] = 0;
    A.push_back(ones);
    b.push_back(Int(0));
    for (Int& x : ones) x = -x;
    A.push_back(std::move(ones));
    b.push_back(Int(0));

    RationalPolytope P(std::move(A), std::move(b), false);
    RatVec obj(n + 1, Rat(0));
    obj[n] = Rat(1);
    LpResult r = maximize(P, obj);
    if (r.status != LpStatus::optimal || r.value <= 0) return std::nullopt;
    RatVec lambda(r.point.begin(), r.point.begin() + n);
    return primitive_direction(lambda);
}

namespace {

// Minimum-norm point of the affine hull of the chosen points, with the
// convex-combination certificate: solve the KKT system of
//   min |sum c_t p_t|^2  s.t.  sum c_t = 1.
// Returns nullopt when the subset is affinely dependent (a smaller subset
// covers its faces) or some coefficient is negative.
std::optional<std::pair<RatVec, Rat>> subset_min_norm(const std::vector<RatVec>& pts,
                                                      const std::vector<int>& idx) {
    const std::size_t k = idx.size();
    const std::size_t dim = pts[0].size();
    // KKT: for all t: sum_u c_u <p_t, p_u> = mu ; sum c_u = 1.
    RatMat M(k + 1, RatVec(k + 2, Rat(0)));
    for (std::size_t t = 0; t < k; ++t) {
        for (std::size_t u = 0; u < k; ++u) {
            Rat dot(0);
            for (std::size_t j = 0; j < dim; ++j) dot += pts[idx[t]][j] * pts[idx[u]][j];
            M[t][u] = dot;
        }
        M[t][k] = Rat(-1);  // -mu
        M[t][k + 1] = Rat(0);
    }
    for (std::size_t u = 0; u < k; ++u) M[k][u] = Rat(1);
    M[k][k + 1] = Rat(1);

    const std::size_t rows = k + 1, cols = k + 1;
    for (std::size_t col = 0, prow = 0; col < cols && prow < rows; ++col) {
        std::size_t piv = prow;
        while (piv < rows && M[piv][col] == 0) ++piv;
        if (piv == rows) return std::nullopt;  // singular: affinely dependent subset
        std::swap(M[piv], M[prow]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == prow || M[r][col] == 0) continue;
            Rat f = M[r][col] / M[prow][col];
            for (std::size_t c = col; c <= cols; ++c) M[r][c] -= f * M[prow][c];
        }
        ++prow;
    }
    RatVec sol(cols);
    for (std::size_t i = 0; i < cols; ++i) sol[i] = M[i][cols] / M[i][i];
    for (std::size_t t = 0; t < k; ++t)
        if (sol[t] < 0) return std::nullopt;
    RatVec point(dim, Rat(0));
    for (std::size_t t = 0; t < k; ++t)
        for (std::size_t j = 0; j < dim; ++j) point[j] += sol[t] * pts[idx[t]][j];
    Rat norm2(0);
    for (const Rat& x : point) norm2 += x * x;
    return std::make_pair(std::move(point), std::move(norm2));
}

}  // namespace

std::optional<KempfResult> kempf_optimal(const std::vector<WeightVector>& support) {
    if (support.empty()) throw std::invalid_argument("kempf_optimal: empty support");
    const int n = static_cast<int>(support[0].components.size());

    // Project onto the trace-zero hyperplane; the pairing with trace-zero
    // lambda only sees this projection.
    std::vector<RatVec> pts;
    for (const auto& chi : support) {
        long long tr = 0;
        for (int x : chi.components) tr += x;
        RatVec p(n);
        for (int j = 0; j < n; ++j) p[j] = Rat(chi.components[j]) - Rat(tr) / Rat(n);
        pts.push_back(std::move(p));
    }

    std::optional<std::pair<RatVec, Rat>> best;
    std::vector<int> idx;
    const int max_size = std::min<int>(n, static_cast<int>(pts.size()));
    auto rec = [&](auto&& self, int start) -> void {
        if (!idx.empty()) {
            auto cand = subset_min_norm(pts, idx);
            if (cand && (!best || cand->second < best->second)) best = cand;
        }
        if (static_cast<int>(idx.size()) == max_size) return;
        for (int i = start; i < static_cast<int>(pts.size()); ++i) {
            idx.push_back(i);
            self(self, i + 1);
            idx.pop_back();
        }
    };
    rec(rec, 0);

    if (!best || best->second == 0) return std::nullopt;
    KempfResult res;
    res.lambda = primitive_direction(best->first);
    res.efficiency_sq = best->second;
    res.norm_sq = Int(0);
    for (const Int& x : res.lambda) res.norm_sq += x * x;
    bool first = true;
    for (const auto& chi : support) {
        Int pair(0);
        for (int j = 0; j < n; ++j) pair += res.lambda[j] * chi.components[j];
        if (first || pair < res.m) res.m = pair;
        first = false;
    }
    return res;
}

std::vector<Int> theta(const std::vector<Int>& m) {
    Int sum(0);
    for (const Int& x : m) sum += x;
    if (sum != 0) throw std::invalid_argument("theta: input not trace-zero");
    std::vector<Int> a;
    Int acc(0);
    for (std::size_t i = 0; i + 1 < m.size(); ++i) {
        acc += m[i];
        a.push_back(acc);
    }
    return a;
}

std::vector<Int> theta_inverse(const std::vector<Int>& a) {
    std::vector<Int> m;
    Int prev(0);
    for (const Int& x : a) {
        m.push_back(x - prev);
        prev = x;
    }
    m.push_back(-prev);
    return m;
}

}  // namespace gct
