#include "gct/polytope.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace gct {

RationalPolytope::RationalPolytope(IntMat A_, IntVec b_, bool nonneg_)
    : A(std::move(A_)), b(std::move(b_)), nonneg(nonneg_) {
    if (A.size() != b.size())
        throw std::invalid_argument("polytope: row count of A differs from length of b");
    for (const auto& row : A)
        if (row.size() != A[0].size())
            throw std::invalid_argument("polytope: ragged constraint matrix");
}

RationalPolytope RationalPolytope::dilated(const Int& k) const {
    RationalPolytope Q(*this);
    for (Int& x : Q.b) x *= k;
    return Q;
}

namespace {

// Dense two-phase primal simplex with Bland's rule on
//   min c.y  s.t.  M y = rhs, y >= 0.
class SimplexTableau {
  public:
    // rows: m x (cols+1), last column is the rhs (all rhs >= 0 on entry).
    SimplexTableau(std::vector<RatVec> rows, std::vector<int> basis, int cols)
        : t_(std::move(rows)), basis_(std::move(basis)), cols_(cols) {}

    // Returns false when the objective is unbounded below.
    bool run(const RatVec& cost, int usable_cols) {
        // Reduced costs: z_j = c_j - c_B B^-1 A_j, maintained as a full row.
        red_.assign(cols_ + 1, Rat(0));
        for (int j = 0; j < static_cast<int>(cost.size()); ++j) red_[j] = cost[j];
        for (std::size_t r = 0; r < t_.size(); ++r) {
            Rat cb = basis_[r] < static_cast<int>(cost.size()) ? cost[basis_[r]] : Rat(0);
            if (cb == 0) continue;
            for (int j = 0; j <= cols_; ++j) red_[j] -= cb * t_[r][j];
        }
        while (true) {
            int enter = -1;
            for (int j = 0; j < usable_cols; ++j)
                if (red_[j] < 0) { enter = j; break; }  // Bland: smallest index
            if (enter < 0) return true;
            int leave = -1;
            Rat best;
            for (std::size_t r = 0; r < t_.size(); ++r) {
                if (t_[r][enter] <= 0) continue;
                Rat ratio = t_[r][cols_] / t_[r][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[r] < basis_[leave])) {
                    leave = static_cast<int>(r);
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }

    void pivot(int r, int j) {
        Rat inv = Rat(1) / t_[r][j];
        for (int c = 0; c <= cols_; ++c) t_[r][c] *= inv;
        for (std::size_t rr = 0; rr < t_.size(); ++rr) {
            if (static_cast<int>(rr) == r || t_[rr][j] == 0) continue;
            Rat f = t_[rr][j];
            for (int c = 0; c <= cols_; ++c) t_[rr][c] -= f * t_[r][c];
        }
        if (red_[j] != 0) {
            Rat f = red_[j];
            for (int c = 0; c <= cols_; ++c) red_[c] -= f * t_[r][c];
        }
        basis_[r] = j;
    }

    Rat objective() const { return -red_[cols_]; }

    RatVec solution(int nvars) const {
        RatVec y(nvars, Rat(0));
        for (std::size_t r = 0; r < t_.size(); ++r)
            if (basis_[r] < nvars) y[basis_[r]] = t_[r][cols_];
        return y;
    }

    const std::vector<int>& basis() const { return basis_; }
    std::vector<RatVec>& rows() { return t_; }
    int cols() const { return cols_; }

  private:
    std::vector<RatVec> t_;
    std::vector<int> basis_;
    int cols_;
    RatVec red_;
};

// Solves max c.x over P. The standard form uses x = u - v for free
// variables, one slack per row, and artificials for rows with negative rhs.
LpResult solve_lp(const RationalPolytope& P, const RatVec& c, bool maximize_sense) {
    const int d = P.dim();
    const int m = P.rows();
    const int nstruct = P.nonneg ? d : 2 * d;
    const int ncols = nstruct + m;  // structural + slack columns

    int nart = 0;
    for (int i = 0; i < m; ++i)
        if (P.b[i] < 0) ++nart;
    const int total = ncols + nart;

    std::vector<RatVec> rows(m);
    std::vector<int> basis(m, -1);
    RatVec phase1(total, Rat(0));
    int next_art = ncols;
    for (int i = 0; i < m; ++i) {
        rows[i].assign(total + 1, Rat(0));
        bool neg = P.b[i] < 0;
        Int sgn = neg ? -1 : 1;
        for (int j = 0; j < d; ++j) {
            Rat a(sgn * P.A[i][j]);
            rows[i][j] = a;
            if (!P.nonneg) rows[i][d + j] = -a;
        }
        rows[i][nstruct + i] = Rat(neg ? -1 : 1);
        rows[i][total] = Rat(sgn * P.b[i]);
        if (neg) {
            rows[i][next_art] = Rat(1);
            basis[i] = next_art;
            phase1[next_art] = Rat(1);
            ++next_art;
        } else {
            basis[i] = nstruct + i;
        }
    }

    SimplexTableau tab(std::move(rows), std::move(basis), total);

    if (nart > 0) {
        tab.run(phase1, total);  // phase-1 objective is bounded below by 0
        if (tab.objective() != 0) return {LpStatus::infeasible, Rat(0), {}};
        // Drive any basic artificials out; rows that cannot pivot are
        // redundant equalities with zero rhs and are harmless.
        for (std::size_t r = 0; r < tab.basis().size(); ++r) {
            if (tab.basis()[r] < ncols) continue;
            for (int j = 0; j < ncols; ++j)
                if (tab.rows()[r][j] != 0) { tab.pivot(static_cast<int>(r), j); break; }
        }
    }

    RatVec cost(total, Rat(0));
    for (int j = 0; j < d; ++j) {
        Rat cj = c.empty() ? Rat(0) : c[j];
        if (maximize_sense) cj = -cj;  // tableau minimizes
        if (P.nonneg) {
            cost[j] = cj;
        } else {
            cost[j] = cj;
            cost[d + j] = -cj;
        }
    }
    if (!tab.run(cost, ncols)) return {LpStatus::unbounded, Rat(0), {}};

    RatVec y = tab.solution(nstruct);
    RatVec x(d);
    for (int j = 0; j < d; ++j) x[j] = P.nonneg ? y[j] : y[j] - y[d + j];
    Rat val(0);
    for (int j = 0; j < d && j < static_cast<int>(c.size()); ++j) val += c[j] * x[j];
    return {LpStatus::optimal, val, std::move(x)};
}

}  // namespace

LpResult maximize(const RationalPolytope& P, const RatVec& c) {
    return solve_lp(P, c, true);
}

LpResult minimize(const RationalPolytope& P, const RatVec& c) {
    return solve_lp(P, c, false);
}

std::optional<RatVec> feasible(const RationalPolytope& P) {
    LpResult r = solve_lp(P, RatVec(P.dim(), Rat(0)), true);
    if (r.status == LpStatus::infeasible) return std::nullopt;
    return r.point;
}

AffineSubspace affine_span(const RationalPolytope& P) {
    if (!feasible(P)) throw std::invalid_argument("affine_span: empty polytope");
    AffineSubspace aff;
    aff.ambient_dim = P.dim();
    for (int i = 0; i < P.rows(); ++i) {
        RatVec c(P.dim());
        for (int j = 0; j < P.dim(); ++j) c[j] = Rat(P.A[i][j]);
        LpResult r = minimize(P, c);
        if (r.status == LpStatus::optimal && r.value == Rat(P.b[i])) {
            aff.C.push_back(P.A[i]);
            aff.d.push_back(P.b[i]);
        }
    }
    if (P.nonneg) {
        for (int j = 0; j < P.dim(); ++j) {
            RatVec c(P.dim(), Rat(0));
            c[j] = Rat(1);
            LpResult r = maximize(P, c);
            if (r.status == LpStatus::optimal && r.value == 0) {
                IntVec row(P.dim(), Int(0));
                row[j] = 1;
                aff.C.push_back(std::move(row));
                aff.d.push_back(Int(0));
            }
        }
    }
    return aff;
}

namespace {

int rational_rank(const IntMat& M) {
    if (M.empty()) return 0;
    RatMat r(M.size(), RatVec(M[0].size()));
    for (std::size_t i = 0; i < M.size(); ++i)
        for (std::size_t j = 0; j < M[0].size(); ++j) r[i][j] = Rat(M[i][j]);
    int rank = 0;
    std::size_t prow = 0;
    for (std::size_t col = 0; col < M[0].size() && prow < r.size(); ++col) {
        std::size_t piv = prow;
        while (piv < r.size() && r[piv][col] == 0) ++piv;
        if (piv == r.size()) continue;
        std::swap(r[piv], r[prow]);
        for (std::size_t i = prow + 1; i < r.size(); ++i) {
            if (r[i][col] == 0) continue;
            Rat f = r[i][col] / r[prow][col];
            for (std::size_t j = col; j < M[0].size(); ++j) r[i][j] -= f * r[prow][j];
        }
        ++prow;
        ++rank;
    }
    return rank;
}

}  // namespace

int affine_dim(const RationalPolytope& P) {
    AffineSubspace aff = affine_span(P);
    return P.dim() - rational_rank(aff.C);
}

std::optional<std::pair<IntVec, IntVec>> bounding_box(const RationalPolytope& P) {
    const int d = P.dim();
    const int m = P.rows();
    // Interval state: finite flag + rational bound per side.
    std::vector<bool> has_lo(d, P.nonneg), has_hi(d, false);
    RatVec lo(d, Rat(0)), hi(d, Rat(0));

    // Bound-crossing during propagation certifies emptiness; the magnitude
    // cap stops any runaway tightening before it leaves the 64-bit envelope.
    const Rat magnitude_cap = Rat(Int(1) << 60);
    auto crossed = [&]() {
        for (int j = 0; j < d; ++j)
            if (has_lo[j] && has_hi[j] && lo[j] > hi[j]) return true;
        return false;
    };
    for (int round = 0; round < 3 * d + 8; ++round) {
        bool changed = false;
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < d; ++j) {
                if (P.A[i][j] == 0) continue;
                // Minimal achievable value of the other terms of row i.
                Rat rest(0);
                bool rest_finite = true;
                for (int k = 0; k < d && rest_finite; ++k) {
                    if (k == j || P.A[i][k] == 0) continue;
                    if (P.A[i][k] > 0) {
                        if (!has_lo[k]) rest_finite = false;
                        else rest += Rat(P.A[i][k]) * lo[k];
                    } else {
                        if (!has_hi[k]) rest_finite = false;
                        else rest += Rat(P.A[i][k]) * hi[k];
                    }
                }
                if (!rest_finite) continue;
                Rat bound = (Rat(P.b[i]) - rest) / Rat(P.A[i][j]);
                if (abs(bound) > magnitude_cap) continue;
                if (P.A[i][j] > 0) {
                    if (!has_hi[j] || bound < hi[j]) { has_hi[j] = true; hi[j] = bound; changed = true; }
                } else {
                    if (!has_lo[j] || bound > lo[j]) { has_lo[j] = true; lo[j] = bound; changed = true; }
                }
            }
        }
        if (crossed()) {
            IntVec ilo(d, Int(1)), ihi(d, Int(0));
            return std::make_pair(std::move(ilo), std::move(ihi));
        }
        if (!changed) break;
    }

    for (int j = 0; j < d; ++j) {
        if (!has_lo[j]) {
            RatVec c(d, Rat(0));
            c[j] = Rat(1);
            LpResult r = minimize(P, c);
            if (r.status == LpStatus::infeasible) { lo[j] = Rat(1); hi[j] = Rat(0); has_lo[j] = has_hi[j] = true; continue; }
            if (r.status == LpStatus::unbounded) return std::nullopt;
            lo[j] = r.value;
            has_lo[j] = true;
        }
        if (!has_hi[j]) {
            RatVec c(d, Rat(0));
            c[j] = Rat(1);
            LpResult r = maximize(P, c);
            if (r.status == LpStatus::infeasible) { lo[j] = Rat(1); hi[j] = Rat(0); has_hi[j] = true; continue; }
            if (r.status == LpStatus::unbounded) return std::nullopt;
            hi[j] = r.value;
        }
    }

    IntVec ilo(d), ihi(d);
    for (int j = 0; j < d; ++j) {
        ilo[j] = ceil_rat(lo[j]);
        ihi[j] = floor_rat(hi[j]);
    }
    return std::make_pair(std::move(ilo), std::move(ihi));
}

namespace {

struct LatticeCounter {
    int d, m;
    std::vector<std::vector<long long>> A;
    std::vector<long long> b, lo, hi;
    // suffix_min[i][t]: minimal achievable sum over coordinates >= t in row i.
    std::vector<std::vector<long long>> suffix_min;
    std::vector<long long> fixed;  // per-row partial sum of the chosen prefix
    long long count = 0;

    void dfs(int t) {
        for (int i = 0; i < m; ++i)
            if (fixed[i] + suffix_min[i][t] > b[i]) return;
        if (t == d) {
            ++count;
            return;
        }
        long long L = lo[t], U = hi[t];
        for (int i = 0; i < m && L <= U; ++i) {
            long long a = A[i][t];
            if (a == 0) continue;
            // a*x_t <= b_i - fixed_i - (min of the rest)
            long long avail = b[i] - fixed[i] - suffix_min[i][t + 1];
            if (a > 0) {
                long long q = avail >= 0 ? avail / a : -((-avail + a - 1) / a);
                U = std::min(U, q);
            } else {
                long long aa = -a;
                long long q = avail >= 0 ? -(avail / aa) : (-avail + aa - 1) / aa;
                L = std::max(L, q);
            }
        }
        for (long long v = L; v <= U; ++v) {
            for (int i = 0; i < m; ++i) fixed[i] += A[i][t] * v;
            dfs(t + 1);
            for (int i = 0; i < m; ++i) fixed[i] -= A[i][t] * v;
        }
    }
};

long long checked_ll(const Int& x) { return to_ll(x); }

}  // namespace

long long count_lattice_points(const RationalPolytope& P) {
    auto box = bounding_box(P);
    if (!box) throw std::invalid_argument("count_lattice_points: unbounded polytope");
    const int d = P.dim();
    LatticeCounter ctr;
    ctr.d = d;
    ctr.lo.resize(d);
    ctr.hi.resize(d);
    for (int j = 0; j < d; ++j) {
        ctr.lo[j] = checked_ll(box->first[j]);
        ctr.hi[j] = checked_ll(box->second[j]);
        if (ctr.lo[j] > ctr.hi[j]) return 0;
    }
    // Narrowing guard: every partial sum fits comfortably in 64 bits.
    Int magnitude = 0;
    for (int i = 0; i < P.rows(); ++i) {
        Int s = abs(P.b[i]);
        for (int j = 0; j < d; ++j)
            s += abs(P.A[i][j]) * std::max(abs(box->first[j]), abs(box->second[j]));
        magnitude = std::max(magnitude, s);
    }
    if (magnitude > Int(std::numeric_limits<long long>::max() / 4))
        throw std::overflow_error("count_lattice_points: values exceed the 64-bit envelope");

    ctr.m = P.rows();
    ctr.A.assign(ctr.m, std::vector<long long>(d, 0));
    ctr.b.resize(ctr.m);
    for (int i = 0; i < ctr.m; ++i) {
        ctr.b[i] = checked_ll(P.b[i]);
        for (int j = 0; j < d; ++j) ctr.A[i][j] = checked_ll(P.A[i][j]);
    }
    ctr.suffix_min.assign(ctr.m, std::vector<long long>(d + 1, 0));
    for (int i = 0; i < ctr.m; ++i)
        for (int t = d - 1; t >= 0; --t) {
            long long a = ctr.A[i][t];
            long long best = a > 0 ? a * ctr.lo[t] : a * ctr.hi[t];
            ctr.suffix_min[i][t] = ctr.suffix_min[i][t + 1] + best;
        }
    ctr.fixed.assign(ctr.m, 0);
    ctr.dfs(0);
    return ctr.count;
}

Quasipolynomial::Quasipolynomial(int period, std::vector<RatVec> coeffs)
    : period_(period), coeffs_(std::move(coeffs)) {
    if (period_ < 1 || coeffs_.size() != static_cast<std::size_t>(period_))
        throw std::invalid_argument("quasipolynomial: need one constituent per residue");
    for (auto& f : coeffs_)
        while (!f.empty() && f.back() == 0) f.pop_back();
}

Rat Quasipolynomial::evaluate(const Int& k) const {
    Int r = k % period_;
    if (r < 0) r += period_;
    int idx = r == 0 ? period_ : static_cast<int>(r.convert_to<long>());
    return polynomial_eval(coeffs_[idx - 1], k);
}

int Quasipolynomial::degree() const {
    int d = -1;
    for (const auto& f : coeffs_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

int Quasipolynomial::index() const {
    for (int i = 1; i <= period_; ++i)
        if (!coeffs_[i - 1].empty()) return i;
    return 0;
}

bool Quasipolynomial::is_positive() const {
    for (const auto& f : coeffs_)
        for (const auto& c : f)
            if (c < 0) return false;
    return true;
}

bool Quasipolynomial::is_saturated() const {
    return evaluate(Int(index())) != 0;
}

Rat polynomial_eval(const RatVec& coeffs, const Int& k) {
    Rat v(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * Rat(k) + *it;
    return v;
}

RatVec polynomial_fit(const std::vector<std::pair<Int, Rat>>& samples) {
    const std::size_t n = samples.size();
    RatMat M(n, RatVec(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        Rat x(samples[i].first), p(1);
        for (std::size_t j = 0; j < n; ++j) {
            M[i][j] = p;
            p *= x;
        }
        M[i][n] = samples[i].second;
    }
    // Gaussian elimination; the Vandermonde matrix is nonsingular for
    // distinct sample points.
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && M[piv][col] == 0) ++piv;
        if (piv == n) throw std::invalid_argument("polynomial_fit: repeated sample points");
        std::swap(M[piv], M[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || M[r][col] == 0) continue;
            Rat f = M[r][col] / M[col][col];
            for (std::size_t c = col; c <= n; ++c) M[r][c] -= f * M[col][c];
        }
    }
    RatVec coeffs(n);
    for (std::size_t i = 0; i < n; ++i) coeffs[i] = M[i][n] / M[i][i];
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return coeffs;
}

std::vector<RatVec> enumerate_vertices(const RationalPolytope& P) {
    const int d = P.dim();
    IntMat rows = P.A;
    IntVec rhs = P.b;
    if (P.nonneg) {
        for (int j = 0; j < d; ++j) {
            IntVec r(d, Int(0));
            r[j] = -1;
            rows.push_back(std::move(r));
            rhs.push_back(Int(0));
        }
    }
    const int m = static_cast<int>(rows.size());
    std::vector<RatVec> verts;
    std::vector<int> pick;

    auto try_subset = [&](const std::vector<int>& idx) {
        RatMat M(d, RatVec(d + 1));
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) M[i][j] = Rat(rows[idx[i]][j]);
            M[i][d] = Rat(rhs[idx[i]]);
        }
        for (int col = 0; col < d; ++col) {
            int piv = col;
            while (piv < d && M[piv][col] == 0) ++piv;
            if (piv == d) return;  // singular subset
            std::swap(M[piv], M[col]);
            for (int r = 0; r < d; ++r) {
                if (r == col || M[r][col] == 0) continue;
                Rat f = M[r][col] / M[col][col];
                for (int c = col; c <= d; ++c) M[r][c] -= f * M[col][c];
            }
        }
        RatVec x(d);
        for (int i = 0; i < d; ++i) x[i] = M[i][d] / M[i][i];
        for (int i = 0; i < m; ++i) {
            Rat s(0);
            for (int j = 0; j < d; ++j) s += Rat(rows[i][j]) * x[j];
            if (s > Rat(rhs[i])) return;
        }
        if (std::find(verts.begin(), verts.end(), x) == verts.end()) verts.push_back(std::move(x));
    };

    std::vector<int> idx;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(idx.size()) == d) {
            try_subset(idx);
            return;
        }
        for (int i = start; i < m; ++i) {
            idx.push_back(i);
            self(self, i + 1);
            idx.pop_back();
        }
    };
    rec(rec, 0);
    return verts;
}

Quasipolynomial ehrhart_quasipolynomial(const RationalPolytope& P, int period_cap) {
    if (!feasible(P)) throw std::invalid_argument("ehrhart: empty polytope");
    if (!bounding_box(P)) throw std::invalid_argument("ehrhart: unbounded polytope");
    const int D = affine_dim(P);

    std::vector<RatVec> verts = enumerate_vertices(P);
    Int ell(1);
    for (const auto& v : verts)
        for (const auto& x : v) ell = lcm_int(ell, den(x));

    std::vector<Rat> counts;  // counts[k-1] = |kP cap Z^d|
    auto count_upto = [&](long long kmax) {
        while (static_cast<long long>(counts.size()) < kmax) {
            Int k(counts.size() + 1);
            counts.push_back(Rat(count_lattice_points(P.dilated(k))));
        }
    };

    long long period = to_ll(ell);
    while (period <= period_cap) {
        long long fit_upto = period * (D + 1);
        count_upto(fit_upto + period);
        std::vector<RatVec> coeffs;
        for (long long i = 1; i <= period; ++i) {
            std::vector<std::pair<Int, Rat>> samples;
            for (int t = 0; t <= D; ++t) {
                Int k(i + t * period);
                samples.emplace_back(k, counts[to_ll(k) - 1]);
            }
            coeffs.push_back(polynomial_fit(samples));
        }
        Quasipolynomial q(static_cast<int>(period), std::move(coeffs));
        bool ok = true;
        for (long long k = fit_upto + 1; k <= fit_upto + period && ok; ++k)
            ok = q.evaluate(Int(k)) == counts[k - 1];
        if (ok) return q;
        period *= 2;
    }
    throw std::runtime_error("ehrhart: period search exceeded the cap (validation kept failing)");
}

std::pair<IntVec, IntVec> ehrhart_series(const Quasipolynomial& q, int degree_cap) {
    const int ell = q.period();
    const int D = std::max(q.degree(), 0);
    // B(t) = (1 - t^ell)^(D+1), expanded by the binomial theorem.
    IntVec B(static_cast<std::size_t>(ell) * (D + 1) + 1, Int(0));
    Int binom(1);
    for (int j = 0; j <= D + 1; ++j) {
        B[static_cast<std::size_t>(j) * ell] = (j % 2 == 0 ? binom : -binom);
        binom = binom * (D + 1 - j) / (j + 1);
    }
    const int degB = static_cast<int>(B.size()) - 1;
    if (degree_cap < degB)
        throw std::invalid_argument("ehrhart_series: degree_cap below deg B");

    RatVec F(degree_cap + 1);
    for (int k = 0; k <= degree_cap; ++k) F[k] = q.evaluate(Int(k));

    IntVec A(degB, Int(0));
    for (int j = 0; j <= degree_cap; ++j) {
        Rat aj(0);
        for (int i = 0; i <= j && i <= degB; ++i) aj += Rat(B[i]) * F[j - i];
        if (j < degB) {
            if (!is_integer(aj))
                throw std::runtime_error("ehrhart_series: non-integer numerator coefficient");
            A[j] = num(aj);
        } else if (aj != 0) {
            throw std::runtime_error("ehrhart_series: series mismatch beyond deg B");
        }
    }
    while (!A.empty() && A.back() == 0) A.pop_back();
    return {std::move(A), std::move(B)};
}

std::pair<IntVec, IntVec> ehrhart_series(const RationalPolytope& P, int degree_cap,
                                         int period_cap) {
    return ehrhart_series(ehrhart_quasipolynomial(P, period_cap), degree_cap);
}

}  // namespace gct
