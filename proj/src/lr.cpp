#include "gct/lr.hpp"

#include <stdexcept>

#include "gct/lattice.hpp"

namespace gct {

namespace {

struct LrSearch {
    const SkewShape& shape;
    std::vector<int> remaining;  // per letter, boxes of that value still to place
    std::vector<int> cnt;        // letter counts along the reverse reading
    // grid[i][j] = value at (i, j) for filled cells (column offsets absolute)
    std::vector<std::vector<int>> grid;
    std::vector<std::pair<int, int>> cells;  // scan order: top rows, right to left
    long long found = 0;

    void run() {
        for (int i = 0; i < shape.rows(); ++i)
            for (int j = shape.row_end(i) - 1; j >= shape.row_begin(i); --j)
                cells.emplace_back(i, j);
        grid.assign(shape.rows(), {});
        for (int i = 0; i < shape.rows(); ++i)
            grid[i].assign(std::max(shape.row_end(i), 0), 0);
        dfs(0);
    }

    void dfs(std::size_t pos) {
        if (pos == cells.size()) {
            ++found;
            return;
        }
        auto [i, j] = cells[pos];
        int letters = static_cast<int>(remaining.size());
        int lo = 1, hi = letters;
        if (j + 1 < shape.row_end(i)) hi = std::min(hi, grid[i][j + 1]);  // weak rows
        if (i > 0 && shape.contains(i - 1, j)) lo = std::max(lo, grid[i - 1][j] + 1);
        for (int v = lo; v <= hi; ++v) {
            if (remaining[v - 1] == 0) continue;
            if (v > 1 && cnt[v - 1] + 1 > cnt[v - 2]) continue;  // reverse lattice prefix
            --remaining[v - 1];
            ++cnt[v - 1];
            grid[i][j] = v;
            dfs(pos + 1);
            ++remaining[v - 1];
            --cnt[v - 1];
        }
    }
};

}  // namespace

long long lr_count(const LRInstance& inst) {
    if (!inst.well_posed()) return 0;
    SkewShape shape(inst.gamma, inst.alpha);
    LrSearch s{shape, {}, {}, {}, {}, 0};
    s.remaining.resize(inst.beta.height());
    for (int v = 0; v < inst.beta.height(); ++v) s.remaining[v] = inst.beta.part(v);
    s.cnt.assign(inst.beta.height(), 0);
    s.run();
    return s.found;
}

RationalPolytope lr_polytope(const LRInstance& inst, int n) {
    if (n < inst.max_height())
        throw std::invalid_argument("lr_polytope: rank below the maximum height");
    auto var = [n](int i, int j) { return i * n + j; };  // r^{i+1}_{j+1}
    const int d = n * n;
    IntMat A;
    IntVec b;
    auto push = [&](IntVec row, Int rhs) {
        A.push_back(std::move(row));
        b.push_back(std::move(rhs));
    };
    auto push_eq = [&](const IntVec& row, const Int& rhs) {
        push(row, rhs);
        IntVec neg(row);
        for (Int& x : neg) x = -x;
        push(std::move(neg), -rhs);
    };

    // Shape: alpha_i + sum_j r^i_j = gamma_i.
    for (int i = 0; i < n; ++i) {
        IntVec row(d, Int(0));
        for (int j = 0; j < n; ++j) row[var(i, j)] = 1;
        push_eq(row, Int(inst.gamma.part(i) - inst.alpha.part(i)));
    }
    // Content: sum_i r^i_j = beta_j.
    for (int j = 0; j < n; ++j) {
        IntVec row(d, Int(0));
        for (int i = 0; i < n; ++i) row[var(i, j)] = 1;
        push_eq(row, Int(inst.beta.part(j)));
    }
    // Tableau: alpha_{i+1} + sum_{k<=j} r^{i+1}_k <= alpha_i + sum_{k<j} r^i_k.
    for (int i = 0; i + 1 < n; ++i)
        for (int j = 0; j < n; ++j) {
            IntVec row(d, Int(0));
            for (int k = 0; k <= j; ++k) row[var(i + 1, k)] += 1;
            for (int k = 0; k < j; ++k) row[var(i, k)] -= 1;
            push(std::move(row), Int(inst.alpha.part(i) - inst.alpha.part(i + 1)));
        }
    // Reverse lattice word: r^i_j = 0 for i < j (nonnegativity supplies the
    // other side), and column comparisons for j >= 2.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            IntVec row(d, Int(0));
            row[var(i, j)] = 1;
            push(std::move(row), Int(0));
        }
    for (int i = 0; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            IntVec row(d, Int(0));
            for (int ip = 0; ip <= i; ++ip) row[var(ip, j)] += 1;
            for (int ip = 0; ip < i; ++ip) row[var(ip, j - 1)] -= 1;
            push(std::move(row), Int(0));
        }

    return RationalPolytope(std::move(A), std::move(b), true);
}

RationalPolytope lr_polytope(const LRInstance& inst) {
    return lr_polytope(inst, std::max(inst.max_height(), 1));
}

bool decide_nonvanishing(const LRInstance& inst) {
    if (!inst.well_posed()) return false;
    return feasible(lr_polytope(inst)).has_value();
}

long long stretch_lr(const LRInstance& inst, int k) {
    if (k < 1) throw std::invalid_argument("stretch_lr: dilation must be positive");
    return lr_count(inst.scaled(k));
}

Quasipolynomial fit_stretching(const LRInstance& inst, int kmax) {
    if (kmax < 3) throw std::invalid_argument("fit_stretching: kmax must be at least 3");
    std::vector<std::pair<Int, Rat>> samples;
    for (int k = 1; k < kmax; ++k)
        samples.emplace_back(Int(k), Rat(stretch_lr(inst, k)));
    RatVec coeffs = polynomial_fit(samples);
    Quasipolynomial q(1, {coeffs});
    if (q.evaluate(Int(kmax)) != Rat(stretch_lr(inst, kmax)))
        throw std::runtime_error(
            "fit_stretching: held-out dilation mismatch (increase kmax; a genuine "
            "mismatch at every kmax would contradict polynomiality of the stretch)");
    return q;
}

bool decide_nonvanishing_z2(const RationalPolytope& P) {
    return z2_feasible_polytope(P);
}

}  // namespace gct
