#include "gct/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>

#include "gct/characters.hpp"
#include "gct/crystal.hpp"
#include "gct/polytope.hpp"

namespace gct {

namespace {

struct PairJob {
    Partition alpha, beta;
};

struct PairResult {
    std::vector<CorpusTriple> triples;
};

// All four engines for one (alpha, beta) pair: the Schur product and the
// crystal pair scan are shared across every gamma.
PairResult run_pair(const PairJob& job, int max_height) {
    PairResult out;
    const Partition& alpha = job.alpha;
    const Partition& beta = job.beta;
    const int m = static_cast<int>(alpha.size() + beta.size());

    Polynomial product =
        schur_polynomial(alpha, max_height) * schur_polynomial(beta, max_height);
    std::map<Partition, Rat> schur_dec =
        product.is_zero() ? std::map<Partition, Rat>{} : decompose_into_schur(product);

    // Highest-weight tensor pairs bucketed by content.
    std::map<std::vector<int>, long long> crystal_buckets;
    {
        std::vector<std::vector<int>> words_a, words_b;
        for (const Tableau& t : enumerate_ssyt(SkewShape(alpha), max_height))
            words_a.push_back(row_word(t));
        for (const Tableau& t : enumerate_ssyt(SkewShape(beta), max_height))
            words_b.push_back(row_word(t));
        for (const auto& wa : words_a)
            for (const auto& wb : words_b) {
                std::vector<int> w(wa);
                w.insert(w.end(), wb.begin(), wb.end());
                CrystalWord cw(std::move(w), max_height);
                if (!is_highest_weight(cw)) continue;
                ++crystal_buckets[cw.weight()];
            }
    }

    for (const Partition& gamma : partitions_of(m, max_height)) {
        LRInstance inst{alpha, beta, gamma};
        CorpusTriple t;
        t.inst = inst;
        t.rule_count = lr_count(inst);
        t.polytope_count =
            inst.well_posed()
                ? count_lattice_points(lr_polytope(inst, std::max(inst.max_height(), 1)))
                : 0;
        std::vector<int> key = gamma.parts();
        key.resize(max_height, 0);
        auto itc = crystal_buckets.find(key);
        t.crystal_count = itc == crystal_buckets.end() ? 0 : itc->second;
        auto its = schur_dec.find(gamma);
        if (its == schur_dec.end()) {
            t.schur_count = 0;
        } else {
            if (!is_integer(its->second) || its->second < 0)
                throw std::logic_error("corpus: non-integral Schur coefficient");
            t.schur_count = to_ll(num(its->second));
        }
        out.triples.push_back(std::move(t));
    }
    return out;
}

}  // namespace

CorpusReport corpus_sweep(int max_size, int max_height, unsigned threads) {
    std::vector<PairJob> jobs;
    for (int m = 0; m <= max_size; ++m)
        for (int a = 0; a <= m; ++a)
            for (const Partition& alpha : partitions_of(a, max_height))
                for (const Partition& beta : partitions_of(m - a, max_height))
                    jobs.push_back({alpha, beta});

    std::vector<PairResult> results(jobs.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) results[i] = run_pair(jobs[i], max_height);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&]() {
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= jobs.size()) return;
                    results[i] = run_pair(jobs[i], max_height);
                }
            });
        for (auto& th : pool) th.join();
    }

    CorpusReport report;
    report.max_size = max_size;
    report.max_height = max_height;
    report.triples_by_size.assign(max_size + 1, 0);
    report.max_coefficient_by_size.assign(max_size + 1, 0);
    for (const PairResult& r : results)
        for (const CorpusTriple& t : r.triples) {
            ++report.triples;
            int sz = static_cast<int>(t.inst.alpha.size() + t.inst.beta.size());
            ++report.triples_by_size[sz];
            report.max_coefficient_by_size[sz] =
                std::max(report.max_coefficient_by_size[sz], t.rule_count);
            if (!t.agree()) {
                ++report.mismatches;
                if (report.mismatch_samples.size() < 16) report.mismatch_samples.push_back(t);
            }
        }
    return report;
}

std::string corpus_table(const CorpusReport& report) {
    std::ostringstream os;
    os << "size  triples  max_c\n";
    for (int s = 0; s <= report.max_size; ++s) {
        os.width(4);
        os << s << "  ";
        os.width(7);
        os << report.triples_by_size[s] << "  ";
        os.width(5);
        os << report.max_coefficient_by_size[s] << "\n";
    }
    os << "total triples: " << report.triples << "\n";
    os << "mismatches:    " << report.mismatches << "\n";
    for (const CorpusTriple& t : report.mismatch_samples)
        os << "  MISMATCH alpha=" << t.inst.alpha.str() << " beta=" << t.inst.beta.str()
           << " gamma=" << t.inst.gamma.str() << " rule=" << t.rule_count
           << " polytope=" << t.polytope_count << " crystal=" << t.crystal_count
           << " schur=" << t.schur_count << "\n";
    return os.str();
}

namespace {

struct EarlyExitSearch {
    const SkewShape& shape;
    std::vector<int> remaining;
    std::vector<int> cnt;
    std::vector<std::vector<int>> grid;
    std::vector<std::pair<int, int>> cells;
    long long found = 0;
    long long limit = 0;

    void dfs(std::size_t pos) {
        if (found >= limit) return;
        if (pos == cells.size()) {
            ++found;
            return;
        }
        auto [i, j] = cells[pos];
        int letters = static_cast<int>(remaining.size());
        int lo = 1, hi = letters;
        if (j + 1 < shape.row_end(i)) hi = std::min(hi, grid[i][j + 1]);
        if (i > 0 && shape.contains(i - 1, j)) lo = std::max(lo, grid[i - 1][j] + 1);
        for (int v = lo; v <= hi && found < limit; ++v) {
            if (remaining[v - 1] == 0) continue;
            if (v > 1 && cnt[v - 1] + 1 > cnt[v - 2]) continue;
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

long long lr_count_early_exit(const LRInstance& inst, long long limit) {
    if (!inst.well_posed() || limit <= 0) return 0;
    SkewShape shape(inst.gamma, inst.alpha);
    EarlyExitSearch s{shape, {}, {}, {}, {}, 0, limit};
    s.remaining.resize(inst.beta.height());
    for (int v = 0; v < inst.beta.height(); ++v) s.remaining[v] = inst.beta.part(v);
    s.cnt.assign(inst.beta.height(), 0);
    for (int i = 0; i < shape.rows(); ++i)
        for (int j = shape.row_end(i) - 1; j >= shape.row_begin(i); --j)
            s.cells.emplace_back(i, j);
    s.grid.assign(shape.rows(), {});
    for (int i = 0; i < shape.rows(); ++i) s.grid[i].assign(std::max(shape.row_end(i), 0), 0);
    s.dfs(0);
    return s.found;
}

}  // namespace gct
