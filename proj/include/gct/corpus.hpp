// The cross-engine equivalence sweep: every LR triple within a size budget
// is evaluated by four independent routes and the results compared.
#pragma once

#include <string>
#include <vector>

#include "gct/lr.hpp"

namespace gct {

struct CorpusTriple {
    LRInstance inst;
    long long rule_count;      // LR rule backtracking
    long long polytope_count;  // lattice points of the LR polytope
    long long crystal_count;   // highest-weight tensor pairs
    long long schur_count;     // coefficient in S_alpha * S_beta
    bool agree() const {
        return rule_count == polytope_count && rule_count == crystal_count &&
               rule_count == schur_count;
    }
};

struct CorpusReport {
    int max_size = 0;
    int max_height = 0;
    long long triples = 0;
    long long mismatches = 0;
    std::vector<CorpusTriple> mismatch_samples;  // first few disagreements
    std::vector<long long> triples_by_size;      // indexed by |alpha|+|beta|
    std::vector<long long> max_coefficient_by_size;
};

// Sweeps every triple (alpha, beta, gamma) with |alpha|+|beta| <= max_size
// and all heights <= max_height. Results are merged in input order, so the
// report is deterministic for any thread count.
CorpusReport corpus_sweep(int max_size, int max_height, unsigned threads = 1);

std::string corpus_table(const CorpusReport& report);

// lr_count that stops as soon as `limit` tableaux are found; the cheap way
// to test nonvanishing of dilated instances.
long long lr_count_early_exit(const LRInstance& inst, long long limit);

}  // namespace gct
