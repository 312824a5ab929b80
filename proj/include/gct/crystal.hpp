// Type-A combinatorial crystals on words: raising/lowering operators by the
// signature rule, highest-weight detection, and the LR coefficient as a
// count of highest-weight tensor pairs.
#pragma once

#include <optional>

#include "gct/partition.hpp"

namespace gct {

struct CrystalWord {
    std::vector<int> letters;  // alphabet 1..rank
    int rank = 1;

    CrystalWord() = default;
    CrystalWord(std::vector<int> letters_, int rank_);

    std::vector<int> weight() const;  // letter content, padded to rank
    bool operator==(const CrystalWord&) const = default;
};

// Signature rule for the pair (i, i+1): letters equal to i are opening
// marks, letters equal to i+1 closing marks; an (i+1)-mark cancels an i-mark
// immediately to its right among survivors. e_op rewrites the leftmost
// surviving i+1 into i; f_op rewrites the rightmost surviving i into i+1.
// The reading convention is validated wholesale against the LR rule.
std::optional<CrystalWord> e_op(const CrystalWord& w, int i);
std::optional<CrystalWord> f_op(const CrystalWord& w, int i);

bool is_highest_weight(const CrystalWord& w);

// Count of pairs (b, b') in B_alpha x B_beta whose concatenated row word is
// highest weight with content gamma.
long long lr_via_crystals(const Partition& alpha, const Partition& beta,
                          const Partition& gamma, int n);

}  // namespace gct
