#include "gct/crystal.hpp"

#include <algorithm>
#include <stdexcept>

namespace gct {

CrystalWord::CrystalWord(std::vector<int> letters_, int rank_)
    : letters(std::move(letters_)), rank(rank_) {
    if (rank < 1) throw std::invalid_argument("crystal word: rank must be >= 1");
    for (int x : letters)
        if (x < 1 || x > rank)
            throw std::invalid_argument("crystal word: letter outside 1..rank");
}

std::vector<int> CrystalWord::weight() const {
    std::vector<int> w(rank, 0);
    for (int x : letters) ++w[x - 1];
    return w;
}

namespace {

// Positions of the surviving +/â marks for the pair (i, i+1). A closing
// mark (letter i+1) cancels the nearest surviving opening mark (letter i)
// to its right, so a right-to-left sweep with a stack of openers suffices.
struct Signature {
    std::vector<std::size_t> open;   // surviving letters equal to i
    std::vector<std::size_t> close;  // surviving letters equal to i+1
};

Signature signature(const std::vector<int>& w, int i) {
    Signature s;
    std::vector<std::size_t> openers;  // candidates to be cancelled, rightmost first
    for (std::size_t p = w.size(); p-- > 0;) {
        if (w[p] == i) {
            openers.push_back(p);
        } else if (w[p] == i + 1) {
            if (!openers.empty()) openers.pop_back();  // cancel the closest opener
            else s.close.push_back(p);
        }
    }
    s.open = std::move(openers);  // survivors, ordered right to left
    std::reverse(s.close.begin(), s.close.end());
    return s;
}

}  // namespace

std::optional<CrystalWord> e_op(const CrystalWord& w, int i) {
    if (i < 1 || i >= w.rank) throw std::invalid_argument("e_op: index outside 1..rank-1");
    Signature s = signature(w.letters, i);
    if (s.close.empty()) return std::nullopt;
    CrystalWord out = w;
    out.letters[s.close.front()] = i;  // leftmost surviving i+1
    return out;
}

std::optional<CrystalWord> f_op(const CrystalWord& w, int i) {
    if (i < 1 || i >= w.rank) throw std::invalid_argument("f_op: index outside 1..rank-1");
    Signature s = signature(w.letters, i);
    if (s.open.empty()) return std::nullopt;
    CrystalWord out = w;
    out.letters[s.open.front()] = i + 1;  // rightmost surviving i
    return out;
}

bool is_highest_weight(const CrystalWord& w) {
    for (int i = 1; i < w.rank; ++i)
        if (e_op(w, i)) return false;
    return true;
}

long long lr_via_crystals(const Partition& alpha, const Partition& beta,
                          const Partition& gamma, int n) {
    if (n < std::max({alpha.height(), beta.height(), gamma.height()}))
        throw std::invalid_argument("lr_via_crystals: rank below the maximum height");
    std::vector<int> target = gamma.parts();
    target.resize(n, 0);

    std::vector<std::vector<int>> words_a, words_b;
    for (const Tableau& t : enumerate_ssyt(SkewShape(alpha), n)) words_a.push_back(row_word(t));
    for (const Tableau& t : enumerate_ssyt(SkewShape(beta), n)) words_b.push_back(row_word(t));

    long long count = 0;
    for (const auto& wa : words_a)
        for (const auto& wb : words_b) {
            std::vector<int> w(wa);
            w.insert(w.end(), wb.begin(), wb.end());
            CrystalWord cw(std::move(w), n);
            if (cw.weight() != target) continue;
            if (is_highest_weight(cw)) ++count;
        }
    return count;
}

}  // namespace gct
