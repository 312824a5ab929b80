#include "gct/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gct {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("partition with negative part");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

long long Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

bool Partition::contained_in(const Partition& other) const {
    for (std::size_t i = 0; i < parts_.size(); ++i)
        if (parts_[i] > other.part(i)) return false;
    return true;
}

Partition Partition::scaled(int k) const {
    if (k < 0) throw std::invalid_argument("negative dilation");
    std::vector<int> p(parts_);
    for (int& x : p) x *= k;
    return Partition(std::move(p));
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

static void partitions_rec(int n, int max_part, int max_height,
                           std::vector<int>& acc, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(acc);
        return;
    }
    if (max_height == 0) return;
    for (int p = std::min(n, max_part); p >= 1; --p) {
        acc.push_back(p);
        partitions_rec(n - p, p, max_height - 1, acc, out);
        acc.pop_back();
    }
}

std::vector<Partition> partitions_of(int n, int max_height, int max_part) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    if (max_height < 0) max_height = n;
    if (max_part <= 0) max_part = n;
    std::vector<Partition> out;
    std::vector<int> acc;
    partitions_rec(n, max_part, max_height, acc, out);
    return out;
}

SkewShape::SkewShape(Partition out, Partition in)
    : outer(std::move(out)), inner(std::move(in)) {
    for (int i = 0; i < inner.height(); ++i)
        if (inner.part(i) > outer.part(i))
            throw std::invalid_argument("skew shape: inner not contained in outer");
}

Tableau::Tableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.rows())
        throw std::invalid_argument("tableau: wrong number of rows");
    for (int i = 0; i < shape_.rows(); ++i) {
        if (static_cast<int>(rows_[i].size()) != shape_.row_end(i) - shape_.row_begin(i))
            throw std::invalid_argument("tableau: row length mismatch");
        for (int v : rows_[i])
            if (v < 1) throw std::invalid_argument("tableau: entries must be positive");
    }
}

bool Tableau::is_semistandard() const {
    for (int i = 0; i < shape_.rows(); ++i) {
        for (int j = shape_.row_begin(i) + 1; j < shape_.row_end(i); ++j)
            if (at(i, j - 1) > at(i, j)) return false;
        for (int j = shape_.row_begin(i); j < shape_.row_end(i); ++j)
            if (shape_.contains(i + 1, j) && at(i, j) >= at(i + 1, j)) return false;
    }
    return true;
}

bool Tableau::is_standard() const {
    long long n = shape_.boxes();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int i = 0; i < shape_.rows(); ++i) {
        for (int j = shape_.row_begin(i); j < shape_.row_end(i); ++j) {
            int v = at(i, j);
            if (v > n || seen[v]) return false;
            seen[v] = true;
            if (j + 1 < shape_.row_end(i) && at(i, j) >= at(i, j + 1)) return false;
            if (shape_.contains(i + 1, j) && at(i, j) >= at(i + 1, j)) return false;
        }
    }
    return true;
}

namespace {

struct SsytEnumerator {
    const SkewShape& shape;
    int max_entry;
    std::vector<std::vector<int>> rows;
    std::vector<Tableau> out;

    void fill(int i, int j) {
        if (i == shape.rows()) {
            out.emplace_back(shape, rows);
            return;
        }
        if (j == shape.row_end(i)) {
            fill(i + 1, i + 1 < shape.rows() ? shape.row_begin(i + 1) : 0);
            return;
        }
        int lo = 1;
        if (j > shape.row_begin(i)) lo = std::max(lo, rows[i][j - 1 - shape.row_begin(i)]);
        if (i > 0 && shape.contains(i - 1, j))
            lo = std::max(lo, rows[i - 1][j - shape.row_begin(i - 1)] + 1);
        for (int v = lo; v <= max_entry; ++v) {
            rows[i].push_back(v);
            fill(i, j + 1);
            rows[i].pop_back();
        }
    }
};

}  // namespace

std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, int max_entry) {
    if (max_entry < 1) throw std::invalid_argument("enumerate_ssyt: max_entry must be >= 1");
    SsytEnumerator e{shape, max_entry, {}, {}};
    e.rows.resize(shape.rows());
    e.fill(0, shape.rows() > 0 ? shape.row_begin(0) : 0);
    return e.out;
}

std::vector<int> row_word(const Tableau& t) {
    std::vector<int> w;
    for (int i = t.shape().rows() - 1; i >= 0; --i)
        for (int v : t.rows()[i]) w.push_back(v);
    return w;
}

bool is_reverse_lattice_word(const std::vector<int>& w) {
    int maxl = 0;
    for (int x : w) maxl = std::max(maxl, x);
    std::vector<long long> cnt(maxl + 2, 0);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        int x = *it;
        ++cnt[x];
        if (x > 1 && cnt[x] > cnt[x - 1]) return false;
    }
    return true;
}

std::vector<int> word_content(const std::vector<int>& w) {
    int maxl = 0;
    for (int x : w) maxl = std::max(maxl, x);
    std::vector<int> c(maxl, 0);
    for (int x : w) ++c[x - 1];
    return c;
}

std::vector<int> content(const Tableau& t) { return word_content(row_word(t)); }

}  // namespace gct
