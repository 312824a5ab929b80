// Partitions, skew shapes, tableaux, reading words and their predicates.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gct {

// Weakly decreasing nonnegative integers, trailing zeros trimmed.
// The canonical (trimmed) form makes equality and ordering well-defined.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    long long size() const;
    int height() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // Componentwise containment (this[i] <= other[i] for all i).
    bool contained_in(const Partition& other) const;

    Partition scaled(int k) const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    std::string str() const;

  private:
    std::vector<int> parts_;
};

// All partitions of n, optionally bounded in height and part size, in
// descending lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n, int max_height = -1, int max_part = -1);

struct SkewShape {
    Partition outer;
    Partition inner;  // inner[i] <= outer[i] for all i

    SkewShape(Partition out, Partition in);
    explicit SkewShape(Partition out) : SkewShape(std::move(out), Partition{}) {}

    int rows() const { return outer.height(); }
    // Row i (0-based) occupies columns [row_begin(i), row_end(i)).
    int row_begin(int i) const { return inner.part(i); }
    int row_end(int i) const { return outer.part(i); }
    long long boxes() const { return outer.size() - inner.size(); }
    bool contains(int i, int j) const {
        return i >= 0 && i < rows() && j >= row_begin(i) && j < row_end(i);
    }

    bool operator==(const SkewShape&) const = default;
};

// A filling of a (possibly skew) shape by positive integers, row-major.
class Tableau {
  public:
    Tableau(SkewShape shape, std::vector<std::vector<int>> rows);

    const SkewShape& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int at(int i, int j) const { return rows_[i][j - shape_.row_begin(i)]; }

    bool is_semistandard() const;
    bool is_standard() const;

    bool operator==(const Tableau&) const = default;

  private:
    SkewShape shape_;
    std::vector<std::vector<int>> rows_;  // rows_[i] holds the filled cells of row i
};

// All semistandard fillings with entries in 1..max_entry, in lexicographic
// order of the row-major entry sequence.
std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, int max_entry);

// Rows read left to right, bottom row first.
std::vector<int> row_word(const Tableau& t);

// True iff, reading right to left, every prefix has #i >= #(i+1) for all i.
bool is_reverse_lattice_word(const std::vector<int>& w);

// i-th component counts entries equal to i+1 (0-based vector).
std::vector<int> content(const Tableau& t);
std::vector<int> word_content(const std::vector<int>& w);

}  // namespace gct
