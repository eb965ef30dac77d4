#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace crystal_pop {

/// A dominant weight of sl_{n+1}: a weakly decreasing tuple of positive
/// integers with at most `rank` parts. Trailing zeros are dropped.
class Partition {
 public:
  /// The empty partition for rank 1.
  Partition();
  Partition(std::vector<int> parts, int rank);

  /// Parses "3,2,1" (an empty string or "0" is the empty partition).
  static Partition parse(std::string_view text, int rank);

  std::span<const int> parts() const { return parts_; }
  int rank() const { return rank_; }
  /// Number of nonzero parts.
  int length() const { return static_cast<int>(parts_.size()); }
  /// Total number of cells.
  int size() const { return offsets_.back(); }
  bool empty() const { return parts_.empty(); }
  /// lambda_i for 1-based i, zero past the last part.
  int part(int i) const;
  /// Flat index of the first cell of 1-based row i.
  int row_offset(int i) const { return offsets_[i - 1]; }
  /// Largest allowed entry, n + 1.
  int max_entry() const { return rank_ + 1; }

  /// Same shape, different rank.
  Partition with_rank(int rank) const { return Partition(parts_, rank); }

  /// "3,2,1"
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.rank_ == b.rank_ && a.parts_ == b.parts_;
  }

 private:
  std::vector<int> parts_;
  std::vector<int> offsets_;
  int rank_;
};

/// The dual weight (lambda_1, lambda_1 - lambda_n, ..., lambda_1 - lambda_2).
Partition dual_partition(const Partition& lambda);

/// Number of semistandard tableaux of shape lambda with entries at most n+1,
/// by the hook-content product.
std::uint64_t hook_content_count(const Partition& lambda);

struct WeightVector {
  /// counts[k-1] is the number of entries equal to k, for k = 1..n+1.
  std::vector<int> counts;
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

/// A semistandard Young tableau. Entries live in one row-major buffer.
class Tableau {
 public:
  Tableau() = default;

  const Partition& shape() const { return shape_; }
  int rows() const { return shape_.length(); }
  /// Entry in 1-based cell (row, col).
  int at(int row, int col) const {
    return entries_[static_cast<std::size_t>(shape_.row_offset(row) + col - 1)];
  }
  std::span<const std::uint8_t> row(int r) const;
  std::span<const std::uint8_t> entries() const { return entries_; }

  /// Canonical text form: rows joined by '/', entries by ','.
  std::string to_string() const;

  /// Copy with the entry at flat index `flat` replaced.
  Tableau with_entry(int flat, int value) const;

  friend bool operator==(const Tableau& a, const Tableau& b) {
    return a.entries_ == b.entries_ && a.shape_ == b.shape_;
  }
  friend std::strong_ordering operator<=>(const Tableau& a, const Tableau& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  friend Tableau make_tableau_unchecked(Partition, std::vector<std::uint8_t>);
  Tableau(Partition shape, std::vector<std::uint8_t> entries)
      : shape_(std::move(shape)), entries_(std::move(entries)) {}

  Partition shape_;
  std::vector<std::uint8_t> entries_;
};

/// Builds a tableau without checking semistandardness. Callers guarantee it.
Tableau make_tableau_unchecked(Partition shape, std::vector<std::uint8_t> entries);

/// Checks shape, range, row and column conditions.
/// Throws Error(ShapeMismatch | EntryOutOfRange | RowViolation | ColumnViolation).
Tableau validate_tableau(const Partition& shape,
                         const std::vector<std::vector<int>>& grid);

/// Parses the canonical text form. The shape is read off the row lengths.
Tableau parse_tableau(std::string_view text, int rank);

/// T_min: row i filled with i.
Tableau highest_weight_tableau(const Partition& lambda);

/// Rows from bottom to top, each left to right.
std::vector<int> reading_word(const Tableau& t);

/// Flat cell indices in reading order.
std::vector<int> reading_order(const Partition& shape);

WeightVector weight(const Tableau& t);

/// All partitions of `cells` with at most `rank` parts, in decreasing
/// lexicographic order.
std::vector<Partition> partitions_of(int cells, int rank);

}  // namespace crystal_pop
