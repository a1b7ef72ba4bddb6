#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace negn {

/// A Young diagram stored as its weakly decreasing, strictly positive row
/// lengths. The empty row sequence is the empty diagram.
class YoungDiagram {
public:
  YoungDiagram() = default;
  /// Throws std::invalid_argument unless `rows` is weakly decreasing and
  /// every entry is positive.
  explicit YoungDiagram(std::vector<int> rows);
  YoungDiagram(std::initializer_list<int> rows)
      : YoungDiagram(std::vector<int>(rows)) {}

  const std::vector<int>& rows() const noexcept { return rows_; }
  bool empty() const noexcept { return rows_.empty(); }
  int num_rows() const noexcept { return static_cast<int>(rows_.size()); }
  int num_cols() const noexcept { return rows_.empty() ? 0 : rows_.front(); }

  /// Length of row `r` (1-based); 0 past the last row.
  int row(int r) const noexcept {
    return r >= 1 && r <= num_rows() ? rows_[r - 1] : 0;
  }
  /// Height of column `c` (1-based); 0 past the last column.
  int col(int c) const noexcept;

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
  friend auto operator<=>(const YoungDiagram& a, const YoungDiagram& b) {
    return a.rows_ <=> b.rows_;
  }

private:
  std::vector<int> rows_;
};

/// Ragged per-box table; entry [r-1][c-1] belongs to box (r, c).
using BoxTable = std::vector<std::vector<int>>;

YoungDiagram transpose(const YoungDiagram& y);
int area(const YoungDiagram& y) noexcept;

/// Arm + leg + 1 for every box.
BoxTable hook_lengths(const YoungDiagram& y);
/// Column minus row for every box.
BoxTable contents(const YoungDiagram& y);

/// Run-length encoding of a nonempty diagram. `a` lists how many rows share
/// each distinct width (top to bottom), `b` how many columns share each
/// distinct height (left to right); `A` and `B` are their prefix sums.
struct RunDecomposition {
  std::vector<int> a;
  std::vector<int> b;
  std::vector<int> A;
  std::vector<int> B;

  int k() const noexcept { return static_cast<int>(a.size()); }

  /// Builds a decomposition from the multiplicities, filling in prefix sums.
  static RunDecomposition from_multiplicities(std::vector<int> a,
                                              std::vector<int> b);

  friend bool operator==(const RunDecomposition&,
                         const RunDecomposition&) = default;
};

/// Throws std::invalid_argument for the empty diagram.
RunDecomposition runs(const YoungDiagram& y);
/// Inverse of runs(). Throws std::invalid_argument on mismatched run counts,
/// non-positive multiplicities or inconsistent prefix sums.
YoungDiagram from_runs(const RunDecomposition& r);

/// Parses "4,2,1"; the empty string (or whitespace only) is the empty
/// diagram. Throws std::invalid_argument on malformed input.
YoungDiagram parse_partition(std::string_view text);
/// Inverse of parse_partition.
std::string to_string(const YoungDiagram& y);

/// All partitions of `n`, in lexicographically increasing row order.
std::vector<YoungDiagram> partitions_of(int n);
/// All partitions of area 0..max_area, in lexicographically increasing order.
std::vector<YoungDiagram> partitions_up_to(int max_area);

}  // namespace negn
