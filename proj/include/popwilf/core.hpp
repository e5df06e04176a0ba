#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "popwilf/error.hpp"

namespace popwilf {

// 1-based grid position; row 1 is the top row, column 1 the leftmost column.
struct Cell {
  int row = 0;
  int col = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::ostream& operator<<(std::ostream& os, const Cell& c);

// Young diagram in English notation: weakly decreasing positive row lengths.
class YoungDiagram {
public:
  explicit YoungDiagram(std::vector<int> row_lengths);

  int row_count() const { return static_cast<int>(rows_.size()); }
  int col_count() const { return rows_.front(); }
  int row_length(int row) const { return rows_[row - 1]; }
  const std::vector<int>& row_lengths() const { return rows_; }

  bool contains(Cell c) const {
    return c.row >= 1 && c.row <= row_count() && c.col >= 1 && c.col <= rows_[c.row - 1];
  }

  // True iff at least one transversal exists: the diagram must be as wide as
  // it is tall (lambda_1 == n) and satisfy lambda_i >= n+1-i for every i.
  bool admits_transversals() const { return admits_; }

  std::string to_string() const;  // "8,8,8,6,6,6,4,4"

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;

private:
  std::vector<int> rows_;
  bool admits_ = false;
};

std::ostream& operator<<(std::ostream& os, const YoungDiagram& d);

YoungDiagram parse_shape(std::string_view text);  // comma-separated row lengths

// A 01-filling of a Young diagram with exactly one 1 in every row and column.
// cols[r] is the column of the 1 in row r.
class Transversal {
public:
  Transversal(YoungDiagram shape, std::vector<int> cols);

  int size() const { return static_cast<int>(cols_.size()); }
  const YoungDiagram& shape() const { return shape_; }
  const std::vector<int>& cols() const { return cols_; }
  int col_of_row(int row) const { return cols_[row - 1]; }
  int row_of_col(int col) const { return row_of_[col - 1]; }
  Cell cell_in_row(int row) const { return {row, cols_[row - 1]}; }

  std::vector<Cell> cells() const;  // the 1-cells, top row first

  std::string to_string() const;  // "shape=3,3,2;cols=2,3,1"

  friend bool operator==(const Transversal&, const Transversal&) = default;

private:
  YoungDiagram shape_;
  std::vector<int> cols_;
  std::vector<int> row_of_;
};

std::ostream& operator<<(std::ostream& os, const Transversal& t);

Transversal parse_transversal(std::string_view text);

// Value convention, fixed project-wide: the value of a 1-cell is its row
// index, so a larger row index (lower on the page) means a larger value. The
// pattern word of a cell set lists, column by column, the rank of each cell's
// row. Swapping this convention silently exchanges the two built-in POP
// families, so every interface here sticks to it.

// Classical pattern: a permutation word of 1..m.
struct Pattern {
  explicit Pattern(std::vector<int> w);

  int length() const { return static_cast<int>(word.size()); }
  std::string to_string() const;

  std::vector<int> word;

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

// Partially ordered pattern: a strict partial order on positions 1..k.
// A word w of length k realizes the POP when s < t in the order implies
// w(s) < w(t); the POP stands for the set of all such permutation words.
class Pop {
public:
  Pop(int k, const std::vector<std::pair<int, int>>& less_pairs);

  // Built-in families, defined for k >= 3: p_k puts position k-1 below all
  // other positions, q_k puts position k above all other positions.
  static Pop p_k(int k);
  static Pop q_k(int k);

  int length() const { return k_; }
  bool less(int s, int t) const { return less_[(s - 1) * k_ + (t - 1)]; }

  // All permutation words of 1..k consistent with the order, lexicographic.
  std::vector<Pattern> pattern_set() const;

  bool is_p_k() const;
  bool is_q_k() const;

  // Canonical text form, e.g. "k=4;lt=3<1,3<2,3<4" (covering pairs only).
  std::string to_string() const;
  static Pop parse(std::string_view text);

  friend bool operator==(const Pop&, const Pop&) = default;

private:
  Pop() = default;

  int k_ = 0;
  std::vector<bool> less_;  // row-major k*k closure matrix
};

std::ostream& operator<<(std::ostream& os, const Pop& p);

}  // namespace popwilf
