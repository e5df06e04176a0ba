#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "popwilf/core.hpp"
#include "popwilf/patterns.hpp"

namespace popwilf {

enum class CaseTag { I, II };
enum class StepKind { phi, psi };

const char* to_string(CaseTag tag);

// k distinguished 1-cells of a transversal with distinct rows and columns.
// Stored as the sorted row set, sorted column set, and the column of the 1 in
// each row.
class SubmatrixG {
public:
  explicit SubmatrixG(std::vector<Cell> cells);

  int size() const { return static_cast<int>(rows_.size()); }
  const std::vector<int>& rows() const { return rows_; }
  const std::vector<int>& cols() const { return cols_; }
  int col_in_row(int i) const { return col_of_row_[i]; }  // i indexes rows()

  std::vector<Cell> cells() const;       // top row first
  std::vector<int> word() const;         // pattern word read by columns
  bool realizes_qk() const;              // 1 of the last column is bottommost
  bool realizes_pk() const;              // 1 of the second-to-last column is topmost

  friend bool operator==(const SubmatrixG&, const SubmatrixG&) = default;

private:
  SubmatrixG(std::vector<int> rows, std::vector<int> cols, std::vector<int> col_of_row)
      : rows_(std::move(rows)), cols_(std::move(cols)), col_of_row_(std::move(col_of_row)) {}

  friend std::pair<SubmatrixG, CaseTag> theta(const SubmatrixG&);
  friend std::pair<SubmatrixG, CaseTag> theta_prime(const SubmatrixG&);

  std::vector<int> rows_;
  std::vector<int> cols_;
  std::vector<int> col_of_row_;
};

// (lowest 1 row, topmost 1 row) of a submatrix; rows grow downward.
struct RowSummary {
  int lowest = 0;
  int topmost = 0;

  friend bool operator==(const RowSummary&, const RowSummary&) = default;
};

RowSummary summary_of(const SubmatrixG& g);
RowSummary summary_of(const Occurrence& occ);

// m is higher than other when its lowest 1 sits strictly above, or the lowest
// rows tie and its topmost 1 sits strictly above.
bool higher_than(RowSummary m, RowSummary other);
bool lower_than(RowSummary m, RowSummary other);

// Submatrix surgery turning a q_k occurrence into a p_k occurrence on the same
// rows and columns. Case I (the 1 of column c_{k-1} sits at row r_{k-1}):
// every 1 moves down two rows cyclically. Case II: every 1 moves down one row
// cyclically, then the 1s of the rightmost two columns swap columns.
std::pair<SubmatrixG, CaseTag> theta(const SubmatrixG& g);

// Inverse surgery: p_k occurrence to q_k occurrence. Case I (the 1 of column
// c_k sits at row r_2): every 1 moves up two rows cyclically. Case II: up one
// row cyclically, then the rightmost two columns swap.
std::pair<SubmatrixG, CaseTag> theta_prime(const SubmatrixG& g);

// phi picks b_1 = the lowest 1 that closes some q_k occurrence, then the k-1
// bottom-most 1s strictly above-left of it (b_2..b_k, bottom to top).
struct PhiSelection {
  std::vector<Cell> b;  // b[0] = b_1, then b_2..b_k bottom to top
  SubmatrixG g;

  friend bool operator==(const PhiSelection&, const PhiSelection&) = default;
};

// psi picks, in order: b_1 = the highest 1 that can be the lowest of the
// leftmost k-1 1s of a p_k occurrence; b_{k-1} = the highest possible topmost
// 1 given b_1; b_2..b_{k-2} = the k-3 highest 1s between them and left of
// b_{k-1}; b_k = the leftmost tail completing an occurrence.
struct PsiSelection {
  std::vector<Cell> b;  // b_1, b_2..b_{k-2} bottom to top, b_{k-1}, b_k
  SubmatrixG g;

  Cell b1() const { return b.front(); }
  Cell bkm1() const { return b[b.size() - 2]; }
  Cell bk() const { return b.back(); }

  friend bool operator==(const PsiSelection&, const PsiSelection&) = default;
};

std::optional<PhiSelection> select_phi(const Transversal& t, int k);
std::optional<PsiSelection> select_psi(const Transversal& t, int k);

// Inclusive rectangle of grid squares; empty when a span is inverted.
struct RectSpan {
  int row_lo = 1, row_hi = 0, col_lo = 1, col_hi = 0;

  bool empty() const { return row_lo > row_hi || col_lo > col_hi; }
  bool contains(Cell c) const {
    return c.row >= row_lo && c.row <= row_hi && c.col >= col_lo && c.col <= col_hi;
  }

  friend bool operator==(const RectSpan&, const RectSpan&) = default;
};

struct Boards {
  RectSpan f;
  std::vector<RectSpan> e;  // union of rectangles

  friend bool operator==(const Boards&, const Boards&) = default;
};

// F = rows [r_1, r_{k-1}] x cols [1, c_{k-1}];
// E = rows (r_1, r_k) x cols (c_{k-1}, c_k)  union  rows (r_{k-1}, r_k) x cols [1, c_k).
Boards boards_phi(const PhiSelection& sel);

// F' = rows [r_1, row(b_1)) x cols [1, c_{k-1}];
// E' = rows (r_1, row(b_1)) x cols (c_{k-1}, c_k).
Boards boards_psi(const PsiSelection& sel);

struct StepRecord {
  StepKind kind = StepKind::phi;
  int step = 0;  // 1-based position in the trace
  CaseTag case_tag = CaseTag::I;
  std::vector<Cell> b;
  SubmatrixG g_before;
  SubmatrixG g_after;
  std::map<int, int> before;  // row -> col for the k touched rows
  std::map<int, int> after;
  Boards boards;
};

struct Trace {
  Transversal initial;
  std::vector<StepRecord> steps;
  Transversal result;

  // True when applying the recorded steps to the initial transversal
  // reproduces the recorded result.
  bool replay_ok() const;
};

// One application of the selection rule plus the surgery; empty when the
// transversal already avoids the family.
std::optional<std::pair<Transversal, StepRecord>> phi_step(const Transversal& t, int k);
std::optional<std::pair<Transversal, StepRecord>> psi_step(const Transversal& t, int k);

// Iterate phi (resp. psi) to its fixpoint. The input must avoid p_k (resp.
// q_k). cap bounds the step count purely as a defect tripwire; 0 means the
// default 10*n^3.
std::pair<Transversal, Trace> run_phi(const Transversal& t, int k, std::uint64_t cap = 0);
std::pair<Transversal, Trace> run_psi(const Transversal& t, int k, std::uint64_t cap = 0);

}  // namespace popwilf
