#include "popwilf/bijection.hpp"

#include <algorithm>

namespace popwilf {

const char* to_string(CaseTag tag) { return tag == CaseTag::I ? "I" : "II"; }

SubmatrixG::SubmatrixG(std::vector<Cell> cells) {
  if (cells.empty()) raise(errc::not_a_permutation, "submatrix needs at least one cell");
  std::sort(cells.begin(), cells.end());
  rows_.reserve(cells.size());
  cols_.reserve(cells.size());
  col_of_row_.reserve(cells.size());
  for (const Cell& c : cells) {
    rows_.push_back(c.row);
    cols_.push_back(c.col);
    col_of_row_.push_back(c.col);
  }
  std::sort(cols_.begin(), cols_.end());
  for (std::size_t i = 1; i < cells.size(); ++i)
    if (rows_[i] == rows_[i - 1] || cols_[i] == cols_[i - 1])
      raise(errc::not_a_permutation, "submatrix cells must have distinct rows and columns");
}

std::vector<Cell> SubmatrixG::cells() const {
  std::vector<Cell> out;
  out.reserve(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) out.push_back({rows_[i], col_of_row_[i]});
  return out;
}

std::vector<int> SubmatrixG::word() const { return word_of_cells(cells()); }

bool SubmatrixG::realizes_qk() const {
  const std::vector<int> w = word();
  return w.back() == size();
}

bool SubmatrixG::realizes_pk() const {
  const std::vector<int> w = word();
  return size() >= 2 && w[size() - 2] == 1;
}

RowSummary summary_of(const SubmatrixG& g) { return {g.rows().back(), g.rows().front()}; }

RowSummary summary_of(const Occurrence& occ) { return {occ.back().row, occ.front().row}; }

bool higher_than(RowSummary m, RowSummary other) {
  return m.lowest < other.lowest || (m.lowest == other.lowest && m.topmost < other.topmost);
}

bool lower_than(RowSummary m, RowSummary other) { return higher_than(other, m); }

namespace {

// Index of the row holding the 1 of the given column.
int row_index_of_col(const std::vector<int>& col_of_row, int col) {
  for (std::size_t i = 0; i < col_of_row.size(); ++i)
    if (col_of_row[i] == col) return static_cast<int>(i);
  raise(errc::consistency_violation, "column missing from submatrix");
}

std::vector<int> shift_rows(const std::vector<int>& col_of_row, int by) {
  const int k = static_cast<int>(col_of_row.size());
  std::vector<int> out(k);
  for (int i = 0; i < k; ++i) out[((i + by) % k + k) % k] = col_of_row[i];
  return out;
}

void swap_rightmost_columns(std::vector<int>& col_of_row, const std::vector<int>& cols) {
  const int k = static_cast<int>(cols.size());
  const int i1 = row_index_of_col(col_of_row, cols[k - 2]);
  const int i2 = row_index_of_col(col_of_row, cols[k - 1]);
  std::swap(col_of_row[i1], col_of_row[i2]);
}

}  // namespace

std::pair<SubmatrixG, CaseTag> theta(const SubmatrixG& g) {
  const int k = g.size();
  if (k < 3 || !g.realizes_qk())
    raise(errc::not_a_qk_submatrix, "theta input must realize a member of q_k");
  const int i_second = row_index_of_col(g.col_of_row_, g.cols_[k - 2]);
  std::vector<int> next;
  CaseTag tag;
  if (i_second == k - 2) {
    tag = CaseTag::I;
    next = shift_rows(g.col_of_row_, 2);
  } else {
    tag = CaseTag::II;
    next = shift_rows(g.col_of_row_, 1);
    swap_rightmost_columns(next, g.cols_);
  }
  SubmatrixG out(g.rows_, g.cols_, std::move(next));
  if (!out.realizes_pk()) raise(errc::consistency_violation, "theta output does not realize p_k");
  return {std::move(out), tag};
}

std::pair<SubmatrixG, CaseTag> theta_prime(const SubmatrixG& g) {
  const int k = g.size();
  if (k < 3 || !g.realizes_pk())
    raise(errc::not_a_pk_submatrix, "theta_prime input must realize a member of p_k");
  const int i_last = row_index_of_col(g.col_of_row_, g.cols_[k - 1]);
  std::vector<int> next;
  CaseTag tag;
  if (i_last == 1) {
    tag = CaseTag::I;
    next = shift_rows(g.col_of_row_, -2);
  } else {
    tag = CaseTag::II;
    next = shift_rows(g.col_of_row_, -1);
    swap_rightmost_columns(next, g.cols_);
  }
  SubmatrixG out(g.rows_, g.cols_, std::move(next));
  if (!out.realizes_qk())
    raise(errc::consistency_violation, "theta_prime output does not realize q_k");
  return {std::move(out), tag};
}

std::optional<PhiSelection> select_phi(const Transversal& t, int k) {
  if (k < 3) raise(errc::unsupported_length, "select_phi requires k >= 3");
  const int n = t.size();
  for (int r = n; r >= 1; --r) {
    const int c = t.col_of_row(r);
    std::vector<Cell> above_left;  // ascending rows
    for (int r2 = 1; r2 < r; ++r2)
      if (t.col_of_row(r2) < c) above_left.push_back(t.cell_in_row(r2));
    if (static_cast<int>(above_left.size()) < k - 1) continue;
    std::vector<Cell> b{Cell{r, c}};
    for (int i = 0; i < k - 1; ++i) b.push_back(above_left[above_left.size() - 1 - i]);
    std::vector<Cell> all = b;
    return PhiSelection{std::move(b), SubmatrixG(std::move(all))};
  }
  return std::nullopt;
}

namespace {

// Number of 1s strictly between the rows of m and q and strictly left of m.
int middle_count(const Transversal& t, Cell m, Cell q) {
  int count = 0;
  for (int r = m.row + 1; r < q.row; ++r)
    if (t.col_of_row(r) < m.col) ++count;
  return count;
}

// A tail 1 strictly below-right of m whose column fits the shape at the
// occurrence's lowest row (q is the lowest of the leftmost k-1 1s).
bool tail_exists(const Transversal& t, Cell m, Cell q) {
  for (int r = m.row + 1; r <= t.size(); ++r) {
    const int c = t.col_of_row(r);
    if (c > m.col && t.shape().contains({std::max(q.row, r), c})) return true;
  }
  return false;
}

// Can q be the lowest of the leftmost k-1 1s of some p_k occurrence?
bool qualifies_as_b1(const Transversal& t, Cell q, int k) {
  for (int rm = 1; rm < q.row; ++rm) {
    const Cell m = t.cell_in_row(rm);
    if (m.col > q.col && middle_count(t, m, q) >= k - 3 && tail_exists(t, m, q)) return true;
  }
  return false;
}

}  // namespace

std::optional<PsiSelection> select_psi(const Transversal& t, int k) {
  if (k < 3) raise(errc::unsupported_length, "select_psi requires k >= 3");
  const int n = t.size();

  std::optional<Cell> b1;
  for (int r = 1; r <= n && !b1; ++r)
    if (qualifies_as_b1(t, t.cell_in_row(r), k)) b1 = t.cell_in_row(r);
  if (!b1) return std::nullopt;

  std::optional<Cell> top;
  for (int r = 1; r < b1->row && !top; ++r) {
    const Cell m = t.cell_in_row(r);
    if (m.col > b1->col && middle_count(t, m, *b1) >= k - 3 && tail_exists(t, m, *b1)) top = m;
  }
  if (!top) raise(errc::selection_incomplete, "no topmost cell for qualified b_1");

  std::vector<Cell> middles;  // the k-3 highest, gathered top to bottom
  for (int r = top->row + 1; r < b1->row && static_cast<int>(middles.size()) < k - 3; ++r)
    if (t.col_of_row(r) < top->col) middles.push_back(t.cell_in_row(r));
  if (static_cast<int>(middles.size()) < k - 3)
    raise(errc::selection_incomplete, "fewer than k-3 middle cells");
  std::reverse(middles.begin(), middles.end());  // listed bottom to top

  std::optional<Cell> tail;
  for (int c = top->col + 1; c <= n && !tail; ++c) {
    const int r = t.row_of_col(c);
    if (r > top->row && t.shape().contains({std::max(b1->row, r), c})) tail = Cell{r, c};
  }
  if (!tail) raise(errc::selection_incomplete, "no tail cell for qualified selection");

  std::vector<Cell> b{*b1};
  b.insert(b.end(), middles.begin(), middles.end());
  b.push_back(*top);
  b.push_back(*tail);
  SubmatrixG g{std::vector<Cell>(b)};
  if (!g.realizes_pk()) raise(errc::consistency_violation, "psi selection does not realize p_k");
  return PsiSelection{std::move(b), std::move(g)};
}

Boards boards_phi(const PhiSelection& sel) {
  const std::vector<int>& r = sel.g.rows();
  const std::vector<int>& c = sel.g.cols();
  const int k = sel.g.size();
  Boards out;
  out.f = {r[0], r[k - 2], 1, c[k - 2]};
  out.e.push_back({r[0] + 1, r[k - 1] - 1, c[k - 2] + 1, c[k - 1] - 1});
  out.e.push_back({r[k - 2] + 1, r[k - 1] - 1, 1, c[k - 1] - 1});
  return out;
}

Boards boards_psi(const PsiSelection& sel) {
  const Cell top = sel.bkm1();
  const Cell b1 = sel.b1();
  const Cell tail = sel.bk();
  Boards out;
  out.f = {top.row, b1.row - 1, 1, top.col};
  out.e.push_back({top.row + 1, b1.row - 1, top.col + 1, tail.col - 1});
  return out;
}

namespace {

std::pair<Transversal, StepRecord> apply_surgery(const Transversal& t, StepKind kind,
                                                 std::vector<Cell> b, const SubmatrixG& g,
                                                 Boards boards) {
  auto [g_after, tag] = kind == StepKind::phi ? theta(g) : theta_prime(g);
  std::map<int, int> before, after;
  std::vector<int> cols = t.cols();
  for (int i = 0; i < g.size(); ++i) {
    const int row = g.rows()[i];
    before[row] = g.col_in_row(i);
    after[row] = g_after.col_in_row(i);
    cols[row - 1] = g_after.col_in_row(i);
  }
  Transversal next(t.shape(), std::move(cols));
  StepRecord rec{kind, 0, tag, std::move(b), g, std::move(g_after), std::move(before),
                 std::move(after), std::move(boards)};
  return {std::move(next), std::move(rec)};
}

}  // namespace

std::optional<std::pair<Transversal, StepRecord>> phi_step(const Transversal& t, int k) {
  std::optional<PhiSelection> sel = select_phi(t, k);
  if (!sel) return std::nullopt;
  Boards boards = boards_phi(*sel);
  return apply_surgery(t, StepKind::phi, std::move(sel->b), sel->g, std::move(boards));
}

std::optional<std::pair<Transversal, StepRecord>> psi_step(const Transversal& t, int k) {
  std::optional<PsiSelection> sel = select_psi(t, k);
  if (!sel) return std::nullopt;
  Boards boards = boards_psi(*sel);
  return apply_surgery(t, StepKind::psi, std::move(sel->b), sel->g, std::move(boards));
}

bool Trace::replay_ok() const {
  std::vector<int> cols = initial.cols();
  for (const StepRecord& rec : steps) {
    for (const auto& [row, col] : rec.before)
      if (cols[row - 1] != col) return false;
    for (const auto& [row, col] : rec.after) cols[row - 1] = col;
  }
  return cols == result.cols();
}

namespace {

std::pair<Transversal, Trace> run_map(const Transversal& t, int k, std::uint64_t cap, StepKind kind) {
  if (k < 3) raise(errc::unsupported_length, "map requires k >= 3");
  const std::uint64_t n = t.size();
  if (cap == 0) cap = 10 * n * n * n;
  if (kind == StepKind::phi && contains_pk(t, k))
    raise(errc::input_contains_pk, "phi input must avoid p_k");
  if (kind == StepKind::psi && contains_qk(t, k))
    raise(errc::input_contains_qk, "psi input must avoid q_k");

  Trace trace{t, {}, t};
  Transversal cur = t;
  while (true) {
    auto step = kind == StepKind::phi ? phi_step(cur, k) : psi_step(cur, k);
    if (!step) break;
    if (trace.steps.size() >= cap)
      raise(errc::iteration_cap_exceeded, "more than " + std::to_string(cap) + " steps");
    step->second.step = static_cast<int>(trace.steps.size()) + 1;
    trace.steps.push_back(std::move(step->second));
    cur = std::move(step->first);
  }
  trace.result = cur;
  return {std::move(cur), std::move(trace)};
}

}  // namespace

std::pair<Transversal, Trace> run_phi(const Transversal& t, int k, std::uint64_t cap) {
  return run_map(t, k, cap, StepKind::phi);
}

std::pair<Transversal, Trace> run_psi(const Transversal& t, int k, std::uint64_t cap) {
  return run_map(t, k, cap, StepKind::psi);
}

}  // namespace popwilf
