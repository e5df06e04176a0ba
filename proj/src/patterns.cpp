#include "popwilf/patterns.hpp"

#include <algorithm>
#include <functional>

#include "popwilf/enumeration.hpp"

namespace popwilf {

std::vector<int> word_of_cells(const std::vector<Cell>& cells) {
  std::vector<Cell> by_col = cells;
  std::sort(by_col.begin(), by_col.end(), [](Cell a, Cell b) { return a.col < b.col; });
  std::vector<int> word(by_col.size());
  for (std::size_t j = 0; j < by_col.size(); ++j) {
    int rank = 0;
    for (const Cell& c : by_col)
      if (c.row <= by_col[j].row) ++rank;
    word[j] = rank;
  }
  return word;
}

namespace {

Cell corner_of(const std::vector<Cell>& cells) {
  int row = 0, col = 0;
  for (const Cell& c : cells) {
    row = std::max(row, c.row);
    col = std::max(col, c.col);
  }
  return {row, col};
}

// Visit every size-m subset of the transversal's rows in lexicographic order.
// Stops early once the visitor returns true.
bool scan_row_subsets(const Transversal& t, int m,
                      const std::function<bool(const std::vector<Cell>&)>& visit) {
  const int n = t.size();
  if (m < 1 || m > n) return false;
  std::vector<int> rows(m);
  std::vector<Cell> cells(m);
  for (int i = 0; i < m; ++i) rows[i] = i + 1;
  while (true) {
    for (int i = 0; i < m; ++i) cells[i] = t.cell_in_row(rows[i]);
    if (visit(cells)) return true;
    int i = m - 1;
    while (i >= 0 && rows[i] == n - (m - 1 - i)) --i;
    if (i < 0) return false;
    ++rows[i];
    for (int j = i + 1; j < m; ++j) rows[j] = rows[j - 1] + 1;
  }
}

}  // namespace

bool is_occurrence(const Transversal& t, const std::vector<Cell>& cells, const Pattern& sigma) {
  if (static_cast<int>(cells.size()) != sigma.length()) return false;
  if (!t.shape().contains(corner_of(cells))) return false;
  return word_of_cells(cells) == sigma.word;
}

bool matches_pop(const Transversal& t, const std::vector<Cell>& cells, const Pop& p) {
  if (static_cast<int>(cells.size()) != p.length()) return false;
  if (!t.shape().contains(corner_of(cells))) return false;
  const std::vector<int> word = word_of_cells(cells);
  const int k = p.length();
  for (int s = 1; s <= k; ++s)
    for (int u = 1; u <= k; ++u)
      if (p.less(s, u) && word[s - 1] >= word[u - 1]) return false;
  return true;
}

std::optional<OccurrenceWitness> find_occurrence(const Transversal& t, const Pattern& sigma) {
  std::optional<OccurrenceWitness> found;
  scan_row_subsets(t, sigma.length(), [&](const std::vector<Cell>& cells) {
    if (!is_occurrence(t, cells, sigma)) return false;
    OccurrenceWitness w;
    for (const Cell& c : cells) w.rows.push_back(c.row);
    for (const Cell& c : cells) w.cols.push_back(c.col);
    std::sort(w.cols.begin(), w.cols.end());
    // Corner acceptance must imply the whole grid is in shape.
    for (int r : w.rows)
      for (int col : w.cols)
        if (!t.shape().contains({r, col}))
          raise(errc::consistency_violation, "witness corner inside but grid cell outside");
    found = std::move(w);
    return true;
  });
  return found;
}

bool occurrence_exists(const Transversal& t, const Pattern& sigma) {
  return find_occurrence(t, sigma).has_value();
}

bool occurrence_exists(const Transversal& t, const Pop& p) {
  return scan_row_subsets(t, p.length(),
                          [&](const std::vector<Cell>& cells) { return matches_pop(t, cells, p); });
}

bool avoids(const Transversal& t, const Pop& p) { return !occurrence_exists(t, p); }

std::vector<Occurrence> all_occurrences(const Transversal& t, const Pop& p) {
  std::vector<Occurrence> out;
  scan_row_subsets(t, p.length(), [&](const std::vector<Cell>& cells) {
    if (matches_pop(t, cells, p)) out.push_back(cells);
    return false;
  });
  return out;
}

bool contains_qk(const Transversal& t, int k) {
  if (k < 3) raise(errc::unsupported_length, "contains_qk requires k >= 3");
  const int n = t.size();
  for (int r = 1; r <= n; ++r) {
    const int c = t.col_of_row(r);
    int above_left = 0;
    for (int r2 = 1; r2 < r; ++r2)
      if (t.col_of_row(r2) < c) ++above_left;
    if (above_left >= k - 1) return true;
  }
  return false;
}

bool contains_pk(const Transversal& t, int k) {
  if (k < 3) raise(errc::unsupported_length, "contains_pk requires k >= 3");
  const int n = t.size();
  for (int rm = 1; rm <= n; ++rm) {
    const int cm = t.col_of_row(rm);
    std::vector<int> below_left;  // ascending rows
    for (int r = rm + 1; r <= n; ++r)
      if (t.col_of_row(r) < cm) below_left.push_back(r);
    if (static_cast<int>(below_left.size()) < k - 2) continue;
    const int low = below_left[k - 3];  // lowest row of the k-2 highest cells
    for (int r = rm + 1; r <= n; ++r) {
      const int c = t.col_of_row(r);
      if (c > cm && t.shape().contains({std::max(low, r), c})) return true;
    }
  }
  return false;
}

std::uint64_t count_avoiders(const YoungDiagram& shape, const Pop& p) {
  if (!shape.admits_transversals())
    raise(errc::shape_has_no_transversals, "shape " + shape.to_string());
  std::uint64_t count = 0;
  for_each_transversal(shape, [&](const Transversal& t) {
    if (avoids(t, p)) ++count;
  });
  return count;
}

std::uint64_t count_avoiders(const YoungDiagram& shape, const std::vector<Pattern>& sigmas) {
  if (!shape.admits_transversals())
    raise(errc::shape_has_no_transversals, "shape " + shape.to_string());
  std::uint64_t count = 0;
  for_each_transversal(shape, [&](const Transversal& t) {
    for (const Pattern& s : sigmas)
      if (occurrence_exists(t, s)) return;
    ++count;
  });
  return count;
}

}  // namespace popwilf
