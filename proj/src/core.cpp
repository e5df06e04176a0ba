#include "popwilf/core.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace popwilf {

const char* errc_name(errc code) {
  switch (code) {
    case errc::empty_shape: return "EmptyShape";
    case errc::not_weakly_decreasing: return "NotWeaklyDecreasing";
    case errc::non_positive_entry: return "NonPositiveEntry";
    case errc::not_a_permutation: return "NotAPermutation";
    case errc::cell_outside_shape: return "CellOutsideShape";
    case errc::unsupported_length: return "UnsupportedLength";
    case errc::syntax_error: return "SyntaxError";
    case errc::cycle_detected: return "CycleDetected";
    case errc::position_out_of_range: return "PositionOutOfRange";
    case errc::shape_has_no_transversals: return "ShapeHasNoTransversals";
    case errc::not_a_qk_submatrix: return "NotAQkSubmatrix";
    case errc::not_a_pk_submatrix: return "NotAPkSubmatrix";
    case errc::input_contains_pk: return "InputContainsPk";
    case errc::input_contains_qk: return "InputContainsQk";
    case errc::iteration_cap_exceeded: return "IterationCapExceeded";
    case errc::consistency_violation: return "ConsistencyViolation";
    case errc::selection_incomplete: return "SelectionIncomplete";
  }
  return "UnknownError";
}

std::ostream& operator<<(std::ostream& os, const Cell& c) {
  return os << '(' << c.row << ',' << c.col << ')';
}

namespace {

std::string join_ints(const std::vector<int>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out.push_back(sep);
    out += std::to_string(v[i]);
  }
  return out;
}

// Strict positive-integer scan; no sign, no whitespace.
int scan_int(std::string_view s, std::size_t& i) {
  if (i >= s.size() || s[i] < '0' || s[i] > '9')
    raise(errc::syntax_error, "expected integer at offset " + std::to_string(i));
  long v = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
    v = v * 10 + (s[i] - '0');
    if (v > 1'000'000) raise(errc::syntax_error, "integer too large");
    ++i;
  }
  return static_cast<int>(v);
}

std::vector<int> scan_int_list(std::string_view s, std::size_t& i) {
  std::vector<int> out;
  out.push_back(scan_int(s, i));
  while (i < s.size() && s[i] == ',') {
    ++i;
    out.push_back(scan_int(s, i));
  }
  return out;
}

void expect(std::string_view s, std::size_t& i, std::string_view lit) {
  if (s.substr(i, lit.size()) != lit)
    raise(errc::syntax_error, "expected '" + std::string(lit) + "' at offset " + std::to_string(i));
  i += lit.size();
}

}  // namespace

YoungDiagram::YoungDiagram(std::vector<int> row_lengths) : rows_(std::move(row_lengths)) {
  if (rows_.empty()) raise(errc::empty_shape, "shape needs at least one row");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0)
      raise(errc::non_positive_entry, "row " + std::to_string(i + 1) + " has length " + std::to_string(rows_[i]));
    if (i > 0 && rows_[i] > rows_[i - 1])
      raise(errc::not_weakly_decreasing,
            "row " + std::to_string(i + 1) + " is longer than row " + std::to_string(i));
  }
  const int n = row_count();
  admits_ = rows_.front() == n;
  for (int i = 1; i <= n && admits_; ++i)
    if (rows_[i - 1] < n + 1 - i) admits_ = false;
}

std::string YoungDiagram::to_string() const { return join_ints(rows_, ','); }

std::ostream& operator<<(std::ostream& os, const YoungDiagram& d) { return os << d.to_string(); }

YoungDiagram parse_shape(std::string_view text) {
  std::size_t i = 0;
  std::vector<int> rows = scan_int_list(text, i);
  if (i != text.size()) raise(errc::syntax_error, "trailing characters in shape");
  return YoungDiagram(std::move(rows));
}

Transversal::Transversal(YoungDiagram shape, std::vector<int> cols)
    : shape_(std::move(shape)), cols_(std::move(cols)) {
  const int n = shape_.row_count();
  if (shape_.col_count() != n)
    raise(errc::shape_has_no_transversals,
          "shape " + shape_.to_string() + " has " + std::to_string(shape_.col_count()) +
              " columns but " + std::to_string(n) + " rows");
  if (static_cast<int>(cols_.size()) != n)
    raise(errc::not_a_permutation, "expected " + std::to_string(n) + " column entries");
  row_of_.assign(n, 0);
  for (int r = 1; r <= n; ++r) {
    const int c = cols_[r - 1];
    if (c < 1 || c > n || row_of_[c - 1] != 0)
      raise(errc::not_a_permutation, "cols is not a permutation of 1.." + std::to_string(n));
    row_of_[c - 1] = r;
  }
  for (int r = 1; r <= n; ++r)
    if (cols_[r - 1] > shape_.row_length(r))
      raise(errc::cell_outside_shape,
            "row " + std::to_string(r) + ": column " + std::to_string(cols_[r - 1]) +
                " exceeds row length " + std::to_string(shape_.row_length(r)));
}

std::vector<Cell> Transversal::cells() const {
  std::vector<Cell> out;
  out.reserve(cols_.size());
  for (int r = 1; r <= size(); ++r) out.push_back({r, cols_[r - 1]});
  return out;
}

std::string Transversal::to_string() const {
  return "shape=" + shape_.to_string() + ";cols=" + join_ints(cols_, ',');
}

std::ostream& operator<<(std::ostream& os, const Transversal& t) { return os << t.to_string(); }

Transversal parse_transversal(std::string_view text) {
  std::size_t i = 0;
  expect(text, i, "shape=");
  std::vector<int> rows = scan_int_list(text, i);
  expect(text, i, ";cols=");
  std::vector<int> cols = scan_int_list(text, i);
  if (i != text.size()) raise(errc::syntax_error, "trailing characters in transversal");
  return Transversal(YoungDiagram(std::move(rows)), std::move(cols));
}

Pattern::Pattern(std::vector<int> w) : word(std::move(w)) {
  if (word.empty()) raise(errc::not_a_permutation, "empty pattern");
  std::vector<bool> seen(word.size(), false);
  for (int v : word) {
    if (v < 1 || v > static_cast<int>(word.size()) || seen[v - 1])
      raise(errc::not_a_permutation, "pattern word is not a permutation");
    seen[v - 1] = true;
  }
}

std::string Pattern::to_string() const {
  if (length() <= 9) {
    std::string out;
    for (int v : word) out.push_back(static_cast<char>('0' + v));
    return out;
  }
  return join_ints(word, ',');
}

Pop::Pop(int k, const std::vector<std::pair<int, int>>& less_pairs) : k_(k) {
  if (k < 1) raise(errc::unsupported_length, "POP length must be positive");
  less_.assign(static_cast<std::size_t>(k) * k, false);
  for (auto [s, t] : less_pairs) {
    if (s < 1 || s > k || t < 1 || t > k)
      raise(errc::position_out_of_range,
            "relation " + std::to_string(s) + "<" + std::to_string(t) + " outside 1.." + std::to_string(k));
    less_[(s - 1) * k_ + (t - 1)] = true;
  }
  // Warshall closure, then irreflexivity.
  for (int m = 1; m <= k; ++m)
    for (int s = 1; s <= k; ++s)
      if (less(s, m))
        for (int t = 1; t <= k; ++t)
          if (less(m, t)) less_[(s - 1) * k_ + (t - 1)] = true;
  for (int s = 1; s <= k; ++s)
    if (less(s, s)) raise(errc::cycle_detected, "position " + std::to_string(s) + " is below itself");
}

Pop Pop::p_k(int k) {
  if (k < 3) raise(errc::unsupported_length, "p_k requires k >= 3");
  std::vector<std::pair<int, int>> rel;
  for (int j = 1; j <= k; ++j)
    if (j != k - 1) rel.push_back({k - 1, j});
  return Pop(k, rel);
}

Pop Pop::q_k(int k) {
  if (k < 3) raise(errc::unsupported_length, "q_k requires k >= 3");
  std::vector<std::pair<int, int>> rel;
  for (int j = 1; j < k; ++j) rel.push_back({j, k});
  return Pop(k, rel);
}

std::vector<Pattern> Pop::pattern_set() const {
  std::vector<int> w(k_);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Pattern> out;
  do {
    bool ok = true;
    for (int s = 1; s <= k_ && ok; ++s)
      for (int t = 1; t <= k_ && ok; ++t)
        if (less(s, t) && w[s - 1] >= w[t - 1]) ok = false;
    if (ok) out.push_back(Pattern(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

bool Pop::is_p_k() const { return k_ >= 3 && *this == p_k(k_); }
bool Pop::is_q_k() const { return k_ >= 3 && *this == q_k(k_); }

std::string Pop::to_string() const {
  // Covering pairs: s < t with no position strictly between them.
  std::vector<std::pair<int, int>> cover;
  for (int s = 1; s <= k_; ++s)
    for (int t = 1; t <= k_; ++t) {
      if (!less(s, t)) continue;
      bool direct = true;
      for (int m = 1; m <= k_ && direct; ++m)
        if (less(s, m) && less(m, t)) direct = false;
      if (direct) cover.push_back({s, t});
    }
  std::string out = "k=" + std::to_string(k_);
  if (!cover.empty()) {
    out += ";lt=";
    for (std::size_t i = 0; i < cover.size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(cover[i].first) + "<" + std::to_string(cover[i].second);
    }
  }
  return out;
}

Pop Pop::parse(std::string_view text) {
  std::size_t i = 0;
  expect(text, i, "k=");
  const int k = scan_int(text, i);
  std::vector<std::pair<int, int>> rel;
  if (i < text.size()) {
    expect(text, i, ";lt=");
    if (i < text.size()) {
      while (true) {
        const int s = scan_int(text, i);
        expect(text, i, "<");
        const int t = scan_int(text, i);
        rel.push_back({s, t});
        if (i == text.size()) break;
        expect(text, i, ",");
      }
    }
  }
  if (i != text.size()) raise(errc::syntax_error, "trailing characters in POP");
  return Pop(k, rel);
}

std::ostream& operator<<(std::ostream& os, const Pop& p) { return os << p.to_string(); }

}  // namespace popwilf
