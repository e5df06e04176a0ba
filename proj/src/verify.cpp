#include "popwilf/verify.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include <json.hpp>

namespace popwilf {

namespace {

// Left group / tail split of a p_k occurrence: cells sorted by column, the
// tail is the rightmost one.
struct PkParts {
  std::vector<Cell> left;  // sorted by column
  Cell tail;
  Cell lowest_left;        // max row of the left group
  Cell topmost;            // min row overall
};

PkParts split_pk(const Occurrence& occ) {
  std::vector<Cell> by_col = occ;
  std::sort(by_col.begin(), by_col.end(), [](Cell a, Cell b) { return a.col < b.col; });
  PkParts parts;
  parts.tail = by_col.back();
  by_col.pop_back();
  parts.left = std::move(by_col);
  parts.lowest_left = *std::max_element(parts.left.begin(), parts.left.end(),
                                        [](Cell a, Cell b) { return a.row < b.row; });
  parts.topmost = *std::min_element(occ.begin(), occ.end(),
                                    [](Cell a, Cell b) { return a.row < b.row; });
  return parts;
}

}  // namespace

std::optional<PhiSelection> oracle_select_phi(const Transversal& t, int k) {
  if (k < 3) raise(errc::unsupported_length, "oracle_select_phi requires k >= 3");
  const std::vector<Occurrence> occs = all_occurrences(t, Pop::q_k(k));
  if (occs.empty()) return std::nullopt;
  Cell b1{0, 0};
  for (const Occurrence& occ : occs) {
    const Cell lowest = occ.back();  // occurrences are listed top row first
    if (lowest.row > b1.row) b1 = lowest;
  }
  std::vector<Cell> above_left;
  for (int r = 1; r < b1.row; ++r)
    if (t.col_of_row(r) < b1.col) above_left.push_back(t.cell_in_row(r));
  if (static_cast<int>(above_left.size()) < k - 1)
    raise(errc::consistency_violation, "oracle b_1 lacks k-1 cells above-left");
  std::vector<Cell> b{b1};
  for (int i = 0; i < k - 1; ++i) b.push_back(above_left[above_left.size() - 1 - i]);
  std::vector<Cell> all = b;
  return PhiSelection{std::move(b), SubmatrixG(std::move(all))};
}

std::optional<PsiSelection> oracle_select_psi(const Transversal& t, int k) {
  if (k < 3) raise(errc::unsupported_length, "oracle_select_psi requires k >= 3");
  const Pop pk = Pop::p_k(k);
  const std::vector<Occurrence> occs = all_occurrences(t, pk);
  if (occs.empty()) return std::nullopt;

  Cell b1{t.size() + 1, 0};
  for (const Occurrence& occ : occs) {
    const Cell q = split_pk(occ).lowest_left;
    if (q.row < b1.row) b1 = q;
  }
  Cell top{t.size() + 1, 0};
  for (const Occurrence& occ : occs) {
    const PkParts parts = split_pk(occ);
    if (parts.lowest_left == b1 && parts.topmost.row < top.row) top = parts.topmost;
  }
  if (top.row > t.size()) raise(errc::selection_incomplete, "oracle found no topmost cell");

  std::vector<Cell> middles;
  for (int r = top.row + 1; r < b1.row && static_cast<int>(middles.size()) < k - 3; ++r)
    if (t.col_of_row(r) < top.col) middles.push_back(t.cell_in_row(r));
  if (static_cast<int>(middles.size()) < k - 3)
    raise(errc::selection_incomplete, "oracle found fewer than k-3 middle cells");
  std::reverse(middles.begin(), middles.end());

  std::optional<Cell> tail;
  for (int c = top.col + 1; c <= t.size() && !tail; ++c) {
    const Cell cand{t.row_of_col(c), c};
    std::vector<Cell> cells{b1};
    cells.insert(cells.end(), middles.begin(), middles.end());
    cells.push_back(top);
    cells.push_back(cand);
    if (cand.row > top.row && matches_pop(t, cells, pk)) tail = cand;
  }
  if (!tail) raise(errc::selection_incomplete, "oracle found no tail cell");

  std::vector<Cell> b{b1};
  b.insert(b.end(), middles.begin(), middles.end());
  b.push_back(top);
  b.push_back(*tail);
  SubmatrixG g{std::vector<Cell>(b)};
  return PsiSelection{std::move(b), std::move(g)};
}

bool selectors_agree(const Transversal& t, int k) {
  if (contains_qk(t, k) != occurrence_exists(t, Pop::q_k(k))) return false;
  if (contains_pk(t, k) != occurrence_exists(t, Pop::p_k(k))) return false;
  if (select_phi(t, k) != oracle_select_phi(t, k)) return false;
  if (select_psi(t, k) != oracle_select_psi(t, k)) return false;
  return true;
}

namespace {

int count_ones_in(const Transversal& t, const RectSpan& rect) {
  int count = 0;
  for (int r = 1; r <= t.size(); ++r)
    if (rect.contains(t.cell_in_row(r))) ++count;
  return count;
}

int count_ones_in(const Transversal& t, const std::vector<RectSpan>& rects) {
  int count = 0;
  for (int r = 1; r <= t.size(); ++r) {
    const Cell c = t.cell_in_row(r);
    for (const RectSpan& rect : rects)
      if (rect.contains(c)) {
        ++count;
        break;
      }
  }
  return count;
}

bool replay_matches(const StepRecord& rec, const Transversal& before, const Transversal& after) {
  std::vector<int> cols = before.cols();
  for (const auto& [row, col] : rec.before)
    if (cols[row - 1] != col) return false;
  for (const auto& [row, col] : rec.after) cols[row - 1] = col;
  return cols == after.cols();
}

}  // namespace

std::vector<LemmaVerdict> check_step_lemmas(const StepRecord& rec, const Transversal& before,
                                            const Transversal& after, int k,
                                            const StepRecord* prev) {
  std::vector<LemmaVerdict> out;
  const auto add = [&](std::string lemma, bool pass, std::string detail = "") {
    out.push_back({std::move(lemma), pass, std::move(detail)});
  };

  add("replay", replay_matches(rec, before, after));

  const RowSummary moved = summary_of(rec.g_after);
  if (rec.kind == StepKind::phi) {
    add("selection_not_pk", !rec.g_before.realizes_pk());
    const int f_before = count_ones_in(before, rec.boards.f);
    const int f_after = count_ones_in(after, rec.boards.f);
    add("board_F_before", f_before == k - 1, "count " + std::to_string(f_before));
    add("board_F_after", f_after == k - 2, "count " + std::to_string(f_after));
    add("board_E_before", count_ones_in(before, rec.boards.e) == 0);
    add("board_E_after", count_ones_in(after, rec.boards.e) == 0);

    bool qk_higher = true, pk_not_higher = true;
    for (const Occurrence& occ : all_occurrences(after, Pop::q_k(k)))
      if (!higher_than(summary_of(occ), moved)) qk_higher = false;
    for (const Occurrence& occ : all_occurrences(after, Pop::p_k(k)))
      if (higher_than(summary_of(occ), moved)) pk_not_higher = false;
    add("poststep_qk_higher", qk_higher);
    add("poststep_pk_not_higher", pk_not_higher);
    if (prev)
      add("monotone_progress", higher_than(summary_of(rec.g_before), summary_of(prev->g_before)));
  } else {
    const bool not_qk = !rec.g_before.realizes_qk();
    add("selection_not_qk", not_qk);
    if (not_qk) {
      const int f_before = count_ones_in(before, rec.boards.f);
      const int f_after = count_ones_in(after, rec.boards.f);
      add("board_F_before", f_before == k - 2, "count " + std::to_string(f_before));
      add("board_F_after", f_after == k - 1, "count " + std::to_string(f_after));
      add("board_E_before", count_ones_in(before, rec.boards.e) == 0);
      add("board_E_after", count_ones_in(after, rec.boards.e) == 0);
    }

    bool pk_lower = true, qk_not_lower = true;
    for (const Occurrence& occ : all_occurrences(after, Pop::p_k(k)))
      if (!lower_than(summary_of(occ), moved)) pk_lower = false;
    for (const Occurrence& occ : all_occurrences(after, Pop::q_k(k)))
      if (lower_than(summary_of(occ), moved)) qk_not_lower = false;
    add("poststep_pk_lower", pk_lower);
    add("poststep_qk_not_lower", qk_not_lower);
    if (prev)
      add("monotone_progress", lower_than(summary_of(rec.g_before), summary_of(prev->g_before)));
  }
  return out;
}

namespace {

void run_and_check(const Transversal& t, int k, StepKind kind, const VerifyOptions& opts,
                   std::vector<LemmaFailure>& failures, const Transversal& expect_back,
                   std::vector<std::vector<int>>& images, bool& inverse_ok) {
  auto [image, trace] = kind == StepKind::phi ? run_phi(t, k) : run_psi(t, k);
  images.push_back(image.cols());

  if (!trace.replay_ok())
    failures.push_back({"trace_replay", t.to_string(), "trace does not reproduce its result"});

  const Pop same = kind == StepKind::phi ? Pop::q_k(k) : Pop::p_k(k);
  if (!avoids(image, same))
    failures.push_back({"image_membership", t.to_string(), "image still contains the family"});

  Transversal cur = t;
  const StepRecord* prev = nullptr;
  for (const StepRecord& rec : trace.steps) {
    std::vector<int> cols = cur.cols();
    for (const auto& [row, col] : rec.after) cols[row - 1] = col;
    Transversal next(cur.shape(), std::move(cols));

    if (opts.step_lemmas) {
      for (const LemmaVerdict& v : check_step_lemmas(rec, cur, next, k, prev))
        if (!v.pass)
          failures.push_back({v.lemma, t.to_string() + " step " + std::to_string(rec.step), v.detail});
    }
    if (opts.step_inversion) {
      auto back = kind == StepKind::phi ? psi_step(next, k) : phi_step(next, k);
      if (!back || !(back->first == cur))
        failures.push_back(
            {"step_inversion", t.to_string() + " step " + std::to_string(rec.step), ""});
    }
    prev = &rec;
    cur = std::move(next);
  }

  auto [back, back_trace] = kind == StepKind::phi ? run_psi(image, k) : run_phi(image, k);
  (void)back_trace;
  if (!(back == expect_back)) inverse_ok = false;
}

}  // namespace

VerificationReport verify_shape(const YoungDiagram& shape, int k, const VerifyOptions& opts) {
  if (k < 3) raise(errc::unsupported_length, "verify_shape requires k >= 3");
  VerificationReport report{shape, k, 0, 0, false, false, {}};
  const Pop pk = Pop::p_k(k);
  const Pop qk = Pop::q_k(k);

  std::vector<Transversal> avoid_p, avoid_q;
  for_each_transversal(shape, [&](const Transversal& t) {
    if (avoids(t, pk)) avoid_p.push_back(t);
    if (avoids(t, qk)) avoid_q.push_back(t);
  });
  report.count_p = avoid_p.size();
  report.count_q = avoid_q.size();

  bool inverse_ok = true;
  std::vector<std::vector<int>> phi_images, psi_images;
  for (const Transversal& t : avoid_p)
    run_and_check(t, k, StepKind::phi, opts, report.lemma_failures, t, phi_images, inverse_ok);
  for (const Transversal& t : avoid_q)
    run_and_check(t, k, StepKind::psi, opts, report.lemma_failures, t, psi_images, inverse_ok);
  report.inverse_ok = inverse_ok;

  std::vector<std::vector<int>> q_cols, p_cols;
  for (const Transversal& t : avoid_q) q_cols.push_back(t.cols());
  for (const Transversal& t : avoid_p) p_cols.push_back(t.cols());
  std::sort(phi_images.begin(), phi_images.end());
  std::sort(psi_images.begin(), psi_images.end());
  std::sort(q_cols.begin(), q_cols.end());
  std::sort(p_cols.begin(), p_cols.end());
  const bool phi_injective = std::adjacent_find(phi_images.begin(), phi_images.end()) == phi_images.end();
  const bool psi_injective = std::adjacent_find(psi_images.begin(), psi_images.end()) == psi_images.end();
  report.bijective = phi_injective && psi_injective && phi_images == q_cols && psi_images == p_cols;
  return report;
}

void write_verify_csv(const std::vector<VerificationReport>& reports, std::ostream& out) {
  out << "n,shape,k,count_p,count_q,bijective,inverse_ok,lemma_failures\n";
  for (const VerificationReport& rep : reports) {
    std::string shape;
    for (std::size_t i = 0; i < rep.shape.row_lengths().size(); ++i) {
      if (i) shape.push_back('|');
      shape += std::to_string(rep.shape.row_lengths()[i]);
    }
    out << rep.shape.row_count() << ',' << shape << ',' << rep.k << ',' << rep.count_p << ','
        << rep.count_q << ',' << (rep.bijective ? 1 : 0) << ',' << (rep.inverse_ok ? 1 : 0) << ','
        << rep.lemma_failures.size() << '\n';
  }
}

std::string lemma_failures_to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const VerificationReport& rep : reports)
    for (const LemmaFailure& f : rep.lemma_failures) {
      nlohmann::ordered_json j;
      j["shape"] = rep.shape.to_string();
      j["k"] = rep.k;
      j["lemma"] = f.lemma;
      j["where"] = f.where;
      j["detail"] = f.detail;
      arr.push_back(std::move(j));
    }
  return arr.dump(2) + "\n";
}

bool check_observations(int k) {
  if (k < 3) raise(errc::unsupported_length, "check_observations requires k >= 3");
  std::vector<int> perm(k - 1);
  std::iota(perm.begin(), perm.end(), 1);
  bool all_ok = true;

  // q_k words: w(k) = k, the rest is any permutation of 1..k-1.
  do {
    std::vector<Cell> cells;
    for (int c = 1; c < k; ++c) cells.push_back({perm[c - 1], c});
    cells.push_back({k, k});
    SubmatrixG g{cells};
    if (perm[k - 2] == 1) continue;  // also a p_k word; theta' guard fails
    auto [mid, tag] = theta(g);
    auto [round, tag2] = theta_prime(mid);
    if (!(round == g) || tag != tag2) all_ok = false;
  } while (std::next_permutation(perm.begin(), perm.end()));

  // p_k words: w(k-1) = 1, positions 1..k-2 and k hold 2..k in any order.
  std::vector<int> rest(k - 1);
  std::iota(rest.begin(), rest.end(), 2);
  do {
    std::vector<Cell> cells;
    for (int c = 1; c <= k - 2; ++c) cells.push_back({rest[c - 1], c});
    cells.push_back({1, k - 1});
    cells.push_back({rest[k - 2], k});
    SubmatrixG g{cells};
    if (rest[k - 2] == k) continue;  // also a q_k word; theta guard fails
    auto [mid, tag] = theta_prime(g);
    auto [round, tag2] = theta(mid);
    if (!(round == g) || tag != tag2) all_ok = false;
  } while (std::next_permutation(rest.begin(), rest.end()));

  return all_ok;
}

}  // namespace popwilf
