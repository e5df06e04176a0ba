#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "fixtures.hpp"
#include "popwilf/bijection.hpp"
#include "popwilf/trace_json.hpp"

using namespace popwilf;

namespace {

SubmatrixG sub(std::vector<Cell> cells) { return SubmatrixG(std::move(cells)); }

int ones_inside(const Transversal& t, const RectSpan& rect) {
  int count = 0;
  for (int r = 1; r <= t.size(); ++r)
    if (rect.contains(t.cell_in_row(r))) ++count;
  return count;
}

}  // namespace

TEST_SUITE_BEGIN("bijection");

TEST_CASE("higher_than comparator") {
  CHECK(higher_than({5, 1}, {8, 2}));
  CHECK(higher_than({8, 3}, {8, 5}));
  CHECK_FALSE(higher_than({8, 3}, {8, 3}));
  CHECK_FALSE(higher_than({8, 5}, {8, 3}));
  CHECK(lower_than({8, 5}, {8, 3}));
}

TEST_CASE("theta on the worked submatrices") {
  SUBCASE("case I: rows shift down by two") {
    auto [out, tag] = theta(sub({{1, 3}, {4, 1}, {5, 5}, {6, 6}}));
    CHECK(tag == CaseTag::I);
    CHECK(out == sub({{1, 5}, {4, 6}, {5, 3}, {6, 1}}));
  }
  SUBCASE("case II: rows shift down by one, rightmost columns swap") {
    auto [out, tag] = theta(sub({{1, 3}, {4, 5}, {5, 1}, {6, 6}}));
    CHECK(tag == CaseTag::II);
    CHECK(out == sub({{1, 5}, {4, 3}, {5, 6}, {6, 1}}));
  }
  SUBCASE("identity word becomes 312") {
    auto [out, tag] = theta(sub({{1, 1}, {2, 2}, {3, 3}}));
    CHECK(tag == CaseTag::I);
    CHECK(out == sub({{1, 2}, {2, 3}, {3, 1}}));
    CHECK(out.word() == std::vector<int>{3, 1, 2});
  }
  SUBCASE("rejects submatrices outside the family") {
    CHECK_THROWS_AS(theta(sub({{1, 2}, {2, 3}, {3, 1}})), Error);  // word 312
  }
}

TEST_CASE("theta_prime on the worked submatrices") {
  SUBCASE("case I reverses the case-I theta example") {
    auto [out, tag] = theta_prime(sub({{1, 5}, {4, 6}, {5, 3}, {6, 1}}));
    CHECK(tag == CaseTag::I);
    CHECK(out == sub({{1, 3}, {4, 1}, {5, 5}, {6, 6}}));
  }
  SUBCASE("case II reverses the case-II theta example") {
    auto [out, tag] = theta_prime(sub({{1, 5}, {4, 3}, {5, 6}, {6, 1}}));
    CHECK(tag == CaseTag::II);
    CHECK(out == sub({{1, 3}, {4, 5}, {5, 1}, {6, 6}}));
  }
  SUBCASE("the map examples' submatrices") {
    auto [first, tag1] = theta_prime(sub({{1, 7}, {2, 8}, {5, 3}, {6, 5}}));
    CHECK(tag1 == CaseTag::I);
    CHECK(first == sub({{1, 3}, {2, 5}, {5, 7}, {6, 8}}));

    auto [second, tag2] = theta_prime(sub({{1, 3}, {8, 1}, {9, 4}, {10, 2}}));
    CHECK(tag2 == CaseTag::II);
    CHECK(second == sub({{1, 1}, {8, 3}, {9, 2}, {10, 4}}));
  }
  SUBCASE("312 goes back to the identity word") {
    auto [out, tag] = theta_prime(sub({{1, 2}, {2, 3}, {3, 1}}));
    CHECK(tag == CaseTag::I);
    CHECK(out == sub({{1, 1}, {2, 2}, {3, 3}}));
  }
  SUBCASE("rejects submatrices outside the family") {
    CHECK_THROWS_AS(theta_prime(sub({{1, 1}, {2, 2}, {3, 3}})), Error);  // word 123
  }
}

TEST_CASE("theta maps every q_k word to a p_k word on the same rows and columns") {
  for (int k = 3; k <= 6; ++k) {
    std::vector<int> perm(k - 1);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      std::vector<Cell> cells;
      for (int c = 1; c < k; ++c) cells.push_back({perm[c - 1], c});
      cells.push_back({k, k});
      const SubmatrixG g(cells);
      auto [out, tag] = theta(g);
      CHECK(out.realizes_pk());
      CHECK(out.rows() == g.rows());
      CHECK(out.cols() == g.cols());
      CHECK((tag == CaseTag::I) == (perm[k - 2] == k - 1));

      auto [back, tag2] = theta_prime(out);
      CHECK(back.realizes_qk());
      if (perm[k - 2] != 1) {  // round-trip guard: also a p_k word otherwise
        CHECK(back == g);
        CHECK(tag2 == tag);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("select_phi finds the distinguished cells") {
  const Transversal t = testdata::map_input();
  const auto sel = select_phi(t, 4);
  REQUIRE(sel.has_value());
  CHECK(sel->b == std::vector<Cell>{{10, 4}, {9, 2}, {8, 3}, {1, 1}});

  const Transversal mid(testdata::map_shape(), testdata::map_mid_cols());
  const auto sel2 = select_phi(mid, 4);
  REQUIRE(sel2.has_value());
  CHECK(sel2->b == std::vector<Cell>{{6, 8}, {5, 7}, {2, 5}, {1, 3}});

  const Transversal done(testdata::map_shape(), testdata::map_final_cols());
  CHECK_FALSE(select_phi(done, 4).has_value());
  CHECK_FALSE(select_phi(testdata::identity(3), 4).has_value());
}

TEST_CASE("select_psi finds the distinguished cells") {
  const Transversal t(testdata::map_shape(), testdata::map_final_cols());
  const auto sel = select_psi(t, 4);
  REQUIRE(sel.has_value());
  CHECK(sel->b == std::vector<Cell>{{6, 5}, {5, 3}, {1, 7}, {2, 8}});

  const Transversal mid(testdata::map_shape(), testdata::map_mid_cols());
  const auto sel2 = select_psi(mid, 4);
  REQUIRE(sel2.has_value());
  CHECK(sel2->b == std::vector<Cell>{{10, 2}, {8, 1}, {1, 3}, {9, 4}});

  CHECK_FALSE(select_psi(testdata::map_input(), 4).has_value());
  CHECK_FALSE(select_psi(testdata::identity(3), 3).has_value());
}

TEST_CASE("phi runs the two worked steps") {
  auto [result, trace] = run_phi(testdata::map_input(), 4);
  CHECK(result.cols() == testdata::map_final_cols());
  REQUIRE(trace.steps.size() == 2);
  CHECK(trace.steps[0].case_tag == CaseTag::II);
  CHECK(trace.steps[1].case_tag == CaseTag::I);
  CHECK(trace.steps[0].after.at(1) == 3);
  CHECK(trace.steps[1].before.at(1) == 3);
  CHECK(trace.replay_ok());

  // The recorded intermediate state matches the worked example.
  std::vector<int> cols = testdata::map_input().cols();
  for (const auto& [row, col] : trace.steps[0].after) cols[row - 1] = col;
  CHECK(cols == testdata::map_mid_cols());
}

TEST_CASE("psi reverses the two worked steps") {
  const Transversal t(testdata::map_shape(), testdata::map_final_cols());
  auto [result, trace] = run_psi(t, 4);
  CHECK(result == testdata::map_input());
  REQUIRE(trace.steps.size() == 2);
  CHECK(trace.steps[0].case_tag == CaseTag::I);
  CHECK(trace.steps[1].case_tag == CaseTag::II);
  CHECK(trace.steps[0].b == std::vector<Cell>{{6, 5}, {5, 3}, {1, 7}, {2, 8}});
  CHECK(trace.steps[1].b == std::vector<Cell>{{10, 2}, {8, 1}, {1, 3}, {9, 4}});
  CHECK(trace.replay_ok());
}

TEST_CASE("phi and psi single steps on 3x3") {
  auto stepped = phi_step(testdata::identity(3), 3);
  REQUIRE(stepped.has_value());
  CHECK(stepped->first.cols() == std::vector<int>{2, 3, 1});
  CHECK(stepped->second.case_tag == CaseTag::I);

  auto back = psi_step(stepped->first, 3);
  REQUIRE(back.has_value());
  CHECK(back->first == testdata::identity(3));
  CHECK(back->second.b == std::vector<Cell>{{3, 1}, {1, 2}, {2, 3}});

  CHECK_FALSE(phi_step(testdata::square({2, 3, 1}), 3).has_value());
}

TEST_CASE("maps act as the identity on avoiders") {
  auto [r1, t1] = run_phi(testdata::square({3, 2, 1}), 3);
  CHECK(r1 == testdata::square({3, 2, 1}));
  CHECK(t1.steps.empty());

  const YoungDiagram clipped({3, 3, 2});
  for (const std::vector<int>& cols :
       {std::vector<int>{1, 3, 2}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}}) {
    const Transversal t(clipped, cols);
    auto [phi_out, phi_trace] = run_phi(t, 3);
    auto [psi_out, psi_trace] = run_psi(t, 3);
    CHECK(phi_out == t);
    CHECK(psi_out == t);
    CHECK(phi_trace.steps.empty());
    CHECK(psi_trace.steps.empty());
  }
}

TEST_CASE("map preconditions and the iteration cap") {
  CHECK_THROWS_AS(run_phi(testdata::square({2, 1, 3}), 3), Error);   // contains 213
  CHECK_THROWS_AS(run_psi(testdata::identity(3), 3), Error);         // contains 123
  CHECK_THROWS_AS(run_phi(testdata::map_input(), 4, 1), Error);      // needs two steps
  CHECK_THROWS_AS(run_phi(testdata::identity(3), 2), Error);
}

TEST_CASE("boards around a phi selection") {
  const auto sel = select_phi(testdata::map_input(), 4);
  REQUIRE(sel.has_value());
  const Boards boards = boards_phi(*sel);
  CHECK(boards.f == RectSpan{1, 9, 1, 3});
  REQUIRE(boards.e.size() == 2);
  CHECK(boards.e[0].empty());  // columns 3 and 4 are adjacent
  CHECK(boards.e[1].empty());  // rows 9 and 10 are adjacent

  // Adjacent-row selection on the diagonal: everything collapses.
  const auto diag = select_phi(testdata::identity(3), 3);
  REQUIRE(diag.has_value());
  const Boards db = boards_phi(*diag);
  CHECK(db.f == RectSpan{1, 2, 1, 2});
  CHECK(db.e[0].empty());
  CHECK(db.e[1].empty());
}

TEST_CASE("a phi selection with a non-empty board E") {
  const Transversal t = testdata::square({3, 1, 5, 2, 4});
  const auto sel = select_phi(t, 3);
  REQUIRE(sel.has_value());
  CHECK(sel->b == std::vector<Cell>{{5, 4}, {4, 2}, {2, 1}});
  const Boards boards = boards_phi(*sel);
  CHECK(boards.f == RectSpan{2, 4, 1, 2});
  CHECK(boards.e[0] == RectSpan{3, 4, 3, 3});
  CHECK(boards.e[1].empty());

  CHECK(ones_inside(t, boards.f) == 2);         // k-1 before the step
  CHECK(ones_inside(t, boards.e[0]) == 0);

  auto stepped = phi_step(t, 3);
  REQUIRE(stepped.has_value());
  CHECK(stepped->first.cols() == std::vector<int>{3, 2, 5, 4, 1});
  CHECK(ones_inside(stepped->first, boards.f) == 1);  // k-2 after
  CHECK(ones_inside(stepped->first, boards.e[0]) == 0);
}

TEST_CASE("boards around a psi selection") {
  const Transversal t(testdata::map_shape(), testdata::map_final_cols());
  const auto sel = select_psi(t, 4);
  REQUIRE(sel.has_value());
  const Boards boards = boards_psi(*sel);
  CHECK(boards.f == RectSpan{1, 5, 1, 7});
  REQUIRE(boards.e.size() == 1);
  CHECK(boards.e[0].empty());  // columns 7 and 8 are adjacent

  const auto small = select_psi(testdata::square({2, 3, 1}), 3);
  REQUIRE(small.has_value());
  const Boards sb = boards_psi(*small);
  CHECK(sb.f == RectSpan{1, 2, 1, 2});
  CHECK(sb.e[0].empty());
}

TEST_CASE("trace serialization round-trips") {
  auto [result, trace] = run_phi(testdata::map_input(), 4);
  (void)result;
  const std::string json = trace_to_json(trace);
  const std::vector<TraceStepWire> parsed = parse_trace_json(json);
  REQUIRE(parsed.size() == trace.steps.size());
  for (std::size_t i = 0; i < parsed.size(); ++i) CHECK(parsed[i] == to_wire(trace.steps[i]));
  CHECK(json.find("\"case\": \"II\"") != std::string::npos);
}

TEST_SUITE_END();
