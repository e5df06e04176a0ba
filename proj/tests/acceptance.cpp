// Acceptance suite: exhaustive, exactly reproducible checks of the bijection
// engine at desk scale. Prints one PASS/FAIL line per criterion; exits
// non-zero when any criterion fails. Pass --extended to grow the sweep from
// n <= 6 to n <= 7.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "popwilf/cli.hpp"
#include "popwilf/trace_json.hpp"
#include "popwilf/verify.hpp"

using namespace popwilf;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

bool sweep_bijection(int n_max, Check& c) {
  std::uint64_t shapes_seen = 0;
  for (int n = 1; n <= n_max; ++n) {
    std::uint64_t per_n = 0;
    for_each_shape(n, [&](const YoungDiagram& shape) {
      ++per_n;
      for (int k = 3; k <= 6; ++k) {
        const VerificationReport rep = verify_shape(shape, k);
        c.expect(rep.count_p == rep.count_q,
                 "count mismatch at " + shape.to_string() + " k=" + std::to_string(k));
        c.expect(rep.bijective, "not bijective at " + shape.to_string() + " k=" + std::to_string(k));
        c.expect(rep.inverse_ok, "inverse broken at " + shape.to_string() + " k=" + std::to_string(k));
        c.expect(rep.lemma_failures.empty(),
                 "lemma failure at " + shape.to_string() + " k=" + std::to_string(k));
      }
    });
    c.expect(per_n == testdata::catalan()[n],
             "shape count for n=" + std::to_string(n) + " is " + std::to_string(per_n));
    shapes_seen += per_n;
  }
  if (c.ok) c.detail = std::to_string(shapes_seen) + " shapes x k in {3..6}";
  return c.ok;
}

bool criterion_worked_examples(Check& c) {
  auto [phi_out, phi_trace] = run_phi(testdata::map_input(), 4);
  c.expect(phi_trace.steps.size() == 2, "phi needs exactly 2 steps");
  if (phi_trace.steps.size() == 2) {
    c.expect(phi_trace.steps[0].case_tag == CaseTag::II, "phi step 1 case");
    c.expect(phi_trace.steps[1].case_tag == CaseTag::I, "phi step 2 case");
    c.expect(phi_trace.steps[0].b == std::vector<Cell>{{10, 4}, {9, 2}, {8, 3}, {1, 1}},
             "phi step 1 selection");
    c.expect(phi_trace.steps[1].b == std::vector<Cell>{{6, 8}, {5, 7}, {2, 5}, {1, 3}},
             "phi step 2 selection");
    std::vector<int> cols = testdata::map_input().cols();
    for (const auto& [row, col] : phi_trace.steps[0].after) cols[row - 1] = col;
    c.expect(cols == testdata::map_mid_cols(), "phi intermediate transversal");
  }
  c.expect(phi_out.cols() == testdata::map_final_cols(), "phi final transversal");

  auto [psi_out, psi_trace] = run_psi(phi_out, 4);
  c.expect(psi_trace.steps.size() == 2, "psi needs exactly 2 steps");
  if (psi_trace.steps.size() == 2) {
    c.expect(psi_trace.steps[0].case_tag == CaseTag::I, "psi step 1 case");
    c.expect(psi_trace.steps[1].case_tag == CaseTag::II, "psi step 2 case");
    c.expect(psi_trace.steps[0].b == std::vector<Cell>{{6, 5}, {5, 3}, {1, 7}, {2, 8}},
             "psi step 1 selection");
    c.expect(psi_trace.steps[1].b == std::vector<Cell>{{10, 2}, {8, 1}, {1, 3}, {9, 4}},
             "psi step 2 selection");
  }
  c.expect(psi_out == testdata::map_input(), "psi restores the phi input");

  const auto check_surgery = [&](std::vector<Cell> in, CaseTag want_tag, std::vector<Cell> want,
                                 bool prime, const std::string& label) {
    auto [out, tag] = prime ? theta_prime(SubmatrixG(in)) : theta(SubmatrixG(in));
    c.expect(tag == want_tag, label + " case tag");
    c.expect(out == SubmatrixG(want), label + " cells");
  };
  check_surgery({{1, 3}, {4, 1}, {5, 5}, {6, 6}}, CaseTag::I, {{1, 5}, {4, 6}, {5, 3}, {6, 1}},
                false, "theta case I");
  check_surgery({{1, 3}, {4, 5}, {5, 1}, {6, 6}}, CaseTag::II, {{1, 5}, {4, 3}, {5, 6}, {6, 1}},
                false, "theta case II");
  check_surgery({{1, 5}, {4, 6}, {5, 3}, {6, 1}}, CaseTag::I, {{1, 3}, {4, 1}, {5, 5}, {6, 6}},
                true, "theta_prime case I");
  check_surgery({{1, 5}, {4, 3}, {5, 6}, {6, 1}}, CaseTag::II, {{1, 3}, {4, 5}, {5, 1}, {6, 6}},
                true, "theta_prime case II");

  if (c.ok) c.detail = "2+2 map steps, 4 surgery examples";
  return c.ok;
}

bool criterion_lemmas(Check& c) {
  std::uint64_t steps_checked = 0;
  for (int n = 1; n <= 5; ++n)
    for_each_shape(n, [&](const YoungDiagram& shape) {
      for (int k = 3; k <= 6; ++k) {
        const VerificationReport rep = verify_shape(shape, k);
        for (const LemmaFailure& f : rep.lemma_failures)
          c.expect(false, f.lemma + " at " + f.where + " (shape " + shape.to_string() + ")");
        c.expect(rep.ok(), "report not clean at " + shape.to_string() + " k=" + std::to_string(k));
      }
      for (int k = 3; k <= 6; ++k)
        for_each_transversal(shape, [&](const Transversal& t) {
          if (avoids(t, Pop::p_k(k))) steps_checked += run_phi(t, k).second.steps.size();
        });
    });
  if (c.ok) c.detail = std::to_string(steps_checked) + " phi steps plus psi mirrors, zero failures";
  return c.ok;
}

bool criterion_oracles(Check& c) {
  std::uint64_t transversals_checked = 0;
  for (int n = 1; n <= 5; ++n)
    for_each_shape(n, [&](const YoungDiagram& shape) {
      for_each_transversal(shape, [&](const Transversal& t) {
        ++transversals_checked;
        for (int k = 3; k <= 4; ++k) {
          c.expect(contains_qk(t, k) == occurrence_exists(t, Pop::q_k(k)),
                   "contains_qk disagrees at " + t.to_string());
          c.expect(contains_pk(t, k) == occurrence_exists(t, Pop::p_k(k)),
                   "contains_pk disagrees at " + t.to_string());
          c.expect(selectors_agree(t, k), "selector disagrees at " + t.to_string());
        }
      });
    });
  if (c.ok) c.detail = std::to_string(transversals_checked) + " transversals x k in {3,4}";
  return c.ok;
}

bool criterion_observations(Check& c) {
  for (int k = 3; k <= 6; ++k)
    c.expect(check_observations(k), "round-trip fails for k=" + std::to_string(k));
  if (c.ok) c.detail = "k in {3..6}, (k-1)! words per direction";
  return c.ok;
}

bool criterion_counts(Check& c) {
  const YoungDiagram clipped({3, 3, 2});
  c.expect(count_avoiders(clipped, Pop::p_k(3)) == 4, "(3,3,2) p_3 count");
  c.expect(count_avoiders(clipped, Pop::q_k(3)) == 4, "(3,3,2) q_3 count");
  c.expect(count_avoiders(YoungDiagram({4, 4, 4, 4}), Pop::q_k(4)) == 18, "4x4 q_4 count");
  for (int n = 1; n <= 7; ++n) {
    const YoungDiagram square(std::vector<int>(n, n));
    const std::uint64_t expected = std::uint64_t{1} << (n - 1);
    c.expect(count_avoiders(square, Pop::q_k(3)) == expected,
             "square q_3 count at n=" + std::to_string(n));
    c.expect(count_avoiders(square, Pop::p_k(3)) == expected,
             "square p_3 count at n=" + std::to_string(n));
  }
  if (c.ok) c.detail = "spot values plus the 2^(n-1) square sequence, n <= 7";
  return c.ok;
}

bool criterion_determinism(Check& c) {
  const std::vector<Pop> pops{Pop::p_k(3), Pop::q_k(3), Pop::q_k(4)};
  std::ostringstream a, b, d;
  write_census_csv(4, pops, 1, a);
  write_census_csv(4, pops, 1, b);
  write_census_csv(4, pops, 2, d);
  c.expect(a.str() == b.str(), "census differs between runs");
  c.expect(a.str() == d.str(), "census differs across --jobs");

  for (int k = 3; k <= 6; ++k) {
    c.expect(Pop::parse(Pop::p_k(k).to_string()) == Pop::p_k(k), "p_k text round-trip");
    c.expect(Pop::parse(Pop::q_k(k).to_string()) == Pop::q_k(k), "q_k text round-trip");
  }

  std::uint64_t restored = 0;
  for (int n = 1; n <= 4; ++n)
    for_each_shape(n, [&](const YoungDiagram& shape) {
      for_each_transversal(shape, [&](const Transversal& t) {
        c.expect(parse_transversal(t.to_string()) == t, "transversal text round-trip");
        if (avoids(t, Pop::p_k(3))) {
          auto [image, trace] = run_phi(t, 3);
          (void)trace;
          auto [back, back_trace] = run_psi(image, 3);
          (void)back_trace;
          c.expect(back.to_string() == t.to_string(), "map round-trip at " + t.to_string());
          ++restored;
        }
      });
    });

  auto [image, trace] = run_phi(testdata::map_input(), 4);
  (void)image;
  const std::vector<TraceStepWire> parsed = parse_trace_json(trace_to_json(trace));
  c.expect(parsed.size() == trace.steps.size(), "trace JSON length");
  for (std::size_t i = 0; i < parsed.size(); ++i)
    c.expect(parsed[i] == to_wire(trace.steps[i]), "trace JSON step mismatch");

  if (c.ok) c.detail = "census bytes stable; " + std::to_string(restored) + " map round-trips";
  return c.ok;
}

}  // namespace

int main(int argc, char** argv) {
  bool extended = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--extended") == 0) extended = true;

  const int sweep_max = extended ? 7 : 6;
  struct Criterion {
    int id;
    std::string title;
    std::function<bool(Check&)> fn;
  };
  const std::vector<Criterion> criteria{
      {1, "exhaustive bijection sweep (n <= " + std::to_string(sweep_max) + ", k in {3..6})",
       [&](Check& c) { return sweep_bijection(sweep_max, c); }},
      {2, "worked-example reproduction", criterion_worked_examples},
      {3, "lemma suite on every step (n <= 5, k in {3..6})", criterion_lemmas},
      {4, "oracle equivalence (n <= 5, k in {3,4})", criterion_oracles},
      {5, "surgery round-trip observations (k in {3..6})", criterion_observations},
      {6, "spot counts", criterion_counts},
      {7, "determinism and round-trips", criterion_determinism},
  };

  int failures = 0;
  for (const Criterion& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check check;
    bool ok = false;
    try {
      ok = cr.fn(check);
    } catch (const std::exception& e) {
      check.ok = false;
      check.detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << "criterion " << cr.id << " [" << (ok ? "PASS" : "FAIL") << "] " << cr.title
              << " -- " << check.detail << " (" << ms << " ms)\n";
    if (!ok) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
