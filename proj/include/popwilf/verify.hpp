#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "popwilf/bijection.hpp"
#include "popwilf/enumeration.hpp"

namespace popwilf {

// Selection rules applied literally over the full occurrence enumeration.
// Intentionally naive; these exist to cross-check the fast selectors and only
// run at desk scale.
std::optional<PhiSelection> oracle_select_phi(const Transversal& t, int k);
std::optional<PsiSelection> oracle_select_psi(const Transversal& t, int k);

// Fast selectors and containment predicates against the oracles.
bool selectors_agree(const Transversal& t, int k);

struct LemmaVerdict {
  std::string lemma;
  bool pass = false;
  std::string detail;
};

// Step-level checks: replay integrity, board occupancy before/after, post-step
// position of every remaining occurrence relative to the rewritten submatrix,
// selection non-isomorphism, and monotone progress against the previous step.
std::vector<LemmaVerdict> check_step_lemmas(const StepRecord& rec, const Transversal& before,
                                            const Transversal& after, int k,
                                            const StepRecord* prev = nullptr);

struct LemmaFailure {
  std::string lemma;
  std::string where;   // transversal text plus step number
  std::string detail;
};

struct VerificationReport {
  YoungDiagram shape;
  int k = 0;
  std::uint64_t count_p = 0;
  std::uint64_t count_q = 0;
  bool bijective = false;   // phi maps the p_k-avoiders injectively onto the q_k-avoiders
  bool inverse_ok = false;  // psi(phi(T)) == T and phi(psi(S)) == S elementwise
  std::vector<LemmaFailure> lemma_failures;

  bool ok() const { return bijective && inverse_ok && lemma_failures.empty(); }
};

struct VerifyOptions {
  bool step_lemmas = true;
  // Single-step inversion at every intermediate state: psi undoes the last
  // phi step and vice versa.
  bool step_inversion = true;
};

VerificationReport verify_shape(const YoungDiagram& shape, int k, const VerifyOptions& opts = {});

// CSV mirroring the census layout:
// n,shape,k,count_p,count_q,bijective,inverse_ok,lemma_failures
void write_verify_csv(const std::vector<VerificationReport>& reports, std::ostream& out);

// JSON array with one entry per lemma failure across the reports.
std::string lemma_failures_to_json(const std::vector<VerificationReport>& reports);

// Round-trip of the surgeries over every q_k word (theta then theta_prime)
// and every p_k word (theta_prime then theta) on canonical rows/cols 1..k,
// whenever the applicability guard holds. Exhausts (k-1)! words per direction.
bool check_observations(int k);

}  // namespace popwilf
