#pragma once

#include <string>
#include <vector>

#include "hives/weights.hpp"

namespace hives {

struct SuiteReport {
  std::string name;
  long checks = 0;
  long failures = 0;
  // hive-condition checks on sections read off the spacetime state
  long section_checks = 0;
  long section_failures = 0;
  std::vector<std::string> notes;

  bool ok() const { return failures == 0 && section_failures == 0; }
  void check(bool pass, const std::string& what);
  void check_section(bool pass, const std::string& what);
  void merge(const SuiteReport& other);
};

// Crystal axioms (1)-(4) on straight and skew tableaux, star intertwining,
// the Schutzenberger properties, xi^2 = 1, the two xi algorithms agreeing,
// sigma as a crystal morphism with sigma^2 = 1, Jeu de Taquin commutation,
// the row-insertion recurrence oracle, the recording-tableau lemmas and
// dual equivalence.  Exhaustive for the given rank and size bounds.
SuiteReport verify_crystal_axioms(int n = 3, int max_size = 6);

// R(M-hat, N-hat) = P-hat and J(M-hat * N-hat) = Q-hat over all composable
// hive pairs with boundary parts <= max_part.
SuiteReport verify_octjeu(int n = 3, int max_part = 2);

// hat(commute(P)) = schutzenberger(tilde(P)) over all hives with boundary
// parts <= max_part, including the stagewise Bender-Knuth flips.
SuiteReport verify_siandoct(int n = 3, int max_part = 3);

// hat: HIVE -> mu-dominant tableaux is a bijection with inverse unhat.
SuiteReport verify_pakt(int n = 3, int max_sum = 4);

// Byte-for-byte reproduction of the worked associator and commutor examples
// (hives, slices, stages, flips).
SuiteReport verify_golden_assoc();
SuiteReport verify_golden_commute();
SuiteReport verify_golden();

// Section hive condition on every section read in the golden and exhaustive
// associator/commutor runs.
SuiteReport verify_propagation();

// sigma^2 = 1 and the compound axiom on irreducible triples, plus
// P** = P.
SuiteReport verify_coboundary(int n = 2, int max_norm = 3);

// The Yang-Baxter counterexample reproduces and the sides differ; the
// equation holds for n = 1 and for small symmetric-power triples.
SuiteReport verify_yb();

// The associator and commutor compatibility squares commute elementwise.
SuiteReport verify_diagrams(int n = 3, int max_part = 2);

// Hive count equals crystal highest-weight count.
SuiteReport verify_lr(int max_rank = 3, int max_sum = 4);

std::vector<std::string> verify_suite_names();
SuiteReport run_suite(const std::string& name, int max_size, unsigned seed);

}  // namespace hives
