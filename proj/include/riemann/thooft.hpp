#pragma once

#include <string>
#include <vector>

namespace riemann {

/// 't Hooft symbols. Public accessors take 1-based indices (i in 1..3,
/// a, b in 1..4) and throw InputError when out of range.
namespace thooft {

int eta(int i, int a, int b);
int etabar(int i, int a, int b);
/// Levi-Civita symbol with eps(1,2,3,4) = 1.
int levi_civita(int a, int b, int c, int d);

/// 0-based tables for inner loops: kEta[sign][i][a][b], sign 0 = eta, 1 = etabar.
struct Tables {
  int eta[2][3][4][4];
  int eps4[4][4][4][4];
  int eps3[3][3][3];
};
const Tables& tables();

struct IdentityCheck {
  std::string name;
  bool passed = true;
  long evaluations = 0;
  std::string counterexample;  // first failing index tuple, 1-based
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_passed() const;
};

/// Exhaustively checks the standard algebraic identities of the symbols
/// (self-duality, completeness, contractions with epsilon, orthogonality,
/// products, exchange, cross product, su(2) commutators) for both signs.
IdentityReport verify_identities();

}  // namespace thooft
}  // namespace riemann
