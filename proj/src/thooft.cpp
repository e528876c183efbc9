#include "riemann/thooft.hpp"

#include <array>
#include <functional>
#include <sstream>

#include "riemann/scalar.hpp"

namespace riemann::thooft {
namespace {

int parity_sign(std::array<int, 4> p) {
  int sign = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (p[i] == p[j]) return 0;
      if (p[i] > p[j]) sign = -sign;
    }
  return sign;
}

Tables build_tables() {
  Tables t{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) t.eps4[a][b][c][d] = parity_sign({a, b, c, d});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) t.eps3[i][j][k] = t.eps4[i][j][k][3];
  for (int i = 0; i < 3; ++i)
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        const int e = t.eps4[i][3][a][b];
        const int d = (i == a && b == 3) - (i == b && a == 3);
        t.eta[0][i][a][b] = e + d;
        t.eta[1][i][a][b] = e - d;
      }
  return t;
}

void check_range(int v, int lo, int hi, const char* what) {
  if (v < lo || v > hi)
    throw InputError(std::string(what) + " index " + std::to_string(v) + " outside " +
                     std::to_string(lo) + ".." + std::to_string(hi));
}

int delta(int a, int b) { return a == b ? 1 : 0; }

// Runs pred over every tuple in [0,4)^n with the first `n3` slots in [0,3).
IdentityCheck run(std::string name, int n3, int n4,
                  const std::function<bool(const std::vector<int>&)>& pred) {
  IdentityCheck out;
  out.name = std::move(name);
  const int n = n3 + n4;
  std::vector<int> idx(n, 0);
  while (true) {
    ++out.evaluations;
    if (!pred(idx) && out.passed) {
      out.passed = false;
      std::ostringstream os;
      for (int k = 0; k < n; ++k) os << (k ? "," : "") << idx[k] + 1;
      out.counterexample = os.str();
    }
    int k = n - 1;
    for (; k >= 0; --k) {
      const int lim = k < n3 ? 3 : 4;
      if (++idx[k] < lim) break;
      idx[k] = 0;
    }
    if (k < 0) break;
  }
  return out;
}

}  // namespace

const Tables& tables() {
  static const Tables t = build_tables();
  return t;
}

int eta(int i, int a, int b) {
  check_range(i, 1, 3, "su(2)");
  check_range(a, 1, 4, "spacetime");
  check_range(b, 1, 4, "spacetime");
  return tables().eta[0][i - 1][a - 1][b - 1];
}

int etabar(int i, int a, int b) {
  check_range(i, 1, 3, "su(2)");
  check_range(a, 1, 4, "spacetime");
  check_range(b, 1, 4, "spacetime");
  return tables().eta[1][i - 1][a - 1][b - 1];
}

int levi_civita(int a, int b, int c, int d) {
  for (int v : {a, b, c, d}) check_range(v, 1, 4, "spacetime");
  return tables().eps4[a - 1][b - 1][c - 1][d - 1];
}

bool IdentityReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

IdentityReport verify_identities() {
  const Tables& t = tables();
  const auto& E = t.eps4;
  const auto& e3 = t.eps3;
  IdentityReport report;
  for (int s = 0; s < 2; ++s) {
    const auto& H = t.eta[s];
    const auto& Hbar = t.eta[1 - s];
    const int pm = s == 0 ? 1 : -1;
    const std::string tag = s == 0 ? "[eta]" : "[etabar]";

    report.checks.push_back(run("self-duality " + tag, 1, 2, [&](const std::vector<int>& x) {
      const int i = x[0], a = x[1], b = x[2];
      int sum = 0;
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) sum += E[a][b][c][d] * H[i][c][d];
      return 2 * H[i][a][b] == pm * sum;
    }));

    report.checks.push_back(run("completeness " + tag, 0, 4, [&](const std::vector<int>& x) {
      const int a = x[0], b = x[1], c = x[2], d = x[3];
      int sum = 0;
      for (int i = 0; i < 3; ++i) sum += H[i][a][b] * H[i][c][d];
      return sum == delta(a, c) * delta(b, d) - delta(a, d) * delta(b, c) + pm * E[a][b][c][d];
    }));

    report.checks.push_back(run("epsilon contraction " + tag, 1, 4, [&](const std::vector<int>& x) {
      const int i = x[0], a = x[1], b = x[2], c = x[3], e = x[4];
      int sum = 0;
      for (int d = 0; d < 4; ++d) sum += E[a][b][c][d] * H[i][d][e];
      return sum ==
             -pm * (delta(e, c) * H[i][a][b] + delta(e, a) * H[i][b][c] - delta(e, b) * H[i][a][c]);
    }));

    report.checks.push_back(run("orthogonality " + tag, 2, 0, [&](const std::vector<int>& x) {
      const int i = x[0], j = x[1];
      int mixed = 0, same = 0;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          mixed += H[i][a][b] * Hbar[j][a][b];
          same += H[i][a][b] * H[j][a][b];
        }
      return mixed == 0 && same == 4 * delta(i, j);
    }));

    report.checks.push_back(run("product " + tag, 2, 2, [&](const std::vector<int>& x) {
      const int i = x[0], j = x[1], a = x[2], b = x[3];
      int lhs = 0, rhs = delta(i, j) * delta(a, b);
      for (int c = 0; c < 4; ++c) lhs += H[i][a][c] * H[j][b][c];
      for (int k = 0; k < 3; ++k) rhs += e3[i][j][k] * H[k][a][b];
      return lhs == rhs;
    }));

    report.checks.push_back(run("exchange " + tag, 2, 2, [&](const std::vector<int>& x) {
      const int i = x[0], j = x[1], a = x[2], b = x[3];
      int lhs = 0, rhs = 0;
      for (int c = 0; c < 4; ++c) {
        lhs += H[i][a][c] * Hbar[j][b][c];
        rhs += H[i][b][c] * Hbar[j][a][c];
      }
      return lhs == rhs;
    }));

    report.checks.push_back(run("cross product " + tag, 1, 4, [&](const std::vector<int>& x) {
      const int i = x[0], a = x[1], b = x[2], c = x[3], d = x[4];
      int lhs = 0;
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) lhs += e3[i][j][k] * H[j][a][b] * H[k][c][d];
      return lhs == delta(a, c) * H[i][b][d] - delta(a, d) * H[i][b][c] -
                        delta(b, c) * H[i][a][d] + delta(b, d) * H[i][a][c];
    }));

    // With tau = eta/2: [tau^i, tau^j] = -eps^{ijk} tau^k, i.e. [eta^i, eta^j] = -2 eps^{ijk} eta^k,
    // and the two families commute.
    report.checks.push_back(run("su(2) commutators " + tag, 2, 2, [&](const std::vector<int>& x) {
      const int i = x[0], j = x[1], a = x[2], b = x[3];
      int same = 0, mixed = 0, rhs = 0;
      for (int c = 0; c < 4; ++c) {
        same += H[i][a][c] * H[j][c][b] - H[j][a][c] * H[i][c][b];
        mixed += H[i][a][c] * Hbar[j][c][b] - Hbar[j][a][c] * H[i][c][b];
      }
      for (int k = 0; k < 3; ++k) rhs -= 2 * e3[i][j][k] * H[k][a][b];
      return same == rhs && mixed == 0;
    }));
  }
  return report;
}

}  // namespace riemann::thooft
