// Copyright 2026 The schwarzmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance runner: one PASS/FAIL line per criterion, with wall time against
// its budget. Exits nonzero if any criterion fails or runs over budget.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../test_support.hpp"
#include "schwarz/cli.hpp"
#include "schwarz/groebner.hpp"
#include "schwarz/hessian.hpp"
#include "schwarz/schwarz_solver.hpp"

namespace {

using namespace schwarz;
using testing::Const;
using testing::Ring;
using testing::Var;
using testing::z;

// Collects failed checks for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ = failed_ || !ok;
  }
  bool ok() const { return !failed_; }
  std::string detail() const {
    std::string out;
    for (const auto& f : failures_) out += (out.empty() ? "" : "; ") + f;
    return out;
  }

 private:
  bool failed_ = false;
  std::vector<std::string> failures_;
};

RatFunc Q(long a, long b = 1) { return RatFunc(NFElem(Rational(a, b))); }

std::string Str(const RatFunc& r) { return render(r, "z"); }

// Solve and return the elapsed seconds of the solve alone.
template <class F>
double Timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void ExpectSolve(Check& c, const std::string& label, const SchwarzProblem& p, const std::vector<RatFunc>& expected,
                 double budget) {
  try {
    SolveResult s;
    const double secs = Timed([&] { s = solve(p); });
    c.expect(s.lode.coefficients == expected, label + ": coefficients differ");
    c.expect(s.verified && verify_lode(s.lode, s.vectors, s.basis), label + ": not verified");
    c.expect(secs < budget, label + ": took " + std::to_string(secs) + " s");
  } catch (const Error& e) {
    c.expect(false, label + ": " + e.what());
  }
}

// --- 1 ---------------------------------------------------------------------
void FixtureD(Check& c) {
  RingPtr r = Ring(2);
  SchwarzProblem p{r, {Var(r, 0), Var(r, 1).pow(2)}, {z(), z()}};
  const std::vector<RatFunc> expected{Q(-1) / (Q(2) * z()), Q(1) / (Q(2) * z() * z())};
  ExpectSolve(c, "D", p, expected, 1.0);
  // Oracle: z and sqrt(z) are solutions.
  c.expect(Str(expected[0]) == "-1/(2*z)" && Str(expected[1]) == "1/(2*z^2)", "D rendering");
}

// --- 2 ---------------------------------------------------------------------
void FixtureC(Check& c) {
  RingPtr r = Ring(2);
  SPoly x1 = Var(r, 0), x2 = Var(r, 1);
  RatFunc w = z() + Q(1);
  SchwarzProblem p{r, {x1 * x1, x2 * x2, x1 * x2}, {z() * z(), w * w, z() * w}};
  ExpectSolve(c, "C", p, {Q(0), Q(0)}, 1.0);
}

// --- 3 ---------------------------------------------------------------------
void OrderOne(Check& c) {
  RingPtr r = Ring(1);
  SPoly x = Var(r, 0);
  ExpectSolve(c, "X=z", {r, {x}, {z()}}, {Q(-1) / z()}, 1.0);
  ExpectSolve(c, "X^2=z", {r, {x * x}, {z()}}, {Q(-1) / (Q(2) * z())}, 1.0);
  std::mt19937 rng(11);
  for (unsigned m = 1; m <= 5; ++m) {
    for (int trial = 0; trial < 3; ++trial) {
      RatFunc f = testing::RandomNonzeroRatFunc(rng);
      ExpectSolve(c, "X^" + std::to_string(m) + "=" + Str(f), {r, {x.pow(m)}, {f}},
                  {-f.derivative() / (Q(m) * f)}, 1.0);
    }
  }
}

// --- 4 ---------------------------------------------------------------------
void Jacobian(Check& c) {
  c.expect(check_jacobian_identity().is_zero(), "det J - 18 (F12 - Phi6^2)^2 != 0");
}

// --- 5 ---------------------------------------------------------------------
void Syzygies(Check& c) {
  for (Syzygy s : {Syzygy::T36, Syzygy::T36Factored, Syzygy::T18, Syzygy::T24}) {
    c.expect(check_syzygy(s).is_zero(), std::string(syzygy_name(s)) + " residual nonzero");
  }
  c.expect(check_t36_forms().is_zero(), "T36 forms disagree");
  // The printed T24 (with -128 X12^2) is off by exactly 120 Psi12^2.
  const auto& inv = hessian_data().invariants;
  c.expect(check_syzygy(Syzygy::T24AsPrinted) == HPoly(inv.ring, NFElem(120)) * inv.Psi12.pow(2),
           "printed T24 residual is not 120 Psi12^2");
}

// --- 6 ---------------------------------------------------------------------
void GroupFacts(Check& c) {
  const HessianData& h = hessian_data();
  HessianGroups g = build_groups();
  c.expect(g.h216.order() == 648, "|H216| != 648");
  c.expect(g.h72.order() == 216, "|H72| != 216");
  c.expect(g.f36.order() == 108, "|F36| != 108");
  c.expect(subgroup_index(g.f36, g.h72) == std::optional<std::size_t>(2), "[H72:F36] != 2");
  c.expect(subgroup_index(g.h72, g.h216) == std::optional<std::size_t>(3), "[H216:H72] != 3");
  c.expect(is_normal_subgroup(g.f36, g.h72), "F36 not normal in H72");
  c.expect(is_normal_subgroup(g.h72, g.h216), "H72 not normal in H216");
  c.expect(h.V.determinant() == NFElem(1), "det V != 1");
  c.expect((h.epsilon.pow(6) + h.epsilon.pow(3) + NFElem(1)).is_zero(), "epsilon minpoly");
  c.expect((h.omega * h.omega + h.omega + NFElem(1)).is_zero(), "omega relation");
}

// --- 7 ---------------------------------------------------------------------
void Invariance(Check& c) {
  const auto& inv = hessian_data().invariants;
  const auto h72 = h72_generators(), f36 = f36_generators();
  for (const auto& [name, p] : std::vector<std::pair<std::string, HPoly>>{
           {"F6", inv.F6}, {"R", inv.R}, {"F12", inv.F12}, {"Phi6^2", inv.Phi6.pow(2)}}) {
    c.expect(is_invariant(p, h72), name + " not H72-invariant");
  }
  for (const auto& [name, p] : std::vector<std::pair<std::string, HPoly>>{
           {"F6", inv.F6}, {"Phi6", inv.Phi6}, {"R", inv.R}, {"F12", inv.F12}, {"Psi12", inv.Psi12}}) {
    c.expect(is_invariant(p, f36), name + " not F36-invariant");
  }
  auto chi = semi_invariant_character(inv.Phi6, h72);
  c.expect(chi.has_value(), "Phi6 not semi-invariant under H72");
  if (!chi) return;
  bool nontrivial = false;
  for (const auto& x : *chi) {
    c.expect(x * x == NFElem(1), "Phi6 character value of order > 2");
    nontrivial = nontrivial || x != NFElem(1);
  }
  c.expect(nontrivial, "Phi6 character trivial on H72");
}

// --- 8 ---------------------------------------------------------------------
void GroebnerSuite(Check& c) {
  using Poly = testing::Poly;
  using Basis = GroebnerBasis<RatFunc>;
  std::mt19937 rng(97);
  int inverted = 0, witnessed = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::string tag = "ideal " + std::to_string(trial);
    auto ideal = testing::MakeRandomIdeal(rng, trial % 2 == 0);
    Basis b = buchberger(ideal.generators);
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        c.expect(normal_form(s_polynomial(b.elements()[i], b.elements()[j]), b).is_zero(), tag + ": S-pair");
      }
    }
    Poly p = testing::RandomPoly(rng, ideal.ring, 4, 4), q = testing::RandomPoly(rng, ideal.ring, 4, 4);
    RatFunc alpha = testing::RandomRatFunc(rng), beta = testing::RandomRatFunc(rng);
    Poly nfp = normal_form(p, b);
    c.expect(normal_form(nfp, b) == nfp, tag + ": not idempotent");
    c.expect(normal_form(alpha * p + beta * q, b) == alpha * nfp + beta * normal_form(q, b), tag + ": not linear");
    if (b.is_unit()) continue;
    try {
      (void)quotient_basis(b);
    } catch (const Error&) {
      continue;  // positive-dimensional
    }
    try {
      Poly inv = invert_mod(p, b);
      c.expect(normal_form(p * inv, b) == Const(ideal.ring, 1), tag + ": inverse round-trip");
      ++inverted;
    } catch (const ZeroDivisorError<Poly>& e) {
      c.expect(!normal_form(e.witness(), b).is_zero(), tag + ": witness in ideal");
      c.expect(normal_form(p * e.witness(), b).is_zero(), tag + ": witness does not annihilate");
      ++witnessed;
    } catch (const Error& e) {
      c.expect(e.code() == ErrorCode::NotInvertible && nfp.is_zero(), tag + ": " + e.what());
    }
  }
  c.expect(inverted >= 10, "too few invertible samples");
  std::cout << "  (120 ideals, " << inverted << " inverted, " << witnessed << " zero-divisor witnesses)\n";
}

// --- 9 ---------------------------------------------------------------------
void SelfVerification(Check& c) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(fs::path(SCHWARZ_FIXTURE_DIR) / "solve")) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  int solved = 0;
  for (const auto& f : files) {
    for (const char* order : {"grevlex", "lex"}) {
      const auto pf = cli::problem_file_from_json(cli::read_json_file(f.string()));
      SchwarzProblem p = cli::build_problem(pf, std::string(order));
      SolveResult s;
      try {
        s = solve(p);
      } catch (const Error&) {
        continue;
      }
      ++solved;
      c.expect(verify_lode(s.lode, s.vectors, s.basis), f.filename().string() + ": verify_lode false");
      for (const auto& a : s.lode.coefficients) {
        const std::string text = Str(a);
        for (const auto& v : pf.variables) {
          c.expect(text.find(v) == std::string::npos, f.filename().string() + ": coefficient mentions " + v);
        }
      }
    }
  }
  c.expect(solved >= 10, "fewer fixtures solved than expected");

  std::mt19937 rng(2026);
  std::uniform_int_distribution<unsigned> exponent(1, 4);
  int fuzz_solved = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = trial % 2 == 0 ? 1 : 2;
    RingPtr r = Ring(n);
    SchwarzProblem p{r, {}, {}};
    for (std::size_t i = 0; i < n; ++i) {
      p.invariants.push_back(Var(r, i).pow(exponent(rng)));
      p.targets.push_back(testing::RandomNonzeroRatFunc(rng));
    }
    try {
      auto s = solve(p);
      c.expect(s.verified && verify_lode(s.lode, s.vectors, s.basis), "fuzz " + std::to_string(trial));
      ++fuzz_solved;
    } catch (const Error& e) {
      c.expect(e.code() == ErrorCode::CurveInHyperplane, "fuzz " + std::to_string(trial) + ": " + e.what());
    }
  }
  std::cout << "  (" << solved << " fixture solves, " << fuzz_solved << "/25 fuzz problems solved)\n";
}

// --- 10 --------------------------------------------------------------------
int BruteMultiplicity(ZPoly p, long a) {
  int k = 0;
  const ZPoly lin = ZPoly::variable() - ZPoly(NFElem(a));
  while (!p.is_zero() && (p % lin).is_zero()) {
    p = p / lin;
    ++k;
  }
  return k;
}

void Obstruction(Check& c) {
  const ZPoly Z = ZPoly::variable();
  auto K = [](long v) { return ZPoly(NFElem(v)); };
  c.expect(obstruction_analysis(ZPoly(), ZPoly(), ZPoly(), ZPoly()).verdict == ObstructionVerdict::SubgroupF36,
           "degenerate verdict");
  const ZPoly w = Z - K(2);
  auto sq = obstruction_analysis(ZPoly(), w.pow(3), K(36) * w.pow(4), K(36) * w.pow(4));
  c.expect(sq.verdict == ObstructionVerdict::SubgroupF36, "perfect-square verdict");
  try {
    (void)obstruction_analysis(ZPoly(), K(1), ZPoly(), K(1));
    c.expect(false, "off-curve input accepted");
  } catch (const NotOnQuotientCurveError& e) {
    c.expect(e.residual() == K(432 * 432 - 4), "off-curve residual");
  }
  const std::map<long, int> mult{{0, 3}, {2, 2}, {-1, 5}, {3, 1}};
  ZPoly p = K(7);
  for (auto [a, k] : mult) p = p * (Z - K(a)).pow(k);
  ZPoly odd_product = K(1);
  for (const auto& [f, k] : odd_multiplicity_factors(p)) {
    c.expect(k % 2 == 1, "even multiplicity reported");
    odd_product = odd_product * f.pow(k);
  }
  for (auto [a, k] : mult) {
    c.expect(BruteMultiplicity(p, a) == k, "brute-force count");
    c.expect(BruteMultiplicity(odd_product, a) == (k % 2 ? k : 0), "parity witness at " + std::to_string(a));
  }
}

// --- 11 --------------------------------------------------------------------
std::pair<int, std::string> Exec(const std::string& args) {
  const std::string cmd = "'" SCHWARZ_CLI_PATH "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void CliGolden(Check& c) {
  const std::string fx = SCHWARZ_FIXTURE_DIR;
  struct Case {
    std::string args, golden;
    int exit_code;
  };
  const std::vector<Case> cases{
      {"check-hessian", "check_hessian.json", 0},
      {"solve '" + fx + "/solve/a_linear.json'", "solve_a_linear.json", 0},
      {"solve '" + fx + "/solve/b_sqrt.json'", "solve_b_sqrt.json", 0},
      {"solve '" + fx + "/solve/c_lines.json'", "solve_c_lines.json", 0},
      {"solve '" + fx + "/solve/d_mixed.json'", "solve_d_mixed.json", 0},
      {"solve '" + fx + "/solve/inconsistent.json'", "solve_inconsistent.json",
       exit_status(ErrorCode::InconsistentIdeal)},
      {"obstruct '" + fx + "/obstruct/off_curve.json'", "obstruct_off_curve.json",
       exit_status(ErrorCode::NotOnQuotientCurve)},
  };
  for (const auto& k : cases) {
    const std::string expected = Slurp(fx + "/golden/" + k.golden);
    c.expect(!expected.empty(), k.golden + " missing");
    auto first = Exec("--no-timing " + k.args), second = Exec("--no-timing " + k.args);
    c.expect(first.second == expected, k.golden + ": output differs from golden");
    c.expect(first == second, k.golden + ": nondeterministic");
    c.expect(first.first == k.exit_code, k.golden + ": exit " + std::to_string(first.first));
  }
  c.expect(Exec("frobnicate").first == cli::kUsageError, "usage error exit");
  c.expect(Exec("solve '" + fx + "/nope.json'").first == exit_status(ErrorCode::IoError), "missing file exit");
}

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "solve fixture D", 1, FixtureD},
      {2, "solve fixture C", 1, FixtureC},
      {3, "order-one solves and X^m family", 16, OrderOne},
      {4, "Jacobian identity", 60, Jacobian},
      {5, "syzygy residuals (corrected T24)", 120, Syzygies},
      {6, "group facts", 30, GroupFacts},
      {7, "invariance suite", 60, Invariance},
      {8, "Groebner property suite", 120, GroebnerSuite},
      {9, "self-verification", 120, SelfVerification},
      {10, "obstruction analyzer", 10, Obstruction},
      {11, "CLI golden files", 60, CliGolden},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    double secs = 0;
    try {
      secs = Timed([&] { cr.run(check); });
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const bool in_time = secs < cr.budget_s;
    const bool pass = check.ok() && in_time;
    failed += !pass;
    std::printf("%s [%2d] %-36s %8.3f s (limit %g s)%s%s\n", pass ? "PASS" : "FAIL", cr.id, cr.name.c_str(), secs,
                cr.budget_s, check.ok() ? "" : " -- ", check.detail().c_str());
    if (!in_time) std::printf("       over time budget\n");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
