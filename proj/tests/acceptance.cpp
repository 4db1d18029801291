// One PASS/FAIL line per acceptance criterion. Exit status is 0 when every
// criterion passes, except those listed in kKnownRed, which must fail in the
// recorded way (a known-red criterion that starts passing is also an error).

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "yosp/hw/certify.hpp"
#include "yosp/hw/criteria.hpp"
#include "yosp/hw/linear.hpp"
#include "yosp/sampling.hpp"
#include "yosp/superlinalg/r_matrix.hpp"
#include "yosp/yangian/central.hpp"
#include "yosp/yangian/gauss.hpp"
#include "yosp/yangian/gl12.hpp"
#include "yosp/yangian/highest_vector.hpp"
#include "yosp/yangian/rtt.hpp"

using namespace yosp;

namespace {

// pinned tolerances: every residual must be exactly zero; wall-clock budgets in seconds
constexpr int kSamples = 10;
constexpr std::uint64_t kSeed = 1;
constexpr int kOrder = 8;
constexpr double kYbeBudget = 30, kIsoBudget = 60, kOracleBudget = 10;
constexpr int kSymmetryTriples = 100;
const std::set<int> kKnownRed{5};

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail = what;
      ok = false;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const std::vector<std::pair<int, int>> kContexts{{1, 1}, {1, 2}, {2, 1}, {2, 2}};

std::string first_failure(const Report& r) {
  for (const auto& c : r.checks)
    if (!c.passed()) return c.name + ": " + c.detail;
  return r.checks.empty() ? "no checks ran" : "";
}

Outcome yang_baxter() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  int checked = 0;
  for (auto [m, n] : kContexts) {
    const auto ctx = AlgebraContext::standard(m, n);
    const Report r = check_yang_baxter(ctx, sampling::sample_pairs(ctx, kSamples, kSeed));
    checked += static_cast<int>(r.checks.size());
    o.require(r.passed() && r.checks.size() == kSamples, ctx.name() + " " + first_failure(r));
  }
  const double t = seconds_since(t0);
  o.require(t < kYbeBudget, "took " + std::to_string(t) + " s");
  if (o.ok) o.detail = std::to_string(checked) + " exact zero residuals, " + std::to_string(t) + " s";
  return o;
}

std::vector<std::pair<Rational, Rational>> regular_pairs(const AlgebraContext& ctx) {
  const Rational k(ctx.kappa());
  auto regular = [&](const Rational& x) { return x != 0 && x != k && x != -k; };
  return sampling::sample_pairs_if(kSamples, kSeed, [&](const Rational& a, const Rational& b) { return regular(a) && regular(b) && regular(a - b); });
}

Outcome rtt() {
  Outcome o;
  for (auto [m, n] : kContexts) {
    const auto ctx = AlgebraContext::standard(m, n);
    const Report r = verify_rtt(vector_representation(ctx), regular_pairs(ctx));
    o.require(r.passed() && r.checks.size() == kSamples, ctx.name() + " " + first_failure(r));
  }
  const auto ctx = AlgebraContext::standard(1, 1);
  const auto v = vector_representation(ctx);
  const Report bad = verify_rtt(perturbed(v, 0, 0, SparseMatrix::unit(v.dim(), 0, 0), Rational(1)), regular_pairs(ctx));
  o.require(bad.verdict() == Verdict::fail, "perturbed representation was not rejected");
  if (o.ok) o.detail = "4 contexts x 10 pairs exact; perturbed t11 rejected";
  return o;
}

Outcome centrality() {
  Outcome o;
  int reps = 0;
  for (auto [m, n] : kContexts) {
    const auto ctx = AlgebraContext::standard(m, n);
    const auto v = vector_representation(ctx);
    for (const auto& rep : {v, sharp_tensor(ctx, 2), tensor_shifted({v, v}, {Rational(1), Rational(0)}), trivial_representation(ctx)}) {
      ++reps;
      try {
        central_series(rep, kOrder);
      } catch (const Violation& e) {
        o.require(false, rep.label + " in " + ctx.name() + ": " + e.what());
      }
    }
  }
  const auto ctx = AlgebraContext::standard(1, 1);
  const auto v = vector_representation(ctx);
  const ScalarSeries c = central_series(v, kOrder);
  ScalarSeries expected = ScalarSeries::one(Rational(1), kOrder);
  expected[2] = Rational(-1);
  o.require(c == expected, "osp(2|2) vector c(u) = " + to_string(c));
  Vector xi(v.dim());
  xi[0] = 1;
  const auto w = extract_highest_weight(v, xi, kOrder);
  o.require(w.ok(), "e_1 is not a highest vector");
  if (w.ok()) {
    const ScalarSeries prod = w.components.front() * w.components.back().shifted(Rational(-ctx.n() + ctx.m() + 1));
    o.require(prod == c, "lambda_1 lambda_1' = " + to_string(prod));
    o.require(prod == expected, "lambda_1 lambda_1' differs from 1 - u^-2");
  }
  if (o.ok) o.detail = std::to_string(reps) + " modules scalar; c = 1 - u^-2 = lambda_1 lambda_1'(u)";
  return o;
}

Outcome gauss() {
  Outcome o;
  int modules = 0;
  for (auto [m, n] : kContexts) {
    const auto ctx = AlgebraContext::standard(m, n);
    const auto v = vector_representation(ctx);
    for (const auto& rep : {v, tensor_shifted({v, v}, {Rational(1), Rational(0)})}) {
      ++modules;
      const Report r = verify_gauss(rep, kOrder);
      for (const auto& c : r.checks)
        if (c.name.rfind("berezinian", 0) != 0) o.require(c.passed(), ctx.name() + " " + rep.label + " " + c.name + ": " + c.detail);
    }
  }
  if (o.ok) o.detail = std::to_string(modules) + " modules, FHE = T and h2, h3 quasideterminants to order 8";
  return o;
}

Outcome isomorphism(std::string& diagnostic) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto rep = vector_representation(AlgebraContext::from_parity("01"));
  const Report stated = verify_gl12_isomorphism(rep, kOrder);
  for (const auto& c : stated.checks) o.require(c.passed(), c.name + ": " + c.detail);
  const double t = seconds_since(t0);
  o.require(t < kIsoBudget, "took " + std::to_string(t) + " s");

  PhiOptions doubled;
  doubled.e_scale = Rational(2);
  const Report d = verify_gl12_isomorphism(rep, kOrder, doubled);
  PhiOptions control = doubled;
  control.t13_factor = Rational(1);
  const Report neg = verify_gl12_isomorphism(rep, kOrder, control);
  std::string failing;
  int passing = 0;
  for (const auto& c : stated.checks)
    if (c.passed()) ++passing;
    else failing += (failing.empty() ? "" : ", ") + c.name;
  diagnostic = "stated map fails {" + failing + "}, passes the other " + std::to_string(passing) + " image/current/centre checks; e images doubled: " +
               (d.passed() ? "all pass" : "fail: " + first_failure(d)) + "; t13 control on doubled map: " +
               (neg.verdict() == Verdict::fail ? "rejected" : "not rejected");
  if (o.ok) o.detail = "all checks pass to order 8";
  return o;
}

Outcome certificate() {
  Outcome o;
  const Report r = certify_osp22_vector(kOrder);
  o.require(r.passed(), first_failure(r));
  if (o.ok) o.detail = std::to_string(r.checks.size()) + " checks on the parity-10 vector representation";
  return o;
}

Outcome shift_quotient() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  int cases = 0;
  for (int step : {1, 2}) {
    const oracle::ShiftQuotientOracle brute(step);
    const auto r = oracle::compare_shift_quotient_all(brute, step);
    cases += r.cases;
    o.require(r.mismatches == 0, "step " + std::to_string(step) + ": " + std::to_string(r.mismatches) + " mismatches, " + r.first_mismatch);
  }
  const double t = seconds_since(t0);
  o.require(t < kOracleBudget, "took " + std::to_string(t) + " s");
  if (o.ok) o.detail = std::to_string(cases) + " functions agree, " + std::to_string(t) + " s";
  return o;
}

FactoredSeries from_ints(const std::vector<long>& a) {
  std::vector<Rational> p;
  for (long x : a) p.emplace_back(x);
  return FactoredSeries::from_parameters(p);
}

Outcome classification() {
  Outcome o;
  int diagrams = 0;
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; m + n <= 4; ++n) {
      const auto ctx = AlgebraContext::standard(m, n);
      for (const auto& g : hook_diagrams(m, n, 6)) {
        ++diagrams;
        const auto s = sharp(g, m, n);
        const LinearWeight w(ctx, std::vector<Rational>(s.begin(), s.end()));
        const auto got = classify_linear(w);
        o.require(got.finite && got.diagram && *got.diagram == g, "round trip fails in " + ctx.name());
        if (got.finite) o.require(necessary_conditions(w.highest_weight()).passed(), "necessary conditions fail in " + ctx.name());
      }
    }
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<long> d(-3, 3), len(0, 2);
  for (int trial = 0; trial < kSymmetryTriples; ++trial) {
    std::vector<long> a, b, c;
    for (auto* v : {&a, &b, &c})
      for (long k = len(rng); k > 0; --k) v->push_back(d(rng));
    o.require(fd_symmetry_check(from_ints(a), from_ints(b), from_ints(c)), "symmetry fails at triple " + std::to_string(trial));
  }
  if (o.ok) o.detail = std::to_string(diagrams) + " hook diagrams round trip and nest; 100 symmetric triples";
  return o;
}

}  // namespace

int main() {
  std::string iso_diagnostic;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Yang-Baxter equation", yang_baxter},
      {"RTT relation on vector representations", rtt},
      {"centrality of T(u-kappa)T^t(u)", centrality},
      {"Gauss decomposition", gauss},
      {"gl(1|2) isomorphism", [&] { return isomorphism(iso_diagnostic); }},
      {"odd reflection certificate", certificate},
      {"shift-quotient oracle", shift_quotient},
      {"linear classification", classification},
  };
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const bool red = kKnownRed.count(id) > 0;
    std::printf("%s [%d] %s: %s%s\n", o.ok ? "PASS" : "FAIL", id, criteria[i].first.c_str(), o.detail.c_str(), red ? " (known red)" : "");
    if (id == 5) std::printf("     diagnostic: %s\n", iso_diagnostic.c_str());
    if (o.ok == red) ++unexpected;
  }
  if (unexpected) std::printf("%d criteria differ from the expected outcome\n", unexpected);
  return unexpected ? 1 : 0;
}
