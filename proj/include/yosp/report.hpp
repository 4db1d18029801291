#pragma once

#include <chrono>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "yosp/exact/polynomial.hpp"
#include "yosp/exact/rational.hpp"

namespace yosp {

enum class Verdict { pass, fail, not_applicable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "not-applicable";
  }
  return "?";
}

/// One named check with its outcome and witnesses (polynomials as ascending
/// coefficient lists of exact rational strings).
struct SubCheck {
  std::string name;
  Verdict verdict = Verdict::pass;
  std::string detail;
  std::map<std::string, std::vector<std::string>> witnesses;

  SubCheck& witness(const std::string& key, const Polynomial& p) {
    std::vector<std::string> coeffs;
    for (const auto& c : p.coefficients()) coeffs.push_back(yosp::to_string(c));
    witnesses[key] = std::move(coeffs);
    return *this;
  }
  bool passed() const { return verdict == Verdict::pass; }
};

struct Report {
  std::string command;
  std::vector<SubCheck> checks;
  std::map<std::string, std::string> info;
  std::vector<std::string> notes;
  double seconds = 0;

  SubCheck& add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok ? Verdict::pass : Verdict::fail, std::move(detail), {}});
    return checks.back();
  }
  SubCheck& add_not_applicable(std::string name, std::string detail) {
    checks.push_back({std::move(name), Verdict::not_applicable, std::move(detail), {}});
    return checks.back();
  }
  /// Records a sample that was skipped (e.g. at a pole) without affecting the verdict.
  void skip(const std::string& name, const std::string& why) { notes.push_back(name + ": " + why); }
  void append(const Report& other, const std::string& prefix = {}) {
    for (auto c : other.checks) {
      if (!prefix.empty()) c.name = prefix + c.name;
      checks.push_back(std::move(c));
    }
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }

  /// pass iff every sub-check passes; any failure makes it fail. A report
  /// without checks is not-applicable.
  Verdict verdict() const {
    if (checks.empty()) return Verdict::not_applicable;
    bool any_na = false;
    for (const auto& c : checks) {
      if (c.verdict == Verdict::fail) return Verdict::fail;
      if (c.verdict == Verdict::not_applicable) any_na = true;
    }
    return any_na ? Verdict::not_applicable : Verdict::pass;
  }
  bool passed() const { return verdict() == Verdict::pass; }
};

/// Wall-clock timer that stores elapsed seconds into a report on destruction.
class ReportTimer {
 public:
  explicit ReportTimer(Report& r) : report_(r), start_(std::chrono::steady_clock::now()) {}
  ~ReportTimer() {
    report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }
  ReportTimer(const ReportTimer&) = delete;
  ReportTimer& operator=(const ReportTimer&) = delete;

 private:
  Report& report_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace yosp
