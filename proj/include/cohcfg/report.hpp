#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace cohcfg {

/// Pass/fail record tying a named claim to the computed witnesses.
/// A failing report always carries at least one counterexample line.
struct VerificationReport {
  std::string claim;
  std::string params;
  bool pass = true;
  std::vector<std::pair<std::string, std::string>> witnesses;
  std::vector<std::string> failures;
  double seconds = 0.0;

  VerificationReport() = default;
  VerificationReport(std::string claim_id, std::string parameters)
      : claim(std::move(claim_id)), params(std::move(parameters)) {}

  void witness(std::string key, std::string value) {
    witnesses.emplace_back(std::move(key), std::move(value));
  }
  template <typename T>
  void witness(std::string key, const T& value) {
    witness(std::move(key), std::to_string(value));
  }
  void fail(std::string counterexample) {
    pass = false;
    failures.push_back(std::move(counterexample));
  }
  /// Records a check; on failure `what` becomes the counterexample.
  bool require(bool ok, const std::string& what) {
    if (!ok) fail(what);
    return ok;
  }
  /// Folds another report in: its witnesses are prefixed, failures kept.
  void absorb(const VerificationReport& other, const std::string& prefix);

  /// "CLAIM <id> <params> PASS|FAIL <witness-summary>"
  std::string ledger_line() const;
  std::string summary() const;
};

/// Ordered collection of reports, printed one ledger line each.
class Ledger {
 public:
  void add(VerificationReport r) { reports_.push_back(std::move(r)); }
  const std::vector<VerificationReport>& reports() const { return reports_; }
  bool all_pass() const;
  void print(std::ostream& os) const;

 private:
  std::vector<VerificationReport> reports_;
};

}  // namespace cohcfg
