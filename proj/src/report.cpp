#include "cohcfg/report.hpp"

#include <algorithm>

namespace cohcfg {

namespace {

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

void VerificationReport::absorb(const VerificationReport& other, const std::string& prefix) {
  for (const auto& [k, v] : other.witnesses) witnesses.emplace_back(prefix + k, v);
  for (const auto& f : other.failures) fail(prefix + f);
  if (!other.pass && other.failures.empty()) fail(prefix + "failed");
}

std::string VerificationReport::summary() const {
  std::string out;
  for (const auto& f : failures) {
    if (!out.empty()) out += ' ';
    out += "counterexample[" + one_line(f) + "]";
  }
  for (const auto& [k, v] : witnesses) {
    if (!out.empty()) out += ' ';
    out += k + "=" + one_line(v);
  }
  return out.empty() ? "-" : out;
}

std::string VerificationReport::ledger_line() const {
  return "CLAIM " + claim + " " + (params.empty() ? "-" : params) + " " + (pass ? "PASS" : "FAIL") +
         " " + summary();
}

bool Ledger::all_pass() const {
  return std::all_of(reports_.begin(), reports_.end(), [](const auto& r) { return r.pass; });
}

void Ledger::print(std::ostream& os) const {
  for (const auto& r : reports_) os << r.ledger_line() << '\n';
}

}  // namespace cohcfg
