// Acceptance run: one PASS/FAIL line per criterion, then the witnesses of
// every failed item. Exit status is 0 only when all eleven lines pass.

#include <cstdio>
#include <iostream>
#include <sstream>

#include "vircalc/cli.hpp"

using namespace vircalc;

namespace {

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f s", s);
  return buf;
}

std::string line_for(const selftest::SuiteResult& r) {
  std::ostringstream os;
  os << "criterion " << r.id << ": " << (r.ok() ? "PASS" : "FAIL") << " [" << r.name << "] " << r.cases() << " cases, "
     << fmt_seconds(r.seconds);
  if (r.budget > 0) os << " of " << fmt_seconds(r.budget);
  if (!r.within_budget()) os << " (over budget)";
  std::string failed;
  for (const auto& it : r.items) {
    if (!it.ok()) failed += (failed.empty() ? "" : "; ") + it.name;
  }
  if (!failed.empty()) os << "; failed: " << failed;
  return os.str();
}

bool round_trip_1000(std::string& note) {
  Random rng(seed_from_env() + 100);
  for (int i = 0; i < 1000; ++i) {
    const BiPoly f = rng.bipoly(6, 6, 0.4);
    if (parse_bipoly(to_string(f)) != f) {
      note = "round trip broke on " + to_string(f);
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  std::vector<selftest::SuiteResult> results;
  std::vector<std::string> lines;
  selftest::Options options;
  for (const auto& s : selftest::suites()) {
    results.push_back(s.run(options));
    lines.push_back(line_for(results.back()));
    std::cout << lines.back() << std::endl;
  }

  std::string note;
  const bool round_trip = round_trip_1000(note);
  const int selftest_code = selftest::exit_code(results);
  std::ostringstream sink;
  const int fault_code = cli::run({"selftest", "--suite", "brackets", "--inject-fault"}, sink, sink);
  const bool c11 = round_trip && selftest_code == 0 && fault_code == 1;
  std::cout << "criterion 11: " << (c11 ? "PASS" : "FAIL") << " [cli] round trip on 1000 polynomials "
            << (round_trip ? "ok" : "broken") << ", selftest exit " << selftest_code << " (want 0), fault fixture exit "
            << fault_code << " (want 1)" << (note.empty() ? "" : "; " + note) << std::endl;

  bool all = c11;
  std::cout << "\ndetails of failed items:\n";
  for (const auto& r : results) {
    all = all && r.ok();
    for (const auto& it : r.items) {
      if (!it.ok()) {
        std::cout << "  criterion " << r.id << ", " << it.name << ": " << it.failures << "/" << it.cases
                  << " failed; first: " << it.witness << "\n";
      }
    }
  }
  if (all) std::cout << "  none\n";
  return all ? 0 : 1;
}
