#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "kuniv/acceptance.hpp"

// Usage: kuniv_acceptance [--seed S] [--report FILE]
int main(int argc, char** argv) {
  kuniv::acceptance::Options options;
  std::string report;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      options.seed = std::stoull(argv[++i]);
    } else if (arg == "--report" && i + 1 < argc) {
      report = argv[++i];
    } else {
      std::cerr << "usage: kuniv_acceptance [--seed S] [--report FILE]\n";
      return 2;
    }
  }
  options.on_result = [](const kuniv::acceptance::CriterionResult& r) {
    kuniv::acceptance::Summary one;
    one.items.push_back(r);
    std::ostringstream line;
    one.print_table(line);
    std::cout << line.str().substr(0, line.str().find('\n') + 1) << std::flush;
  };
  auto summary = kuniv::acceptance::run_acceptance_suite(options);
  std::cout << (summary.all_passed() ? "ALL PASS" : "SOME FAILED") << "\n";
  if (!report.empty()) std::ofstream(report) << summary.report_json();
  return summary.all_passed() ? 0 : 1;
}
