// One line per acceptance criterion, then the individual checks behind it.
// Exits nonzero if any criterion fails. Pass --quick to skip the slow
// (I, 2H) enumeration.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <iostream>

#include "unitcodes/repro.hpp"

using namespace unitcodes;

int main(int argc, char** argv) {
  repro::Options opt;
  for (int i = 1; i < argc; ++i)
    if (!std::strcmp(argv[i], "--quick")) opt.slow = false;

  int failed = 0;
  for (const auto& e : repro::examples()) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<repro::Line> lines;
    std::string error;
    try {
      lines = e.run(opt);
    } catch (const std::exception& ex) {
      error = ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = error.empty();
    for (const auto& l : lines) pass = pass && l.pass;
    failed += !pass;

    char head[160];
    std::snprintf(head, sizeof head, "criterion %2d  %s  %-17s %.2fs", e.criterion, pass ? "PASS" : "FAIL", e.id.c_str(), secs);
    std::cout << head << "  " << e.title << '\n';
    for (const auto& l : lines) {
      if (l.info) std::cout << "    info  " << l.label << ": " << l.actual << '\n';
      else if (l.pass) std::cout << "    ok    " << l.label << ": " << l.actual << '\n';
      else std::cout << "    FAIL  " << l.label << ": expected " << l.expected << ", got " << l.actual << '\n';
    }
    if (!error.empty()) std::cout << "    FAIL  aborted: " << error << '\n';
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria pass")) << '\n';
  return failed ? 1 : 0;
}
