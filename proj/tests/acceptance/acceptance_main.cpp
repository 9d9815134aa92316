// One line per acceptance criterion; exit status is non-zero if any fails.
#include <cstdio>
#include <filesystem>
#include <iostream>

#include "erlab/harness.hpp"

int main(int argc, char** argv) {
  namespace fs = std::filesystem;
  erlab::VerifyOptions o;
  o.level = erlab::VerifyLevel::full;
  o.corpus_dir = argc > 1 ? fs::path(argv[1]) : fs::path(ERLAB_TEST_CORPUS);
  o.work_dir = argc > 2 ? fs::path(argv[2]) : fs::temp_directory_path() / "erlab_acceptance";
  fs::create_directories(o.work_dir);

  const auto rep = erlab::verify_suite(o);
  int failed = 0;
  for (const auto& r : rep.results) {
    std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << " (" << r.name << ")";
    if (!r.detail.empty()) std::cout << ": " << r.detail;
    std::cout << "\n";
    failed += !r.passed;
  }
  std::cout << (rep.results.size() - failed) << "/" << rep.results.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
