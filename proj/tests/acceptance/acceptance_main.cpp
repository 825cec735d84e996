// Runs every acceptance check and prints one line per criterion.
//   acceptance [--oracle-h 1/N] [check-id ...]
#include <cstdio>
#include <cstring>
#include <exception>
#include <string>

#include "spectral_bounds/verification.hpp"

int main(int argc, char** argv) {
  spectral_bounds::VerifyOptions options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--oracle-h") == 0 && i + 1 < argc) {
      const std::string h = argv[++i];
      const auto slash = h.find('/');
      options.oracle_nodes = slash == std::string::npos ? static_cast<int>(1.0 / std::stod(h) + 0.5)
                                                        : std::stoi(h.substr(slash + 1));
    } else {
      options.only.emplace_back(argv[i]);
    }
  }

  std::vector<spectral_bounds::CheckResult> results;
  try {
    results = spectral_bounds::run_verification(options);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance: %s\n", e.what());
    return 2;
  }

  int failed = 0;
  for (const auto& r : results) {
    std::printf("[%s] %2d %-22s %7.2fs  %s\n", r.passed ? "PASS" : "FAIL", r.number, r.id.c_str(), r.seconds,
                r.detail.c_str());
    if (!r.passed) ++failed;
  }
  std::printf("%zu checks, %d failed\n", results.size(), failed);
  return failed == 0 ? 0 : 1;
}
