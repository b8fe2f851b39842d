// runs the full verification checklist against the shipped corpus and prints
// one line per criterion; exits nonzero unless every criterion passes
#include <cstdio>
#include <cstdlib>
#include <string>

#include "mig/checks.hpp"
#include "mig/corpus.hpp"
#include "mig/errors.hpp"

int main(int argc, char** argv) {
  std::string path = mig::default_corpus_path();
  int jobs = 4;
  for (int i = 1; i < argc; i++) {
    std::string arg = argv[i];
    if (arg == "--corpus" && i + 1 < argc)
      path = argv[++i];
    else if (arg == "--jobs" && i + 1 < argc)
      jobs = std::atoi(argv[++i]);
    else {
      std::fprintf(stderr, "usage: %s [--corpus path] [--jobs n]\n", argv[0]);
      return 2;
    }
  }
  try {
    mig::Context ctx(mig::load_corpus(path), jobs);
    std::vector<mig::CheckOutcome> checks = mig::run_claim_checks(ctx);
    size_t passed = 0;
    for (size_t i = 0; i < checks.size(); i++) {
      const mig::CheckOutcome& c = checks[i];
      std::printf("P%-2zu %-26s %-4s  %s  (%.0f ms)\n", i + 1, c.name.c_str(), c.status.c_str(),
                  c.detail.c_str(), c.ms);
      if (c.status == "pass") passed++;
    }
    std::printf("%zu/%zu passed\n", passed, checks.size());
    return passed == checks.size() ? 0 : 1;
  } catch (const mig::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
