// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// The last criterion launches the command-line tool given as argv[1].

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <sys/wait.h>

#include "okubo/verify.hpp"

namespace {

void print(const std::string& id, bool passed, const std::string& detail) {
  std::cout << (passed ? "PASS " : "FAIL ") << id << "  " << detail << std::endl;
}

std::string summary(const okubo::CriterionResult& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%d cases, max error %.3g (tol %.3g), %.2f s", r.cases, r.max_error, r.tolerance,
                r.seconds);
  std::string out = r.title + ": " + buf;
  if (r.time_limit > 0) out += " (limit " + std::to_string(static_cast<int>(r.time_limit)) + " s)";
  if (!r.passed) out += "; first failure: " + r.first_failure;
  return out;
}

// Criterion 3: the umbrella command exits 0 within five minutes.
bool run_cli(const std::string& tool, std::string& detail) {
  const std::string cmd = "\"" + tool + "\" verify-all --seed 7 > /dev/null";
  const auto start = std::chrono::steady_clock::now();
  const int status = std::system(cmd.c_str());
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  detail = "verify-all --seed 7 exited " + std::to_string(code) + " after " + std::to_string(seconds) + " s";
  return code == 0 && seconds < 300;
}

}  // namespace

int main(int argc, char** argv) {
  bool all = true;
  for (const auto& r : okubo::run_all_criteria(7)) {
    print(r.id, r.passed, summary(r));
    all = all && r.passed;
  }
  if (argc > 1) {
    std::string detail;
    const bool ok = run_cli(argv[1], detail);
    print("3", ok, detail);
    all = all && ok;
  } else {
    print("3", false, "command-line tool path not given");
    all = false;
  }
  return all ? 0 : 1;
}
