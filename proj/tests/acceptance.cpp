// One line per acceptance criterion; exit status 1 if any fails.
#include <iostream>

#include "tmlab/lab.hpp"

int main(int argc, char **argv) {
  std::optional<std::string> only;
  if (argc > 1) only = argv[1];
  bool all = true;
  for (auto &c : tmlab::verify_all(only)) {
    all = all && c.passed;
    std::cout << c.id << (c.passed ? " PASS " : " FAIL ") << c.actual << "\n";
    if (!c.passed) std::cout << "   expected " << c.expected << "\n";
    for (auto &n : c.notes) std::cout << "   " << n << "\n";
  }
  return all ? 0 : 1;
}
