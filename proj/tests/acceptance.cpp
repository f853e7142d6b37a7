#include <cstdlib>
#include <iostream>
#include <string>

#include "momap/selftest.hpp"

int main(int argc, char** argv) {
  momap::selftest::Config cfg;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--quick") cfg.quick = true;
    else if (a == "--seed" && i + 1 < argc) cfg.seed = std::strtoull(argv[++i], nullptr, 10);
  }
  int failed = 0;
  for (const auto& r : momap::selftest::run_all(cfg)) {
    std::cout << momap::selftest::format_line(r) << std::endl;
    failed += r.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
