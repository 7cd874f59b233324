#include <cstdint>
#include <iostream>

#include "CLI11.hpp"
#include "crys/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Acceptance suite: one PASS/FAIL line per criterion"};
  std::uint64_t seed = 20240611;
  app.add_option("--seed", seed, "Seed for randomized criteria");
  CLI11_PARSE(app, argc, argv);

  bool all = true;
  crys::run_acceptance(seed, [&](const crys::CriterionResult& r) {
    std::cout << crys::format_result_line(r) << std::endl;
    all = all && r.pass;
  });
  return all ? 0 : 1;
}
