#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace crys {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double time_limit = 0;  // seconds; 0 means none
};

CriterionResult accept_monodromy_locus();
CriterionResult accept_valuations();
CriterionResult accept_telescoping(std::uint64_t seed);
CriterionResult accept_integrality(std::uint64_t seed);
CriterionResult accept_pgl2_lattices();
CriterionResult accept_certificate_logic();
CriterionResult accept_cartan(std::uint64_t seed);
CriterionResult accept_order_axioms();

// Runs all criteria in order, calling on_result after each one.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

std::string format_result_line(const CriterionResult& r);

}  // namespace crys
