#pragma once

#include <string>

#include "tetra/report.hpp"

namespace tetra {

// Named verification suites exposed by the CLI. max_degree bounds the index
// ranges of the degree-parametric suites.
Report suite_relations();
Report suite_table(int max_degree);
Report suite_brackets(int max_degree);
Report suite_diagrams(int max_degree);
Report suite_presentation();
Report suite_s4();

// Dispatch by name: relations | table | brackets | diagrams | presentation |
// s4 | all. Throws std::invalid_argument on unknown names.
Report run_suite(const std::string& name, int max_degree);

}  // namespace tetra
