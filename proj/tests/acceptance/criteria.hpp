#ifndef DKH_TESTS_ACCEPTANCE_CRITERIA_HPP
#define DKH_TESTS_ACCEPTANCE_CRITERIA_HPP

#include <ostream>
#include <string>
#include <vector>

namespace acceptance {

struct CriterionResult {
  int number = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> notes;
  double seconds = 0;
};

inline constexpr int kCriteria = 9;

CriterionResult run_criterion(int number);

// Prints one line per criterion (plus indented notes); returns the number of failures.
int run_criteria(std::ostream& out, const std::vector<int>& which, bool verbose = true);

}  // namespace acceptance

#endif
