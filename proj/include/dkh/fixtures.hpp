#ifndef DKH_FIXTURES_HPP
#define DKH_FIXTURES_HPP

#include <string>
#include <vector>

#include "dkh/diagram.hpp"

namespace dkh {

struct Fixture {
  std::string name;
  std::string code;
  std::string description;
};

const std::vector<Fixture>& fixtures();
Diagram fixture(const std::string& name);

// Closure of a braid word; generator +k crosses strands k and k+1 positively, -k negatively.
Diagram braid_closure(int strands, const std::vector<int>& word);

}  // namespace dkh

#endif
