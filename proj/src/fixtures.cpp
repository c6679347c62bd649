#include "dkh/fixtures.hpp"

#include <cstdlib>

#include "dkh/error.hpp"

namespace dkh {

Diagram braid_closure(int strands, const std::vector<int>& word) {
  if (strands < 1) throw SyntaxError("a braid needs at least one strand");
  // Tokens met by the strand that starts at each position, then the closing permutation.
  std::vector<std::vector<Token>> path(static_cast<std::size_t>(strands));
  std::vector<int> at(static_cast<std::size_t>(strands));
  for (int p = 0; p < strands; ++p) at[static_cast<std::size_t>(p)] = p;
  int id = 0;
  for (int g : word) {
    int k = std::abs(g);
    if (g == 0 || k >= strands) throw SyntaxError("braid generator " + std::to_string(g) + " out of range");
    ++id;
    const int sign = g > 0 ? 1 : -1;
    auto& left = at[static_cast<std::size_t>(k - 1)];
    auto& right = at[static_cast<std::size_t>(k)];
    const Pass left_pass = g > 0 ? Pass::Under : Pass::Over;
    const Pass right_pass = g > 0 ? Pass::Over : Pass::Under;
    path[static_cast<std::size_t>(left)].push_back({id, left_pass, sign});
    path[static_cast<std::size_t>(right)].push_back({id, right_pass, sign});
    std::swap(left, right);
  }
  std::vector<int> end_position(static_cast<std::size_t>(strands));
  for (int p = 0; p < strands; ++p) end_position[static_cast<std::size_t>(at[static_cast<std::size_t>(p)])] = p;
  std::vector<bool> used(static_cast<std::size_t>(strands), false);
  std::vector<Component> comps;
  for (int s = 0; s < strands; ++s) {
    if (used[static_cast<std::size_t>(s)]) continue;
    Component c;
    for (int x = s; !used[static_cast<std::size_t>(x)]; x = end_position[static_cast<std::size_t>(x)]) {
      used[static_cast<std::size_t>(x)] = true;
      const auto& p = path[static_cast<std::size_t>(x)];
      c.insert(c.end(), p.begin(), p.end());
    }
    comps.push_back(std::move(c));
  }
  return Diagram(comps);
}

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = {
      {"U0", "", "crossingless unknot"},
      {"VH", "O1+ / U1+", "virtual Hopf link"},
      {"K21", "O1- O2- U1- U2-", "two-crossing virtual trefoil with negative crossings"},
      {"TRP", "U1+ O2+ U3+ O1+ U2+ O3+", "positive trefoil, closure of s1^3"},
      {"TRN", "O1- U2- O3- U1- O2- U3-", "negative trefoil, closure of s1^-3"},
      {"HOPFP", "U1+ O2+ / O1+ U2+", "positive classical Hopf link, closure of s1^2"},
      {"HOPFN", "O1- U2- / U1- O2-", "negative classical Hopf link, closure of s1^-2"},
      {"KISH", "O1+ U4- O3+ O4- U3+ O2- U1+ U2-", "Kishino-type connected sum of two unknot diagrams"},
      {"K37", "O1+ O2+ U3- U1+ U2+ O3-", "unknot diagram with one crossing flanked"},
      {"T43V", "U1+ U2+ O2+ O3+ U4+ O1+ U3+ O4+", "virtualized torus knot T(4,3), leftmost, odd writhe 0"},
      {"L9261V", "U1+ O2+ / U3+ O4+ U5+ O6+ U7+ O3+ U4+ O5+ U6+ O7+ O1+ U2+", "virtualized positive two-component link"},
  };
  return all;
}

Diagram fixture(const std::string& name) {
  for (const auto& f : fixtures())
    if (f.name == name) return Diagram::parse(f.code);
  throw UnknownFixture("no fixture named '" + name + "'");
}

}  // namespace dkh
