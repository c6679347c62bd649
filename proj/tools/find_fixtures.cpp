// Searches for the constructed fixtures: a virtualization of T(4,3), a virtualized positive
// two-component link, and the genus-one presentation with a shared degree and a zero map.
#include <iostream>
#include <set>

#include "dkh/cobordism.hpp"
#include "dkh/error.hpp"
#include "dkh/fixtures.hpp"
#include "dkh/homology.hpp"

using namespace dkh;

namespace {

// Targets reachable under the parity of the grading: s1 of positive leftmost knots with J = 0 is
// even, and so is the maximal degree-0 level of these links.
constexpr RasmussenPair kTorusTarget{2, 0};
constexpr int kLinkLevel = 6;

bool clean(const Diagram& d) {
  return verify_chain_complex(build_complex(d, Variant::Standard)).ok &&
         verify_chain_complex(build_complex(d, Variant::Lee)).ok;
}

std::set<int> subset(const Diagram& d, unsigned mask) {
  std::set<int> s;
  for (std::size_t k = 0; k < d.num_crossings(); ++k)
    if ((mask >> k) & 1) s.insert(d.crossings()[k].id);
  return s;
}

void torus_virtualizations() {
  Diagram t = braid_closure(3, {1, 2, 1, 2, 1, 2, 1, 2});
  std::cout << "T(4,3): " << t.str() << "\n";
  int shown = 0;
  for (unsigned mask = 1; mask < (1u << t.num_crossings()) && shown < 5; ++mask) {
    Diagram k = relabel_canonical(virtualize(t, subset(t, mask)));
    if (!is_leftmost(k) || odd_writhe(k) != 0 || !clean(k)) continue;
    RasmussenPair s = rasmussen(k);
    if (s != kTorusTarget) continue;
    std::cout << "T43V candidate (virtualized mask " << mask << "): " << k.str() << "\n";
    ++shown;
  }
}

void link_virtualizations() {
  int shown = 0;
  for (unsigned w = 0; w < (1u << 9) && shown < 3; ++w) {
    std::vector<int> word;
    for (int k = 0; k < 9; ++k) word.push_back((w >> k) & 1 ? 2 : 1);
    Diagram base = braid_closure(3, word);
    if (base.num_components() != 2) continue;
    for (unsigned mask = 0; mask < (1u << 9) && shown < 3; ++mask) {
      Diagram l = relabel_canonical(virtualize(base, subset(base, mask)));
      if (acs_degrees(l).count(0) == 0 || !clean(l)) continue;
      LeeHomology h(build_complex(l, Variant::Lee), false);
      int best = INT32_MIN;
      for (const auto& c : h.classes())
        if (c.degree == 0) best = std::max(best, c.level);
      if (best != kLinkLevel) continue;
      std::cout << "L9261V candidate (braid word " << w << ", mask " << mask << "): " << l.str() << "\n";
      ++shown;
    }
  }
}

void zero_map_presentation() {
  Diagram start = disjoint_union(fixture("HOPFN"), fixture("K21"));
  std::cout << "start: " << start.str() << "\n";
  const std::size_t comp = 2;
  const std::size_t len = start.arc_count(comp);
  int shown = 0;
  for (std::size_t a = 0; a < len && shown < 3; ++a)
    for (std::size_t b = a + 2; b < len && shown < 3; b += 2) {
      ElementaryMove split = ElementaryMove::saddle(start.arc_index({comp, a}), start.arc_index({comp, b}));
      Diagram mid = apply_move(start, split);
      for (std::size_t x = 0; x < mid.arc_count(2) && shown < 3; ++x)
        for (std::size_t y = 0; y < mid.arc_count(3) && shown < 3; ++y) {
          ElementaryMove merge = ElementaryMove::saddle(mid.arc_index({2, x}), mid.arc_index({3, y}));
          CobordismPresentation p{start, {split, merge}};
          Diagram end = p.diagrams().back();
          Diagram knot(std::vector<Component>{end.components()[2]});
          if (acs_degrees(knot) != std::set<int>{0}) continue;
          if (shared_degrees(p) != std::set<int>{-2}) continue;
          try {
            InducedMap m = induced_map_on_lee(p);
            if (m.nonzero) continue;
          } catch (const NotAChainMap&) {
            continue;
          }
          std::cout << "presentation: saddle " << split.arc1 << " " << split.arc2 << " / saddle " << merge.arc1 << " "
                    << merge.arc2 << " -> " << end.str() << "\n";
          ++shown;
        }
    }
}

}  // namespace

int main() {
  torus_virtualizations();
  link_virtualizations();
  zero_map_presentation();
  for (const char* name : {"KISH", "K37"}) {
    Diagram d = fixture(name);
    std::cout << name << " dkh equals unknot: " << (dkh::dkh(d) == dkh::dkh(Diagram())) << " clean " << clean(d) << "\n";
  }
}
