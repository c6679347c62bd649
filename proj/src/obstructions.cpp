#include "dkh/obstructions.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "dkh/error.hpp"

namespace dkh {

namespace {

void require_knot(const Diagram& d, const char* op) {
  if (d.num_components() != 1)
    throw NotAKnot(std::string(op) + " needs a knot diagram, got " + std::to_string(d.num_components()) +
                   " components");
}

// Multiplicities per quantum degree, peeled top-down. Returns the failing j, if any.
std::optional<int> peel(const std::map<int, long>& h, std::map<int, long>& g) {
  if (h.empty()) return std::nullopt;
  int top = h.rbegin()->first, bottom = h.begin()->first;
  long carry = 0;
  for (int j = top; j >= bottom - 1; --j) {
    auto it = h.find(j);
    long v = (it == h.end() ? 0 : it->second) - carry;
    if (v < 0) return j;
    if (v > 0) g[j] = v;
    carry = v;
  }
  return std::nullopt;
}

}  // namespace

ClassicalityResult classicality_test(const BigradedAbelianGroup& h) {
  ClassicalityResult out;
  std::map<int, std::map<int, long>> free_part;
  std::map<int, std::map<mpz_class, std::map<int, long>>> torsion_part;
  for (const auto& [ij, grp] : h.groups) {
    auto [i, j] = ij;
    if (grp.free_rank) free_part[i][j] += static_cast<long>(grp.free_rank);
    for (const auto& t : grp.torsion) torsion_part[i][t][j] += 1;
  }
  std::set<int> degrees;
  for (const auto& [i, _] : free_part) degrees.insert(i);
  for (const auto& [i, _] : torsion_part) degrees.insert(i);

  std::map<std::pair<int, int>, BidegreeGroup> peeled;
  for (int i : degrees) {
    std::map<int, long> g;
    if (auto f = peel(free_part[i], g)) {
      out.non_classical = true;
      out.failure = {i, *f};
      out.failing_part = "free";
      return out;
    }
    for (const auto& [j, r] : g) peeled[{i, j}].free_rank = static_cast<std::size_t>(r);
    for (const auto& [divisor, counts] : torsion_part[i]) {
      std::map<int, long> gt;
      if (auto f = peel(counts, gt)) {
        out.non_classical = true;
        out.failure = {i, *f};
        out.failing_part = "Z_" + divisor.get_str();
        return out;
      }
      for (const auto& [j, r] : gt)
        for (long k = 0; k < r; ++k) peeled[{i, j}].torsion.push_back(divisor);
    }
  }
  for (auto& [ij, grp] : peeled) {
    std::sort(grp.torsion.begin(), grp.torsion.end());
    out.peeled.set(ij.first, ij.second, grp);
  }
  return out;
}

bool unknot_connect_sum_condition(const Diagram& d, const Limits& limits) {
  require_knot(d, "unknot_connect_sum_condition");
  return dkh(d, Ring::Integers, limits) == dkh(Diagram(), Ring::Integers, limits);
}

Verdict slice_obstruction(const Diagram& d, const Limits& limits) {
  require_knot(d, "slice_obstruction");
  RasmussenPair s = rasmussen(d, limits);
  Verdict v;
  if (s.s2 != 0) {
    v.obstructed = true;
    v.reason = "s2 = " + std::to_string(s.s2) + " != 0";
    v.theorems.push_back(theorem::kOddWritheSlice);
  } else if (s.s1 != 0) {
    v.obstructed = true;
    v.reason = "s1 = " + std::to_string(s.s1) + " != 0 with s2 = 0";
    v.theorems.push_back(theorem::kLevelSlice);
  } else {
    v.reason = "s1 = s2 = 0";
  }
  return v;
}

ConcordanceVerdict concordance_obstruction(const Diagram& d1, const Diagram& d2, const Limits& limits) {
  require_knot(d1, "concordance_obstruction");
  require_knot(d2, "concordance_obstruction");
  ConcordanceVerdict out;
  int j1 = odd_writhe(d1), j2 = odd_writhe(d2);
  out.first_not_concordant_to_classical = j1 != 0;
  out.second_not_concordant_to_classical = j2 != 0;
  Verdict& v = out.verdict;
  if (j1 != j2) {
    v.obstructed = true;
    v.reason = "odd writhe " + std::to_string(j1) + " vs " + std::to_string(j2);
    v.theorems.push_back(theorem::kOddWritheConcordance);
  } else {
    RasmussenPair a = rasmussen(d1, limits), b = rasmussen(d2, limits);
    if (a.s2 == b.s2 && a.s1 != b.s1) {
      v.obstructed = true;
      v.reason = "s2 = " + std::to_string(a.s2) + " for both, s1 " + std::to_string(a.s1) + " vs " +
                 std::to_string(b.s1);
      v.theorems.push_back(theorem::kLevelConcordance);
    } else {
      v.reason = "invariants agree";
    }
  }
  if (out.first_not_concordant_to_classical || out.second_not_concordant_to_classical)
    v.theorems.push_back(theorem::kClassicalConcordance);
  return out;
}

GenusBound genus_lower_bound(const Diagram& d1, const Diagram& d2, const Limits& limits) {
  require_knot(d1, "genus_lower_bound");
  require_knot(d2, "genus_lower_bound");
  RasmussenPair a = rasmussen(d1, limits), b = rasmussen(d2, limits);
  if (a.s2 != b.s2)
    throw S2Mismatch("s2 differs: " + std::to_string(a.s2) + " vs " + std::to_string(b.s2));
  GenusBound g;
  g.value = mpq_class(std::abs(a.s1 - b.s1), 2);
  g.value.canonicalize();
  g.label = "lower bound for targeted cobordisms with shared degree " + std::to_string(a.s2);
  g.caveat = "holds only for cobordisms that are targeted and have " + std::to_string(a.s2) +
             " as a shared degree; the diagrams alone cannot certify this";
  return g;
}

LinkBound link_to_knot_bound(const Diagram& link, const Diagram& knot, const Limits& limits) {
  require_knot(knot, "link_to_knot_bound");
  LinkBound out;
  RasmussenPair s = rasmussen(knot, limits);
  out.degree = s.s2;
  out.knot_s1 = s.s1;
  out.link_components = link.num_components();
  LeeHomology h(build_complex(link, Variant::Lee, limits), false);
  for (const auto& c : h.classes())
    if (c.degree == out.degree) out.max_level = std::max(out.max_level.value_or(c.level), c.level);
  Verdict& v = out.verdict;
  if (!out.max_level) {
    v.obstructed = true;
    v.reason = "link homology vanishes in degree " + std::to_string(out.degree);
    v.theorems.push_back(theorem::kTrivialDegree);
  } else if (*out.max_level > s.s1 + static_cast<int>(out.link_components)) {
    v.obstructed = true;
    v.reason = "M(L) = " + std::to_string(*out.max_level) + " > " + std::to_string(s.s1) + " + " +
               std::to_string(out.link_components);
    v.theorems.push_back(theorem::kMergingBound);
  } else {
    v.reason = "M(L) = " + std::to_string(*out.max_level) + " <= " + std::to_string(s.s1) + " + " +
               std::to_string(out.link_components);
  }
  return out;
}

ObstructionReport classify(const Diagram& d, const Limits& limits) {
  ObstructionReport r;
  r.classicality = classicality_test(dkh(d, Ring::Integers, limits));
  r.theorems.push_back(theorem::kPeeling);
  if (d.num_components() == 1) {
    r.odd_writhe = odd_writhe(d);
    r.unknot_condition = unknot_connect_sum_condition(d, limits);
    r.theorems.push_back(theorem::kUnknotSum);
    r.s = rasmussen(d, limits);
    r.slice = slice_obstruction(d, limits);
    for (const auto& t : r.slice->theorems) r.theorems.push_back(t);
  }
  return r;
}

}  // namespace dkh
