#include "dkh/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "dkh/error.hpp"

namespace dkh {

using nlohmann::json;

std::string render_group(const BidegreeGroup& g) {
  if (g.is_zero()) return "0";
  std::string out;
  if (g.free_rank == 1) out = "Z";
  else if (g.free_rank > 1) out = "Z^" + std::to_string(g.free_rank);
  // Group equal divisors as Z_n^k.
  for (std::size_t k = 0; k < g.torsion.size();) {
    std::size_t e = k;
    while (e < g.torsion.size() && g.torsion[e] == g.torsion[k]) ++e;
    if (!out.empty()) out += "+";
    out += "Z_" + g.torsion[k].get_str();
    if (e - k > 1) out += "^" + std::to_string(e - k);
    k = e;
  }
  return out;
}

std::string render_grid(const BigradedAbelianGroup& h) {
  if (h.is_zero()) return "0\n";
  int imin = h.groups.begin()->first.first, imax = h.groups.rbegin()->first.first;
  int jmin = h.groups.begin()->first.second, jmax = jmin;
  for (const auto& [ij, _] : h.groups) {
    jmin = std::min(jmin, ij.second);
    jmax = std::max(jmax, ij.second);
  }
  std::size_t label = 3, width = 1;
  for (int j = jmin; j <= jmax; ++j) label = std::max(label, std::to_string(j).size());
  for (int i = imin; i <= imax; ++i) width = std::max(width, std::to_string(i).size());
  for (const auto& [_, g] : h.groups) width = std::max(width, render_group(g).size());

  auto pad = [](const std::string& s, std::size_t w) { return std::string(w - std::min(w, s.size()), ' ') + s; };
  std::ostringstream out;
  out << pad("j\\i", label);
  for (int i = imin; i <= imax; ++i) out << "  " << pad(std::to_string(i), width);
  out << "\n";
  for (int j = jmax; j >= jmin; --j) {
    out << pad(std::to_string(j), label);
    for (int i = imin; i <= imax; ++i) {
      BidegreeGroup g = h.at(i, j);
      out << "  " << pad(g.is_zero() ? "." : render_group(g), width);
    }
    out << "\n";
  }
  return out.str();
}

json to_json(const BigradedAbelianGroup& h) {
  json groups = json::array();
  for (const auto& [ij, g] : h.groups) {
    json torsion = json::array();
    for (const auto& t : g.torsion) torsion.push_back(t.get_si());
    groups.push_back({{"i", ij.first}, {"j", ij.second}, {"free_rank", g.free_rank}, {"torsion", torsion}});
  }
  return {{"invariant", "dkh"}, {"groups", groups}};
}

BigradedAbelianGroup group_from_json(const json& j) {
  try {
    BigradedAbelianGroup h;
    for (const auto& e : j.at("groups")) {
      BidegreeGroup g;
      g.free_rank = e.at("free_rank").get<std::size_t>();
      for (const auto& t : e.at("torsion")) g.torsion.emplace_back(t.get<long>());
      h.set(e.at("i").get<int>(), e.at("j").get<int>(), g);
    }
    return h;
  } catch (const json::exception& e) {
    throw SyntaxError(std::string("malformed homology JSON: ") + e.what());
  }
}

json to_json(const RasmussenPair& s) { return {{"invariant", "rasmussen"}, {"s1", s.s1}, {"s2", s.s2}}; }

json to_json(const LaurentPolynomial& p) {
  json powers = json::object();
  for (const auto& [e, c] : p.coeffs) powers[std::to_string(e)] = c;
  return {{"q_powers", powers}};
}

LaurentPolynomial polynomial_from_json(const json& j) {
  try {
    LaurentPolynomial p;
    for (const auto& [k, v] : j.at("q_powers").items()) p.add(std::stoi(k), v.get<long>());
    return p;
  } catch (const std::exception& e) {
    throw SyntaxError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

json to_json(const LeeSummary& s) {
  json ranks = json::object(), levels = json::object();
  for (const auto& [i, r] : s.rank_by_degree) ranks[std::to_string(i)] = r;
  for (const auto& [l, r] : s.levels) levels[std::to_string(l)] = r;
  return {{"invariant", "lee"}, {"total_rank", s.total_rank()}, {"rank_by_degree", ranks}, {"levels", levels}};
}

json to_json(const ObstructionReport& r) {
  json verdicts = {{"non_classical", r.classicality.non_classical ? "yes" : "inconclusive"}};
  if (r.unknot_condition) verdicts["unknot_connect_sum_condition"] = *r.unknot_condition ? "holds" : "fails";
  if (r.slice) verdicts["slice"] = r.slice->obstructed ? "obstructed" : "inconclusive";
  json evidence = {{"s1", nullptr}, {"s2", nullptr}, {"J", nullptr}, {"peel_failure", nullptr}};
  if (r.s) {
    evidence["s1"] = r.s->s1;
    evidence["s2"] = r.s->s2;
  }
  if (r.odd_writhe) evidence["J"] = *r.odd_writhe;
  if (r.classicality.failure)
    evidence["peel_failure"] = {r.classicality.failure->first, r.classicality.failure->second};
  return {{"verdicts", verdicts}, {"evidence", evidence}, {"theorems", r.theorems}};
}

json to_json(const InducedMap& m) {
  auto classes = [](const std::vector<LeeHomology::Class>& cs) {
    json a = json::array();
    for (const auto& c : cs) a.push_back({{"degree", c.degree}, {"level", c.level}});
    return a;
  };
  json rows = json::array();
  for (const auto& row : m.matrix) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x.get_str());
    rows.push_back(r);
  }
  return {{"source_classes", classes(m.source_classes)},
          {"target_classes", classes(m.target_classes)},
          {"matrix", rows},
          {"nonzero", m.nonzero},
          {"filtration_budget", m.filtration_budget},
          {"observed_degree", m.observed_degree}};
}

std::string render_summary(const LeeSummary& s) {
  std::ostringstream out;
  out << "total rank " << s.total_rank() << "\n";
  for (const auto& [i, r] : s.rank_by_degree) out << "  degree " << i << ": rank " << r << "\n";
  for (const auto& [l, r] : s.levels) out << "  level " << l << ": rank " << r << "\n";
  return out.str();
}

std::string render_report(const ObstructionReport& r) {
  std::ostringstream out;
  out << "non-classical: " << (r.classicality.non_classical ? "yes" : "inconclusive");
  if (r.classicality.failure)
    out << " (peel fails at (" << r.classicality.failure->first << ", " << r.classicality.failure->second << ") in "
        << r.classicality.failing_part << " part)";
  out << "\n";
  if (r.unknot_condition)
    out << "unknot connect sum condition: " << (*r.unknot_condition ? "holds" : "fails") << "\n";
  if (r.slice)
    out << "slice: " << (r.slice->obstructed ? "obstructed" : "inconclusive") << " (" << r.slice->reason << ")\n";
  if (r.s) out << "s = (" << r.s->s1 << ", " << r.s->s2 << ")\n";
  if (r.odd_writhe) out << "J = " << *r.odd_writhe << "\n";
  out << "based on:\n";
  for (const auto& t : r.theorems) out << "  " << t << "\n";
  return out.str();
}

std::string render_induced_map(const InducedMap& m) {
  std::ostringstream out;
  out << "source classes " << m.source_classes.size() << ", target classes " << m.target_classes.size() << "\n";
  for (std::size_t t = 0; t < m.matrix.size(); ++t) {
    out << "  [";
    for (std::size_t s = 0; s < m.matrix[t].size(); ++s) out << (s ? " " : "") << m.matrix[t][s].get_str();
    out << "]\n";
  }
  out << "nonzero: " << (m.nonzero ? "yes" : "no") << "\n";
  out << "filtration budget " << m.filtration_budget << ", observed degree " << m.observed_degree << "\n";
  return out.str();
}

}  // namespace dkh
