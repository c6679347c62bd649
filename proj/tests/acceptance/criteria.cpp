#include "acceptance/criteria.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "dkh/cobordism.hpp"
#include "dkh/error.hpp"
#include "dkh/fixtures.hpp"
#include "dkh/homology.hpp"
#include "dkh/obstructions.hpp"
#include "dkh/smoothing.hpp"
#include "oracles.hpp"

namespace acceptance {

using namespace dkh;

namespace {

// Collects sub-check outcomes for one criterion.
struct Checker {
  CriterionResult& r;
  bool check(bool ok, const std::string& what) {
    if (!ok) {
      r.pass = false;
      r.notes.push_back("FAIL " + what);
    }
    return ok;
  }
  void note(const std::string& s) { r.notes.push_back(s); }
};

std::string pair_str(int a, int b) { return "(" + std::to_string(a) + ", " + std::to_string(b) + ")"; }

BidegreeGroup free_group(std::size_t r) {
  BidegreeGroup g;
  g.free_rank = r;
  return g;
}

BidegreeGroup torsion_group(long t) {
  BidegreeGroup g;
  g.torsion.push_back(mpz_class(t));
  return g;
}

bool clean(const Diagram& d) {
  return verify_chain_complex(build_complex(d, Variant::Standard)).ok &&
         verify_chain_complex(build_complex(d, Variant::Lee)).ok;
}

std::vector<Diagram> fixture_diagrams() {
  std::vector<Diagram> out;
  for (const auto& f : fixtures()) out.push_back(fixture(f.name));
  return out;
}

std::vector<Diagram> random_sample(std::uint32_t seed, int count, int max_crossings, bool knots_only) {
  std::mt19937 rng(seed);
  std::vector<Diagram> out;
  for (int t = 0; t < count; ++t) {
    int n = 1 + t % max_crossings;
    int comps = knots_only ? 1 : 1 + (t % 3 == 2);
    out.push_back(oracle::random_diagram(rng, n, comps));
  }
  return out;
}

// Counts failures among a sample and how many of them have a known cause.
struct Tally {
  int cases = 0, failures = 0, attributed = 0;
  std::map<std::string, int> causes;
  std::vector<std::string> examples;
  void record(bool ok, const std::string& cause, const std::string& label) {
    ++cases;
    if (ok) return;
    ++failures;
    if (!cause.empty()) {
      ++attributed;
      ++causes[cause];
    }
    if (examples.size() < 3) examples.push_back(label + (cause.empty() ? "" : " [" + cause + "]"));
  }
  void report(Checker& c, const std::string& what) {
    std::string line = what + ": " + std::to_string(cases - failures) + "/" + std::to_string(cases) + " pass";
    if (failures) {
      line += "; " + std::to_string(failures - attributed) + " unexplained";
      for (const auto& [cause, n] : causes) line += ", " + std::to_string(n) + " with " + cause;
    }
    c.note(line);
    for (const auto& e : examples) c.note("  e.g. " + e);
    c.check(failures == 0, what);
  }
};

const std::string kIncoherent = "incoherent faces";
const std::string kInverted = "lower levels above upper levels";

std::string incoherent(bool defective) { return defective ? kIncoherent : std::string(); }

bool inverted_levels(const RasmussenDetail& r) {
  return *std::max_element(r.lower_levels.begin(), r.lower_levels.end()) >
         *std::max_element(r.upper_levels.begin(), r.upper_levels.end());
}

// ---------------------------------------------------------------------------

void criterion1(Checker& c) {
  auto t0 = std::chrono::steady_clock::now();
  BigradedAbelianGroup h = dkh::dkh(fixture("K21"));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  BigradedAbelianGroup want;
  for (auto [i, j] : std::vector<std::pair<int, int>>{{-2, -7}, {-2, -6}, {-2, -5}, {-2, -4}, {-1, -5}, {0, -1}})
    want.set(i, j, free_group(1));
  want.set(0, -3, torsion_group(2));
  c.check(h == want, "dkh(K21) matches the expected grid");
  c.check(secs < 1.0, "dkh(K21) under 1 s (took " + std::to_string(secs) + " s)");
  c.note("computed in " + std::to_string(secs) + " s");
}

void criterion2(Checker& c) {
  BigradedAbelianGroup h = dkh::dkh(fixture("VH"));
  bool pattern = false;
  if (h.groups.size() == 3) {
    for (const auto& [ij, g] : h.groups) {
      auto [i, j] = ij;
      if (g == free_group(1) && h.at(i + 1, j + 2) == torsion_group(2) && h.at(i + 1, j + 4) == free_group(1))
        pattern = true;
    }
  }
  c.check(pattern, "dkh(VH) has the Z, Z_2, Z pattern in exactly three bidegrees");
  c.check(lee_summary(fixture("VH")).total_rank() == 0, "Lee homology of VH vanishes");
}

void criterion3(Checker& c) {
  BigradedAbelianGroup u;
  for (int j : {1, 0, -1, -2}) u.set(0, j, free_group(1));
  BigradedAbelianGroup h0 = dkh::dkh(fixture("U0"));
  c.check(h0 == u, "dkh(U0) is Z at (0,1),(0,0),(0,-1),(0,-2)");
  for (const char* name : {"TRP", "TRN", "HOPFP", "HOPFN"}) {
    ClassicalityResult r = classicality_test(dkh::dkh(fixture(name)));
    c.check(!r.non_classical && !r.peeled.is_zero(), std::string("classicality_test(") + name + ") inconclusive");
  }
  c.check(dkh::dkh(fixture("KISH")) == h0, "dkh(KISH) = dkh(U0)");
  c.check(dkh::dkh(fixture("K37")) == h0, "dkh(K37) = dkh(U0)");
}

// Reduced subcomplex: closed under d and exactly half the generators in each degree for knots.
bool reduced_ok(const Diagram& d, std::string& why) {
  ReducedPair p;
  try {
    p = build_reduced(d, {});
  } catch (const InternalError& e) {
    why = e.what();
    return false;
  }
  ChainComplex full = build_complex(d, Variant::Standard);
  std::map<std::pair<int, int>, std::size_t> whole, sub;
  for (int i = full.min_degree; i <= full.max_degree(); ++i)
    for (const auto& b : full.group(i)) ++whole[{i, b.j}];
  for (int i = p.sub.min_degree; i <= p.sub.max_degree(); ++i)
    for (const auto& b : p.sub.group(i)) ++sub[{i, b.j}];
  for (int i = full.min_degree; i <= full.max_degree(); ++i) {
    if (2 * p.sub.rank(i) != full.rank(i)) {
      why = "degree " + std::to_string(i) + " is not half";
      return false;
    }
  }
  for (const auto& [ij, n] : whole) {
    auto get = [&](int j) {
      auto it = sub.find({ij.first, j});
      return it == sub.end() ? std::size_t{0} : it->second;
    };
    if (n != get(ij.second) + get(ij.second - 2)) {
      why = "bidegree " + pair_str(ij.first, ij.second) + " breaks the shifted half-rank split";
      return false;
    }
  }
  return true;
}

void criterion4(Checker& c) {
  Tally fixtures_tally, random_tally, reduced_tally;
  for (const auto& f : fixtures()) {
    Diagram d = fixture(f.name);
    fixtures_tally.record(clean(d), incoherent(count_incoherent_faces(d) > 0), f.name);
  }
  for (const auto& d : random_sample(4004, 120, 8, false))
    random_tally.record(clean(d), incoherent(count_incoherent_faces(d) > 0), d.str());
  std::vector<Diagram> knots;
  for (const auto& f : fixtures())
    if (fixture(f.name).num_components() == 1) knots.push_back(fixture(f.name));
  for (const auto& d : random_sample(4005, 40, 8, true)) knots.push_back(d);
  for (const auto& d : knots) {
    std::string why;
    bool ok = reduced_ok(d, why);
    reduced_tally.record(ok, incoherent(count_incoherent_faces(d) > 0), d.str() + (why.empty() ? "" : ": " + why));
  }
  fixtures_tally.report(c, "chain axioms on fixtures");
  random_tally.report(c, "chain axioms on 120 random diagrams (<= 8 crossings)");
  reduced_tally.report(c, "reduced subcomplex closed with half rank on knots");
}

void criterion5(Checker& c) {
  std::vector<Diagram> sample = fixture_diagrams();
  for (const auto& d : random_sample(5005, 60, 8, false)) sample.push_back(d);
  Tally division, oracle_eq, state_sum;
  for (const auto& d : sample) {
    LaurentPolynomial j = jones(d);
    bool div = false;
    try {
      div = divide_by_one_plus_inverse_q(euler_characteristic(dkh::dkh(d))) == j;
    } catch (const NotDivisible&) {
    }
    division.record(div, std::string(), d.str());
    oracle_eq.record(j == bracket_oracle(d), std::string(), d.str());
    state_sum.record(j == oracle::state_sum_jones(d), std::string(), d.str());
  }
  LaurentPolynomial unknot;
  unknot.add(1, 1);
  unknot.add(-1, 1);
  c.check(jones(fixture("U0")) == unknot, "jones(U0) = q + q^-1");
  division.report(c, "euler characteristic = jones * (1 + q^-1)");
  oracle_eq.report(c, "jones = bracket oracle");
  state_sum.report(c, "jones = independent state sum");
}

void criterion6(Checker& c) {
  std::vector<Diagram> sample = fixture_diagrams();
  for (const auto& d : random_sample(6006, 60, 6, false)) sample.push_back(d);
  Tally law, brute, degenerate, knots, dense;
  for (const auto& d : sample) {
    bool defective = count_incoherent_faces(d) > 0;
    LeeSummary s = lee_summary(d);
    std::size_t acs = acs_count(d);
    law.record(s.total_rank() == 2 * acs, incoherent(defective),
               d.str() + ": rank " + std::to_string(s.total_rank()) + " vs 2*" + std::to_string(acs));
    dense.record(oracle::total_homology_rank(build_complex(d, Variant::Lee)) == s.total_rank(), incoherent(defective), d.str());
    brute.record(enumerate_alternately_coloured_brute(d).size() == acs, std::string(), d.str());
    degenerate.record((acs > 0) == degenerate_circles(gauss_diagram(d)).empty(), std::string(), d.str());
    if (d.num_components() == 1)
      knots.record(s.total_rank() == 4 && s.rank_by_degree.size() == 1, incoherent(defective), d.str());
  }
  Diagram unlink;
  for (std::size_t n = 1; n <= 4; ++n) {
    if (n > 1) unlink = disjoint_union(unlink, Diagram());
    c.check(lee_summary(unlink).total_rank() == (std::size_t{1} << (n + 1)),
            "crossingless " + std::to_string(n) + "-unlink has rank 2^" + std::to_string(n + 1));
  }
  law.report(c, "Lee rank = 2 * acs_count");
  dense.report(c, "Lee rank agrees with dense rational ranks");
  brute.report(c, "brute-force colouring count = acs_count");
  degenerate.report(c, "colourable iff no degenerate circles");
  knots.report(c, "knots have rank 4 in one degree");
}

void criterion7(Checker& c) {
  RasmussenPair u0 = rasmussen(fixture("U0")), k21 = rasmussen(fixture("K21")), trp = rasmussen(fixture("TRP"));
  c.check(u0 == RasmussenPair{0, 0}, "s(U0) = (0, 0)");
  c.check(k21 == RasmussenPair{-5, -2}, "s(K21) = (-5, -2), got " + pair_str(k21.s1, k21.s2));
  c.check(trp == RasmussenPair{2, 0}, "s(TRP) = (2, 0), got " + pair_str(trp.s1, trp.s2));
  c.check(oracle::classical_rasmussen(fixture("TRP")) == trp.s1, "s1(TRP) matches the classical Lee oracle");
  c.check(oracle::classical_rasmussen(fixture("TRN")) == rasmussen(fixture("TRN")).s1,
          "s1(TRN) matches the classical Lee oracle");

  std::vector<Diagram> knots;
  for (const auto& f : fixtures())
    if (fixture(f.name).num_components() == 1) knots.push_back(fixture(f.name));
  for (const auto& d : random_sample(7007, 30, 6, true)) knots.push_back(d);
  const Diagram partner = fixture("K21");
  const RasmussenPair partner_s = rasmussen(partner);
  Tally support, consecutive, mirrored, additive, leftmost;
  for (const auto& d : knots) {
    bool defective = count_incoherent_faces(d) > 0 || count_incoherent_faces(mirror(d)) > 0;
    try {
      RasmussenDetail r = rasmussen_detail(d);
      support.record(r.support_degree == odd_writhe(d), incoherent(defective), d.str());
      std::vector<int> levels = r.upper_levels;
      levels.insert(levels.end(), r.lower_levels.begin(), r.lower_levels.end());
      std::sort(levels.begin(), levels.end());
      bool run = levels.size() == 4;
      for (std::size_t k = 1; run && k < levels.size(); ++k) run = levels[k] == levels[k - 1] + 1;
      consecutive.record(run, incoherent(defective), d.str());
      RasmussenPair m = rasmussen(mirror(d));
      mirrored.record(m == RasmussenPair{-r.value.s1, -r.value.s2},
                      defective ? kIncoherent : inverted_levels(r) ? kInverted : std::string(), d.str());
      std::size_t sites = std::min<std::size_t>(3, d.num_arcs());
      for (std::size_t k = 0; k < sites; ++k) {
        std::size_t arc = k * d.num_arcs() / sites;
        Diagram sum = connect_sum(d, arc, partner, 0);
        bool sum_defective = defective || count_incoherent_faces(sum) > 0;
        RasmussenPair s;
        bool ok = false;
        try {
          s = rasmussen(sum);
          ok = s == RasmussenPair{r.value.s1 + partner_s.s1, r.value.s2 + partner_s.s2};
        } catch (const Error&) {
        }
        additive.record(ok, incoherent(sum_defective), d.str() + " # K21 at arc " + std::to_string(arc));
      }
      if (is_leftmost(d)) leftmost.record(rasmussen_leftmost(d) == r.value, incoherent(defective), d.str());
    } catch (const Error& e) {
      support.record(false, incoherent(defective), d.str() + ": " + e.what());
    }
  }
  support.report(c, "Lee support degree = odd writhe");
  consecutive.report(c, "four consecutive s-levels");
  mirrored.report(c, "s(mirror) = -s");
  additive.report(c, "s additive under connect sum at 3 sites");
  leftmost.report(c, "leftmost fast path = general algorithm");
}

void criterion8(Checker& c) {
  Verdict k21 = slice_obstruction(fixture("K21"));
  c.check(k21.obstructed && k21.reason.rfind("s2", 0) == 0, "slice_obstruction(K21) obstructed via s2 (" + k21.reason + ")");

  Verdict t = slice_obstruction(fixture("T43V"));
  RasmussenPair ts = rasmussen(fixture("T43V"));
  c.note("T43V: s = " + pair_str(ts.s1, ts.s2) + ", verdict " + (t.obstructed ? "obstructed" : "inconclusive") +
         " (" + t.reason + ")");
  c.check(t.obstructed && ts.s2 == 0 && ts.s1 != 0, "slice_obstruction(T43V) obstructed via s1 with s2 = 0");
  c.check(ts == RasmussenPair{1, 0}, "slice_obstruction(T43V) reports s1 = 1, s2 = 0 (got " + pair_str(ts.s1, ts.s2) +
                                          "; see README, known deviations)");

  LinkBound lb = link_to_knot_bound(fixture("L9261V"), fixture("U0"));
  c.note("L9261V vs U0: " + std::string(lb.verdict.obstructed ? "obstructed" : "inconclusive") + " (" +
         lb.verdict.reason + ")");
  c.check(lb.verdict.obstructed, "link_to_knot_bound(L9261V, U0) obstructed");
  c.check(lb.max_level == 5, "link_to_knot_bound(L9261V, U0) reports M(L) = 5 (got " +
                                 (lb.max_level ? std::to_string(*lb.max_level) : std::string("none")) + ")");

  ConcordanceVerdict cv = concordance_obstruction(fixture("K21"), fixture("U0"));
  bool via_writhe = std::find(cv.verdict.theorems.begin(), cv.verdict.theorems.end(),
                              std::string(theorem::kOddWritheConcordance)) != cv.verdict.theorems.end();
  c.check(cv.verdict.obstructed && via_writhe, "concordance_obstruction(K21, U0) obstructed via odd writhe");
  c.check(cv.first_not_concordant_to_classical, "K21 flagged as not concordant to a classical knot");
}

ElementaryMove random_move(std::mt19937& rng, const Diagram& d) {
  for (;;) {
    switch (rng() % 4) {
      case 0:
        return ElementaryMove::birth();
      case 1:
        for (std::size_t k = 0; k < d.num_components(); ++k)
          if (d.components()[k].empty()) return ElementaryMove::death(k);
        break;
      case 2:
        if (d.num_arcs() >= 2) {
          std::size_t a = rng() % d.num_arcs(), b = rng() % d.num_arcs();
          if (a != b) return ElementaryMove::saddle(a, b);
        }
        break;
      default: {
        auto comps = d.components();
        if (comps.empty()) return ElementaryMove::birth();
        auto& first = comps.front();
        if (!first.empty()) std::rotate(first.begin(), first.begin() + 1, first.end());
        std::reverse(comps.begin(), comps.end());
        return ElementaryMove::virtual_move(Diagram(comps));
      }
    }
  }
}

void criterion9(Checker& c) {
  std::mt19937 rng(9009);
  Tally commute, filtered;
  int applied = 0;
  while (applied < 220) {
    Diagram d = oracle::random_diagram(rng, static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 2));
    ElementaryMove m = random_move(rng, d);
    MoveResult r;
    try {
      r = apply_move_detailed(d, m);
    } catch (const Error&) {
      continue;
    }
    ++applied;
    ChainMap f = chain_map_of_move(d, m);
    ChainMapCheck ch = check_chain_map(build_complex(d, Variant::Lee), build_complex(r.diagram, Variant::Lee), f);
    bool defective = count_incoherent_saddle_faces(d, m) > 0 || count_incoherent_faces(d) > 0 ||
                     count_incoherent_faces(r.diagram) > 0;
    commute.record(ch.commutes, incoherent(defective), d.str() + " | " + m.str() + (ch.commutes ? "" : ": " + ch.problem));
    filtered.record(!f.any_entry || f.observed_degree >= f.filtration_degree, incoherent(defective), d.str() + " | " + m.str());
  }
  commute.report(c, "chain maps commute with d' on " + std::to_string(applied) + " random moves");
  filtered.report(c, "chain maps respect their filtration degree");

  for (const Diagram& base : {fixture("U0"), fixture("K21")}) {
    CobordismPresentation sphere{base, {ElementaryMove::birth(), ElementaryMove::death(base.num_components())}};
    c.check(!induced_map_on_lee(sphere).nonzero, "death after birth is zero on " + base.str());

    std::size_t new_arc = base.num_arcs();
    CobordismPresentation merge{base, {ElementaryMove::birth(), ElementaryMove::saddle(0, new_arc)}};
    InducedMap im = induced_map_on_lee(merge);
    bool identity = im.source_classes.size() == im.target_classes.size() && !im.matrix.empty();
    for (std::size_t t = 0; identity && t < im.matrix.size(); ++t)
      for (std::size_t s = 0; s < im.matrix[t].size(); ++s) identity = identity && im.matrix[t][s] == (s == t ? 1 : 0);
    c.check(identity, "birth then merge saddle induces the identity on " + base.str());
    c.check(im.filtration_budget == 0 && merge.euler_characteristic() == 0 && im.observed_degree >= 0,
            "filtration accounting for birth + saddle");
  }

  // Filtration budget b + t - s on random presentations of length 3.
  Tally budget;
  for (int t = 0; t < 20; ++t) {
    Diagram d = oracle::random_diagram(rng, static_cast<int>(rng() % 3), 1);
    CobordismPresentation p{d, {}};
    Diagram cur = d;
    while (p.moves.size() < 3) {
      ElementaryMove m = random_move(rng, cur);
      try {
        cur = apply_move(cur, m);
      } catch (const Error&) {
        continue;
      }
      p.moves.push_back(m);
    }
    int expected = static_cast<int>(p.births() + p.deaths()) - static_cast<int>(p.saddles());
    try {
      InducedMap im = induced_map_on_lee(p);
      budget.record(im.filtration_budget == expected && (!im.nonzero || im.observed_degree >= expected), std::string(),
                    d.str());
    } catch (const NotAChainMap& e) {
      bool defective = false;
      Diagram x = d;
      for (const auto& m : p.moves) {
        defective = defective || count_incoherent_saddle_faces(x, m) > 0 || count_incoherent_faces(x) > 0;
        x = apply_move(x, m);
      }
      budget.record(false, incoherent(defective), d.str() + ": " + e.what());
    }
  }
  budget.report(c, "filtration degree of presentations within b + t - s");

  Tally kills;
  while (kills.cases < 60) {
    Diagram d = oracle::random_diagram(rng, 1 + static_cast<int>(rng() % 5), 1);
    if (acs_count(d) == 0 || d.num_arcs() < 2) continue;
    std::size_t a = rng() % d.num_arcs(), b = rng() % d.num_arcs();
    if (a == b) continue;
    ElementaryMove m = ElementaryMove::saddle(a, b);
    Diagram after;
    try {
      after = apply_move(d, m);
    } catch (const Error&) {
      continue;
    }
    kills.record(saddle_kills_acs(d, m) == (acs_count(after) == 0), std::string(), d.str() + " | " + m.str());
  }
  kills.report(c, "saddle_kills_acs agrees with acs_count after the saddle");

  CobordismPresentation fig{disjoint_union(fixture("HOPFN"), fixture("K21")),
                            {ElementaryMove::saddle(4, 6), ElementaryMove::saddle(4, 7)}};
  std::set<int> shared = shared_degrees(fig);
  c.check(shared == std::set<int>{-2}, "genus-one configuration has shared degree -2");
  c.check(fig.surface_components() == 3 && fig.euler_characteristic() == -2,
          "genus-one configuration is two cylinders plus a genus-one piece");
  try {
    InducedMap im = induced_map_on_lee(fig);
    c.check(!im.nonzero, "genus-one configuration induces the zero map");
  } catch (const NotAChainMap& e) {
    c.check(false, std::string("genus-one configuration: ") + e.what());
  }
}

const std::vector<std::pair<std::string, std::function<void(Checker&)>>>& table() {
  static const std::vector<std::pair<std::string, std::function<void(Checker&)>>> t = {
      {"two-crossing virtual trefoil grid", criterion1},
      {"virtual Hopf link pattern", criterion2},
      {"unknot, peeling and unknot-like fixtures", criterion3},
      {"chain complex axioms and reduced subcomplex", criterion4},
      {"Euler characteristic and Jones polynomial", criterion5},
      {"Lee rank law", criterion6},
      {"doubled Rasmussen invariant structure", criterion7},
      {"obstruction reports", criterion8},
      {"cobordism engine", criterion9},
  };
  return t;
}

}  // namespace

CriterionResult run_criterion(int number) {
  CriterionResult r;
  r.number = number;
  if (number < 1 || number > kCriteria) {
    r.title = "unknown criterion";
    r.notes.push_back("no criterion " + std::to_string(number));
    return r;
  }
  const auto& entry = table()[static_cast<std::size_t>(number - 1)];
  r.title = entry.first;
  r.pass = true;
  Checker c{r};
  auto t0 = std::chrono::steady_clock::now();
  try {
    entry.second(c);
  } catch (const std::exception& e) {
    c.check(false, std::string("unexpected exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

int run_criteria(std::ostream& out, const std::vector<int>& which, bool verbose) {
  int failures = 0;
  for (int n : which) {
    CriterionResult r = run_criterion(n);
    std::ostringstream secs;
    secs.precision(2);
    secs << std::fixed << r.seconds;
    out << "criterion " << n << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.title << " (" << secs.str()
        << " s)\n";
    if (verbose || !r.pass)
      for (const auto& note : r.notes) out << "    " << note << "\n";
    if (!r.pass) ++failures;
  }
  return failures;
}

}  // namespace acceptance
