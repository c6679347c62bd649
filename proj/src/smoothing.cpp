#include "dkh/smoothing.hpp"

#include <algorithm>
#include <numeric>

#include "dkh/error.hpp"

namespace dkh {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

bool is_oriented_resolution(const Diagram& d, std::size_t k, int bit) {
  return (d.crossings()[k].sign > 0) == (bit == 0);
}

std::pair<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>>
junctions(const Diagram& d, std::size_t k, int bit) {
  const CrossingArcs& c = d.crossings()[k];
  if (is_oriented_resolution(d, k, bit)) return {{c.over_in, c.under_out}, {c.under_in, c.over_out}};
  return {{c.over_in, c.under_in}, {c.over_out, c.under_out}};
}

SmoothingState resolve(const Diagram& d, Word w) {
  const std::size_t n = d.num_crossings();
  if (n < 64 && (w >> n) != 0) throw InternalError("resolution word longer than crossing count");
  UnionFind uf(d.num_arcs());
  for (std::size_t k = 0; k < n; ++k) {
    auto [p, q] = junctions(d, k, static_cast<int>((w >> k) & 1));
    uf.unite(p.first, p.second);
    uf.unite(q.first, q.second);
  }
  SmoothingState s;
  s.word = w;
  s.ones = __builtin_popcountll(w);
  s.cycle_of_arc.assign(d.num_arcs(), 0);
  std::vector<std::size_t> root_to_cycle(d.num_arcs(), SIZE_MAX);
  for (std::size_t a = 0; a < d.num_arcs(); ++a) {
    std::size_t r = uf.find(a);
    if (root_to_cycle[r] == SIZE_MAX) {
      root_to_cycle[r] = s.cycles.size();
      s.cycles.emplace_back();
    }
    s.cycle_of_arc[a] = root_to_cycle[r];
    s.cycles[root_to_cycle[r]].push_back(a);
  }
  s.crossing_traversal.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const CrossingArcs& c = d.crossings()[k];
    std::vector<std::size_t> cyc = {s.cycle_of_arc[c.over_in], s.cycle_of_arc[c.over_out],
                                    s.cycle_of_arc[c.under_in], s.cycle_of_arc[c.under_out]};
    std::sort(cyc.begin(), cyc.end());
    cyc.erase(std::unique(cyc.begin(), cyc.end()), cyc.end());
    s.crossing_traversal[k] = cyc;
  }
  return s;
}

EdgeKind classify_edge(const Diagram& d, Word w, std::size_t k) {
  if ((w >> k) & 1) throw InternalError("edge must start at a 0-bit");
  std::size_t before = resolve(d, w).num_cycles();
  std::size_t after = resolve(d, w | (Word{1} << k)).num_cycles();
  if (after + 1 == before) return EdgeKind::Merge;
  if (after == before + 1) return EdgeKind::Split;
  if (after == before) return EdgeKind::SingleCycle;
  throw InternalError("cycle count changed by more than one");
}

int edge_sign(Word w, std::size_t k) {
  Word below = k == 0 ? 0 : (w & ((Word{1} << k) - 1));
  return __builtin_popcountll(below) % 2 ? -1 : 1;
}

int height(const Diagram& d, Word w) { return __builtin_popcountll(w) - d.n_minus(); }

std::string word_string(const Diagram& d, Word w) {
  std::string s;
  for (std::size_t k = 0; k < d.num_crossings(); ++k) s += ((w >> k) & 1) ? '1' : '0';
  return s;
}

Word parse_word(const Diagram& d, const std::string& bits) {
  if (bits.size() != d.num_crossings()) throw SyntaxError("word length must equal crossing count");
  Word w = 0;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] == '1')
      w |= Word{1} << k;
    else if (bits[k] != '0')
      throw SyntaxError("word must be binary");
  }
  return w;
}

std::vector<ProperColouring> enumerate_alternately_coloured(const Diagram& d) {
  std::vector<ProperColouring> out;
  if (!degenerate_circles(gauss_diagram(d)).empty()) return out;
  const std::size_t nc = d.num_components();
  for (std::uint64_t base = 0; base < (std::uint64_t{1} << nc); ++base) {
    std::vector<int> arc_colour(d.num_arcs());
    for (std::size_t a = 0; a < d.num_arcs(); ++a) {
      ArcPosition pos = d.arc_position(a);
      arc_colour[a] = static_cast<int>(((base >> pos.component) & 1) ^ (pos.gap & 1));
    }
    Word w = 0;
    for (std::size_t k = 0; k < d.num_crossings(); ++k) {
      const CrossingArcs& c = d.crossings()[k];
      bool oriented = arc_colour[c.over_in] == arc_colour[c.under_out];
      int bit = (c.sign > 0) == oriented ? 0 : 1;
      w |= static_cast<Word>(bit) << k;
    }
    ProperColouring pc;
    pc.state = resolve(d, w);
    for (const auto& cyc : pc.state.cycles) pc.colour.push_back(arc_colour[cyc.front()]);
    out.push_back(std::move(pc));
  }
  return out;
}

std::vector<ProperColouring> enumerate_alternately_coloured_brute(const Diagram& d) {
  std::vector<ProperColouring> out;
  const std::size_t n = d.num_crossings();
  for (Word w = 0; w < (Word{1} << n); ++w) {
    SmoothingState s = resolve(d, w);
    const std::size_t m = s.num_cycles();
    for (std::uint64_t col = 0; col < (std::uint64_t{1} << m); ++col) {
      auto colour_of = [&](std::size_t arc) { return (col >> s.cycle_of_arc[arc]) & 1; };
      bool ok = true;
      for (std::size_t k = 0; k < n && ok; ++k) {
        auto [p, q] = junctions(d, k, static_cast<int>((w >> k) & 1));
        ok = colour_of(p.first) != colour_of(q.first);
      }
      if (!ok) continue;
      ProperColouring pc;
      pc.state = s;
      for (std::size_t c = 0; c < m; ++c) pc.colour.push_back(static_cast<int>((col >> c) & 1));
      out.push_back(std::move(pc));
    }
  }
  return out;
}

std::size_t acs_count(const Diagram& d) {
  if (!degenerate_circles(gauss_diagram(d)).empty()) return 0;
  return std::size_t{1} << d.num_components();
}

std::string to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::Merge: return "merge";
    case EdgeKind::Split: return "split";
    case EdgeKind::SingleCycle: return "single-cycle";
  }
  return "?";
}

}  // namespace dkh
