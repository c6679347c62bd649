#include "dkh/cobordism.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dkh/error.hpp"

namespace dkh {

ElementaryMove ElementaryMove::birth() { return ElementaryMove{}; }

ElementaryMove ElementaryMove::death(std::size_t component) {
  ElementaryMove m;
  m.kind = Kind::Death;
  m.component = component;
  return m;
}

ElementaryMove ElementaryMove::saddle(std::size_t arc1, std::size_t arc2) {
  ElementaryMove m;
  m.kind = Kind::Saddle;
  m.arc1 = arc1;
  m.arc2 = arc2;
  return m;
}

ElementaryMove ElementaryMove::virtual_move(Diagram target) {
  ElementaryMove m;
  m.kind = Kind::VirtualMove;
  m.target = std::move(target);
  return m;
}

std::string ElementaryMove::str() const {
  switch (kind) {
    case Kind::Birth: return "birth";
    case Kind::Death: return "death " + std::to_string(component);
    case Kind::Saddle: return "saddle " + std::to_string(arc1) + " " + std::to_string(arc2);
    case Kind::VirtualMove: return "vmove " + target.str();
  }
  return "";
}

namespace {

using GapPieces = std::vector<std::vector<std::size_t>>;  // per gap of one component

struct Builder {
  std::vector<Component> components;
  std::vector<GapPieces> gaps;

  void push(Component c, GapPieces g) {
    if (g.empty()) g.resize(1);
    components.push_back(std::move(c));
    gaps.push_back(std::move(g));
  }

  MoveResult finish(ArcCorrespondence arcs) {
    MoveResult r{Diagram(components), std::move(arcs)};
    for (auto& g : gaps)
      for (auto& pieces : g) r.arcs.target_arcs.push_back(std::move(pieces));
    return r;
  }
};

Component rotate(const Component& c, std::size_t start) {
  Component out;
  for (std::size_t k = 0; k < c.size(); ++k) out.push_back(c[(start + k) % c.size()]);
  return out;
}

// Pieces for an unmoved component: one per arc, identical to the source numbering.
GapPieces whole(const Diagram& d, std::size_t comp) {
  GapPieces g;
  for (std::size_t k = 0; k < d.arc_count(comp); ++k) g.push_back({d.arc_index({comp, k})});
  return g;
}

ArcCorrespondence identity_pieces(const Diagram& d) {
  ArcCorrespondence a;
  a.pieces = d.num_arcs();
  for (std::size_t k = 0; k < d.num_arcs(); ++k) a.source_arcs.push_back({k});
  return a;
}

MoveResult birth_move(const Diagram& d) {
  ArcCorrespondence a = identity_pieces(d);
  std::size_t fresh = a.pieces++;
  a.handle.insert(fresh);
  Builder b;
  for (std::size_t c = 0; c < d.num_components(); ++c) b.push(d.components()[c], whole(d, c));
  b.push({}, {{fresh}});
  return b.finish(std::move(a));
}

MoveResult death_move(const Diagram& d, std::size_t comp) {
  if (comp >= d.num_components()) throw BadArc("no component " + std::to_string(comp));
  if (!d.components()[comp].empty()) throw DeathOnKnottedComponent("component " + std::to_string(comp) + " has crossings");
  ArcCorrespondence a = identity_pieces(d);
  a.handle.insert(d.arc_index({comp, 0}));
  Builder b;
  for (std::size_t c = 0; c < d.num_components(); ++c)
    if (c != comp) b.push(d.components()[c], whole(d, c));
  return b.finish(std::move(a));
}

MoveResult virtual_move(const Diagram& d, const Diagram& target) {
  ArcCorrespondence a = identity_pieces(d);
  std::vector<bool> used(d.num_components(), false);
  Builder b;
  for (const Component& tc : target.components()) {
    bool matched = false;
    for (std::size_t c = 0; c < d.num_components() && !matched; ++c) {
      const Component& sc = d.components()[c];
      if (used[c] || sc.size() != tc.size()) continue;
      for (std::size_t r = 0; r < std::max<std::size_t>(sc.size(), 1) && !matched; ++r) {
        if (!sc.empty() && rotate(sc, r) != tc) continue;
        GapPieces g;
        for (std::size_t k = 0; k < std::max<std::size_t>(tc.size(), 1); ++k)
          g.push_back({d.arc_index({c, sc.empty() ? 0 : (k + r) % sc.size()})});
        b.push(tc, std::move(g));
        used[c] = matched = true;
      }
    }
    if (!matched) throw InvalidMove("virtual move target is not a rotation or reordering of the diagram");
  }
  if (std::find(used.begin(), used.end(), false) != used.end())
    throw InvalidMove("virtual move target drops a component");
  return b.finish(std::move(a));
}

MoveResult saddle_move(const Diagram& d, std::size_t arc1, std::size_t arc2) {
  if (arc1 >= d.num_arcs() || arc2 >= d.num_arcs()) throw BadArc("saddle arc out of range");
  ArcPosition p1 = d.arc_position(arc1), p2 = d.arc_position(arc2);
  ArcCorrespondence a;
  std::vector<std::vector<std::size_t>> split(d.num_arcs());
  for (std::size_t k = 0; k < d.num_arcs(); ++k) {
    std::size_t parts = k == arc1 || k == arc2 ? (arc1 == arc2 ? 3 : 2) : 1;
    for (std::size_t t = 0; t < parts; ++t) split[k].push_back(a.pieces++);
    a.source_arcs.push_back(split[k]);
    if (parts > 1) a.handle.insert(split[k].begin(), split[k].end());
  }
  auto piece_of = [&](std::size_t comp, std::size_t gap) { return split[d.arc_index({comp, gap})].front(); };
  Builder b;

  if (arc1 == arc2) {
    // Pinch a small circle off the arc.
    const auto& s = split[arc1];
    for (std::size_t c = 0; c < d.num_components(); ++c) {
      GapPieces g = whole(d, c);
      for (auto& pieces : g) pieces = split[pieces.front()];
      if (c == p1.component) {
        g[p1.gap] = {s[0], s[2]};
        b.push(d.components()[c], std::move(g));
        b.push({}, {{s[1]}});
      } else {
        b.push(d.components()[c], std::move(g));
      }
    }
    return b.finish(std::move(a));
  }

  const auto& first = split[arc1];
  const auto& second = split[arc2];
  if (p1.component != p2.component) {
    const std::size_t ca = p1.component, cb = p2.component;
    const Component& A = d.components()[ca];
    const Component& B = d.components()[cb];
    Component merged = rotate(A, p1.gap);
    Component rb = rotate(B, p2.gap);
    merged.insert(merged.end(), rb.begin(), rb.end());
    const std::size_t la = A.size(), lb = B.size(), lc = la + lb;
    GapPieces g(std::max<std::size_t>(lc, 1));
    for (std::size_t k = 0; k < lc; ++k) {
      if (k == 0 || k == la) continue;
      g[k] = {k < la ? piece_of(ca, (p1.gap + k) % la) : piece_of(cb, (p2.gap + k - la) % lb)};
    }
    auto& g0 = g[0];
    g0.insert(g0.end(), {second[0], first[1]});
    auto& gl = g[lc == 0 ? 0 : la % lc];
    gl.insert(gl.end(), {first[0], second[1]});
    for (std::size_t c = 0; c < d.num_components(); ++c) {
      if (c == std::max(ca, cb)) continue;
      if (c == std::min(ca, cb)) {
        b.push(merged, g);
        continue;
      }
      GapPieces w = whole(d, c);
      for (auto& pieces : w) pieces = split[pieces.front()];
      b.push(d.components()[c], std::move(w));
    }
    return b.finish(std::move(a));
  }

  // One component cut at two gaps: split into the stretch between them and the rest.
  const std::size_t comp = p1.component;
  const Component& A = d.components()[comp];
  const std::size_t len = A.size();
  const bool ordered = p1.gap < p2.gap;
  const std::size_t lo = ordered ? p1.gap : p2.gap, hi = ordered ? p2.gap : p1.gap;
  const auto& x = ordered ? first : second;   // cut pieces at gap lo
  const auto& y = ordered ? second : first;   // cut pieces at gap hi
  Component inner(A.begin() + static_cast<std::ptrdiff_t>(lo), A.begin() + static_cast<std::ptrdiff_t>(hi));
  Component outer = rotate(A, hi);
  outer.resize(len - (hi - lo));
  GapPieces gi(inner.size()), go(std::max<std::size_t>(outer.size(), 1));
  gi[0] = {y[0], x[1]};
  for (std::size_t k = 1; k < inner.size(); ++k) gi[k] = {piece_of(comp, lo + k)};
  go[0] = {x[0], y[1]};
  for (std::size_t k = 1; k < outer.size(); ++k) go[k] = {piece_of(comp, (hi + k) % len)};
  for (std::size_t c = 0; c < d.num_components(); ++c) {
    if (c == comp) {
      b.push(inner, gi);
      b.push(outer, go);
      continue;
    }
    GapPieces w = whole(d, c);
    for (auto& pieces : w) pieces = split[pieces.front()];
    b.push(d.components()[c], std::move(w));
  }
  return b.finish(std::move(a));
}

std::vector<std::size_t> flat_offsets(const ChainComplex& c) {
  std::vector<std::size_t> off{0};
  for (const auto& g : c.basis) off.push_back(off.back() + g.size());
  return off;
}

}  // namespace

MoveResult apply_move_detailed(const Diagram& d, const ElementaryMove& m) {
  switch (m.kind) {
    case ElementaryMove::Kind::Birth: return birth_move(d);
    case ElementaryMove::Kind::Death: return death_move(d, m.component);
    case ElementaryMove::Kind::Saddle: return saddle_move(d, m.arc1, m.arc2);
    case ElementaryMove::Kind::VirtualMove: return virtual_move(d, m.target);
  }
  throw InternalError("unknown move");
}

Diagram apply_move(const Diagram& d, const ElementaryMove& m) { return apply_move_detailed(d, m).diagram; }

CycleMapping vertex_mapping(const ArcCorrespondence& arcs, const SmoothingState& source,
                            const SmoothingState& target) {
  std::vector<std::ptrdiff_t> cs(arcs.pieces, -1), ct(arcs.pieces, -1);
  for (std::size_t k = 0; k < arcs.source_arcs.size(); ++k)
    for (std::size_t p : arcs.source_arcs[k]) cs[p] = static_cast<std::ptrdiff_t>(source.cycle_of_arc[k]);
  for (std::size_t k = 0; k < arcs.target_arcs.size(); ++k)
    for (std::size_t p : arcs.target_arcs[k]) ct[p] = static_cast<std::ptrdiff_t>(target.cycle_of_arc[k]);
  CycleMapping map;
  map.source_arity = source.num_cycles();
  map.target_arity = target.num_cycles();
  std::set<std::size_t> is, it;
  for (std::size_t p : arcs.handle) {
    if (cs[p] >= 0) is.insert(static_cast<std::size_t>(cs[p]));
    if (ct[p] >= 0) it.insert(static_cast<std::size_t>(ct[p]));
  }
  map.involved_source.assign(is.begin(), is.end());
  map.involved_target.assign(it.begin(), it.end());
  map.carried.assign(map.target_arity, -1);
  for (std::size_t t = 0; t < map.target_arity; ++t) {
    if (it.count(t)) continue;
    std::size_t piece = arcs.target_arcs[target.cycles[t].front()].front();
    if (cs[piece] < 0) throw InternalError("uninvolved cycle has no source counterpart");
    map.carried[t] = cs[piece];
  }
  return map;
}

ChainMap chain_map_between(const ChainComplex& source, const ChainComplex& target, const ArcCorrespondence& arcs,
                           int filtration_degree) {
  if (source.min_degree != target.min_degree || source.basis.size() != target.basis.size())
    throw InternalError("move changed the cube of resolutions");
  ChainMap f;
  f.min_degree = source.min_degree;
  f.filtration_degree = filtration_degree;
  std::vector<MaskTerm> terms;
  for (int i = source.min_degree; i <= source.max_degree(); ++i) {
    SparseMatrix m;
    m.rows = target.rank(i);
    m.cols = source.rank(i);
    const auto& group = source.group(i);
    Word current = ~Word{0};
    CycleMapping map;
    for (std::size_t col = 0; col < group.size(); ++col) {
      const BasisElement& b = group[col];
      if (b.word != current) {
        current = b.word;
        map = vertex_mapping(arcs, (*source.states)[b.word], (*target.states)[b.word]);
      }
      terms.clear();
      apply_local(map, source.variant, b.mask, b.tag, terms);
      for (const MaskTerm& t : terms) {
        std::size_t row = generator_index(target, b.word, t.mask, t.tag);
        m.entries.push_back({static_cast<std::uint32_t>(row), static_cast<std::uint32_t>(col), t.coeff});
        int shift = target.group(i)[row].j - b.j;
        f.observed_degree = f.any_entry ? std::min(f.observed_degree, shift) : shift;
        f.any_entry = true;
      }
    }
    m.canonicalize();
    f.blocks.push_back(std::move(m));
  }
  return f;
}

ChainMap chain_map_of_move(const Diagram& d, const ElementaryMove& m, const Limits& limits) {
  MoveResult r = apply_move_detailed(d, m);
  int degree = m.kind == ElementaryMove::Kind::Saddle ? -1 : m.kind == ElementaryMove::Kind::VirtualMove ? 0 : 1;
  return chain_map_between(build_complex(d, Variant::Lee, limits), build_complex(r.diagram, Variant::Lee, limits),
                           r.arcs, degree);
}

ChainMapCheck check_chain_map(const ChainComplex& source, const ChainComplex& target, const ChainMap& f) {
  ChainMapCheck check;
  auto block = [&](int i) {
    if (i < f.min_degree || i >= f.min_degree + static_cast<int>(f.blocks.size())) {
      SparseMatrix z;
      z.rows = target.rank(i);
      z.cols = source.rank(i);
      return z;
    }
    return f.blocks[static_cast<std::size_t>(i - f.min_degree)];
  };
  for (int i = source.min_degree; i < source.max_degree(); ++i) {
    SparseMatrix lhs = multiply(target.d(i), block(i));
    SparseMatrix rhs = multiply(block(i + 1), source.d(i));
    for (auto& t : rhs.entries) t.value = -t.value;
    lhs.entries.insert(lhs.entries.end(), rhs.entries.begin(), rhs.entries.end());
    lhs.canonicalize();
    if (!lhs.entries.empty()) {
      const Triplet& t = lhs.entries.front();
      const BasisElement& s = source.group(i)[t.col];
      const BasisElement& g = target.group(i + 1)[t.row];
      std::ostringstream os;
      os << "map does not commute with the differential at degree " << i << ": word " << s.word << " mask "
         << s.mask << " -> word " << g.word << " mask " << g.mask << " discrepancy " << t.value;
      check.commutes = false;
      check.problem = os.str();
      return check;
    }
  }
  return check;
}

SparseVector apply_chain_map(const ChainComplex& source, const ChainComplex& target, const ChainMap& f,
                             const SparseVector& flat) {
  auto so = flat_offsets(source), to = flat_offsets(target);
  SparseVector out;
  for (std::size_t k = 0; k < f.blocks.size(); ++k) {
    const SparseMatrix& m = f.blocks[k];
    auto first = flat.lower_bound(so[k]);
    if (first == flat.end() || first->first >= so[k + 1]) continue;
    for (const Triplet& t : m.entries) {
      auto it = flat.find(so[k] + t.col);
      if (it == flat.end()) continue;
      mpq_class& slot = out[to[k] + t.row];
      slot += it->second * t.value;
      if (slot == 0) out.erase(to[k] + t.row);
    }
  }
  return out;
}

std::vector<Diagram> CobordismPresentation::diagrams() const {
  std::vector<Diagram> out{start};
  for (const auto& m : moves) out.push_back(apply_move(out.back(), m));
  return out;
}

namespace {

std::size_t count_kind(const std::vector<ElementaryMove>& moves, ElementaryMove::Kind k) {
  return static_cast<std::size_t>(std::count_if(moves.begin(), moves.end(), [&](const auto& m) { return m.kind == k; }));
}

}  // namespace

std::size_t CobordismPresentation::births() const { return count_kind(moves, ElementaryMove::Kind::Birth); }
std::size_t CobordismPresentation::deaths() const { return count_kind(moves, ElementaryMove::Kind::Death); }
std::size_t CobordismPresentation::saddles() const { return count_kind(moves, ElementaryMove::Kind::Saddle); }

int CobordismPresentation::euler_characteristic() const {
  return static_cast<int>(births() + deaths()) - static_cast<int>(saddles());
}

std::size_t CobordismPresentation::surface_components() const {
  std::vector<std::size_t> parent;
  auto fresh = [&] {
    parent.push_back(parent.size());
    return parent.size() - 1;
  };
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  Diagram d = start;
  std::vector<std::size_t> label;
  for (std::size_t c = 0; c < d.num_components(); ++c) label.push_back(fresh());
  for (const auto& m : moves) {
    MoveResult r = apply_move_detailed(d, m);
    std::vector<std::size_t> source_comp_of_piece(r.arcs.pieces, SIZE_MAX);
    for (std::size_t a = 0; a < r.arcs.source_arcs.size(); ++a)
      for (std::size_t p : r.arcs.source_arcs[a]) source_comp_of_piece[p] = d.arc_position(a).component;
    std::vector<std::size_t> next;
    for (std::size_t c = 0; c < r.diagram.num_components(); ++c) {
      std::size_t id = SIZE_MAX;
      for (std::size_t g = 0; g < r.diagram.arc_count(c); ++g)
        for (std::size_t p : r.arcs.target_arcs[r.diagram.arc_index({c, g})]) {
          std::size_t sc = source_comp_of_piece[p];
          if (sc == SIZE_MAX) continue;
          std::size_t root = find(label[sc]);
          if (id == SIZE_MAX)
            id = root;
          else if (find(id) != root)
            parent[root] = find(id);
        }
      next.push_back(id == SIZE_MAX ? fresh() : id);
    }
    label = std::move(next);
    d = std::move(r.diagram);
  }
  std::set<std::size_t> roots;
  for (std::size_t x = 0; x < parent.size(); ++x) roots.insert(find(x));
  return roots.size();
}

std::optional<int> CobordismPresentation::genus() const {
  if (surface_components() != 1) return std::nullopt;
  auto ds = diagrams();
  int boundary = static_cast<int>(ds.front().num_components() + ds.back().num_components());
  int twice = 2 - boundary - euler_characteristic();
  if (twice < 0 || twice % 2 != 0) throw InternalError("inconsistent handle bookkeeping");
  return twice / 2;
}

std::vector<std::size_t> CobordismPresentation::degenerate_circle_counts() const {
  std::vector<std::size_t> out;
  for (const auto& d : diagrams()) out.push_back(degenerate_circles(gauss_diagram(d)).size());
  return out;
}

namespace {

std::string strip(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::size_t parse_index(const std::string& w, const std::string& line) {
  if (w.empty() || w.find_first_not_of("0123456789") != std::string::npos)
    throw SyntaxError("expected a nonnegative integer in '" + line + "'");
  return std::stoul(w);
}

// An arc is either a global index or "component:gap".
std::size_t parse_arc(const Diagram& d, const std::string& w, const std::string& line) {
  auto colon = w.find(':');
  if (colon == std::string::npos) return parse_index(w, line);
  std::size_t comp = parse_index(w.substr(0, colon), line), gap = parse_index(w.substr(colon + 1), line);
  if (comp >= d.num_components() || gap >= d.arc_count(comp)) throw BadArc("no arc " + w);
  return d.arc_index({comp, gap});
}

}  // namespace

CobordismPresentation parse_presentation(const std::string& text) {
  CobordismPresentation p;
  std::istringstream in(text);
  std::string raw;
  bool started = false;
  Diagram current;
  while (std::getline(in, raw)) {
    std::string line = strip(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (!started) {
      if (line.rfind("start:", 0) != 0) throw SyntaxError("presentation must begin with 'start:'");
      p.start = current = Diagram::parse(strip(line.substr(6)));
      started = true;
      continue;
    }
    std::istringstream words(line);
    std::string verb;
    words >> verb;
    ElementaryMove m;
    if (verb == "birth") {
      m = ElementaryMove::birth();
    } else if (verb == "death") {
      std::string c;
      words >> c;
      m = ElementaryMove::death(parse_index(c, line));
    } else if (verb == "saddle") {
      std::string a, b;
      words >> a >> b;
      m = ElementaryMove::saddle(parse_arc(current, a, line), parse_arc(current, b, line));
    } else if (verb == "vmove") {
      m = ElementaryMove::virtual_move(Diagram::parse(strip(line.substr(5))));
    } else {
      throw SyntaxError("unknown move '" + verb + "'");
    }
    current = apply_move(current, m);
    p.moves.push_back(std::move(m));
  }
  if (!started) throw SyntaxError("empty presentation");
  return p;
}

InducedMap induced_map_on_lee(const CobordismPresentation& p, const Limits& limits) {
  std::vector<ChainComplex> complexes;
  std::vector<ChainMap> maps;
  Diagram d = p.start;
  complexes.push_back(build_complex(d, Variant::Lee, limits));
  for (const auto& m : p.moves) {
    MoveResult r = apply_move_detailed(d, m);
    complexes.push_back(build_complex(r.diagram, Variant::Lee, limits));
    int degree = m.kind == ElementaryMove::Kind::Saddle ? -1 : m.kind == ElementaryMove::Kind::VirtualMove ? 0 : 1;
    maps.push_back(chain_map_between(complexes[complexes.size() - 2], complexes.back(), r.arcs, degree));
    ChainMapCheck check = check_chain_map(complexes[complexes.size() - 2], complexes.back(), maps.back());
    if (!check.commutes) throw NotAChainMap("step '" + m.str() + "': " + check.problem);
    d = std::move(r.diagram);
  }
  LeeHomology first(complexes.front(), true), last(complexes.back(), true);
  InducedMap out;
  out.source_classes = first.classes();
  out.target_classes = last.classes();
  out.filtration_budget = p.euler_characteristic();
  out.matrix.assign(out.target_classes.size(), std::vector<mpq_class>(out.source_classes.size()));
  bool seen = false;
  for (std::size_t s = 0; s < out.source_classes.size(); ++s) {
    SparseVector v = first.representative(s);
    for (std::size_t k = 0; k < maps.size(); ++k) v = apply_chain_map(complexes[k], complexes[k + 1], maps[k], v);
    auto coords = last.coordinates(v);
    for (std::size_t t = 0; t < coords.size(); ++t) {
      out.matrix[t][s] = coords[t];
      if (coords[t] == 0) continue;
      out.nonzero = true;
      int shift = out.target_classes[t].level - out.source_classes[s].level;
      out.observed_degree = seen ? std::min(out.observed_degree, shift) : shift;
      seen = true;
    }
  }
  return out;
}

std::set<int> acs_degrees(const Diagram& d) {
  std::set<int> out;
  for (const auto& pc : enumerate_alternately_coloured(d)) out.insert(pc.state.ones - d.n_minus());
  return out;
}

std::set<int> shared_degrees(const CobordismPresentation& p) {
  auto ds = p.diagrams();
  std::set<int> shared = acs_degrees(ds.front());
  for (std::size_t k = 1; k < ds.size(); ++k) {
    std::set<int> here = acs_degrees(ds[k]), keep;
    std::set_intersection(shared.begin(), shared.end(), here.begin(), here.end(), std::inserter(keep, keep.end()));
    shared = std::move(keep);
  }
  return shared;
}

std::size_t count_incoherent_saddle_faces(const Diagram& d, const ElementaryMove& saddle) {
  if (saddle.kind != ElementaryMove::Kind::Saddle) return 0;
  MoveResult r = apply_move_detailed(d, saddle);
  const std::size_t n = d.num_crossings();
  std::size_t count = 0;
  for (Word w = 0; w < (Word{1} << n); ++w) {
    SmoothingState s = resolve(d, w);
    CycleMapping map = vertex_mapping(r.arcs, s, resolve(r.diagram, w));
    if (map.involved_source.size() != 1 || map.involved_target.size() != 1) continue;
    for (std::size_t k = 0; k < n; ++k)
      if (!((w >> k) & 1) && classify_edge(d, w, k) == EdgeKind::SingleCycle &&
          s.crossing_traversal[k] != map.involved_source)
        ++count;
  }
  return count;
}

bool saddle_kills_acs(const Diagram& d, const ElementaryMove& saddle) {
  if (saddle.kind != ElementaryMove::Kind::Saddle) throw InvalidMove("not a saddle");
  if (saddle.arc1 >= d.num_arcs() || saddle.arc2 >= d.num_arcs()) throw BadArc("saddle arc out of range");
  ArcPosition a = d.arc_position(saddle.arc1), b = d.arc_position(saddle.arc2);
  if (a.component != b.component) throw MultiComponentSaddle("saddle joins two components");
  if (acs_count(d) == 0) throw InvalidMove("diagram has no alternately coloured smoothing");
  // Arc colours alternate along a component, so opposite colours means gaps of opposite parity.
  return (a.gap + b.gap) % 2 == 1;
}

}  // namespace dkh
