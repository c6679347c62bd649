#include "dkh/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "dkh/error.hpp"

namespace dkh {

namespace {

std::string token_str(const Token& t) {
  std::string s(1, t.pass == Pass::Over ? 'O' : 'U');
  s += std::to_string(t.crossing);
  s += t.sign > 0 ? '+' : '-';
  return s;
}

// Accepts ASCII '-' and U+2212 as minus.
std::string normalize_minus(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (k + 2 < text.size() && static_cast<unsigned char>(text[k]) == 0xE2 &&
        static_cast<unsigned char>(text[k + 1]) == 0x88 &&
        static_cast<unsigned char>(text[k + 2]) == 0x92) {
      out += '-';
      k += 2;
    } else {
      out += text[k];
    }
  }
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

Token parse_token(const std::string& w) {
  if (w.size() < 3 || (w[0] != 'O' && w[0] != 'U') || (w.back() != '+' && w.back() != '-'))
    throw SyntaxError("bad token '" + w + "'");
  for (std::size_t k = 1; k + 1 < w.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(w[k]))) throw SyntaxError("bad token '" + w + "'");
  Token t;
  t.pass = w[0] == 'O' ? Pass::Over : Pass::Under;
  t.sign = w.back() == '+' ? 1 : -1;
  try {
    t.crossing = std::stoi(w.substr(1, w.size() - 2));
  } catch (const std::exception&) {
    throw SyntaxError("crossing id out of range in '" + w + "'");
  }
  return t;
}

// Offset that moves every id of b strictly above the ids of a.
int id_shift(const Diagram& a, const Diagram& b) {
  if (a.num_crossings() == 0 || b.num_crossings() == 0) return 0;
  return a.max_crossing_id() + 1 - b.crossings().front().id;
}

}  // namespace

Diagram::Diagram() : Diagram(std::vector<Component>{Component{}}) {}

Diagram::Diagram(std::vector<Component> components) : components_(std::move(components)) {
  struct Seen {
    int sign = 0;
    int overs = 0, unders = 0;
    Occurrence o, u;
  };
  std::map<int, Seen> seen;
  for (std::size_t c = 0; c < components_.size(); ++c) {
    for (std::size_t p = 0; p < components_[c].size(); ++p) {
      const Token& t = components_[c][p];
      if (t.sign != 1 && t.sign != -1) throw SyntaxError("sign must be +1 or -1");
      if (t.crossing < 0) throw SyntaxError("negative crossing id");
      Seen& s = seen[t.crossing];
      if (s.sign != 0 && s.sign != t.sign)
        throw SignMismatch("crossing " + std::to_string(t.crossing) + " has inconsistent signs");
      s.sign = t.sign;
      if (t.pass == Pass::Over) {
        ++s.overs;
        s.o = {c, p};
      } else {
        ++s.unders;
        s.u = {c, p};
      }
    }
  }
  arc_offset_.resize(components_.size());
  for (std::size_t c = 0; c < components_.size(); ++c) {
    arc_offset_[c] = num_arcs_;
    num_arcs_ += std::max<std::size_t>(1, components_[c].size());
  }
  for (const auto& [id, s] : seen) {
    if (s.overs != 1 || s.unders != 1)
      throw UnmatchedCrossing("crossing " + std::to_string(id) +
                              " must occur exactly once as O and once as U");
    CrossingArcs ca;
    ca.id = id;
    ca.sign = s.sign;
    auto in_arc = [&](Occurrence x) { return arc_offset_[x.component] + x.position; };
    auto out_arc = [&](Occurrence x) {
      return arc_offset_[x.component] + (x.position + 1) % components_[x.component].size();
    };
    ca.over_in = in_arc(s.o);
    ca.over_out = out_arc(s.o);
    ca.under_in = in_arc(s.u);
    ca.under_out = out_arc(s.u);
    crossings_.push_back(ca);
    over_.push_back(s.o);
    under_.push_back(s.u);
    (s.sign > 0 ? n_plus_ : n_minus_)++;
  }
}

Diagram Diagram::parse(std::string_view raw) {
  std::string text = normalize_minus(raw);
  std::vector<Component> comps;
  std::string piece;
  std::stringstream ss(text);
  std::vector<std::string> parts;
  while (std::getline(ss, piece, '/')) parts.push_back(piece);
  if (parts.empty() || (!text.empty() && text.back() == '/')) parts.push_back("");
  for (const std::string& part : parts) {
    std::string body = trim(part);
    Component comp;
    if (body == "()" || body.empty()) {
      if (body.empty() && parts.size() > 1) throw SyntaxError("empty component must be written ()");
      comps.push_back(comp);
      continue;
    }
    std::stringstream ts(body);
    std::string w;
    while (ts >> w) comp.push_back(parse_token(w));
    comps.push_back(comp);
  }
  return Diagram(std::move(comps));
}

std::string Diagram::str() const {
  std::string out;
  for (std::size_t c = 0; c < components_.size(); ++c) {
    if (c) out += " / ";
    if (components_[c].empty()) {
      out += "()";
      continue;
    }
    for (std::size_t p = 0; p < components_[c].size(); ++p) {
      if (p) out += ' ';
      out += token_str(components_[c][p]);
    }
  }
  return out;
}

std::size_t Diagram::crossing_index(int id) const {
  auto it = std::lower_bound(crossings_.begin(), crossings_.end(), id,
                             [](const CrossingArcs& a, int v) { return a.id < v; });
  if (it == crossings_.end() || it->id != id)
    throw UnknownCrossing("no crossing with id " + std::to_string(id));
  return static_cast<std::size_t>(it - crossings_.begin());
}

bool Diagram::has_crossing(int id) const {
  auto it = std::lower_bound(crossings_.begin(), crossings_.end(), id,
                             [](const CrossingArcs& a, int v) { return a.id < v; });
  return it != crossings_.end() && it->id == id;
}

int Diagram::max_crossing_id() const { return crossings_.empty() ? 0 : crossings_.back().id; }

Occurrence Diagram::over(int id) const { return over_[crossing_index(id)]; }
Occurrence Diagram::under(int id) const { return under_[crossing_index(id)]; }

std::size_t Diagram::arc_count(std::size_t component) const {
  if (component >= components_.size()) throw BadArc("component index out of range");
  return std::max<std::size_t>(1, components_[component].size());
}

std::size_t Diagram::arc_index(ArcPosition a) const {
  if (a.component >= components_.size()) throw BadArc("component index out of range");
  if (a.gap >= arc_count(a.component)) throw BadArc("gap index out of range");
  return arc_offset_[a.component] + a.gap;
}

ArcPosition Diagram::arc_position(std::size_t arc) const {
  if (arc >= num_arcs_) throw BadArc("arc index out of range");
  std::size_t c = static_cast<std::size_t>(
      std::upper_bound(arc_offset_.begin(), arc_offset_.end(), arc) - arc_offset_.begin() - 1);
  return {c, arc - arc_offset_[c]};
}

Diagram mirror(const Diagram& d) {
  std::vector<Component> comps = d.components();
  for (auto& comp : comps)
    for (auto& t : comp) {
      t.sign = -t.sign;
      t.pass = t.pass == Pass::Over ? Pass::Under : Pass::Over;
    }
  return Diagram(std::move(comps));
}

Diagram disjoint_union(const Diagram& a, const Diagram& b) {
  std::vector<Component> comps = a.components();
  int shift = id_shift(a, b);
  for (Component comp : b.components()) {
    for (auto& t : comp) t.crossing += shift;
    comps.push_back(std::move(comp));
  }
  return Diagram(std::move(comps));
}

Diagram connect_sum(const Diagram& a, std::size_t arc_a, const Diagram& b, std::size_t arc_b) {
  if (a.num_components() != 1 || b.num_components() != 1)
    throw NotAKnot("connect_sum needs two knot diagrams");
  const Component& ca = a.components()[0];
  Component cb = b.components()[0];
  if (arc_a >= a.arc_count(0) || arc_b >= b.arc_count(0)) throw BadArc("splice gap out of range");
  int shift = id_shift(a, b);
  for (auto& t : cb) t.crossing += shift;
  std::rotate(cb.begin(), cb.begin() + static_cast<std::ptrdiff_t>(arc_b), cb.end());
  Component out(ca.begin(), ca.begin() + static_cast<std::ptrdiff_t>(arc_a));
  out.insert(out.end(), cb.begin(), cb.end());
  out.insert(out.end(), ca.begin() + static_cast<std::ptrdiff_t>(arc_a), ca.end());
  return Diagram({out});
}

Diagram flank(const Diagram& d, int crossing) {
  if (!d.has_crossing(crossing)) throw UnknownCrossing("no crossing with id " + std::to_string(crossing));
  std::vector<Component> comps = d.components();
  for (auto& comp : comps)
    for (auto& t : comp)
      if (t.crossing == crossing) t.pass = t.pass == Pass::Over ? Pass::Under : Pass::Over;
  return Diagram(std::move(comps));
}

Diagram virtualize(const Diagram& d, const std::set<int>& crossings) {
  for (int id : crossings)
    if (!d.has_crossing(id)) throw UnknownCrossing("no crossing with id " + std::to_string(id));
  std::vector<Component> comps;
  for (const auto& comp : d.components()) {
    Component kept;
    for (const auto& t : comp)
      if (!crossings.count(t.crossing)) kept.push_back(t);
    comps.push_back(std::move(kept));
  }
  return Diagram(std::move(comps));
}

Diagram relabel_canonical(const Diagram& d) {
  std::map<int, int> fresh;
  for (const auto& comp : d.components())
    for (const auto& t : comp)
      if (!fresh.count(t.crossing)) fresh.emplace(t.crossing, static_cast<int>(fresh.size()) + 1);
  std::vector<Component> comps = d.components();
  for (auto& comp : comps)
    for (auto& t : comp) t.crossing = fresh.at(t.crossing);
  return Diagram(std::move(comps));
}

GaussDiagram gauss_diagram(const Diagram& d) {
  GaussDiagram g;
  for (const auto& comp : d.components()) g.circle_sizes.push_back(comp.size());
  for (const auto& c : d.crossings()) g.chords.push_back({c.id, c.sign, d.over(c.id), d.under(c.id)});
  return g;
}

std::set<std::size_t> degenerate_circles(const GaussDiagram& g) {
  std::set<std::size_t> out;
  for (std::size_t c = 0; c < g.circle_sizes.size(); ++c)
    if (g.circle_sizes[c] % 2 == 1) out.insert(c);
  return out;
}

Parity crossing_parity(const Diagram& d, int crossing) {
  Occurrence o = d.over(crossing), u = d.under(crossing);
  if (o.component != u.component)
    throw NotAKnot("parity is undefined for a chord joining two circles");
  std::size_t lo = std::min(o.position, u.position), hi = std::max(o.position, u.position);
  return (hi - lo - 1) % 2 == 1 ? Parity::Odd : Parity::Even;
}

int odd_writhe(const Diagram& d) {
  if (d.num_components() != 1) throw NotAKnot("odd writhe needs a knot diagram");
  int j = 0;
  for (const auto& c : d.crossings())
    if (crossing_parity(d, c.id) == Parity::Odd) j += c.sign;
  return j;
}

bool is_leftmost(const Diagram& d) {
  if (d.num_components() != 1) throw NotAKnot("leftmost test needs a knot diagram");
  for (const auto& c : d.crossings()) {
    Parity p = crossing_parity(d, c.id);
    if (c.sign > 0 && p != Parity::Even) return false;
    if (c.sign < 0 && p != Parity::Odd) return false;
  }
  return true;
}

}  // namespace dkh
