#include "dkh/algebra.hpp"

#include <algorithm>

#include "dkh/error.hpp"

namespace dkh {

namespace {

LabelMask to_mask(const std::vector<bool>& minus) {
  LabelMask m = 0;
  for (std::size_t c = 0; c < minus.size(); ++c)
    if (minus[c]) m |= LabelMask{1} << c;
  return m;
}

std::vector<bool> from_mask(LabelMask m, std::size_t arity) {
  std::vector<bool> out(arity);
  for (std::size_t c = 0; c < arity; ++c) out[c] = (m >> c) & 1;
  return out;
}

bool bit(LabelMask m, std::size_t c) { return (m >> c) & 1; }

LabelMask carry(const CycleMapping& map, LabelMask src) {
  LabelMask out = 0;
  for (std::size_t t = 0; t < map.target_arity; ++t)
    if (map.carried[t] >= 0 && bit(src, static_cast<std::size_t>(map.carried[t])))
      out |= LabelMask{1} << t;
  return out;
}

LabelMask with(LabelMask m, std::size_t c, bool minus) {
  return minus ? (m | (LabelMask{1} << c)) : (m & ~(LabelMask{1} << c));
}

}  // namespace

DoubledGenerator make_generator(const std::string& labels, Tag tag) {
  DoubledGenerator g;
  g.tag = tag;
  for (char ch : labels) {
    if (ch != '+' && ch != '-') throw SyntaxError("labels must be + or -");
    g.minus.push_back(ch == '-');
  }
  return g;
}

std::string to_string(const DoubledGenerator& g) {
  std::string s = "(";
  for (bool b : g.minus) s += b ? '-' : '+';
  s += g.tag == Tag::Upper ? ")^u" : ")^l";
  return s;
}

void AlgebraElement::add(const DoubledGenerator& g, const mpq_class& c) {
  if (c == 0) return;
  auto it = terms_.find(g);
  if (it == terms_.end()) {
    terms_.emplace(g, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

mpq_class AlgebraElement::coefficient(const DoubledGenerator& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  for (const auto& [g, c] : o.terms_) r.add(g, c);
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const { return *this + o * -1; }

AlgebraElement AlgebraElement::operator*(const mpq_class& c) const {
  AlgebraElement r;
  if (c == 0) return r;
  for (const auto& [g, v] : terms_) r.terms_.emplace(g, v * c);
  return r;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [g, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.get_str() + "*" + to_string(g);
  }
  return s;
}

CycleMapping edge_mapping(const SmoothingState& from, const SmoothingState& to, std::size_t k) {
  CycleMapping map;
  map.source_arity = from.num_cycles();
  map.target_arity = to.num_cycles();
  map.involved_source = from.crossing_traversal[k];
  map.involved_target = to.crossing_traversal[k];
  map.carried.assign(map.target_arity, -1);
  for (std::size_t t = 0; t < map.target_arity; ++t) {
    if (std::find(map.involved_target.begin(), map.involved_target.end(), t) !=
        map.involved_target.end())
      continue;
    map.carried[t] = static_cast<std::ptrdiff_t>(from.cycle_of_arc[to.cycles[t].front()]);
  }
  return map;
}

void apply_local(const CycleMapping& map, Variant variant, LabelMask mask, Tag tag,
                 std::vector<MaskTerm>& out) {
  const bool lee = variant == Variant::Lee;
  const LabelMask base = carry(map, mask);
  const std::size_t ns = map.involved_source.size(), nt = map.involved_target.size();
  if (ns == 2 && nt == 1) {
    std::size_t t = map.involved_target[0];
    bool a = bit(mask, map.involved_source[0]), b = bit(mask, map.involved_source[1]);
    if (!a && !b) out.push_back({base, tag, 1});
    else if (a != b) out.push_back({with(base, t, true), tag, 1});
    else if (lee) out.push_back({base, tag, 1});
  } else if (ns == 1 && nt == 2) {
    std::size_t t1 = map.involved_target[0], t2 = map.involved_target[1];
    bool a = bit(mask, map.involved_source[0]);
    if (!a) {
      out.push_back({with(base, t1, true), tag, 1});
      out.push_back({with(base, t2, true), tag, 1});
    } else {
      out.push_back({with(with(base, t1, true), t2, true), tag, 1});
      if (lee) out.push_back({base, tag, 1});
    }
  } else if (ns == 1 && nt == 1) {
    std::size_t t = map.involved_target[0];
    bool a = bit(mask, map.involved_source[0]);
    if (tag == Tag::Upper) {
      out.push_back({with(base, t, a), Tag::Lower, 1});
    } else if (!a) {
      out.push_back({with(base, t, true), Tag::Upper, 2});
    } else if (lee) {
      out.push_back({base, Tag::Upper, 2});
    }
  } else if (ns == 0 && nt == 1) {
    out.push_back({base, tag, 1});
  } else if (ns == 1 && nt == 0) {
    if (bit(mask, map.involved_source[0])) out.push_back({base, tag, 1});
  } else if (ns == 0 && nt == 0) {
    out.push_back({base, tag, 1});
  } else {
    throw ArityMismatch("unsupported involved-cycle arities");
  }
}

AlgebraElement apply_edge_map(EdgeKind kind, Variant variant, const AlgebraElement& input,
                              const CycleMapping& map) {
  const std::size_t ns = map.involved_source.size(), nt = map.involved_target.size();
  bool ok = (kind == EdgeKind::Merge && ns == 2 && nt == 1) ||
            (kind == EdgeKind::Split && ns == 1 && nt == 2) ||
            (kind == EdgeKind::SingleCycle && ns == 1 && nt == 1);
  if (!ok || map.carried.size() != map.target_arity) throw ArityMismatch("mapping does not fit edge kind");
  AlgebraElement result;
  std::vector<MaskTerm> terms;
  for (const auto& [g, c] : input.terms()) {
    if (g.minus.size() != map.source_arity) throw ArityMismatch("generator arity differs from source state");
    terms.clear();
    apply_local(map, variant, to_mask(g.minus), g.tag, terms);
    for (const MaskTerm& t : terms)
      result.add(DoubledGenerator{from_mask(t.mask, map.target_arity), t.tag}, c * t.coeff);
  }
  return result;
}

AlgebraElement birth_map(const AlgebraElement& input, std::size_t position) {
  AlgebraElement result;
  for (const auto& [g, c] : input.terms()) {
    if (position > g.minus.size()) throw ArityMismatch("birth position out of range");
    DoubledGenerator h = g;
    h.minus.insert(h.minus.begin() + static_cast<std::ptrdiff_t>(position), false);
    result.add(h, c);
  }
  return result;
}

AlgebraElement death_map(const AlgebraElement& input, std::size_t position) {
  AlgebraElement result;
  for (const auto& [g, c] : input.terms()) {
    if (position >= g.minus.size()) throw ArityMismatch("death position out of range");
    if (!g.minus[position]) continue;
    DoubledGenerator h = g;
    h.minus.erase(h.minus.begin() + static_cast<std::ptrdiff_t>(position));
    result.add(h, c);
  }
  return result;
}

namespace {

// Rewrites each factor through the 2x2 matrix [[a_pp, a_pm], [a_mp, a_mm]] (column = input label).
AlgebraElement change_basis(const AlgebraElement& x, const mpq_class a[2][2]) {
  AlgebraElement result;
  for (const auto& [g, c] : x.terms()) {
    std::vector<std::pair<DoubledGenerator, mpq_class>> partial = {{DoubledGenerator{{}, g.tag}, c}};
    for (bool in_minus : g.minus) {
      std::vector<std::pair<DoubledGenerator, mpq_class>> next;
      for (auto& [h, v] : partial)
        for (int out = 0; out < 2; ++out) {
          const mpq_class& f = a[out][in_minus ? 1 : 0];
          if (f == 0) continue;
          DoubledGenerator k = h;
          k.minus.push_back(out == 1);
          next.emplace_back(k, v * f);
        }
      partial = std::move(next);
    }
    for (auto& [h, v] : partial) result.add(h, v);
  }
  return result;
}

}  // namespace

AlgebraElement to_red_green(const AlgebraElement& x) {
  // v_+ = r + g, v_- = r - g
  static const mpq_class a[2][2] = {{1, 1}, {1, -1}};
  return change_basis(x, a);
}

AlgebraElement from_red_green(const AlgebraElement& x) {
  // r = (v_+ + v_-)/2, g = (v_+ - v_-)/2
  static const mpq_class a[2][2] = {{mpq_class(1, 2), mpq_class(1, 2)},
                                    {mpq_class(1, 2), mpq_class(-1, 2)}};
  return change_basis(x, a);
}

int p_degree(std::size_t cycles, LabelMask mask, Tag tag) {
  int minus = __builtin_popcountll(mask);
  return static_cast<int>(cycles) - 2 * minus - (tag == Tag::Lower ? 1 : 0);
}

int p_degree(const DoubledGenerator& g) { return p_degree(g.minus.size(), to_mask(g.minus), g.tag); }

int quantum_degree(const DoubledGenerator& g, int height, int n_plus, int n_minus) {
  return p_degree(g) + height + n_plus - n_minus;
}

}  // namespace dkh
