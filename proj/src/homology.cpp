#include "dkh/homology.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <thread>

#include "dkh/error.hpp"
#include "dkh/smoothing.hpp"

namespace dkh {

void BigradedAbelianGroup::set(int i, int j, BidegreeGroup g) {
  if (g.is_zero())
    groups.erase({i, j});
  else
    groups[{i, j}] = std::move(g);
}

BidegreeGroup BigradedAbelianGroup::at(int i, int j) const {
  auto it = groups.find({i, j});
  return it == groups.end() ? BidegreeGroup{} : it->second;
}

std::size_t BigradedAbelianGroup::total_free_rank() const {
  std::size_t t = 0;
  for (const auto& [k, g] : groups) t += g.free_rank;
  return t;
}

namespace {

template <class F>
void parallel_for(std::size_t count, F&& body) {
  const std::size_t workers = std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t k; (k = next++) < count;) {
        try {
          body(k);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

int residue4(int j) { return ((j % 4) + 4) % 4; }

}  // namespace

BigradedAbelianGroup homology(const ChainComplex& c, Ring ring) {
  auto blocks = split_by_quantum(c);
  std::vector<std::pair<int, const ChainComplex*>> work;
  for (const auto& [j, block] : blocks) work.emplace_back(j, &block);
  std::vector<std::vector<std::pair<int, BidegreeGroup>>> results(work.size());
  parallel_for(work.size(), [&](std::size_t w) {
    const ChainComplex& b = *work[w].second;
    std::vector<SmithForm> snf;
    for (int i = b.min_degree; i < b.max_degree(); ++i) snf.push_back(smith_normal_form(b.d(i)));
    for (int i = b.min_degree; i <= b.max_degree(); ++i) {
      std::size_t k = static_cast<std::size_t>(i - b.min_degree);
      std::size_t out = i < b.max_degree() ? snf[k].rank() : 0;
      std::size_t in = i > b.min_degree ? snf[k - 1].rank() : 0;
      BidegreeGroup g;
      g.free_rank = b.rank(i) - out - in;
      if (ring == Ring::Integers && i > b.min_degree)
        for (const auto& f : snf[k - 1].factors)
          if (f > 1) g.torsion.push_back(f);
      if (!g.is_zero()) results[w].emplace_back(i, std::move(g));
    }
  });
  BigradedAbelianGroup h;
  for (std::size_t w = 0; w < work.size(); ++w)
    for (auto& [i, g] : results[w]) h.set(i, work[w].first, std::move(g));
  return h;
}

BigradedAbelianGroup dkh(const Diagram& d, Ring ring, const Limits& limits) {
  return homology(build_complex(d, Variant::Standard, limits), ring);
}

LeeHomology::LeeHomology(ChainComplex complex, bool keep_representatives) : complex_(std::move(complex)) {
  if (complex_.variant != Variant::Lee) throw VariantMismatch("Lee homology needs the Lee differential");
  offset_.push_back(0);
  for (const auto& g : complex_.basis) offset_.push_back(offset_.back() + g.size());
  const std::size_t total = offset_.back();
  local_of_flat_.assign(total, {0, 0});

  struct Key {
    int j, i;
    std::size_t flat;
  };
  std::vector<std::vector<Key>> order(4);
  for (int i = complex_.min_degree; i <= complex_.max_degree(); ++i) {
    const auto& g = complex_.group(i);
    for (std::size_t idx = 0; idx < g.size(); ++idx)
      order[static_cast<std::size_t>(residue4(g[idx].j))].push_back({g[idx].j, i, flat_index(i, idx)});
  }
  for (auto& keys : order)
    std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
      if (a.j != b.j) return a.j > b.j;
      if (a.i != b.i) return a.i > b.i;
      return a.flat < b.flat;
    });
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t pos = 0; pos < order[r].size(); ++pos) local_of_flat_[order[r][pos].flat] = {r, pos};

  std::vector<std::vector<std::vector<std::pair<std::size_t, long>>>> columns(4);
  for (std::size_t r = 0; r < 4; ++r) columns[r].resize(order[r].size());
  for (int i = complex_.min_degree; i < complex_.max_degree(); ++i)
    for (const Triplet& t : complex_.d(i).entries) {
      auto [rs, ps] = local_of_flat_[flat_index(i, t.col)];
      auto [rt, pt] = local_of_flat_[flat_index(i + 1, t.row)];
      if (rs != rt) throw InternalError("Lee differential mixes quantum residues mod 4");
      columns[rs][ps].emplace_back(pt, t.value);
    }

  std::vector<std::size_t> filled;
  for (std::size_t r = 0; r < 4; ++r) {
    if (order[r].empty()) continue;
    std::vector<std::size_t> flat;
    for (const Key& k : order[r]) flat.push_back(k.flat);
    for (std::size_t pos = 0; pos < flat.size(); ++pos) local_of_flat_[flat[pos]].first = pieces_.size();
    pieces_.push_back(Piece{std::move(flat), FilteredReduction(order[r].size(), columns[r], keep_representatives)});
  }

  struct Found {
    Class c;
    std::size_t piece, ess;
  };
  std::vector<Found> found;
  for (std::size_t p = 0; p < pieces_.size(); ++p) {
    const auto& ess = pieces_[p].reduction.essential();
    for (std::size_t k = 0; k < ess.size(); ++k) {
      std::size_t flat = pieces_[p].flat[ess[k]];
      auto deg = static_cast<std::size_t>(std::upper_bound(offset_.begin(), offset_.end(), flat) - offset_.begin() - 1);
      const BasisElement& b = complex_.basis[deg][flat - offset_[deg]];
      found.push_back({{b.i, b.j}, p, k});
    }
  }
  std::stable_sort(found.begin(), found.end(), [](const Found& a, const Found& b) {
    if (a.c.degree != b.c.degree) return a.c.degree < b.c.degree;
    return a.c.level > b.c.level;
  });
  for (const Found& f : found) {
    classes_.push_back(f.c);
    class_origin_.emplace_back(f.piece, f.ess);
  }
}

std::size_t LeeHomology::flat_index(int i, std::size_t idx) const {
  return offset_.at(static_cast<std::size_t>(i - complex_.min_degree)) + idx;
}

SparseVector LeeHomology::representative(std::size_t k) const {
  auto [p, e] = class_origin_.at(k);
  const Piece& piece = pieces_[p];
  const auto& vals = piece.reduction.representative(e);
  const auto& idx = piece.reduction.representative_support(e);
  SparseVector v;
  for (std::size_t t = 0; t < idx.size(); ++t) v[piece.flat[idx[t]]] = vals[t];
  return v;
}

std::vector<mpq_class> LeeHomology::coordinates(const SparseVector& cycle) const {
  std::vector<SparseVector> local(pieces_.size());
  for (const auto& [flat, v] : cycle) {
    if (flat >= local_of_flat_.size()) throw InternalError("chain index out of range");
    auto [p, pos] = local_of_flat_[flat];
    if (v != 0) local[p][pos] = v;
  }
  std::vector<std::vector<mpq_class>> per_piece(pieces_.size());
  for (std::size_t p = 0; p < pieces_.size(); ++p)
    per_piece[p] = local[p].empty() ? std::vector<mpq_class>(pieces_[p].reduction.essential().size())
                                    : pieces_[p].reduction.coordinates(local[p]);
  std::vector<mpq_class> out(classes_.size());
  for (std::size_t k = 0; k < classes_.size(); ++k) out[k] = per_piece[class_origin_[k].first][class_origin_[k].second];
  return out;
}

SparseVector LeeHomology::differential(const SparseVector& chain) const {
  SparseVector out;
  for (int i = complex_.min_degree; i < complex_.max_degree(); ++i) {
    const std::size_t lo = offset_[static_cast<std::size_t>(i - complex_.min_degree)];
    const std::size_t hi = offset_[static_cast<std::size_t>(i - complex_.min_degree) + 1];
    auto first = chain.lower_bound(lo);
    if (first == chain.end() || first->first >= hi) continue;
    const SparseMatrix& m = complex_.differential[static_cast<std::size_t>(i - complex_.min_degree)];
    for (const Triplet& t : m.entries) {
      auto it = chain.find(lo + t.col);
      if (it == chain.end()) continue;
      mpq_class& slot = out[hi + t.row];
      slot += it->second * t.value;
      if (slot == 0) out.erase(hi + t.row);
    }
  }
  return out;
}

std::size_t LeeSummary::total_rank() const {
  std::size_t t = 0;
  for (const auto& [i, r] : rank_by_degree) t += r;
  return t;
}

LeeSummary lee_summary(const Diagram& d, const Limits& limits) {
  LeeHomology h(build_complex(d, Variant::Lee, limits), false);
  LeeSummary s;
  for (const auto& c : h.classes()) {
    ++s.rank_by_degree[c.degree];
    ++s.levels[c.level];
  }
  return s;
}

RasmussenDetail rasmussen_detail(const Diagram& d, const Limits& limits) {
  if (d.num_components() != 1) throw NotAKnot("the Rasmussen pair is defined for knots");
  LeeHomology h(build_complex(d, Variant::Lee, limits), true);
  const auto& cls = h.classes();
  if (cls.size() != 4) throw InternalError("doubled Lee homology of a knot should have rank 4");
  for (const auto& c : cls)
    if (c.degree != cls.front().degree) throw InternalError("Lee classes of a knot span several degrees");
  auto acs = enumerate_alternately_coloured(d);
  if (acs.empty()) throw InternalError("knot without alternately coloured smoothing");
  const ProperColouring& pc = acs.front();
  const std::size_t m = pc.state.num_cycles();
  const int i = pc.state.ones - d.n_minus();
  LabelMask green = 0;
  for (std::size_t c = 0; c < m; ++c)
    if (pc.colour[c]) green |= LabelMask{1} << c;

  // Level of s +/- sbar: lowest level among the basis classes it involves.
  auto level = [&](Tag tag, int sign) {
    SparseVector v;
    for (LabelMask mask = 0; mask < (LabelMask{1} << m); ++mask) {
      int a = (__builtin_popcountll(mask & green) & 1) ? -1 : 1;
      int b = (__builtin_popcountll(mask & ~green) & 1) ? -1 : 1;
      if (a + sign * b == 0) continue;
      v[h.flat_index(i, generator_index(h.complex(), pc.state.word, mask, tag))] = a + sign * b;
    }
    auto coords = h.coordinates(v);
    int best = INT32_MAX;
    for (std::size_t k = 0; k < coords.size(); ++k)
      if (coords[k] != 0) best = std::min(best, cls[k].level);
    if (best == INT32_MAX) throw InternalError("alternately coloured class is trivial");
    return best;
  };
  RasmussenDetail r;
  for (int sign : {1, -1}) {
    r.upper_levels.push_back(level(Tag::Upper, sign));
    r.lower_levels.push_back(level(Tag::Lower, sign));
  }
  r.support_degree = cls.front().degree;
  r.odd_writhe = odd_writhe(d);
  r.value.s1 = *std::max_element(r.lower_levels.begin(), r.lower_levels.end());
  r.value.s2 = r.support_degree;
  return r;
}

RasmussenPair rasmussen(const Diagram& d, const Limits& limits) { return rasmussen_detail(d, limits).value; }

RasmussenPair rasmussen_leftmost(const Diagram& d) {
  if (d.num_components() != 1) throw NotAKnot("the Rasmussen pair is defined for knots");
  if (!is_leftmost(d)) throw NotLeftmost("diagram has a negative even or positive odd crossing");
  auto acs = enumerate_alternately_coloured(d);
  const ProperColouring& pc =
      *std::min_element(acs.begin(), acs.end(), [](const auto& a, const auto& b) { return a.state.ones < b.state.ones; });
  const std::size_t m = pc.state.num_cycles();
  const int i = pc.state.ones - d.n_minus();
  const int shift = i + d.n_plus() - d.n_minus();
  LabelMask green = 0;
  for (std::size_t c = 0; c < m; ++c)
    if (pc.colour[c]) green |= LabelMask{1} << c;
  // Terms of s + sbar keep labellings with equal minus-parity on both colours; s - sbar the rest.
  int best[2] = {INT32_MAX, INT32_MAX};
  for (LabelMask mask = 0; mask < (LabelMask{1} << m); ++mask) {
    int on_green = __builtin_popcountll(mask & green) & 1;
    int on_red = __builtin_popcountll(mask & ~green) & 1;
    int which = on_green == on_red ? 0 : 1;
    best[which] = std::min(best[which], p_degree(m, mask, Tag::Lower) + shift);
  }
  RasmussenPair r;
  r.s1 = std::max(best[0], best[1]);
  r.s2 = i;
  return r;
}

void LaurentPolynomial::add(int exponent, long c) {
  if (c == 0) return;
  long& slot = coeffs[exponent];
  slot += c;
  if (slot == 0) coeffs.erase(exponent);
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  LaurentPolynomial r = *this;
  for (auto [e, c] : o.coeffs) r.add(e, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  LaurentPolynomial r;
  for (auto [e1, c1] : coeffs)
    for (auto [e2, c2] : o.coeffs) r.add(e1 + e2, c1 * c2);
  return r;
}

std::string LaurentPolynomial::str() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    auto [e, c] = *it;
    long mag = c < 0 ? -c : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentPolynomial euler_characteristic(const BigradedAbelianGroup& h) {
  LaurentPolynomial p;
  for (const auto& [key, g] : h.groups) p.add(key.second, (key.first % 2 == 0 ? 1 : -1) * static_cast<long>(g.free_rank));
  return p;
}

LaurentPolynomial divide_by_one_plus_inverse_q(const LaurentPolynomial& p) {
  LaurentPolynomial v;
  if (p.coeffs.empty()) return v;
  const int top = p.coeffs.rbegin()->first, bottom = p.coeffs.begin()->first;
  long above = 0;
  for (int k = top; k >= bottom; --k) {
    auto it = p.coeffs.find(k);
    long here = (it == p.coeffs.end() ? 0 : it->second) - above;
    v.add(k, here);
    above = here;
  }
  LaurentPolynomial divisor;
  divisor.add(0, 1);
  divisor.add(-1, 1);
  if (!(v * divisor == p)) throw NotDivisible("Euler characteristic " + p.str() + " is not divisible by 1 + q^-1");
  return v;
}

LaurentPolynomial jones(const Diagram& d, const Limits& limits) {
  return divide_by_one_plus_inverse_q(euler_characteristic(dkh(d, Ring::Rationals, limits)));
}

namespace {

// Loop count of the bracket state `a_set` (bit k set: A-smoothing at crossing k), traced by walking
// around the code.
std::size_t bracket_loops(const Diagram& d, std::uint64_t a_set) {
  const auto& comps = d.components();
  std::vector<std::size_t> start;  // first "arc after token" id per component
  std::size_t total = 0;
  for (const auto& c : comps) {
    start.push_back(total);
    total += std::max<std::size_t>(c.size(), 1);
  }
  // after(c, t): the strand leaving token t of component c.
  auto after = [&](std::size_t c, std::size_t t) { return start[c] + t; };
  auto before = [&](std::size_t c, std::size_t t) {
    std::size_t len = comps[c].size();
    return start[c] + (t + len - 1) % len;
  };
  std::vector<std::vector<std::size_t>> link(total);
  for (std::size_t k = 0; k < d.num_crossings(); ++k) {
    const int id = d.crossings()[k].id;
    const int sign = d.crossings()[k].sign;
    Occurrence o = d.over(id), u = d.under(id);
    std::size_t oi = before(o.component, o.position), oo = after(o.component, o.position);
    std::size_t ui = before(u.component, u.position), uo = after(u.component, u.position);
    bool a_smoothing = (a_set >> k) & 1;
    bool oriented = (sign > 0) == a_smoothing;
    if (oriented) {
      link[oi].push_back(uo);
      link[uo].push_back(oi);
      link[ui].push_back(oo);
      link[oo].push_back(ui);
    } else {
      link[oi].push_back(ui);
      link[ui].push_back(oi);
      link[oo].push_back(uo);
      link[uo].push_back(oo);
    }
  }
  std::vector<bool> seen(total, false);
  std::size_t loops = 0;
  for (std::size_t s = 0; s < total; ++s) {
    if (seen[s]) continue;
    ++loops;
    std::vector<std::size_t> stack = {s};
    seen[s] = true;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y : link[x])
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
    }
  }
  return loops;
}

}  // namespace

LaurentPolynomial bracket_oracle(const Diagram& d, const Limits& limits) {
  const std::size_t n = d.num_crossings();
  if (n > limits.standard_crossings)
    throw ResourceLimit("diagram has " + std::to_string(n) + " crossings; cap is " +
                        std::to_string(limits.standard_crossings));
  // Polynomials in A.
  LaurentPolynomial delta;
  delta.add(2, -1);
  delta.add(-2, -1);
  std::vector<LaurentPolynomial> delta_pow(1);
  delta_pow[0].add(0, 1);
  LaurentPolynomial bracket;
  for (std::uint64_t a_set = 0; a_set < (std::uint64_t{1} << n); ++a_set) {
    std::size_t loops = bracket_loops(d, a_set);
    while (delta_pow.size() <= loops) delta_pow.push_back(delta_pow.back() * delta);
    int a = __builtin_popcountll(a_set);
    LaurentPolynomial term;
    term.add(a - (static_cast<int>(n) - a), 1);
    bracket = bracket + term * delta_pow[loops];
  }
  const int w = d.writhe();
  LaurentPolynomial norm;
  norm.add(-3 * w, (w % 2 == 0) ? 1 : -1);
  bracket = bracket * norm;
  LaurentPolynomial q;
  for (auto [e, c] : bracket.coeffs) {
    if (e % 2 != 0) throw InternalError("odd power of A in normalized bracket");
    int k = e / 2;
    q.add(-k, (k % 2 == 0) ? c : -c);
  }
  return q;
}

}  // namespace dkh
