#include "dkh/complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "dkh/error.hpp"

namespace dkh {

namespace {

std::uint64_t reverse_bits(std::uint64_t x, std::size_t width) {
  std::uint64_t r = 0;
  for (std::size_t b = 0; b < width; ++b)
    if ((x >> b) & 1) r |= std::uint64_t{1} << (width - 1 - b);
  return r;
}

}  // namespace

std::size_t ChainComplex::rank(int i) const {
  if (i < min_degree || i > max_degree()) return 0;
  return basis[static_cast<std::size_t>(i - min_degree)].size();
}

const std::vector<BasisElement>& ChainComplex::group(int i) const {
  static const std::vector<BasisElement> empty;
  if (i < min_degree || i > max_degree()) return empty;
  return basis[static_cast<std::size_t>(i - min_degree)];
}

SparseMatrix ChainComplex::d(int i) const {
  if (i < min_degree || i >= max_degree()) {
    SparseMatrix z;
    z.rows = rank(i + 1);
    z.cols = rank(i);
    return z;
  }
  return differential[static_cast<std::size_t>(i - min_degree)];
}

std::size_t ChainComplex::total_rank() const {
  std::size_t t = 0;
  for (const auto& g : basis) t += g.size();
  return t;
}

Limits Limits::from_environment() {
  Limits l;
  if (const char* env = std::getenv("DKH_MAX_CROSSINGS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) l.standard_crossings = l.lee_crossings = static_cast<std::size_t>(v);
  }
  return l;
}

std::size_t generator_index(const ChainComplex& c, Word w, LabelMask mask, Tag tag) {
  const SmoothingState& s = c.states->at(w);
  int i = s.ones - c.n_minus;
  const auto& g = c.group(i);
  auto it = std::lower_bound(g.begin(), g.end(), w, [&](const BasisElement& b, Word x) {
    return b.word != x && reverse_bits(b.word, 64) < reverse_bits(x, 64);
  });
  if (it == g.end() || it->word != w) throw InternalError("state not present in chain group");
  std::size_t start = static_cast<std::size_t>(it - g.begin());
  std::size_t m = s.num_cycles();
  return start + 2 * reverse_bits(mask, m) + (tag == Tag::Lower ? 1 : 0);
}

ChainComplex build_complex(const Diagram& d, Variant variant, const Limits& limits) {
  const std::size_t n = d.num_crossings();
  const std::size_t cap = variant == Variant::Standard ? limits.standard_crossings : limits.lee_crossings;
  if (n > cap)
    throw ResourceLimit("diagram has " + std::to_string(n) + " crossings; cap is " + std::to_string(cap));
  ChainComplex c;
  c.variant = variant;
  c.n_plus = d.n_plus();
  c.n_minus = d.n_minus();
  c.min_degree = -d.n_minus();
  const Word count = Word{1} << n;
  auto states = std::make_shared<std::vector<SmoothingState>>();
  states->reserve(count);
  for (Word w = 0; w < count; ++w) states->push_back(resolve(d, w));
  c.states = states;

  std::vector<std::vector<Word>> by_degree(n + 1);
  for (Word w = 0; w < count; ++w) by_degree[static_cast<std::size_t>((*states)[w].ones)].push_back(w);
  std::vector<std::size_t> offset(count);
  c.basis.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    auto& words = by_degree[k];
    std::sort(words.begin(), words.end(),
              [&](Word a, Word b) { return reverse_bits(a, n) < reverse_bits(b, n); });
    auto& group = c.basis[k];
    int i = static_cast<int>(k) + c.min_degree;
    for (Word w : words) {
      offset[w] = group.size();
      const std::size_t m = (*states)[w].num_cycles();
      for (std::uint64_t lex = 0; lex < (std::uint64_t{1} << m); ++lex) {
        LabelMask mask = reverse_bits(lex, m);
        for (Tag tag : {Tag::Upper, Tag::Lower}) {
          BasisElement b{w, static_cast<std::size_t>(w), mask, tag, i, 0};
          b.j = p_degree(m, mask, tag) + i + c.n_plus - c.n_minus;
          group.push_back(b);
        }
      }
    }
  }

  c.differential.resize(n);
  std::vector<MaskTerm> terms;
  for (std::size_t k = 0; k < n; ++k) {
    SparseMatrix& mat = c.differential[k];
    mat.cols = c.basis[k].size();
    mat.rows = c.basis[k + 1].size();
    for (Word w : by_degree[k]) {
      const SmoothingState& src = (*states)[w];
      const std::size_t m = src.num_cycles();
      for (std::size_t x = 0; x < n; ++x) {
        if ((w >> x) & 1) continue;
        Word w2 = w | (Word{1} << x);
        const SmoothingState& tgt = (*states)[w2];
        CycleMapping map = edge_mapping(src, tgt, x);
        const long sign = edge_sign(w, x);
        const std::size_t m2 = tgt.num_cycles();
        for (std::uint64_t lex = 0; lex < (std::uint64_t{1} << m); ++lex) {
          LabelMask mask = reverse_bits(lex, m);
          for (Tag tag : {Tag::Upper, Tag::Lower}) {
            std::size_t col = offset[w] + 2 * lex + (tag == Tag::Lower ? 1 : 0);
            terms.clear();
            apply_local(map, variant, mask, tag, terms);
            for (const MaskTerm& t : terms) {
              std::size_t row = offset[w2] + 2 * reverse_bits(t.mask, m2) + (t.tag == Tag::Lower ? 1 : 0);
              mat.entries.push_back({static_cast<std::uint32_t>(row), static_cast<std::uint32_t>(col),
                                     sign * t.coeff});
            }
          }
        }
      }
    }
    mat.canonicalize();
  }
  return c;
}

ChainDiagnostics verify_chain_complex(const ChainComplex& c) {
  ChainDiagnostics diag;
  auto describe = [&](const BasisElement& b) {
    std::ostringstream os;
    os << "word=" << b.word << " mask=" << b.mask << (b.tag == Tag::Upper ? " u" : " l") << " j=" << b.j;
    return os.str();
  };
  for (int i = c.min_degree; i < c.max_degree(); ++i) {
    SparseMatrix di = c.d(i);
    if (di.rows != c.rank(i + 1) || di.cols != c.rank(i)) {
      diag.ok = false;
      diag.problems.push_back("differential shape mismatch at degree " + std::to_string(i));
      continue;
    }
    for (const Triplet& t : di.entries) {
      int js = c.group(i)[t.col].j, jt = c.group(i + 1)[t.row].j;
      bool good = c.variant == Variant::Standard ? jt == js : (jt == js || jt == js + 4);
      if (!good) {
        diag.ok = false;
        diag.problems.push_back("grading violation at degree " + std::to_string(i) + ": " +
                                describe(c.group(i)[t.col]) + " -> " + describe(c.group(i + 1)[t.row]));
      }
    }
    if (i + 1 < c.max_degree()) {
      SparseMatrix sq = multiply(c.d(i + 1), di);
      for (const Triplet& t : sq.entries) {
        diag.ok = false;
        diag.problems.push_back("d^2 != 0 at degree " + std::to_string(i) + ": " +
                                describe(c.group(i)[t.col]) + " -> " + describe(c.group(i + 2)[t.row]) +
                                " coefficient " + std::to_string(t.value));
      }
    }
  }
  return diag;
}

std::size_t count_incoherent_faces(const Diagram& d) {
  const std::size_t n = d.num_crossings();
  std::size_t count = 0;
  for (Word w = 0; w < (Word{1} << n); ++w) {
    SmoothingState s = resolve(d, w);
    std::vector<std::size_t> single;
    for (std::size_t k = 0; k < n; ++k)
      if (!((w >> k) & 1) && classify_edge(d, w, k) == EdgeKind::SingleCycle) single.push_back(k);
    for (std::size_t a = 0; a < single.size(); ++a)
      for (std::size_t b = a + 1; b < single.size(); ++b)
        if (s.crossing_traversal[single[a]] != s.crossing_traversal[single[b]]) ++count;
  }
  return count;
}

ChainComplex restrict_complex(const ChainComplex& c, const std::vector<std::vector<bool>>& keep) {
  ChainComplex r;
  r.variant = c.variant;
  r.n_plus = c.n_plus;
  r.n_minus = c.n_minus;
  r.min_degree = c.min_degree;
  r.states = c.states;
  r.basis.resize(c.basis.size());
  std::vector<std::vector<std::ptrdiff_t>> pos(c.basis.size());
  for (std::size_t k = 0; k < c.basis.size(); ++k) {
    pos[k].assign(c.basis[k].size(), -1);
    for (std::size_t g = 0; g < c.basis[k].size(); ++g)
      if (keep[k][g]) {
        pos[k][g] = static_cast<std::ptrdiff_t>(r.basis[k].size());
        r.basis[k].push_back(c.basis[k][g]);
      }
  }
  r.differential.resize(c.differential.size());
  for (std::size_t k = 0; k < c.differential.size(); ++k) {
    SparseMatrix& m = r.differential[k];
    m.cols = r.basis[k].size();
    m.rows = r.basis[k + 1].size();
    for (const Triplet& t : c.differential[k].entries) {
      std::ptrdiff_t col = pos[k][t.col], row = pos[k + 1][t.row];
      if (col >= 0 && row >= 0)
        m.entries.push_back({static_cast<std::uint32_t>(row), static_cast<std::uint32_t>(col), t.value});
    }
  }
  return r;
}

std::map<int, ChainComplex> split_by_quantum(const ChainComplex& c) {
  if (c.variant != Variant::Standard) throw VariantMismatch("only the standard differential preserves j");
  std::map<int, ChainComplex> out;
  std::vector<int> js;
  for (const auto& g : c.basis)
    for (const auto& b : g) js.push_back(b.j);
  std::sort(js.begin(), js.end());
  js.erase(std::unique(js.begin(), js.end()), js.end());
  for (int j : js) {
    std::vector<std::vector<bool>> keep(c.basis.size());
    for (std::size_t k = 0; k < c.basis.size(); ++k)
      for (const auto& b : c.basis[k]) keep[k].push_back(b.j == j);
    out.emplace(j, restrict_complex(c, keep));
  }
  return out;
}

ReducedPair build_reduced(const Diagram& d, std::vector<std::size_t> basepoint_arcs, const Limits& limits) {
  if (basepoint_arcs.empty())
    for (std::size_t comp = 0; comp < d.num_components(); ++comp)
      basepoint_arcs.push_back(d.arc_index({comp, 0}));
  if (basepoint_arcs.size() != d.num_components())
    throw BadBasepoint("need exactly one basepoint per component");
  std::vector<bool> covered(d.num_components(), false);
  for (std::size_t a : basepoint_arcs) {
    if (a >= d.num_arcs()) throw BadBasepoint("basepoint arc out of range");
    std::size_t comp = d.arc_position(a).component;
    if (covered[comp]) throw BadBasepoint("two basepoints on one component");
    covered[comp] = true;
  }
  ChainComplex full = build_complex(d, Variant::Standard, limits);
  std::vector<std::vector<bool>> sub(full.basis.size()), quo(full.basis.size());
  for (std::size_t k = 0; k < full.basis.size(); ++k)
    for (const auto& b : full.basis[k]) {
      const SmoothingState& s = (*full.states)[b.word];
      bool marked_minus = true;
      for (std::size_t a : basepoint_arcs) marked_minus = marked_minus && ((b.mask >> s.cycle_of_arc[a]) & 1);
      sub[k].push_back(marked_minus);
      quo[k].push_back(!marked_minus);
    }
  for (std::size_t k = 0; k < full.differential.size(); ++k)
    for (const Triplet& t : full.differential[k].entries)
      if (sub[k][t.col] && !sub[k + 1][t.row])
        throw InternalError("reduced subcomplex is not closed under the differential");
  return {restrict_complex(full, sub), restrict_complex(full, quo)};
}

void dump_complex(const ChainComplex& c, const Diagram& d, std::ostream& out) {
  out << "# basis: i index word labels tag j\n";
  for (int i = c.min_degree; i <= c.max_degree(); ++i) {
    const auto& g = c.group(i);
    for (std::size_t k = 0; k < g.size(); ++k) {
      const BasisElement& b = g[k];
      std::string labels;
      for (std::size_t cyc = 0; cyc < (*c.states)[b.word].num_cycles(); ++cyc)
        labels += ((b.mask >> cyc) & 1) ? '-' : '+';
      out << i << ' ' << k << ' ' << (d.num_crossings() ? word_string(d, b.word) : "-") << ' '
          << (labels.empty() ? "()" : labels) << ' ' << (b.tag == Tag::Upper ? 'u' : 'l') << ' ' << b.j << '\n';
    }
  }
  out << "# entries: (i, row, col, value)\n";
  for (int i = c.min_degree; i < c.max_degree(); ++i)
    for (const Triplet& t : c.d(i).entries)
      out << '(' << i << ", " << t.row << ", " << t.col << ", " << t.value << ")\n";
}

}  // namespace dkh
