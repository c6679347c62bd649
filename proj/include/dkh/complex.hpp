#ifndef DKH_COMPLEX_HPP
#define DKH_COMPLEX_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dkh/algebra.hpp"
#include "dkh/diagram.hpp"
#include "dkh/linalg.hpp"
#include "dkh/smoothing.hpp"

namespace dkh {

struct BasisElement {
  Word word = 0;
  std::size_t state = 0;  // index into ChainComplex::states
  LabelMask mask = 0;     // bit c set: cycle c carries v_-
  Tag tag = Tag::Upper;
  int i = 0;
  int j = 0;
};

struct ChainComplex {
  Variant variant = Variant::Standard;
  int n_plus = 0, n_minus = 0;
  int min_degree = 0;
  std::shared_ptr<const std::vector<SmoothingState>> states;  // indexed by word
  std::vector<std::vector<BasisElement>> basis;     // basis[i - min_degree]
  std::vector<SparseMatrix> differential;           // differential[k]: degree min+k -> min+k+1

  int max_degree() const { return min_degree + static_cast<int>(basis.size()) - 1; }
  std::size_t rank(int i) const;
  const std::vector<BasisElement>& group(int i) const;
  // Differential leaving degree i (empty matrix outside the support).
  SparseMatrix d(int i) const;
  std::size_t total_rank() const;
};

struct Limits {
  std::size_t standard_crossings = 20;
  std::size_t lee_crossings = 14;
  static Limits from_environment();
};

ChainComplex build_complex(const Diagram& d, Variant variant, const Limits& limits = Limits::from_environment());

// Looks up the position of a generator inside its chain group.
std::size_t generator_index(const ChainComplex& c, Word w, LabelMask mask, Tag tag);

struct ChainDiagnostics {
  bool ok = true;
  std::vector<std::string> problems;
};

ChainDiagnostics verify_chain_complex(const ChainComplex& c);

// Cube faces whose two parallel edge pairs are single-cycle maps on two different cycles of the
// starting state. Such faces do not commute for either differential.
std::size_t count_incoherent_faces(const Diagram& d);

std::map<int, ChainComplex> split_by_quantum(const ChainComplex& c);

// Subcomplex (and quotient) spanned by basis subsets.
ChainComplex restrict_complex(const ChainComplex& c, const std::vector<std::vector<bool>>& keep);

struct ReducedPair {
  ChainComplex sub;
  ChainComplex quotient;
};

// One basepoint arc per component; an empty list picks gap 0 of every component.
ReducedPair build_reduced(const Diagram& d, std::vector<std::size_t> basepoint_arcs,
                          const Limits& limits = Limits::from_environment());

void dump_complex(const ChainComplex& c, const Diagram& d, std::ostream& out);

}  // namespace dkh

#endif
