#ifndef DKH_COBORDISM_HPP
#define DKH_COBORDISM_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dkh/complex.hpp"
#include "dkh/diagram.hpp"
#include "dkh/homology.hpp"

namespace dkh {

struct ElementaryMove {
  enum class Kind { Birth, Death, Saddle, VirtualMove };
  Kind kind = Kind::Birth;
  std::size_t component = 0;      // Death
  std::size_t arc1 = 0, arc2 = 0;  // Saddle: global arc indices
  Diagram target;                  // VirtualMove

  static ElementaryMove birth();
  static ElementaryMove death(std::size_t component);
  static ElementaryMove saddle(std::size_t arc1, std::size_t arc2);
  static ElementaryMove virtual_move(Diagram target);
  std::string str() const;
};

// Pieces of strand shared by a diagram and its image under a move. Arcs of either diagram are
// unions of pieces; `handle` lists the pieces touched by the move.
struct ArcCorrespondence {
  std::size_t pieces = 0;
  std::vector<std::vector<std::size_t>> source_arcs;  // per source arc
  std::vector<std::vector<std::size_t>> target_arcs;  // per target arc
  std::set<std::size_t> handle;
};

struct MoveResult {
  Diagram diagram;
  ArcCorrespondence arcs;
};

MoveResult apply_move_detailed(const Diagram& d, const ElementaryMove& m);
Diagram apply_move(const Diagram& d, const ElementaryMove& m);

// Cycle correspondence at one cube vertex, read off the piece structure.
CycleMapping vertex_mapping(const ArcCorrespondence& arcs, const SmoothingState& source,
                            const SmoothingState& target);

struct ChainMap {
  int min_degree = 0;
  std::vector<SparseMatrix> blocks;  // blocks[i - min_degree]: source degree i -> target degree i
  int filtration_degree = 0;         // declared degree of the handle
  int observed_degree = 0;           // minimum j shift over nonzero entries (0 if none)
  bool any_entry = false;
};

ChainMap chain_map_of_move(const Diagram& d, const ElementaryMove& m,
                           const Limits& limits = Limits::from_environment());
ChainMap chain_map_between(const ChainComplex& source, const ChainComplex& target, const ArcCorrespondence& arcs,
                           int filtration_degree);

struct ChainMapCheck {
  bool commutes = true;
  std::string problem;
};
ChainMapCheck check_chain_map(const ChainComplex& source, const ChainComplex& target, const ChainMap& f);

SparseVector apply_chain_map(const ChainComplex& source, const ChainComplex& target, const ChainMap& f,
                             const SparseVector& flat);

struct CobordismPresentation {
  Diagram start;
  std::vector<ElementaryMove> moves;

  std::vector<Diagram> diagrams() const;  // start plus one per move
  std::size_t births() const;
  std::size_t deaths() const;
  std::size_t saddles() const;
  int euler_characteristic() const;  // births + deaths - saddles
  std::size_t surface_components() const;
  std::optional<int> genus() const;  // for connected surfaces
  std::vector<std::size_t> degenerate_circle_counts() const;
};

CobordismPresentation parse_presentation(const std::string& text);

struct InducedMap {
  std::vector<LeeHomology::Class> source_classes, target_classes;
  std::vector<std::vector<mpq_class>> matrix;  // [target class][source class]
  bool nonzero = false;
  int filtration_budget = 0;  // births + deaths - saddles
  int observed_degree = 0;    // minimum level shift realised by a nonzero entry
};

InducedMap induced_map_on_lee(const CobordismPresentation& p, const Limits& limits = Limits::from_environment());

// Homological degrees of alternately coloured smoothings.
std::set<int> acs_degrees(const Diagram& d);
std::set<int> shared_degrees(const CobordismPresentation& p);

// Cube vertices where the saddle acts as a single-cycle map while some crossing edge acts as one on
// a different cycle; the chain map cannot commute there.
std::size_t count_incoherent_saddle_faces(const Diagram& d, const ElementaryMove& saddle);

bool saddle_kills_acs(const Diagram& d, const ElementaryMove& saddle);

}  // namespace dkh

#endif
