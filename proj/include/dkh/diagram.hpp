#ifndef DKH_DIAGRAM_HPP
#define DKH_DIAGRAM_HPP

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace dkh {

enum class Pass { Over, Under };

struct Token {
  int crossing = 0;
  Pass pass = Pass::Over;
  int sign = 1;
  bool operator==(const Token&) const = default;
};

using Component = std::vector<Token>;

// A gap on a component: gap g sits just before token g (gap 0 precedes the first token).
struct ArcPosition {
  std::size_t component = 0;
  std::size_t gap = 0;
  bool operator==(const ArcPosition&) const = default;
};

// Arc indices are global: component-major, one arc per gap (one arc for an empty component).
// Arc g of a component runs from token g-1 to token g.
struct CrossingArcs {
  int id = 0;
  int sign = 1;
  std::size_t over_in = 0, over_out = 0, under_in = 0, under_out = 0;
};

struct Occurrence {
  std::size_t component = 0;
  std::size_t position = 0;
};

class Diagram {
 public:
  // One crossingless component.
  Diagram();
  explicit Diagram(std::vector<Component> components);

  static Diagram parse(std::string_view text);
  std::string str() const;

  const std::vector<Component>& components() const { return components_; }
  std::size_t num_components() const { return components_.size(); }
  std::size_t num_crossings() const { return crossings_.size(); }
  int n_plus() const { return n_plus_; }
  int n_minus() const { return n_minus_; }
  int writhe() const { return n_plus_ - n_minus_; }

  // Crossings in canonical (ascending id) order.
  const std::vector<CrossingArcs>& crossings() const { return crossings_; }
  std::size_t crossing_index(int id) const;
  bool has_crossing(int id) const;
  int max_crossing_id() const;
  Occurrence over(int id) const;
  Occurrence under(int id) const;

  std::size_t num_arcs() const { return num_arcs_; }
  std::size_t arc_index(ArcPosition a) const;
  ArcPosition arc_position(std::size_t arc) const;
  std::size_t arc_count(std::size_t component) const;

  bool operator==(const Diagram& o) const { return components_ == o.components_; }

 private:
  std::vector<Component> components_;
  std::vector<CrossingArcs> crossings_;
  std::vector<Occurrence> over_, under_;
  std::vector<std::size_t> arc_offset_;
  std::size_t num_arcs_ = 0;
  int n_plus_ = 0, n_minus_ = 0;
};

enum class Parity { Even, Odd };

struct Chord {
  int crossing = 0;
  int sign = 1;
  Occurrence over, under;
};

struct GaussDiagram {
  std::vector<std::size_t> circle_sizes;  // endpoints per circle
  std::vector<Chord> chords;
};

Diagram mirror(const Diagram& d);
Diagram disjoint_union(const Diagram& a, const Diagram& b);
Diagram connect_sum(const Diagram& a, std::size_t arc_a, const Diagram& b, std::size_t arc_b);
Diagram flank(const Diagram& d, int crossing);
Diagram virtualize(const Diagram& d, const std::set<int>& crossings);
Diagram relabel_canonical(const Diagram& d);

GaussDiagram gauss_diagram(const Diagram& d);
std::set<std::size_t> degenerate_circles(const GaussDiagram& g);

// Defined for chords with both ends on one circle.
Parity crossing_parity(const Diagram& d, int crossing);
int odd_writhe(const Diagram& d);
bool is_leftmost(const Diagram& d);

}  // namespace dkh

#endif
