#ifndef DKH_ALGEBRA_HPP
#define DKH_ALGEBRA_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dkh/smoothing.hpp"

namespace dkh {

enum class Variant { Standard, Lee };
enum class Tag : std::uint8_t { Upper = 0, Lower = 1 };

// Label bit c set means cycle c carries v_-.
using LabelMask = std::uint64_t;

struct DoubledGenerator {
  std::vector<bool> minus;  // per cycle
  Tag tag = Tag::Upper;
  auto operator<=>(const DoubledGenerator&) const = default;
};

DoubledGenerator make_generator(const std::string& labels, Tag tag);  // e.g. "+-+"
std::string to_string(const DoubledGenerator& g);

class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(const DoubledGenerator& g, mpq_class c = 1) { add(g, c); }

  void add(const DoubledGenerator& g, const mpq_class& c);
  const std::map<DoubledGenerator, mpq_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpq_class coefficient(const DoubledGenerator& g) const;
  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(const mpq_class& c) const;
  bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }
  std::string str() const;

 private:
  std::map<DoubledGenerator, mpq_class> terms_;
};

// How the cycles of a source state correspond to those of a target state.
// Uninvolved target cycles carry a source index; involved cycles are listed explicitly.
struct CycleMapping {
  std::size_t source_arity = 0;
  std::size_t target_arity = 0;
  std::vector<std::size_t> involved_source;
  std::vector<std::size_t> involved_target;
  std::vector<std::ptrdiff_t> carried;  // per target cycle, source index or -1
};

// Mapping across the cube edge at crossing k starting from state `from`.
CycleMapping edge_mapping(const SmoothingState& from, const SmoothingState& to, std::size_t k);

struct MaskTerm {
  LabelMask mask;
  Tag tag;
  int coeff;
};

// Applies the local handle map chosen by the involved-cycle arities:
// (2,1) merge, (1,2) split, (1,1) single cycle, (0,1) birth, (1,0) death, (0,0) identity.
// Appends to `out`; coefficients are integral in the v_± basis.
void apply_local(const CycleMapping& map, Variant variant, LabelMask mask, Tag tag,
                 std::vector<MaskTerm>& out);

AlgebraElement apply_edge_map(EdgeKind kind, Variant variant, const AlgebraElement& input,
                              const CycleMapping& map);
AlgebraElement birth_map(const AlgebraElement& input, std::size_t position);
AlgebraElement death_map(const AlgebraElement& input, std::size_t position);

// Red-green coordinates reuse DoubledGenerator with minus=false for r and minus=true for g.
AlgebraElement to_red_green(const AlgebraElement& x);
AlgebraElement from_red_green(const AlgebraElement& x);

int p_degree(std::size_t cycles, LabelMask mask, Tag tag);
int p_degree(const DoubledGenerator& g);
int quantum_degree(const DoubledGenerator& g, int height, int n_plus, int n_minus);

}  // namespace dkh

#endif
