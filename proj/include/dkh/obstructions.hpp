#ifndef DKH_OBSTRUCTIONS_HPP
#define DKH_OBSTRUCTIONS_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dkh/diagram.hpp"
#include "dkh/homology.hpp"

namespace dkh {

// Descriptive names of the results each verdict rests on.
namespace theorem {
inline constexpr const char* kPeeling = "doubling decomposition of classical homology";
inline constexpr const char* kUnknotSum = "connect sums of trivial knots have unknot homology";
inline constexpr const char* kOddWritheSlice = "nonzero odd writhe obstructs sliceness";
inline constexpr const char* kLevelSlice = "nonzero s1 with s2 = 0 obstructs sliceness";
inline constexpr const char* kOddWritheConcordance = "odd writhe is a concordance invariant";
inline constexpr const char* kLevelConcordance = "s1 is a concordance invariant when s2 agrees";
inline constexpr const char* kClassicalConcordance = "nonzero odd writhe rules out concordance to a classical knot";
inline constexpr const char* kGenusBound = "targeted cobordism genus bound";
inline constexpr const char* kMergingBound = "maximal quantum degree bound for connected concordances";
inline constexpr const char* kTrivialDegree = "trivial homology in the target degree forces disconnected concordances";
}  // namespace theorem

struct Verdict {
  bool obstructed = false;
  std::string reason;
  std::vector<std::string> theorems;
};

struct ClassicalityResult {
  bool non_classical = false;
  std::optional<std::pair<int, int>> failure;  // first failing bidegree (i, j)
  std::string failing_part;                    // "free" or "Z_n"
  BigradedAbelianGroup peeled;                 // the solution G when the peel succeeds
};

// Peels h(i,j) = G(i,j) + G(i,j+1) from the top quantum degree downwards, separately for the
// free part and for each torsion divisor.
ClassicalityResult classicality_test(const BigradedAbelianGroup& h);

bool unknot_connect_sum_condition(const Diagram& d, const Limits& limits = Limits::from_environment());

Verdict slice_obstruction(const Diagram& d, const Limits& limits = Limits::from_environment());

struct ConcordanceVerdict {
  Verdict verdict;
  bool first_not_concordant_to_classical = false;
  bool second_not_concordant_to_classical = false;
};

ConcordanceVerdict concordance_obstruction(const Diagram& d1, const Diagram& d2,
                                           const Limits& limits = Limits::from_environment());

struct GenusBound {
  mpq_class value;
  std::string label;
  std::string caveat;
};

GenusBound genus_lower_bound(const Diagram& d1, const Diagram& d2, const Limits& limits = Limits::from_environment());

struct LinkBound {
  Verdict verdict;
  int degree = 0;                // s2 of the knot
  std::optional<int> max_level;  // M(L); empty when the link has no classes in that degree
  int knot_s1 = 0;
  std::size_t link_components = 0;
};

LinkBound link_to_knot_bound(const Diagram& link, const Diagram& knot,
                             const Limits& limits = Limits::from_environment());

struct ObstructionReport {
  ClassicalityResult classicality;
  std::optional<bool> unknot_condition;  // knots only
  std::optional<Verdict> slice;          // knots only
  std::optional<RasmussenPair> s;        // knots only
  std::optional<int> odd_writhe;         // knots only
  std::vector<std::string> theorems;
};

ObstructionReport classify(const Diagram& d, const Limits& limits = Limits::from_environment());

}  // namespace dkh

#endif
