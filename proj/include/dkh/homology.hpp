#ifndef DKH_HOMOLOGY_HPP
#define DKH_HOMOLOGY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dkh/complex.hpp"
#include "dkh/diagram.hpp"
#include "dkh/linalg.hpp"

namespace dkh {

enum class Ring { Integers, Rationals };

struct BidegreeGroup {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;  // divisors > 1, each dividing the next
  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const BidegreeGroup&) const = default;
};

// Keys are (i, j); only nonzero groups are stored.
struct BigradedAbelianGroup {
  std::map<std::pair<int, int>, BidegreeGroup> groups;

  void set(int i, int j, BidegreeGroup g);
  BidegreeGroup at(int i, int j) const;
  bool is_zero() const { return groups.empty(); }
  std::size_t total_free_rank() const;
  bool operator==(const BigradedAbelianGroup&) const = default;
};

// Homology of a standard (j-preserving) complex.
BigradedAbelianGroup homology(const ChainComplex& c, Ring ring = Ring::Integers);
BigradedAbelianGroup dkh(const Diagram& d, Ring ring = Ring::Integers,
                         const Limits& limits = Limits::from_environment());

// Doubled Lee homology over the rationals with a filtration-adapted basis.
class LeeHomology {
 public:
  struct Class {
    int degree = 0;
    int level = 0;  // quantum filtration level of the class
  };

  LeeHomology(ChainComplex complex, bool keep_representatives);

  const ChainComplex& complex() const { return complex_; }
  const std::vector<Class>& classes() const { return classes_; }
  std::size_t flat_index(int i, std::size_t idx) const;
  std::size_t flat_size() const { return offset_.back(); }

  SparseVector representative(std::size_t k) const;
  // Coordinates of a cycle (flat indices) in the basis of classes.
  std::vector<mpq_class> coordinates(const SparseVector& cycle) const;
  // Lee differential applied to a flat chain.
  SparseVector differential(const SparseVector& chain) const;

 private:
  struct Piece {
    std::vector<std::size_t> flat;  // local position -> flat index
    FilteredReduction reduction;
  };
  ChainComplex complex_;
  std::vector<std::size_t> offset_;
  std::vector<Piece> pieces_;
  std::vector<std::pair<std::size_t, std::size_t>> local_of_flat_;  // (piece, position)
  std::vector<std::pair<std::size_t, std::size_t>> class_origin_;   // (piece, essential index)
  std::vector<Class> classes_;
};

struct LeeSummary {
  std::map<int, std::size_t> rank_by_degree;
  std::map<int, std::size_t> levels;  // filtration level -> rank of associated graded
  std::size_t total_rank() const;
};

LeeSummary lee_summary(const Diagram& d, const Limits& limits = Limits::from_environment());

struct RasmussenPair {
  int s1 = 0;
  int s2 = 0;
  bool operator==(const RasmussenPair&) const = default;
};

struct RasmussenDetail {
  RasmussenPair value;
  std::vector<int> upper_levels;
  std::vector<int> lower_levels;
  int support_degree = 0;
  int odd_writhe = 0;
};

RasmussenDetail rasmussen_detail(const Diagram& d, const Limits& limits = Limits::from_environment());
RasmussenPair rasmussen(const Diagram& d, const Limits& limits = Limits::from_environment());
// Chain-level evaluation at the minimal-height alternately coloured smoothing; leftmost knots only.
RasmussenPair rasmussen_leftmost(const Diagram& d);

struct LaurentPolynomial {
  std::map<int, long> coeffs;  // exponent of q -> coefficient, no zeros

  void add(int exponent, long c);
  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  bool operator==(const LaurentPolynomial&) const = default;
  std::string str() const;
};

LaurentPolynomial euler_characteristic(const BigradedAbelianGroup& h);
LaurentPolynomial divide_by_one_plus_inverse_q(const LaurentPolynomial& p);
LaurentPolynomial jones(const Diagram& d, const Limits& limits = Limits::from_environment());
LaurentPolynomial bracket_oracle(const Diagram& d, const Limits& limits = Limits::from_environment());

}  // namespace dkh

#endif
