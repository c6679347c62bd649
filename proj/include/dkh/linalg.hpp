#ifndef DKH_LINALG_HPP
#define DKH_LINALG_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace dkh {

struct Triplet {
  std::uint32_t row;
  std::uint32_t col;
  long value;
};

struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Triplet> entries;  // no duplicate (row, col) pairs, no zeros

  void canonicalize();  // merges duplicates, drops zeros, sorts by (col, row)
};

// C = A * B
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

struct SmithForm {
  std::vector<mpz_class> factors;  // nonzero invariant factors, d_1 | d_2 | ...
  std::size_t rank() const { return factors.size(); }
};

SmithForm smith_normal_form(const SparseMatrix& m);
SmithForm smith_normal_form_dense(std::vector<std::vector<mpz_class>> a);
std::size_t rational_rank(const SparseMatrix& m);

// Sparse exact vector keyed by basis index.
using SparseVector = std::map<std::size_t, mpq_class>;

// Filtered reduction of a differential over the rationals. Basis elements must be supplied in an
// order where every differential term of element e precedes e.
class FilteredReduction {
 public:
  // column[e] lists the differential of basis element e (indices into the same ordering).
  FilteredReduction(std::size_t size, const std::vector<std::vector<std::pair<std::size_t, long>>>& column,
                    bool keep_representatives);

  // Elements whose classes survive: every essential index yields one homology class.
  const std::vector<std::size_t>& essential() const { return essential_; }
  const std::vector<mpz_class>& representative(std::size_t essential_index) const;
  const std::vector<std::size_t>& representative_support(std::size_t essential_index) const;

  // Coordinates of a cycle in the essential basis; throws if `cycle` is not closed.
  std::vector<mpq_class> coordinates(const SparseVector& cycle) const;

 private:
  struct Column {
    std::vector<std::size_t> idx;
    std::vector<mpz_class> val;
  };
  std::size_t size_;
  std::vector<Column> reduced_;
  std::vector<Column> combo_;
  std::vector<std::ptrdiff_t> pivot_owner_;  // low index -> column
  std::vector<std::size_t> essential_;
  std::vector<std::ptrdiff_t> essential_slot_;
};

}  // namespace dkh

#endif
