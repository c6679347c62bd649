#ifndef DKH_TESTS_ORACLES_HPP
#define DKH_TESTS_ORACLES_HPP

#include <gmpxx.h>

#include <random>
#include <vector>

#include "dkh/complex.hpp"
#include "dkh/diagram.hpp"
#include "dkh/homology.hpp"

namespace oracle {

// Random signed Gauss code; tokens are shuffled and dealt to components at random.
dkh::Diagram random_diagram(std::mt19937& rng, int crossings, int components = 1);

// Unnormalised Jones polynomial from the state sum, with its own cycle tracing.
dkh::LaurentPolynomial state_sum_jones(const dkh::Diagram& d);

// Cycle count of a resolution, traced directly from the Gauss code.
std::size_t count_cycles(const dkh::Diagram& d, std::uint64_t word);

std::size_t dense_rank(std::vector<std::vector<mpq_class>> a);

// Total rational homology rank of a complex from dense ranks of its differentials.
std::size_t total_homology_rank(const dkh::ChainComplex& c);

// Classical Rasmussen invariant from a self-contained Lee complex (classical knot diagrams only).
int classical_rasmussen(const dkh::Diagram& d);

}  // namespace oracle

#endif
