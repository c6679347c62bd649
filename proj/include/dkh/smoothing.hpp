#ifndef DKH_SMOOTHING_HPP
#define DKH_SMOOTHING_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dkh/diagram.hpp"

namespace dkh {

// Bit k is the resolution of the k-th crossing in canonical order.
using Word = std::uint64_t;

enum class EdgeKind { Merge, Split, SingleCycle };

struct SmoothingState {
  Word word = 0;
  int ones = 0;
  std::vector<std::vector<std::size_t>> cycles;  // sorted arc lists, ordered by smallest arc
  std::vector<std::size_t> cycle_of_arc;
  // Cycles meeting each crossing neighbourhood (one or two entries).
  std::vector<std::vector<std::size_t>> crossing_traversal;

  std::size_t num_cycles() const { return cycles.size(); }
};

struct ProperColouring {
  SmoothingState state;
  std::vector<int> colour;  // per cycle, 0 = red, 1 = green
};

// True when resolution `bit` at crossing k is the oriented smoothing.
bool is_oriented_resolution(const Diagram& d, std::size_t k, int bit);

// The two arc pairs joined at crossing k under resolution `bit`.
std::pair<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>>
junctions(const Diagram& d, std::size_t k, int bit);

SmoothingState resolve(const Diagram& d, Word w);
EdgeKind classify_edge(const Diagram& d, Word w, std::size_t k);
int edge_sign(Word w, std::size_t k);
int height(const Diagram& d, Word w);
std::string word_string(const Diagram& d, Word w);
Word parse_word(const Diagram& d, const std::string& bits);

std::vector<ProperColouring> enumerate_alternately_coloured(const Diagram& d);
std::vector<ProperColouring> enumerate_alternately_coloured_brute(const Diagram& d);
std::size_t acs_count(const Diagram& d);

std::string to_string(EdgeKind k);

}  // namespace dkh

#endif
