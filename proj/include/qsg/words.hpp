#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qsg/group_data.hpp"

namespace qsg {

// One free-product factor: infinite cyclic, finite cyclic of order m, or a
// finite group given by a table plus a length function on its elements.
struct FactorSpec {
  enum class Kind { InfiniteCyclic, FiniteCyclic, Table };
  Kind kind = Kind::InfiniteCyclic;
  int cyclic_order = 0;           // FiniteCyclic
  FiniteGroupData table;          // Table
  std::vector<int> table_length;  // Table: l(g), l(e) = 0, l(g) = l(g^-1)
  std::string label;

  static FactorSpec infinite_cyclic(std::string label);
  static FactorSpec finite_cyclic(int order, std::string label);
  static FactorSpec from_table(FiniteGroupData table, std::vector<int> lengths, std::string label);

  // element encoding: exponent for cyclic kinds (finite cyclic normalized to
  // (-m/2, m/2]), element index for tables.
  bool is_identity(long e) const;
  long multiply(long a, long b) const;
  long invert(long e) const;
  int length(long e) const;
  long normalize(long e) const;
  // all non-identity elements of length <= bound, deterministic order
  std::vector<long> elements_up_to(int bound) const;
};

struct Block {
  int factor = 0;
  long element = 0;  // never the factor identity in reduced form
  auto operator<=>(const Block&) const = default;
};

// Reduced alternating word in the free product of the given factors.
struct FreeProductWord {
  std::vector<Block> blocks;
  auto operator<=>(const FreeProductWord&) const = default;
  bool is_identity() const { return blocks.empty(); }
};

using Factors = std::vector<FactorSpec>;

// Merge adjacent blocks of equal factor, drop identity blocks, iterate.
FreeProductWord reduce(const Factors& factors, std::vector<Block> raw);
FreeProductWord multiply(const Factors& factors, const FreeProductWord& a, const FreeProductWord& b);
FreeProductWord inverse(const Factors& factors, const FreeProductWord& w);

int word_length(const Factors& factors, const FreeProductWord& w);
int block_length(const FreeProductWord& w);
// Cumulative block word-lengths; empty for the identity.
std::vector<int> shape(const Factors& factors, const FreeProductWord& w);

// All reduced words of word length <= radius, each once.  Order: by word
// length, then factor-index sequence, then element sequence.
std::vector<FreeProductWord> enumerate_ball(const Factors& factors, int radius);

enum class PartitionMode { Length, LengthAndBlock, Shape };

// Partition key: Length -> (l); LengthAndBlock -> (l, b); Shape -> s(w).
std::map<std::vector<int>, std::vector<FreeProductWord>> partition_by(const Factors& factors,
                                                                      const std::vector<FreeProductWord>& words,
                                                                      PartitionMode mode);

// "e" or "g1^2.g2^-3"; table factor elements render as g<i>:<element index>.
std::string format_word(const Factors& factors, const FreeProductWord& w);
FreeProductWord parse_word(const Factors& factors, const std::string& text);

}  // namespace qsg
