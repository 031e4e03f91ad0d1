#pragma once

#include <string>
#include <vector>

#include "multisym/partition.hpp"

namespace multisym {

/// Set partition of the ground set {1..n}, kept in canonical form: blocks
/// ordered by their minimal element, elements ascending within a block.
class SetPartition {
 public:
  SetPartition() = default;  // partition of the empty ground set (no blocks)
  /// Validates that blocks are nonempty, disjoint and cover {1..ground_size},
  /// then canonicalizes. Throws std::invalid_argument otherwise.
  SetPartition(int ground_size, std::vector<std::vector<int>> blocks);

  static SetPartition singletons(int n);  // lattice minimum
  static SetPartition one_block(int n);   // lattice maximum (n >= 1)

  /// Parses the text form "1,3|2,4" over {1..ground_size}; "" parses as the
  /// partition of the empty ground set (ground_size must then be 0).
  static SetPartition parse(const std::string& text, int ground_size);

  int ground_size() const { return ground_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }

  /// Block-size partition lambda(pi).
  IntegerPartition shape() const;

  /// 0-based block index of each element (index 0 holds element 1).
  std::vector<int> block_of_element() const;

  std::string str() const;

  bool operator==(const SetPartition&) const = default;

 private:
  int ground_ = 0;
  std::vector<std::vector<int>> blocks_;
};

/// Finest common coarsening / coarsest common refinement on a shared ground
/// set. Both reject mismatched ground sizes.
SetPartition meet(const SetPartition& a, const SetPartition& b);
SetPartition join(const SetPartition& a, const SetPartition& b);

/// True iff every block of a lies inside a block of b.
bool refines(const SetPartition& a, const SetPartition& b);

/// All set partitions of {1..n} in canonical form (restricted growth order).
/// n = 0 yields the single partition with no blocks.
std::vector<SetPartition> enumerate_set_partitions(int n);
std::vector<SetPartition> enumerate_set_partitions_of_shape(
    int n, const IntegerPartition& shape);

}  // namespace multisym
