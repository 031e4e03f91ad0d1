#pragma once

#include <string>
#include <vector>

#include "multisym/rational.hpp"

namespace multisym {

/// Integer partition: a non-increasing tuple of positive parts. The empty
/// partition (weight 0) is a valid value and serializes as "".
class IntegerPartition {
 public:
  IntegerPartition() = default;
  /// Accepts parts in any order and stores them non-increasing.
  /// Throws std::invalid_argument if any part is < 1.
  explicit IntegerPartition(std::vector<int> parts);

  /// Parses the comma-separated text form, e.g. "3,2,1". "" is the empty
  /// partition.
  static IntegerPartition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Number of parts equal to value.
  int multiplicity(int value) const;

  /// Merge of the part multisets, e.g. (3,1,1) with (2,1) gives (3,2,1,1,1).
  IntegerPartition disjoint_union(const IntegerPartition& other) const;

  std::string str() const;

  bool operator==(const IntegerPartition&) const = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Canonical ordering used for every partition-indexed matrix and serialized
/// term list: weight ascending, then reverse-lexicographic within a weight,
/// so (n) comes first and (1,...,1) last.
struct PartitionOrder {
  bool operator()(const IntegerPartition& a, const IntegerPartition& b) const;
};

/// All partitions of n in reverse-lexicographic order; n = 0 gives the empty
/// partition only.
std::vector<IntegerPartition> partitions_of(int n);

Integer prod_parts_factorial(const IntegerPartition& p);  // prod_i p_i!
Integer prod_mult_factorial(const IntegerPartition& p);   // prod_i n_i(p)!

/// Number of set partitions of an n-set with block sizes given by shape:
/// n! / (prod_i shape_i! * prod_i n_i(shape)!).
/// Throws std::invalid_argument unless shape is a partition of n.
Integer set_partition_count(int n, const IntegerPartition& shape);

/// Number of cyclically ordered set partitions of [|mu|] with block sizes mu:
/// n! (l(mu)-1)! / (prod_i mu_i! * prod_i n_i(mu)!). Rejects the empty
/// partition.
Integer necklace_count(const IntegerPartition& mu);

/// Number of permutations of [|lam|] with cycle type lam:
/// n! / (prod_i n_i(lam)! * prod_i lam_i). Rejects the empty partition.
Integer cycle_type_count(const IntegerPartition& lam);

/// Number of distinct orderings of the parts of mu: l(mu)!/prod_i n_i(mu)!.
/// Rejects the empty partition.
Integer composition_count(const IntegerPartition& mu);

}  // namespace multisym
