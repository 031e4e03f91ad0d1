#include "multisym/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace multisym {

IntegerPartition::IntegerPartition(std::vector<int> parts)
    : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("partition parts must be >= 1");
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

IntegerPartition IntegerPartition::parse(const std::string& text) {
  if (text.empty()) return IntegerPartition();
  std::vector<int> parts;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) throw std::invalid_argument("malformed partition: " + text);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed partition: " + text);
    }
    if (used != token.size())
      throw std::invalid_argument("malformed partition: " + text);
    parts.push_back(value);
  }
  return IntegerPartition(std::move(parts));
}

int IntegerPartition::multiplicity(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

IntegerPartition IntegerPartition::disjoint_union(
    const IntegerPartition& other) const {
  std::vector<int> merged;
  merged.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(),
             other.parts_.end(), std::back_inserter(merged),
             std::greater<int>());
  IntegerPartition out;
  out.parts_ = std::move(merged);
  out.weight_ = weight_ + other.weight_;
  return out;
}

std::string IntegerPartition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

bool PartitionOrder::operator()(const IntegerPartition& a,
                                const IntegerPartition& b) const {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  const auto& pa = a.parts();
  const auto& pb = b.parts();
  for (std::size_t i = 0; i < pa.size() && i < pb.size(); ++i)
    if (pa[i] != pb[i]) return pa[i] > pb[i];
  return false;  // equal weight and one a prefix of the other implies equal
}

std::vector<IntegerPartition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<IntegerPartition> out;
  std::vector<int> current;
  // First parts chosen largest first yields reverse-lexicographic order.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(IntegerPartition(current));
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Integer prod_parts_factorial(const IntegerPartition& p) {
  Integer out = 1;
  for (int part : p.parts()) out *= factorial(part);
  return out;
}

Integer prod_mult_factorial(const IntegerPartition& p) {
  Integer out = 1;
  const auto& parts = p.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    out *= factorial(static_cast<long>(j - i));
    i = j;
  }
  return out;
}

Integer set_partition_count(int n, const IntegerPartition& shape) {
  if (shape.weight() != n)
    throw std::invalid_argument("set_partition_count: shape is not a partition of n");
  return factorial(n) / (prod_parts_factorial(shape) * prod_mult_factorial(shape));
}

Integer necklace_count(const IntegerPartition& mu) {
  if (mu.empty())
    throw std::invalid_argument("necklace_count: empty partition");
  return factorial(mu.weight()) * factorial(mu.length() - 1) /
         (prod_parts_factorial(mu) * prod_mult_factorial(mu));
}

Integer cycle_type_count(const IntegerPartition& lam) {
  if (lam.empty())
    throw std::invalid_argument("cycle_type_count: empty partition");
  Integer prod_parts = 1;
  for (int part : lam.parts()) prod_parts *= part;
  return factorial(lam.weight()) / (prod_mult_factorial(lam) * prod_parts);
}

Integer composition_count(const IntegerPartition& mu) {
  if (mu.empty())
    throw std::invalid_argument("composition_count: empty partition");
  return factorial(mu.length()) / prod_mult_factorial(mu);
}

}  // namespace multisym
