#include "multisym/set_partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace multisym {

namespace {

std::vector<std::vector<int>> blocks_from_ids(int n,
                                              const std::vector<int>& ids) {
  int max_id = -1;
  for (int id : ids) max_id = std::max(max_id, id);
  std::vector<std::vector<int>> blocks(max_id + 1);
  for (int v = 1; v <= n; ++v) blocks[ids[v - 1]].push_back(v);
  return blocks;
}

}  // namespace

SetPartition::SetPartition(int ground_size,
                           std::vector<std::vector<int>> blocks)
    : ground_(ground_size), blocks_(std::move(blocks)) {
  if (ground_ < 0) throw std::invalid_argument("negative ground size");
  std::vector<bool> seen(ground_, false);
  int covered = 0;
  for (auto& block : blocks_) {
    if (block.empty()) throw std::invalid_argument("empty block");
    std::sort(block.begin(), block.end());
    for (int v : block) {
      if (v < 1 || v > ground_)
        throw std::invalid_argument("element outside ground set");
      if (seen[v - 1]) throw std::invalid_argument("blocks are not disjoint");
      seen[v - 1] = true;
      ++covered;
    }
  }
  if (covered != ground_)
    throw std::invalid_argument("blocks do not cover the ground set");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

SetPartition SetPartition::singletons(int n) {
  std::vector<std::vector<int>> blocks;
  for (int v = 1; v <= n; ++v) blocks.push_back({v});
  return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::one_block(int n) {
  if (n < 1) throw std::invalid_argument("one_block needs n >= 1");
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  return SetPartition(n, {all});
}

SetPartition SetPartition::parse(const std::string& text, int ground_size) {
  if (text.empty()) return SetPartition(ground_size, {});
  std::vector<std::vector<int>> blocks;
  std::stringstream in(text);
  std::string block_text;
  while (std::getline(in, block_text, '|')) {
    std::vector<int> block;
    std::stringstream bin(block_text);
    std::string token;
    while (std::getline(bin, token, ',')) {
      try {
        std::size_t used = 0;
        int v = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        block.push_back(v);
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed set partition: " + text);
      }
    }
    blocks.push_back(std::move(block));
  }
  return SetPartition(ground_size, std::move(blocks));
}

IntegerPartition SetPartition::shape() const {
  std::vector<int> sizes;
  sizes.reserve(blocks_.size());
  for (const auto& block : blocks_) sizes.push_back(static_cast<int>(block.size()));
  return IntegerPartition(std::move(sizes));
}

std::vector<int> SetPartition::block_of_element() const {
  std::vector<int> ids(ground_, -1);
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    for (int v : blocks_[b]) ids[v - 1] = static_cast<int>(b);
  return ids;
}

std::string SetPartition::str() const {
  std::string out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) out += '|';
    for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i) out += ',';
      out += std::to_string(blocks_[b][i]);
    }
  }
  return out;
}

SetPartition meet(const SetPartition& a, const SetPartition& b) {
  if (a.ground_size() != b.ground_size())
    throw std::invalid_argument("meet: mismatched ground sizes");
  int n = a.ground_size();
  auto ida = a.block_of_element();
  auto idb = b.block_of_element();
  // Pair of block ids -> new id in first-occurrence order (which is minimal
  // element order, so the result is canonical).
  std::vector<int> ids(n);
  std::vector<std::pair<int, int>> seen;
  for (int v = 0; v < n; ++v) {
    std::pair<int, int> key{ida[v], idb[v]};
    auto it = std::find(seen.begin(), seen.end(), key);
    if (it == seen.end()) {
      seen.push_back(key);
      ids[v] = static_cast<int>(seen.size()) - 1;
    } else {
      ids[v] = static_cast<int>(it - seen.begin());
    }
  }
  return SetPartition(n, blocks_from_ids(n, ids));
}

SetPartition join(const SetPartition& a, const SetPartition& b) {
  if (a.ground_size() != b.ground_size())
    throw std::invalid_argument("join: mismatched ground sizes");
  int n = a.ground_size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
  for (const auto* p : {&a, &b})
    for (const auto& block : p->blocks())
      for (std::size_t i = 1; i < block.size(); ++i)
        unite(block[0] - 1, block[i] - 1);
  std::vector<int> ids(n), label(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    int root = find(v);
    if (label[root] < 0) label[root] = next++;
    ids[v] = label[root];
  }
  return SetPartition(n, blocks_from_ids(n, ids));
}

bool refines(const SetPartition& a, const SetPartition& b) {
  if (a.ground_size() != b.ground_size())
    throw std::invalid_argument("refines: mismatched ground sizes");
  auto idb = b.block_of_element();
  for (const auto& block : a.blocks()) {
    int target = idb[block.front() - 1];
    for (int v : block)
      if (idb[v - 1] != target) return false;
  }
  return true;
}

std::vector<SetPartition> enumerate_set_partitions(int n) {
  if (n < 0) throw std::invalid_argument("negative ground size");
  if (n > 14)
    throw std::invalid_argument("set partition enumeration capped at n = 14");
  std::vector<SetPartition> out;
  std::vector<int> ids(n);
  std::function<void(int, int)> rec = [&](int pos, int max_used) {
    if (pos == n) {
      out.push_back(SetPartition(n, blocks_from_ids(n, ids)));
      return;
    }
    for (int id = 0; id <= max_used + 1; ++id) {
      ids[pos] = id;
      rec(pos + 1, std::max(max_used, id));
    }
  };
  if (n == 0)
    out.push_back(SetPartition(0, {}));
  else
    rec(0, -1);
  return out;
}

std::vector<SetPartition> enumerate_set_partitions_of_shape(
    int n, const IntegerPartition& shape) {
  if (shape.weight() != n)
    throw std::invalid_argument("shape is not a partition of n");
  std::vector<SetPartition> out;
  for (auto& pi : enumerate_set_partitions(n))
    if (pi.shape() == shape) out.push_back(std::move(pi));
  return out;
}

}  // namespace multisym
