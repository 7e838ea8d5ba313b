#pragma once

#include <compare>
#include <iterator>
#include <vector>

#include "cusptrees/bigint.hpp"

namespace cusptrees {

// Integer partition: weakly decreasing positive parts with their sum cached.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return static_cast<int>(parts_.size()); }
  int sum() const noexcept { return sum_; }

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int sum_ = 0;
};

struct PartWithMultiplicity {
  int part;
  int multiplicity;
  bool operator==(const PartWithMultiplicity&) const = default;
};

// Multiplicity view of a partition: distinct parts in strictly increasing
// order, each with its multiplicity.
class PartMultiplicity {
 public:
  explicit PartMultiplicity(std::vector<PartWithMultiplicity> entries);

  const std::vector<PartWithMultiplicity>& entries() const noexcept { return entries_; }
  int size() const noexcept { return static_cast<int>(entries_.size()); }
  // Sum of part * multiplicity, i.e. the n of the originating partition.
  int total() const noexcept { return total_; }
  // Reconstructs the weakly decreasing partition.
  Partition expand() const;

  bool operator==(const PartMultiplicity&) const = default;

 private:
  std::vector<PartWithMultiplicity> entries_;
  int total_ = 0;
};

PartMultiplicity conv_part(const Partition& p);

// Range over the partitions of n in reverse-lexicographic order (largest
// first): 4 -> [4], [3,1], [2,2], [2,1,1], [1,1,1,1]. An optional max_part
// restricts every part to at most that value.
class PartitionRange {
 public:
  PartitionRange(int n, int max_part);

  class iterator {
   public:
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(int n, int max_part);

    const Partition& operator*() const { return current_; }
    const Partition* operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return it.done_;
    }

   private:
    Partition current_{std::vector<int>{1}};
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_, max_part_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  int n_;
  int max_part_;
};

PartitionRange partitions_of(int n);
PartitionRange partitions_of(int n, int max_part);

// Exact binomial coefficient C(n, k) for big n and small k >= 0.
BigInt binomial(const BigInt& n, int k);

// Number of size-m multisets drawn from type_count types:
// C(type_count + m - 1, m).
BigInt multiset_coefficient(const BigInt& type_count, int multiplicity);

}  // namespace cusptrees
