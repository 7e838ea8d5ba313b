#include "cusptrees/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cusptrees {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) {
    throw std::invalid_argument("partition must have at least one part");
  }
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      throw std::invalid_argument("partition parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    sum_ += parts_[i];
  }
}

PartMultiplicity::PartMultiplicity(std::vector<PartWithMultiplicity> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw std::invalid_argument("part-multiplicity list must be non-empty");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].part < 1 || entries_[i].multiplicity < 1) {
      throw std::invalid_argument("parts and multiplicities must be positive");
    }
    if (i > 0 && entries_[i].part <= entries_[i - 1].part) {
      throw std::invalid_argument("parts must be strictly increasing");
    }
    total_ += entries_[i].part * entries_[i].multiplicity;
  }
}

Partition PartMultiplicity::expand() const {
  std::vector<int> parts;
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    parts.insert(parts.end(), static_cast<std::size_t>(it->multiplicity), it->part);
  }
  return Partition(std::move(parts));
}

PartMultiplicity conv_part(const Partition& p) {
  std::vector<PartWithMultiplicity> entries;
  const auto& parts = p.parts();
  // Parts are weakly decreasing, so walk them back to front.
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    if (entries.empty() || entries.back().part != *it) {
      entries.push_back({*it, 1});
    } else {
      ++entries.back().multiplicity;
    }
  }
  return PartMultiplicity(std::move(entries));
}

namespace {

std::vector<int> first_partition(int n, int max_part) {
  std::vector<int> parts(static_cast<std::size_t>(n / max_part), max_part);
  if (n % max_part != 0) parts.push_back(n % max_part);
  return parts;
}

}  // namespace

PartitionRange::iterator::iterator(int n, int max_part)
    : current_(first_partition(n, max_part)), done_(false) {}

PartitionRange::iterator& PartitionRange::iterator::operator++() {
  const std::vector<int>& parts = current_.parts();
  // Rightmost part that can still shrink; everything after it is 1s.
  int i = static_cast<int>(parts.size()) - 1;
  while (i >= 0 && parts[i] == 1) --i;
  if (i < 0) {
    done_ = true;
    return *this;
  }
  std::vector<int> next(parts.begin(), parts.begin() + i);
  int remaining = static_cast<int>(parts.size()) - 1 - i + parts[i];
  int x = parts[i] - 1;
  next.insert(next.end(), static_cast<std::size_t>(remaining / x), x);
  if (remaining % x != 0) next.push_back(remaining % x);
  current_ = Partition(std::move(next));
  return *this;
}

PartitionRange::PartitionRange(int n, int max_part) : n_(n), max_part_(max_part) {
  if (n < 1) throw std::domain_error("partitions_of requires n >= 1");
  if (max_part < 1) throw std::domain_error("max_part must be >= 1");
  if (max_part_ > n_) max_part_ = n_;
}

PartitionRange partitions_of(int n) { return PartitionRange(n, n); }

PartitionRange partitions_of(int n, int max_part) {
  return PartitionRange(n, max_part);
}

BigInt binomial(const BigInt& n, int k) {
  if (k < 0) throw std::invalid_argument("binomial requires k >= 0");
  if (n < 0) throw std::invalid_argument("binomial requires n >= 0");
  BigInt result = 1;
  // C(n, i) = C(n, i-1) * (n - i + 1) / i stays integral at every step.
  for (int i = 1; i <= k; ++i) {
    result *= n - (k - i);
    result /= i;
  }
  return result;
}

BigInt multiset_coefficient(const BigInt& type_count, int multiplicity) {
  if (type_count < 0) {
    throw std::invalid_argument("multiset_coefficient requires type_count >= 0");
  }
  if (multiplicity < 1) {
    throw std::invalid_argument("multiset_coefficient requires multiplicity >= 1");
  }
  return binomial(type_count + multiplicity - 1, multiplicity);
}

}  // namespace cusptrees
