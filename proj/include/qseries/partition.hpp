#pragma once

#include <algorithm>
#include <climits>
#include <compare>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "qseries/errors.hpp"

namespace qseries {

// Weakly decreasing sequence of positive integers (zeros are dropped).
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw DomainError("partition with a negative part");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must weakly decrease");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  // (1^{m_1} 2^{m_2} ...)
  static Partition from_multiplicities(const std::vector<int>& mult) {
    std::vector<int> parts;
    for (int size = static_cast<int>(mult.size()); size >= 1; --size) {
      const int m = mult[static_cast<std::size_t>(size - 1)];
      if (m < 0) throw DomainError("negative multiplicity");
      parts.insert(parts.end(), static_cast<std::size_t>(m), size);
    }
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  // i-th part, 0-based, zero past the end.
  int operator[](int i) const {
    return i >= 0 && i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  Partition conjugate() const {
    std::vector<int> c;
    if (!parts_.empty()) {
      for (int j = 0; j < parts_.front(); ++j) {
        int count = 0;
        for (int p : parts_) count += p > j ? 1 : 0;
        c.push_back(count);
      }
    }
    return Partition(std::move(c));
  }

  // Dominance order: every partial sum of *this is at least that of other.
  bool dominates(const Partition& other) const {
    if (weight() != other.weight()) return false;
    int a = 0, b = 0;
    const int n = std::max(length(), other.length());
    for (int i = 0; i < n; ++i) {
      a += (*this)[i];
      b += other[i];
      if (a < b) return false;
    }
    return true;
  }

  bool contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
      if (inner[i] > (*this)[i]) return false;
    return true;
  }

  std::string to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size(); ++i) out << (i ? " " : "") << parts_[i];
    return out.str();
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// outer/inner is a horizontal strip: inner is contained in outer and the
// rows interlace, outer_{i+1} <= inner_i.
inline bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner)) return false;
  for (int i = 0; i < outer.length(); ++i)
    if (outer[i + 1] > inner[i]) return false;
  return true;
}

// All partitions of n with parts <= max_part and at most max_length parts,
// in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int n, int max_part = INT_MAX, int max_length = INT_MAX) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> go = [&](int rest, int cap) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) >= max_length) return;
    for (int p = std::min(rest, cap); p >= 1; --p) {
      cur.push_back(p);
      go(rest - p, p);
      cur.pop_back();
    }
  };
  go(n, std::min(n, max_part));
  return out;
}

// A finite sequence of integers of fixed length; entries may be negative.
struct Composition {
  std::vector<int> parts;

  int weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  bool nonnegative() const {
    return std::all_of(parts.begin(), parts.end(), [](int x) { return x >= 0; });
  }
  friend bool operator==(const Composition&, const Composition&) = default;
};

// Chain of Young diagrams, empty at the start, each step a horizontal strip.
struct YoungChain {
  std::vector<Partition> diagrams;

  bool is_valid() const {
    if (diagrams.empty() || diagrams.front().weight() != 0) return false;
    for (std::size_t a = 1; a < diagrams.size(); ++a)
      if (!is_horizontal_strip(diagrams[a], diagrams[a - 1])) return false;
    return true;
  }

  // Sizes of the successive strips.
  std::vector<int> strip_sizes() const {
    std::vector<int> s;
    for (std::size_t a = 1; a < diagrams.size(); ++a)
      s.push_back(diagrams[a].weight() - diagrams[a - 1].weight());
    return s;
  }
};

}  // namespace qseries
