#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

namespace qseries {

// A permutation of {1..n} together with its sign.
struct SignedPermutation {
  std::vector<int> images;
  int sign = 1;

  int operator()(int i) const { return images[static_cast<std::size_t>(i - 1)]; }
};

inline int permutation_sign(const std::vector<int>& images) {
  int sign = 1;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      if (images[i] > images[j]) sign = -sign;
  return sign;
}

// All n! permutations in lexicographic order of their image lists.
inline std::vector<SignedPermutation> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<SignedPermutation> out;
  do {
    out.push_back({p, permutation_sign(p)});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline const std::vector<SignedPermutation>& symmetric_group3() {
  static const std::vector<SignedPermutation> s3 = all_permutations(3);
  return s3;
}

}  // namespace qseries
