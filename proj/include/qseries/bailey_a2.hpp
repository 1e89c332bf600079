#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <utility>

#include "qseries/errors.hpp"
#include "qseries/permutation.hpp"
#include "qseries/pochhammer.hpp"
#include "qseries/rational_function.hpp"

namespace qseries {

using Triple = std::array<int, 3>;
using Index2 = std::pair<int, int>;

enum class PairType { I, II };

inline const char* to_string(PairType t) { return t == PairType::I ? "I" : "II"; }

// An A2 Bailey pair relative to a = q^ell.  alpha is keyed on triangular
// triples k1 >= k2 >= k3 with k1 + k2 + k3 = 0; beta on (L1, L2) with
// L1 + L2 <= bound.
struct BaileyPairA2 {
  int a_exponent = 0;
  PairType type = PairType::I;
  int bound = 0;
  std::map<Triple, RationalFunction> alpha;
  std::map<Index2, RationalFunction> beta;

  const RationalFunction& alpha_at(const Triple& k) const {
    static const RationalFunction kZero;
    auto it = alpha.find(k);
    return it == alpha.end() ? kZero : it->second;
  }
  const RationalFunction& beta_at(int L1, int L2) const {
    auto it = beta.find({L1, L2});
    if (it == beta.end()) throw DomainError("beta requested outside the realized range");
    return it->second;
  }
};

struct PairCheckA2 {
  bool ok = true;
  std::optional<Index2> failed_at;
};

inline bool is_triangular(const Triple& k) { return k[0] >= k[1] && k[1] >= k[2] && k[0] + k[1] + k[2] == 0; }

// sum_r q^{r1 r23} / ((q)_{r1}(q)_{r2}(aq)_{r3}(q)_{r12}(q)_{r13}(q)_{r23}) over
//   r1 + r12 + r13 = L2 - k1,  r2 + r12 + r23 = L2 - k2,  r3 + r13 + r23 = L2 - k3,
//   r12 + r13 + r23 = 2L2 - L1.
inline RationalFunction kernel_type1(int ell, int L1, int L2, const Triple& k) {
  RationalFunction total;
  const int b = 2 * L2 - L1;
  if (b < 0) return total;
  const Monomial aq = qpow(ell + 1);
  for (int r12 = 0; r12 <= b; ++r12)
    for (int r13 = 0; r12 + r13 <= b; ++r13) {
      const int r23 = b - r12 - r13;
      const int r1 = L2 - k[0] - r12 - r13;
      const int r2 = L2 - k[1] - r12 - r23;
      const int r3 = L2 - k[2] - r13 - r23;
      if (r1 < 0 || r2 < 0) continue;
      RationalFunction t = RationalFunction::reciprocal_poch(aq, r3);
      if (t.is_zero()) continue;
      t *= RationalFunction::reciprocal_qpoch(r1) * RationalFunction::reciprocal_qpoch(r2) *
           RationalFunction::reciprocal_qpoch(r12) * RationalFunction::reciprocal_qpoch(r13) *
           RationalFunction::reciprocal_qpoch(r23);
      total += t.shifted(r1 * r23);
    }
  return total;
}

// (aq)_{L1+L2} / ((aq)_{L1+k1}(aq)_{L1+k2}(q)_{L1+k3}(q)_{L2-k1}(q)_{L2-k2}(aq)_{L2-k3})
inline RationalFunction kernel_type2(int ell, int L1, int L2, const Triple& k) {
  const Monomial aq = qpow(ell + 1);
  RationalFunction t = RationalFunction::reciprocal_qpoch(L1 + k[2]);
  for (int n : {L2 - k[0], L2 - k[1]}) {
    if (t.is_zero()) return t;
    t *= RationalFunction::reciprocal_qpoch(n);
  }
  for (int n : {L1 + k[0], L1 + k[1], L2 - k[2]}) {
    if (t.is_zero()) return t;
    t *= RationalFunction::reciprocal_poch(aq, n);
  }
  if (t.is_zero()) return t;
  return t * RationalFunction::poch(aq, L1 + L2);
}

inline RationalFunction a2_kernel(PairType type, int ell, int L1, int L2, const Triple& k) {
  return type == PairType::I ? kernel_type1(ell, L1, L2, k) : kernel_type2(ell, L1, L2, k);
}

// Triangular triples that can meet a nonzero kernel for L1 + L2 <= bound.
inline std::vector<Triple> kernel_support(int bound, int ell) {
  std::vector<Triple> out;
  const int reach = 2 * (bound + ell) + 2;
  for (int k1 = 0; k1 <= reach; ++k1)
    for (int k2 = -reach; k2 <= k1; ++k2) {
      const Triple k{k1, k2, -k1 - k2};
      if (is_triangular(k) && k[2] >= -reach) out.push_back(k);
    }
  return out;
}

// The type I pair relative to a = 1 read off the supernomial identity at
// ell = 0: alpha_K collects eps(sigma) q^{sum_s (3k_s - 2sigma_s)k_s/2} over
// K = (3k3 - sigma3 + 3, 3k2 - sigma2 + 2, 3k1 - sigma1 + 1) sorted
// decreasingly, and beta_L = delta_{L,0}.
inline BaileyPairA2 superid_seed_pair(int bound) {
  if (bound < 0) throw DomainError("pair bound must be nonnegative");
  BaileyPairA2 p;
  p.a_exponent = 0;
  p.type = PairType::I;
  p.bound = bound;
  const int reach = 2 * bound + 2;
  const int kr = reach / 3 + 2;
  for (int k1 = -kr; k1 <= kr; ++k1)
    for (int k2 = -kr; k2 <= kr; ++k2) {
      const Triple k{k1, k2, -k1 - k2};
      for (const SignedPermutation& s : symmetric_group3()) {
        Triple key{3 * k[2] - s(3) + 3, 3 * k[1] - s(2) + 2, 3 * k[0] - s(1) + 1};
        if (std::any_of(key.begin(), key.end(), [&](int x) { return x > reach || x < -reach; })) continue;
        std::sort(key.begin(), key.end(), std::greater<>());
        int twice = 0;
        for (int t = 0; t < 3; ++t) twice += (3 * k[static_cast<std::size_t>(t)] - 2 * s(t + 1)) * k[static_cast<std::size_t>(t)];
        p.alpha[key] += RationalFunction(LaurentSeries::monomial(twice / 2, Integer(s.sign)));
      }
    }
  for (auto it = p.alpha.begin(); it != p.alpha.end();) it = it->second.is_zero() ? p.alpha.erase(it) : std::next(it);
  for (int L1 = 0; L1 <= bound; ++L1)
    for (int L2 = 0; L1 + L2 <= bound; ++L2)
      p.beta[{L1, L2}] = (L1 == 0 && L2 == 0) ? RationalFunction(LaurentSeries::one()) : RationalFunction();
  return p;
}

// beta_L - sum_k alpha_k kernel_T(L, k)
inline RationalFunction a2_pair_defect(const BaileyPairA2& p, int L1, int L2) {
  RationalFunction rhs;
  for (const auto& [k, a] : p.alpha) {
    if (a.is_zero()) continue;
    const RationalFunction kern = a2_kernel(p.type, p.a_exponent, L1, L2, k);
    if (kern.is_zero()) continue;
    rhs += a * kern;
  }
  return p.beta_at(L1, L2) - rhs;
}

inline PairCheckA2 verify_a2_pair(const BaileyPairA2& p, int up_to) {
  if (up_to > p.bound) throw DomainError("pair is not realized up to the requested index");
  for (int L1 = 0; L1 <= up_to; ++L1)
    for (int L2 = 0; L1 + L2 <= up_to; ++L2)
      if (!a2_pair_defect(p, L1, L2).is_zero()) return {false, Index2{L1, L2}};
  return {};
}

// alpha'_k = a^{k1+k2} q^{(k1^2+k2^2+k3^2)/2} alpha_k,
// beta'_L = f_L sum_{r <= L} a^{r1} q^{r1^2 - r1 r2 + r2^2} beta_r / ((q)_{L1-r1}(q)_{L2-r2})
// with f = 1/(aq)_{L1+L2} for type I input and f = 1 for type II.
inline BaileyPairA2 transform_a2(const BaileyPairA2& p) {
  const int ell = p.a_exponent;
  BaileyPairA2 out;
  out.a_exponent = ell;
  out.type = PairType::II;
  out.bound = p.bound;
  for (const auto& [k, a] : p.alpha) {
    const int e = ell * (k[0] + k[1]) + (k[0] * k[0] + k[1] * k[1] + k[2] * k[2]) / 2;
    out.alpha[k] = a.shifted(e);
  }
  for (const auto& [L, b] : p.beta) {
    const auto [L1, L2] = L;
    RationalFunction sum;
    for (int r1 = 0; r1 <= L1; ++r1)
      for (int r2 = 0; r2 <= L2; ++r2) {
        const RationalFunction& br = p.beta_at(r1, r2);
        if (br.is_zero()) continue;
        sum += br.shifted(ell * r1 + r1 * r1 - r1 * r2 + r2 * r2) * RationalFunction::reciprocal_qpoch(L1 - r1) *
               RationalFunction::reciprocal_qpoch(L2 - r2);
      }
    if (p.type == PairType::I) sum *= RationalFunction::reciprocal_poch(qpow(ell + 1), L1 + L2);
    out.beta[L] = sum;
  }
  return out;
}

}  // namespace qseries
