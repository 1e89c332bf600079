#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qseries/bailey_a2.hpp"
#include "qseries/errors.hpp"
#include "qseries/pochhammer.hpp"
#include "qseries/rational_function.hpp"

namespace qseries {

// A hypergeometric parameter: a signed power of q, or 0.
using HyperParam = std::optional<Monomial>;

inline HyperParam hp(int exponent, int sign = 1) { return Monomial{sign, exponent}; }
inline const HyperParam kZeroParam = std::nullopt;

namespace detail {

inline RationalFunction hyper_poch(const HyperParam& p, int k) {
  if (!p) return RationalFunction(LaurentSeries::one());
  return RationalFunction::poch(*p, k);
}

inline RationalFunction hyper_reciprocal_poch(const HyperParam& p, int k) {
  if (!p) return RationalFunction(LaurentSeries::one());
  return RationalFunction::reciprocal_poch(*p, k);
}

}  // namespace detail

// r phi s [a; b; z] = sum_k (a_1..a_r)_k / ((q, b_1..b_s)_k) ((-1)^k q^{k(k-1)/2})^{1+s-r} z^k,
// summed for 0 <= k <= terms.  The caller supplies a terminating parameter.
inline RationalFunction phi(const std::vector<HyperParam>& upper, const std::vector<HyperParam>& lower,
                            const Monomial& z, int terms) {
  const int excess = 1 + static_cast<int>(lower.size()) - static_cast<int>(upper.size());
  RationalFunction total;
  for (int k = 0; k <= terms; ++k) {
    // lower parameters first so a 0/0 term is reported as a pole
    RationalFunction t = RationalFunction::reciprocal_qpoch(k);
    for (const HyperParam& b : lower) t *= detail::hyper_reciprocal_poch(b, k);
    for (const HyperParam& a : upper) {
      t *= detail::hyper_poch(a, k);
      if (t.is_zero()) break;
    }
    if (t.is_zero()) continue;
    const int sign = (k * excess) % 2 == 0 ? 1 : -1;
    const int zsign = (z.sign < 0 && k % 2 != 0) ? -1 : 1;
    total += t.times({sign * zsign, excess * k * (k - 1) / 2 + z.exponent * k});
  }
  return total;
}

enum class ClassicalId { qCV1, qCV2, SearsIII9, SearsIII11, JacksonIII7, Jackson2, WatsonLimit, Sim, Sum1, Sum2 };

struct ClassicalInfo {
  ClassicalId id;
  const char* name;
  std::vector<const char*> params;
};

inline const std::vector<ClassicalInfo>& classical_identities() {
  static const std::vector<ClassicalInfo> table = {
      {ClassicalId::qCV1, "qCV1", {"n", "b", "c"}},
      {ClassicalId::qCV2, "qCV2", {"n", "b", "c"}},
      {ClassicalId::SearsIII9, "Sears-III.9", {"n", "b", "c", "d", "e"}},
      {ClassicalId::SearsIII11, "Sears-III.11", {"n", "b", "c", "d", "e"}},
      {ClassicalId::JacksonIII7, "Jackson-III.7", {"n", "b", "c", "z"}},
      {ClassicalId::Jackson2, "Jackson2", {"n", "c", "z"}},
      {ClassicalId::WatsonLimit, "Watson-limit", {"n", "a", "e"}},
      {ClassicalId::Sim, "sim", {"A", "B", "sigma"}},
      {ClassicalId::Sum1, "sum1", {"M1", "M2", "k1", "k2", "ell"}},
      {ClassicalId::Sum2, "sum2", {"M1", "M2", "k1", "k2", "ell"}},
  };
  return table;
}

inline ClassicalId classical_id_from_name(const std::string& name) {
  for (const auto& info : classical_identities())
    if (name == info.name) return info.id;
  throw DomainError("unknown classical identity '" + name + "'");
}

struct ClassicalSides {
  RationalFunction lhs;
  RationalFunction rhs;
};

// Parameters are exponents of q (b = q^b, ...); an optional "<name>_sign"
// entry of -1 negates a parameter.
inline ClassicalSides classical_identity_sides(ClassicalId id, const std::map<std::string, int>& params) {
  auto get = [&](const char* name) {
    auto it = params.find(name);
    if (it == params.end()) throw DomainError(std::string("missing parameter '") + name + "'");
    return it->second;
  };
  auto sgn = [&](const char* name) {
    auto it = params.find(std::string(name) + "_sign");
    if (it == params.end()) return 1;
    if (it->second != 1 && it->second != -1) throw DomainError("parameter signs must be +1 or -1");
    return it->second;
  };
  auto par = [&](const char* name) { return Monomial{sgn(name), get(name)}; };
  auto div = [](const Monomial& x, const Monomial& y) { return Monomial{x.sign * y.sign, x.exponent - y.exponent}; };
  auto mul = [](const Monomial& x, const Monomial& y) { return Monomial{x.sign * y.sign, x.exponent + y.exponent}; };
  auto pw = [](const Monomial& x, int n) { return Monomial{(x.sign < 0 && n % 2 != 0) ? -1 : 1, x.exponent * n}; };
  auto poch = [](const Monomial& x, int n) { return RationalFunction::poch(x, n); };
  auto rpoch = [](const Monomial& x, int n) { return RationalFunction::reciprocal_poch(x, n); };
  auto nonneg = [](int n, const char* what) {
    if (n < 0) throw DomainError(std::string(what) + " must be nonnegative");
  };

  switch (id) {
    case ClassicalId::qCV1: {
      const int n = get("n");
      nonneg(n, "n");
      const Monomial b = par("b"), c = par("c");
      const Monomial z = div(c, b).times_q(n);
      return {phi({hp(-n), b}, {c}, z, n), poch(div(c, b), n) * rpoch(c, n)};
    }
    case ClassicalId::qCV2: {
      const int n = get("n");
      nonneg(n, "n");
      const Monomial b = par("b"), c = par("c");
      return {phi({hp(-n), b}, {c}, qpow(1), n), (poch(div(c, b), n) * rpoch(c, n)).times(pw(b, n))};
    }
    case ClassicalId::SearsIII11: {
      const int n = get("n");
      nonneg(n, "n");
      const Monomial b = par("b"), c = par("c"), d = par("d"), e = par("e");
      const Monomial debc = div(mul(d, e), mul(b, c));
      const RationalFunction lhs = phi({hp(-n), b, c}, {d, e}, qpow(1), n);
      const RationalFunction rhs = (poch(debc, n) * rpoch(e, n)).times(pw(div(mul(b, c), d), n)) *
                                   phi({hp(-n), div(d, b), div(d, c)}, {d, debc}, qpow(1), n);
      return {lhs, rhs};
    }
    case ClassicalId::SearsIII9: {
      const int n = get("n");
      nonneg(n, "n");
      const Monomial b = par("b"), c = par("c"), d = par("d"), e = par("e");
      const Monomial debc = div(mul(d, e), mul(b, c));
      const RationalFunction lhs = phi({hp(-n), b, c}, {d, e}, debc.times_q(n), n);
      const RationalFunction rhs =
          poch(debc, n) * rpoch(e, n) * phi({hp(-n), div(d, b), div(d, c)}, {d, debc}, e.times_q(n), n);
      return {lhs, rhs};
    }
    case ClassicalId::JacksonIII7: {
      const int n = get("n");
      nonneg(n, "n");
      const Monomial b = par("b"), c = par("c"), z = par("z");
      const RationalFunction lhs = phi({hp(-n), b}, {c}, z, n);
      const Monomial third = div(mul(b, z), c).times_q(-n);
      const Monomial low = div(b, c).times_q(1 - n);
      const RationalFunction rhs =
          poch(div(c, b), n) * rpoch(c, n) * phi({hp(-n), b, third}, {low, kZeroParam}, qpow(1), n);
      return {lhs, rhs};
    }
    case ClassicalId::Jackson2: {
      // b -> oo in 2phi1[q^-n, b; c; z q^n / b]
      const int n = get("n");
      nonneg(n, "n");
      const Monomial c = par("c"), z = par("z");
      const RationalFunction lhs = phi({hp(-n)}, {c}, z.times_q(n), n);
      const RationalFunction rhs = rpoch(c, n) * phi({hp(-n), div(z, c)}, {kZeroParam}, c.times_q(n), n);
      return {lhs, rhs};
    }
    case ClassicalId::WatsonLimit: {
      // Watson's 8phi7 -> 4phi3 with b, c, d -> oo, a = q^ell, ell in {0, 1}
      const int n = get("n");
      const int ell = get("a");
      nonneg(n, "n");
      if (ell != 0 && ell != 1) throw DomainError("Watson limit is taken at a = 1 or a = q");
      const Monomial e = par("e");
      const Monomial aq = qpow(ell + 1);
      RationalFunction lhs;
      for (int k = 0; k <= n; ++k) {
        // (a)_k (1 - a q^{2k}) / (1 - a), with the a = 1 limit at k = 0
        RationalFunction w = k == 0 ? RationalFunction(LaurentSeries::one())
                                    : poch(aq, k - 1) * RationalFunction(LaurentSeries::one_minus(ell + 2 * k));
        w *= poch(e, k) * poch(qpow(-n), k);
        if (w.is_zero()) continue;
        w *= RationalFunction::reciprocal_qpoch(k) * rpoch(div(aq, e), k) * rpoch(qpow(ell + n + 1), k);
        const Monomial z = div(Monomial{1, 2 * ell + n + 2}, e);
        const Monomial m = mul(Monomial{k % 2 == 0 ? 1 : -1, 3 * k * (k - 1) / 2}, pw(z, k));
        lhs += w.times(m);
      }
      const RationalFunction rhs =
          poch(aq, n) * rpoch(div(aq, e), n) * phi({hp(-n), e}, {kZeroParam}, div(qpow(ell + n + 1), e), n);
      return {lhs, rhs};
    }
    case ClassicalId::Sim: {
      const int A = get("A"), B = get("B"), sigma = get("sigma");
      if (sigma != 0 && sigma != 1) throw DomainError("sigma must be 0 or 1");
      auto rq = [](int m) { return RationalFunction::reciprocal_qpoch(m); };
      RationalFunction lhs, rhs;
      for (int r1 = 0; r1 <= A; ++r1)
        for (int r2 = 0; r2 <= B; ++r2)
          lhs += (rq(A - r1) * rq(B - r2) * rq(r1) * rq(r2) * rq(r1 + r2 + sigma))
                     .shifted(r1 * r1 + r1 * r2 + r2 * r2 + sigma * (r1 + r2));
      for (int r = 0; r <= std::min(A, B); ++r)
        rhs += (rq(A + B + sigma) * rq(A - r) * rq(B - r) * rq(r)).shifted(r * (r + sigma));
      return {lhs, rhs};
    }
    case ClassicalId::Sum1:
    case ClassicalId::Sum2: {
      const int M1 = get("M1"), M2 = get("M2"), ell = get("ell");
      const Triple k{get("k1"), get("k2"), -get("k1") - get("k2")};
      nonneg(M1, "M1");
      nonneg(M2, "M2");
      nonneg(ell, "ell");
      if (!is_triangular(k)) throw DomainError("k must satisfy k1 >= k2 >= k3");
      const PairType type = id == ClassicalId::Sum1 ? PairType::I : PairType::II;
      RationalFunction lhs;
      for (int L1 = 0; L1 <= M1; ++L1)
        for (int L2 = 0; L2 <= M2; ++L2) {
          const RationalFunction kern = a2_kernel(type, ell, L1, L2, k);
          if (kern.is_zero()) continue;
          lhs += (kern * RationalFunction::reciprocal_qpoch(M1 - L1) * RationalFunction::reciprocal_qpoch(M2 - L2))
                     .shifted(ell * L1 + L1 * L1 - L1 * L2 + L2 * L2);
        }
      const int e = ell * (k[0] + k[1]) + (k[0] * k[0] + k[1] * k[1] + k[2] * k[2]) / 2;
      RationalFunction rhs = kernel_type2(ell, M1, M2, k).shifted(e);
      if (type == PairType::I && !rhs.is_zero()) rhs *= poch(qpow(ell + 1), M1 + M2);
      return {lhs, rhs};
    }
  }
  throw DomainError("unhandled classical identity");
}

inline bool verify_classical_identity(ClassicalId id, const std::map<std::string, int>& params) {
  const ClassicalSides s = classical_identity_sides(id, params);
  return s.lhs == s.rhs;
}

}  // namespace qseries
