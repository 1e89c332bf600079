#pragma once

#include <string>

#include "qseries/catalog/sums.hpp"
#include "qseries/errors.hpp"
#include "qseries/qbinomial.hpp"

namespace qseries::catalog {

enum class GdeKind { gamma = 0, delta = 1, epsilon = 2 };
enum class GdeRoute { defining, alternative };

inline GdeKind gde_kind(int k) {
  if (k < 0 || k > 2) throw DomainError("kind must be 0 (gamma), 1 (delta) or 2 (epsilon)");
  return static_cast<GdeKind>(k);
}

inline const char* to_string(GdeKind k) {
  switch (k) {
    case GdeKind::gamma: return "gamma";
    case GdeKind::delta: return "delta";
    case GdeKind::epsilon: return "epsilon";
  }
  return "?";
}

// sum_i q^{e1(i)} [N+M; N-3i] - q^{e2(i)} [N+M; N-3i+1]
inline LaurentSeries gde_defining(GdeKind kind, int N, int M) {
  LaurentSeries r;
  if (N + M < 0) return r;
  const int reach = (std::abs(N) + std::abs(M)) / 3 + 2;
  for (int i = -reach; i <= reach; ++i) {
    int e1 = 0, e2 = 0;
    switch (kind) {
      case GdeKind::gamma: e1 = 6 * i * i + 2 * i; e2 = 6 * i * i - 2 * i; break;
      case GdeKind::delta: e1 = 6 * i * i - i; e2 = 6 * i * i - 5 * i + 1; break;
      case GdeKind::epsilon: e1 = 6 * i * i - 4 * i; e2 = 6 * i * i - 8 * i + 2; break;
    }
    r += qbin_shift(N + M, N - 3 * i, e1);
    r -= qbin_shift(N + M, N - 3 * i + 1, e2);
  }
  return r;
}

// The single sums over h >= 0 of (q^x)_n/(q)_n terms.
inline LaurentSeries gde_alternative(GdeKind kind, int N, int M) {
  LaurentSeries r;
  const int hmax = std::abs(M - N) + 4;
  for (int h = 0; h <= hmax; ++h) {
    LaurentSeries t;
    switch (kind) {
      case GdeKind::gamma:
        t = qratio(M - N - h - 1, 2 * h + 1).shifted((2 * h + 1) * (N + 1) + h * (h + 1) / 2).scaled(Integer(sign_of(h + 1)));
        break;
      case GdeKind::delta:
        t = qratio(M - N - h + 1, 2 * h).shifted(2 * h * N + h * (h + 1) / 2).scaled(Integer(sign_of(h)));
        break;
      case GdeKind::epsilon:
        t = qratio(M - N - h + 2, 2 * h + 1).shifted((2 * h + 1) * N + h * (h - 1) / 2 - 1).scaled(Integer(sign_of(h)));
        break;
    }
    if (!t.is_zero()) r += t;
  }
  return r;
}

inline LaurentSeries gde_eval(GdeKind kind, int N, int M, GdeRoute route) {
  return route == GdeRoute::defining ? gde_defining(kind, N, M) : gde_alternative(kind, N, M);
}

struct GdeSides {
  LaurentSeries lhs;
  LaurentSeries rhs;
};

// gamma(N,M) = -gamma(M-1,N+1) and epsilon(N,M) = -epsilon(M+2,N-2)
inline GdeSides gde_symmetry(GdeKind kind, int N, int M) {
  if (kind == GdeKind::gamma) return {gde_defining(kind, N, M), -gde_defining(kind, M - 1, N + 1)};
  if (kind == GdeKind::epsilon) return {gde_defining(kind, N, M), -gde_defining(kind, M + 2, N - 2)};
  throw DomainError("only gamma and epsilon have a reflection symmetry");
}

// For N + M >= 1:
// 1: gamma(N,M) = gamma(N-1,M) + q^N delta(N,M-1)
// 2: delta(N,M) = delta(N-1,M) + q^N epsilon(N,M-1)
// 3: delta(N,M) = delta(N,M-1) + q^M gamma(N-1,M)
// 4: epsilon(N,M) = epsilon(N,M-1) + q^M delta(N-1,M)
inline GdeSides gde_recurrence(int which, int N, int M, GdeRoute route) {
  auto f = [&](GdeKind k, int a, int b) { return gde_eval(k, a, b, route); };
  switch (which) {
    case 1: return {f(GdeKind::gamma, N, M), f(GdeKind::gamma, N - 1, M) + f(GdeKind::delta, N, M - 1).shifted(N)};
    case 2: return {f(GdeKind::delta, N, M), f(GdeKind::delta, N - 1, M) + f(GdeKind::epsilon, N, M - 1).shifted(N)};
    case 3: return {f(GdeKind::delta, N, M), f(GdeKind::delta, N, M - 1) + f(GdeKind::gamma, N - 1, M).shifted(M)};
    case 4: return {f(GdeKind::epsilon, N, M), f(GdeKind::epsilon, N, M - 1) + f(GdeKind::delta, N - 1, M).shifted(M)};
    default: throw DomainError("recurrence index must be 1..4");
  }
}

}  // namespace qseries::catalog
