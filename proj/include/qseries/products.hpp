#pragma once

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "qseries/errors.hpp"
#include "qseries/laurent_series.hpp"
#include "qseries/pochhammer.hpp"

namespace qseries {

namespace detail {

inline void check_distinct(const std::vector<int>& c) {
  if (c.size() < 2) throw DomainError("the Macdonald identity needs n >= 2");
  if (std::set<int>(c.begin(), c.end()).size() != c.size())
    throw DomainError("Macdonald specialization needs pairwise distinct exponents");
}

// Recurring piece of both Macdonald sides: exponents are read with the nome
// p = q^nome and x_i = q^{c_i}.
inline int vandermonde_exponent(const std::vector<int>& c, const std::vector<int>& k, int nome,
                                std::size_t i, std::size_t j) {
  return c[i] - c[j] + nome * (k[i] - k[j]);
}

}  // namespace detail

// Lattice side of the A_{n-1} Macdonald identity with x_i = q^{c_i} and nome
// p = q^nome:
//   sum_{k_1+..+k_n=0} prod_i x_i^{n k_i} p^{n k_i^2/2 + i k_i}
//                      prod_{i<j} (1 - x_i/x_j p^{k_i-k_j}).
// With nome = 1 both sides vanish identically; nome > 1 separates the c_i.
inline LaurentSeries macdonald_sum(const std::vector<int>& c, int order, int nome = 1) {
  detail::check_distinct(c);
  if (nome < 1) throw DomainError("nome exponent must be positive");
  const int n = static_cast<int>(c.size());
  // Valuation of a term is at least nome*(n/2)|k|^2 - A|k|_inf - B.
  long a_lin = 0, b_const = 0;
  for (int i = 0; i < n; ++i) a_lin += static_cast<long>(nome) * (i + 1) + static_cast<long>(n) * std::abs(c[static_cast<std::size_t>(i)]);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      a_lin += 2L * nome;
      b_const += std::abs(c[static_cast<std::size_t>(i)] - c[static_cast<std::size_t>(j)]);
    }
  int radius = 0;
  while (static_cast<long>(nome) * n * radius * radius <= 2L * (order + a_lin * radius + b_const)) ++radius;

  LaurentSeries total = LaurentSeries::zero_to_order(order);
  std::vector<int> k(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> go = [&](int idx, int partial) {
    if (idx == n - 1) {
      k[static_cast<std::size_t>(idx)] = -partial;
      if (std::abs(k[static_cast<std::size_t>(idx)]) > radius) return;
      long twice = 0;  // twice the monomial exponent
      for (int i = 0; i < n; ++i) {
        const long ki = k[static_cast<std::size_t>(i)];
        twice += 2L * n * c[static_cast<std::size_t>(i)] * ki + static_cast<long>(nome) * (n * ki * ki + 2L * (i + 1) * ki);
      }
      LaurentSeries term = LaurentSeries::monomial(static_cast<int>(twice / 2));
      for (std::size_t i = 0; i < c.size() && !term.is_zero(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) {
          const int e = detail::vandermonde_exponent(c, k, nome, i, j);
          if (e == 0) {
            term = LaurentSeries::zero();
            break;
          }
          term = term * LaurentSeries::one_minus(e);
        }
      total += term.truncated(order);
      return;
    }
    for (int v = -radius; v <= radius; ++v) {
      k[static_cast<std::size_t>(idx)] = v;
      go(idx + 1, partial + v);
    }
  };
  go(0, 0);
  return total;
}

// Product side: (p;p)_oo^{n-1} prod_{i<j} (x_i/x_j; p)_oo (p x_j/x_i; p)_oo.
inline LaurentSeries macdonald_product(const std::vector<int>& c, int order, int nome = 1) {
  detail::check_distinct(c);
  if (nome < 1) throw DomainError("nome exponent must be positive");
  const int n = static_cast<int>(c.size());
  // factors with negative exponents lower the valuation; compute with slack
  int slack = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int d = c[static_cast<std::size_t>(i)] - c[static_cast<std::size_t>(j)];
      slack += std::abs(d) * (std::abs(d) / nome + 1);
    }
  const int work = order + slack;
  LaurentSeries p = LaurentSeries::one();
  const LaurentSeries pp = infinite_product(qpow(nome), nome, work);
  for (int i = 1; i < n; ++i) p = multiply(p, pp, work);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int d = c[static_cast<std::size_t>(i)] - c[static_cast<std::size_t>(j)];
      p = multiply(p, infinite_product(qpow(d), nome, work), work);
      p = multiply(p, infinite_product(qpow(nome - d), nome, work), work);
      if (p.is_exact() && p.is_zero()) return LaurentSeries::zero();
    }
  return p.truncated(order);
}

// Composition (j_0,...,j_{n-1}) of k with parts >= 1, read cyclically.
struct CharacterSpec {
  int n = 3;
  int k = 0;
  std::vector<int> j;

  void validate() const {
    if (n < 2) throw DomainError("character rank must be at least 2");
    if (static_cast<int>(j.size()) != n) throw DomainError("character composition must have n parts");
    int sum = 0;
    for (int x : j) {
      if (x < 1) throw DomainError("character composition parts must be positive");
      sum += x;
    }
    if (sum != k) throw DomainError("character composition must sum to k");
  }
};

// (q^k;q^k)^{n-1}/(q;q)^{n-1} prod_{a=1}^{n-1} prod_{b=0}^{n-1}
//   (q^{j_b + ... + j_{a+b-1}}; q^k)_oo
inline LaurentSeries character_product(const CharacterSpec& spec, int order) {
  spec.validate();
  const int n = spec.n;
  LaurentSeries p = LaurentSeries::one();
  const LaurentSeries top = infinite_product(qpow(spec.k), spec.k, order);
  const LaurentSeries bottom = reciprocal_of_unit(infinite_product(qpow(1), 1, order), order);
  for (int i = 1; i < n; ++i) p = multiply(multiply(p, top, order), bottom, order);
  for (int a = 1; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int e = 0;
      for (int t = b; t < a + b; ++t) e += spec.j[static_cast<std::size_t>(t % n)];
      p = multiply(p, infinite_product(qpow(e), spec.k, order), order);
    }
  return p.truncated(order);
}

}  // namespace qseries
