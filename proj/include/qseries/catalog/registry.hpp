#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "qseries/catalog/determinant.hpp"
#include "qseries/catalog/identities.hpp"
#include "qseries/errors.hpp"
#include "qseries/hypergeometric.hpp"

namespace qseries::catalog {

class UnknownIdentity : public Error {
 public:
  explicit UnknownIdentity(const std::string& id) : Error("unknown identity '" + id + "'") {}
};

enum class Mode { exact, truncated };

inline const char* to_string(Mode m) { return m == Mode::exact ? "exact" : "truncated"; }

struct RationalSides {
  RationalFunction lhs;
  RationalFunction rhs;
};

struct Entry {
  std::string id;
  std::vector<std::string> params;
  std::string domain;
  // nullopt when admissible, a diagnostic otherwise
  std::function<std::optional<std::string>(const Params&)> check;
  Mode mode = Mode::exact;
  int default_order = 40;
  std::function<Sides(const Params&, int)> build;
  std::function<RationalSides(const Params&)> build_rational;
  // extra optional parameters of the form <name>_sign
  bool signed_params = false;
};

struct Mismatch {
  int exponent = 0;
  Integer lhs;
  Integer rhs;
};

struct Report {
  std::string identity;
  std::vector<std::pair<std::string, int>> params;
  Mode mode = Mode::exact;
  int order = 0;
  bool equal = true;
  std::optional<Mismatch> first_mismatch;
  long long millis = 0;
};

namespace detail {

using Check = std::optional<std::string>;

inline Check require(bool ok, const char* message) {
  if (ok) return std::nullopt;
  return std::string(message);
}

inline Check all_of(std::initializer_list<Check> checks) {
  for (const Check& c : checks)
    if (c) return c;
  return std::nullopt;
}

inline bool triangular(int k1, int k2) { return k1 >= k2 && k2 >= -k1 - k2; }

inline Check nonneg_L(const Params& p) {
  return require(arg(p, "L1") >= 0 && arg(p, "L2") >= 0, "L1 and L2 must be nonnegative");
}

inline Check k_i(const Params& p, int kmin) {
  const int k = arg(p, "k"), i = arg(p, "i");
  if (k < kmin) return "k must be at least " + std::to_string(kmin);
  return require(i >= 1 && i <= k, "i must satisfy 1 <= i <= k");
}

inline Check k_at_least(const Params& p, int kmin) {
  return arg(p, "k") >= kmin ? Check{} : Check{"k must be at least " + std::to_string(kmin)};
}

inline Check selector(const Params& p, const char* name) {
  const int v = arg(p, name);
  if (v == 0 || v == 1) return std::nullopt;
  return std::string(name) + " must be 0 or 1";
}

inline Check none(const Params&) { return std::nullopt; }

inline Entry exact_entry(std::string id, std::vector<std::string> params, std::string domain,
                         std::function<Check(const Params&)> check, std::function<Sides(const Params&, int)> build) {
  Entry e;
  e.id = std::move(id);
  e.params = std::move(params);
  e.domain = std::move(domain);
  e.check = std::move(check);
  e.mode = Mode::exact;
  e.build = std::move(build);
  return e;
}

inline Entry series_entry(std::string id, std::vector<std::string> params, std::string domain,
                          std::function<Check(const Params&)> check, std::function<Sides(const Params&, int)> build) {
  Entry e = exact_entry(std::move(id), std::move(params), std::move(domain), std::move(check), std::move(build));
  e.mode = Mode::truncated;
  return e;
}

inline std::vector<Entry> make_catalog() {
  using S = std::vector<std::string>;
  std::vector<Entry> c;
  const S L12{"L1", "L2"};

  // A1
  c.push_back(exact_entry("euler", {"L"}, "L>=0", [](const Params& p) { return require(arg(p, "L") >= 0, "L must be nonnegative"); },
                          euler_sides));
  c.push_back(exact_entry("euler2", {"L"}, "L>=0", [](const Params& p) { return require(arg(p, "L") >= 0, "L must be nonnegative"); },
                          euler2_sides));
  c.push_back(exact_entry("AGfinite", {"k", "ell", "L"}, "k>=1, ell in {0,1}, L>=0",
                          [](const Params& p) {
                            return all_of({k_at_least(p, 1), selector(p, "ell"),
                                           require(arg(p, "L") >= 0, "L must be nonnegative")});
                          },
                          agfinite_sides));
  c.push_back(series_entry("AG1", {"k"}, "k>=1", [](const Params& p) { return k_at_least(p, 1); }, ag1_sides));
  c.push_back(series_entry("AG2", {"k"}, "k>=1", [](const Params& p) { return k_at_least(p, 1); }, ag2_sides));
  c.push_back(series_entry("AG3", {"k", "i"}, "k>=1, 1<=i<=k", [](const Params& p) { return k_i(p, 1); }, ag3_sides));
  c.push_back(exact_entry("alt", {"L", "ell"}, "ell>=0, 2L+ell>=0",
                          [](const Params& p) {
                            const int L = arg(p, "L"), ell = arg(p, "ell");
                            return require(ell >= 0 && 2 * L + ell >= 0, "need ell >= 0 and 2L + ell >= 0");
                          },
                          alt_sides));
  c.push_back(exact_entry(
      "superid", {"L1", "L2", "ell"}, "ell>=0, 2L1-L2+ell>=0, 2L2-L1>=0, 3L1>=-2ell, 3L2>=-ell",
      [](const Params& p) {
        const int L1 = arg(p, "L1"), L2 = arg(p, "L2"), ell = arg(p, "ell");
        return all_of({require(ell >= 0, "ell must be nonnegative"),
                       require(2 * L1 - L2 + ell >= 0 && 2 * L2 - L1 >= 0, "need 2L1-L2+ell >= 0 and 2L2-L1 >= 0"),
                       require(3 * L1 >= -2 * ell && 3 * L2 >= -ell, "need 3L1 >= -2ell and 3L2 >= -ell")});
      },
      superid_sides));
  c.push_back(exact_entry("strong", {"L", "a", "ell", "t"}, "L>=0, ell>=0, 0<=2a<=3L+ell",
                          [](const Params& p) {
                            const int L = arg(p, "L"), a = arg(p, "a"), ell = arg(p, "ell");
                            return require(L >= 0 && ell >= 0 && a >= 0 && 2 * a <= 3 * L + ell,
                                           "need L, ell >= 0 and 0 <= 2a <= 3L+ell");
                          },
                          strong_sides));
  c.push_back(exact_entry("gde-equiv", {"kind", "N", "M"}, "kind in {0=gamma,1=delta,2=epsilon}, N,M>=0",
                          [](const Params& p) {
                            const int kind = arg(p, "kind");
                            return all_of({require(kind >= 0 && kind <= 2, "kind must be 0, 1 or 2"),
                                           require(arg(p, "N") >= 0 && arg(p, "M") >= 0, "N and M must be nonnegative")});
                          },
                          gde_equiv_sides));
  c.push_back(exact_entry("gde-sym", {"kind", "N", "M"}, "kind in {0=gamma,2=epsilon}, N,M>=0",
                          [](const Params& p) {
                            const int kind = arg(p, "kind");
                            return all_of({require(kind == 0 || kind == 2, "kind must be 0 or 2"),
                                           require(arg(p, "N") >= 0 && arg(p, "M") >= 0, "N and M must be nonnegative")});
                          },
                          gde_sym_sides));
  c.push_back(exact_entry("gde-rec", {"rec", "N", "M", "route"}, "rec in 1..4, route in {0=defining,1=alternative}, N,M>=0, N+M>=1",
                          [](const Params& p) {
                            const int rec = arg(p, "rec"), N = arg(p, "N"), M = arg(p, "M");
                            return all_of({require(rec >= 1 && rec <= 4, "rec must be 1..4"), selector(p, "route"),
                                           require(N >= 0 && M >= 0 && N + M >= 1, "need N, M >= 0 and N + M >= 1")});
                          },
                          gde_rec_sides));
  c.push_back(exact_entry("kratt", {"n", "B1", "B2", "B3", "L1", "L2"}, "n in {2,3}, L1,L2>=0 (B3 unused for n=2)",
                          [](const Params& p) {
                            const int n = arg(p, "n");
                            return all_of({require(n == 2 || n == 3, "n must be 2 or 3"), nonneg_L(p)});
                          },
                          kratt_sides));
  {
    Entry e;
    e.id = "det2x2";
    e.params = {"B1", "B2", "L"};
    e.domain = "any integers";
    e.check = none;
    e.build_rational = [](const Params& p) {
      const TwoByTwo t = two_by_two_evaluation(arg(p, "B1"), arg(p, "B2"), arg(p, "L"));
      return RationalSides{t.lhs, t.rhs};
    };
    c.push_back(std::move(e));
  }
  c.push_back(exact_entry("id-lemma", {"M", "b", "a", "h"}, "M>=0, 0<=b<=M, 0<=a<=M, 0<=2h<=a",
                          [](const Params& p) {
                            const int M = arg(p, "M"), b = arg(p, "b"), a = arg(p, "a"), h = arg(p, "h");
                            return require(M >= 0 && b >= 0 && b <= M && a >= 0 && a <= M && h >= 0 && 2 * h <= a,
                                           "need M>=0, 0<=b<=M, 0<=a<=M, 0<=2h<=a");
                          },
                          id_lemma_sides));

  // finite A2
  c.push_back(exact_entry("A2Euler", L12, "L1,L2>=0", nonneg_L, a2euler_sides));
  c.push_back(exact_entry("detform-equiv", L12, "L1,L2>=0", nonneg_L, detform_sides));
  const S kiL{"k", "i", "L1", "L2"};
  const S klL{"k", "ell", "L1", "L2"};
  const S kL{"k", "L1", "L2"};
  auto ki_check = [](int kmin) {
    return [kmin](const Params& p) { return all_of({k_i(p, kmin), nonneg_L(p)}); };
  };
  auto kl_check = [](bool selector01) {
    return [selector01](const Params& p) {
      return all_of({k_at_least(p, 1),
                     selector01 ? selector(p, "ell") : require(arg(p, "ell") >= 0, "ell must be nonnegative"),
                     nonneg_L(p)});
    };
  };
  auto k2_check = [](const Params& p) { return all_of({k_at_least(p, 2), nonneg_L(p)}); };
  c.push_back(exact_entry("finite5", kiL, "k>=1, 1<=i<=k, L1,L2>=0", ki_check(1), finite5_sides));
  c.push_back(exact_entry("genell", klL, "k>=1, ell>=0, L1,L2>=0", kl_check(false), genell_sides));
  c.push_back(exact_entry("ell01-simplify", klL, "k>=1, ell in {0,1}, L1,L2>=0", kl_check(true), ell01_sides));
  c.push_back(exact_entry("ell2-simplify", kL, "k>=2, L1,L2>=0", k2_check, ell2_sides));
  c.push_back(exact_entry("finite6", kiL, "k>=1, 1<=i<=k, L1,L2>=0", ki_check(1), finite6_sides));
  c.push_back(exact_entry("genelldual", klL, "k>=1, ell>=0, L1,L2>=0", kl_check(false), genelldual_sides));
  c.push_back(exact_entry("ell01dual", klL, "k>=1, ell in {0,1}, L1,L2>=0", kl_check(true), ell01dual_sides));
  c.push_back(exact_entry("ell2dual", kL, "k>=2, L1,L2>=0", k2_check, ell2dual_sides));

  // infinite A2
  auto series_ki = [](const Params& p) { return k_i(p, 2); };
  auto series_ks = [](const Params& p) { return all_of({k_at_least(p, 2), selector(p, "sigma")}); };
  c.push_back(series_entry("AGA2", {"k", "i"}, "k>=2, 1<=i<=k", series_ki, aga2_sides));
  c.push_back(series_entry("AGA2b", {"k", "sigma"}, "k>=2, sigma in {0,1}", series_ks, aga2b_sides));
  c.push_back(series_entry("AGA2c", {"k", "i"}, "k>=2, 1<=i<=k", series_ki, aga2c_sides));
  c.push_back(series_entry("AGA2d", {"k", "sigma"}, "k>=2, sigma in {0,1}", series_ks, aga2d_sides));
  c.push_back(series_entry("A2RR-1", {}, "no parameters", none, a2rr1_sides));
  c.push_back(series_entry("A2RR-2", {}, "no parameters", none, a2rr2_sides));
  c.push_back(series_entry("A2RR-3", {"form"}, "form in {0,1,2}",
                           [](const Params& p) {
                             const int f = arg(p, "form");
                             return require(f >= 0 && f <= 2, "form must be 0, 1 or 2");
                           },
                           a2rr3_sides));
  c.push_back(series_entry(
      "char-match", {"family", "k", "j"},
      "family in {0=AGA2,1=AGA2b,2=AGA2c,3=AGA2d}, k>=2, j=i in 1..k (families 0,2) or j=sigma in {0,1} (1,3)",
      [](const Params& p) {
        const int f = arg(p, "family"), k = arg(p, "k"), j = arg(p, "j");
        if (f < 0 || f > 3) return Check{"family must be 0..3"};
        if (k < 2) return Check{"k must be at least 2"};
        if (f == 0 || f == 2) return require(j >= 1 && j <= k, "j must satisfy 1 <= j <= k");
        return require(j == 0 || j == 1, "j must be 0 or 1");
      },
      char_match_sides));

  // Rogers-Ramanujan and M(3,3k)
  const S sL{"sigma", "L1", "L2"};
  auto s_check = [](const Params& p) { return all_of({selector(p, "sigma"), nonneg_L(p)}); };
  c.push_back(exact_entry("RRA2rep", sL, "sigma in {0,1}, L1,L2>=0", s_check, rra2rep_sides));
  c.push_back(exact_entry("RRA2repb", L12, "L1,L2>=0", nonneg_L, rra2repb_sides));
  c.push_back(exact_entry("RRA1rep", sL, "sigma in {0,1}, L1,L2>=0", s_check, rra1rep_sides));
  c.push_back(exact_entry("RRA1repb", L12, "L1,L2>=0", nonneg_L, rra1repb_sides));
  c.push_back(exact_entry("RRA1-RRA2-equal", sL, "sigma in {0,1}, L1,L2>=0", s_check, rra_equal_sides));
  c.push_back(series_entry("bressoud", {"k", "i"}, "k>=2, 1<=i<=k", series_ki, bressoud_sides));
  c.push_back(exact_entry("GK-seed", L12, "L1,L2>=0", nonneg_L, gk_seed_sides));
  c.push_back(exact_entry("M33k-finite", kiL, "k>=1, 1<=i<=k, L1,L2>=0", ki_check(1), m33k_finite_sides));
  c.push_back(series_entry("M33k", {"k", "i"}, "k>=2, 1<=i<=k", series_ki, m33k_sides));

  // Kostka
  c.push_back(exact_entry("itK", {"k", "i", "L1", "L2", "k1", "k2"}, "k>=1, 1<=i<=k, L1,L2>=0, k1>=k2>=k3=-k1-k2",
                          [](const Params& p) {
                            return all_of({k_i(p, 1), nonneg_L(p),
                                           require(triangular(arg(p, "k1"), arg(p, "k2")), "need k1 >= k2 >= -k1-k2")});
                          },
                          itk_sides));
  c.push_back(series_entry("kostka-final", {"k", "i", "k1", "k2"}, "k>=1, 1<=i<=k, k1>=k2>=k3=-k1-k2",
                           [](const Params& p) {
                             return all_of({k_i(p, 1), require(triangular(arg(p, "k1"), arg(p, "k2")),
                                                               "need k1 >= k2 >= -k1-k2")});
                           },
                           kostka_final_sides));
  c.push_back(exact_entry("kostka-k1-bounded", {"L1", "L2", "l1", "l2"}, "L1,L2>=0, l1>=l2>=l3=-l1-l2",
                          [](const Params& p) {
                            return all_of({nonneg_L(p), require(triangular(arg(p, "l1"), arg(p, "l2")),
                                                                "need l1 >= l2 >= -l1-l2")});
                          },
                          kostka_k1_bounded_sides));
  c.push_back(series_entry("branching", {"l1", "l2"}, "l1>=l2>=l3=-l1-l2",
                           [](const Params& p) {
                             return require(triangular(arg(p, "l1"), arg(p, "l2")), "need l1 >= l2 >= -l1-l2");
                           },
                           branching_sides));
  c.back().default_order = 20;
  c.push_back(series_entry("RR1", {}, "no parameters", none, rr1_sides));
  c.push_back(series_entry("RR2", {}, "no parameters", none, rr2_sides));

  // terminating basic hypergeometric identities
  for (const ClassicalInfo& info : classical_identities()) {
    Entry e;
    e.id = info.name;
    for (const char* name : info.params) e.params.emplace_back(name);
    e.domain = "integer exponents; optional <name>_sign=-1 negates a parameter";
    e.check = none;
    e.signed_params = true;
    const ClassicalId id = info.id;
    e.build_rational = [id](const Params& p) {
      const ClassicalSides s = classical_identity_sides(id, p);
      return RationalSides{s.lhs, s.rhs};
    };
    c.push_back(std::move(e));
  }
  return c;
}

}  // namespace detail

inline const std::vector<Entry>& catalog_entries() {
  static const std::vector<Entry> entries = detail::make_catalog();
  return entries;
}

inline const Entry& find_entry(const std::string& id) {
  for (const Entry& e : catalog_entries())
    if (e.id == id) return e;
  throw UnknownIdentity(id);
}

// Throws DomainError unless params name exactly the entry's parameters and lie
// in its domain.
inline void validate_params(const Entry& e, const Params& params) {
  for (const std::string& name : e.params)
    if (!params.count(name)) throw DomainError(e.id + ": missing parameter '" + name + "'");
  for (const auto& [name, value] : params) {
    if (std::find(e.params.begin(), e.params.end(), name) != e.params.end()) continue;
    const std::string base = name.size() > 5 && name.compare(name.size() - 5, 5, "_sign") == 0
                                 ? name.substr(0, name.size() - 5)
                                 : std::string();
    if (e.signed_params && !base.empty() && std::find(e.params.begin(), e.params.end(), base) != e.params.end())
      continue;
    throw DomainError(e.id + ": unknown parameter '" + name + "'");
  }
  if (auto why = e.check(params)) throw DomainError(e.id + ": " + *why + " (domain: " + e.domain + ")");
}

namespace detail {

inline std::optional<Mismatch> mismatch_of(const LaurentSeries& a, const LaurentSeries& b) {
  auto m = first_mismatch(a, b);
  if (!m) return std::nullopt;
  return Mismatch{m->exponent, m->lhs, m->rhs};
}

inline int known_bound(const LaurentSeries& s, const std::string& id) {
  if (s.is_exact()) return s.is_zero() ? INT_MIN : s.degree();
  const auto b = s.degree_bound();
  if (!b) throw std::logic_error(id + ": no degree bound available for an exact-mode side");
  return *b;
}

inline int denominator_degree(const RationalFunction& f) {
  int d = 0;
  for (const auto& [key, m] : f.denominator_factors()) d += key.second * m;
  return d;
}

inline int numerator_degree(const RationalFunction& f) { return f.is_zero() ? 0 : f.numerator().degree(); }

}  // namespace detail

// Exact entries are compared as polynomials: the sides are built once at order
// 0 to read their degree bounds, then rebuilt at the largest bound, which
// determines them completely.  Rational entries are compared by cross
// multiplication.  Series entries are compared through `order`.
inline Report verify_identity(const std::string& id, const Params& params, std::optional<int> order = std::nullopt) {
  const Entry& e = find_entry(id);
  validate_params(e, params);
  Report r;
  r.identity = e.id;
  for (const std::string& name : e.params) r.params.emplace_back(name, params.at(name));
  for (const auto& [name, value] : params)
    if (std::find(e.params.begin(), e.params.end(), name) == e.params.end()) r.params.emplace_back(name, value);
  r.mode = e.mode;
  const auto start = std::chrono::steady_clock::now();

  if (e.build_rational) {
    const RationalSides s = e.build_rational(params);
    r.order = std::max(detail::numerator_degree(s.lhs) + detail::denominator_degree(s.rhs),
                       detail::numerator_degree(s.rhs) + detail::denominator_degree(s.lhs));
    r.equal = s.lhs == s.rhs;
    if (!r.equal) {
      const RationalFunction diff = s.lhs - s.rhs;
      const int at = diff.numerator().min_exponent();
      r.first_mismatch = detail::mismatch_of(s.lhs.series(at), s.rhs.series(at));
      r.order = at;
    }
  } else if (e.mode == Mode::exact) {
    Sides probe = e.build(params, 0);
    const bool done = probe.lhs.is_exact() && probe.rhs.is_exact();
    const int bound = std::max({detail::known_bound(probe.lhs, e.id), detail::known_bound(probe.rhs, e.id), 0});
    Sides s = done ? std::move(probe) : e.build(params, bound);
    r.order = bound;
    r.first_mismatch = detail::mismatch_of(s.lhs.truncated(bound), s.rhs.truncated(bound));
    r.equal = !r.first_mismatch;
  } else {
    const int n = order.value_or(e.default_order);
    if (n < 0) throw DomainError("order must be nonnegative");
    const Sides s = e.build(params, n);
    r.order = n;
    r.first_mismatch = detail::mismatch_of(s.lhs.truncated(n), s.rhs.truncated(n));
    r.equal = !r.first_mismatch;
  }
  r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

struct Range {
  std::string name;
  int lo = 0;
  int hi = -1;
};

// Every admissible point of the Cartesian product of `ranges` with `fixed`,
// in lexicographic order of the entry's parameter tuple.
inline std::vector<Params> sweep_points(const Entry& e, const Params& fixed, const std::vector<Range>& ranges) {
  for (const Range& rg : ranges) {
    if (std::find(e.params.begin(), e.params.end(), rg.name) == e.params.end())
      throw DomainError(e.id + ": unknown parameter '" + rg.name + "'");
    if (fixed.count(rg.name)) throw DomainError(e.id + ": parameter '" + rg.name + "' is both fixed and swept");
  }
  std::vector<Params> out;
  Params cur = fixed;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == ranges.size()) {
      try {
        validate_params(e, cur);
      } catch (const DomainError&) {
        return;
      }
      out.push_back(cur);
      return;
    }
    for (int v = ranges[idx].lo; v <= ranges[idx].hi; ++v) {
      cur[ranges[idx].name] = v;
      rec(idx + 1);
    }
  };
  rec(0);
  auto key = [&](const Params& p) {
    std::vector<int> k;
    for (const std::string& name : e.params) k.push_back(p.at(name));
    return k;
  };
  std::sort(out.begin(), out.end(), [&](const Params& a, const Params& b) { return key(a) < key(b); });
  return out;
}

// Runs the points on `jobs` worker threads; the result follows the point order.
inline std::vector<Report> sweep(const std::string& id, const Params& fixed, const std::vector<Range>& ranges,
                                 std::optional<int> order = std::nullopt, int jobs = 1) {
  const Entry& e = find_entry(id);
  const std::vector<Params> points = sweep_points(e, fixed, ranges);
  std::vector<Report> reports(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        reports[i] = verify_identity(id, points[i], order);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(points.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& ep : errors)
    if (ep) std::rethrow_exception(ep);
  return reports;
}

inline std::string format_params(const Report& r) {
  std::string s;
  for (const auto& [name, value] : r.params) {
    if (!s.empty()) s += ",";
    s += name + "=" + std::to_string(value);
  }
  return s;
}

// PASS|FAIL id(params) [mode@order] (ms)
inline std::string human_line(const Report& r) {
  std::string s = std::string(r.equal ? "PASS" : "FAIL") + " " + r.identity + "(" + format_params(r) + ") [" +
                  to_string(r.mode) + "@" + std::to_string(r.order) + "] (" + std::to_string(r.millis) + " ms)";
  if (r.first_mismatch) {
    std::ostringstream m;
    m << " first mismatch at q^" << r.first_mismatch->exponent << ": " << r.first_mismatch->lhs << " vs "
      << r.first_mismatch->rhs;
    s += m.str();
  }
  return s;
}

}  // namespace qseries::catalog
