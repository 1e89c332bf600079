// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <climits>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cli_harness.hpp"
#include "qseries/catalog/report_json.hpp"
#include "qseries/qseries.hpp"

using namespace qseries;
using namespace qseries::catalog;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Tally {
  long checks = 0;
  long failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
};

std::string describe(const std::string& id, const Params& p) {
  std::string s = id + "(";
  bool first = true;
  for (const auto& [k, v] : p) {
    s += (first ? "" : ",") + k + "=" + std::to_string(v);
    first = false;
  }
  return s + ")";
}

// Runs the registry path; a time limit of 0 means none.
void verify(Tally& t, const std::string& id, const Params& p, std::optional<int> order = std::nullopt,
            double limit = 0) {
  const auto t0 = Clock::now();
  try {
    const Report r = verify_identity(id, p, order);
    const double s = seconds_since(t0);
    std::string what = describe(id, p);
    if (!r.equal && r.first_mismatch)
      what += " first mismatch at q^" + std::to_string(r.first_mismatch->exponent);
    t.expect(r.equal, what);
    if (limit > 0) t.expect(s < limit, describe(id, p) + " took " + std::to_string(s) + " s");
  } catch (const std::exception& e) {
    t.expect(false, describe(id, p) + " threw: " + e.what());
  }
}

bool admissible(const std::string& id, const Params& p) { return !find_entry(id).check(p).has_value(); }

std::vector<std::pair<int, int>> triangular_pairs(int k1_max) {
  std::vector<std::pair<int, int>> out;
  for (int k1 = 0; k1 <= k1_max; ++k1)
    for (int k2 = -2 * k1; k2 <= k1; ++k2)
      if (k2 >= -k1 - k2) out.emplace_back(k1, k2);
  return out;
}

Tally supernomial_agreement() {
  Tally t;
  const auto t0 = Clock::now();
  for (int L1 = 0; L1 <= 6; ++L1)
    for (int L2 = 0; L2 <= 6; ++L2) {
      const int w = L1 + 2 * L2;
      for (int l1 = 0; l1 <= w; ++l1)
        for (int l2 = 0; l1 + l2 <= w; ++l2) {
          const int l3 = w - l1 - l2;
          const LaurentSeries m = supernomial_a2m(L1, L2, l1, l2, l3);
          std::ostringstream what;
          what << "L=(" << L1 << "," << L2 << ") l=(" << l1 << "," << l2 << "," << l3 << ")";
          t.expect(identical(m, supernomial_a2r(L1, L2, l1, l2, l3)), "a2r " + what.str());
          t.expect(identical(m, supernomial_strip({L1, L2}, {l1, l2, l3})), "strip " + what.str());
        }
    }
  const double s = seconds_since(t0);
  t.expect(s < 60, "took " + std::to_string(s) + " s");
  return t;
}

Tally superid() {
  Tally t;
  const Entry& e = find_entry("superid");
  for (int ell = 0; ell <= 4; ++ell)
    for (int L1 = -12; L1 <= 12; ++L1)
      for (int L2 = -12; L1 + L2 <= 12; ++L2) {
        if (2 * L1 - L2 + ell < 0 || 2 * L2 - L1 < 0) continue;
        const Params p{{"L1", L1}, {"L2", L2}, {"ell", ell}};
        if (!admissible("superid", p)) continue;
        verify(t, "superid", p);
        if (L1 >= 0 && L2 >= 0) {
          const Sides s = e.build(p, 0);
          const LaurentSeries expected = (L1 == 0 && L2 == 0) ? qpoch(ell) : LaurentSeries::zero();
          t.expect(identical(s.lhs, expected), "collapse " + describe("superid", p));
        }
      }
  return t;
}

Tally strong() {
  Tally t;
  for (int L = 0; L <= 5; ++L)
    for (int ell = 0; ell <= 3; ++ell)
      for (int a = 0; 2 * a <= 3 * L + ell; ++a)
        for (int tt = a - 2 * L - 3; tt <= L + ell + 3; ++tt)
          verify(t, "strong", {{"L", L}, {"a", a}, {"ell", ell}, {"t", tt}});
  return t;
}

Tally id_lemma() {
  Tally t;
  for (int M = 0; M <= 8; ++M)
    for (int b = 0; b <= M; ++b)
      for (int a = 0; a <= M; ++a)
        for (int h = 0; 2 * h <= a; ++h) verify(t, "id-lemma", {{"M", M}, {"b", b}, {"a", a}, {"h", h}});
  return t;
}

Tally gde() {
  Tally t;
  for (int N = 0; N <= 12; ++N)
    for (int M = 0; M <= 12; ++M) {
      for (int kind = 0; kind <= 2; ++kind) verify(t, "gde-equiv", {{"kind", kind}, {"N", N}, {"M", M}});
      for (int kind : {0, 2}) verify(t, "gde-sym", {{"kind", kind}, {"N", N}, {"M", M}});
      if (N + M == 0) continue;
      for (int rec = 1; rec <= 4; ++rec)
        for (int route = 0; route <= 1; ++route)
          verify(t, "gde-rec", {{"rec", rec}, {"N", N}, {"M", M}, {"route", route}});
    }
  return t;
}

Tally bailey() {
  Tally t;
  const std::vector<std::pair<RhoParam, RhoParam>> rhos = {
      {RhoParam::infinity(), RhoParam::infinity()},
      {RhoParam::monomial(-1), RhoParam::monomial(0, -1)},
      {RhoParam::monomial(-2), RhoParam::infinity()},
      {RhoParam::infinity(), RhoParam::monomial(-2, -1)},
      {RhoParam::monomial(-1, -1), RhoParam::monomial(-3)},
  };
  for (int ell : {0, 1}) {
    const BaileyPairA1 p = unit_a1_pair(ell, 10);
    t.expect(verify_a1_pair(p, 10).ok, "unit pair ell=" + std::to_string(ell));
    t.expect(verify_a1_pair(transform_a1_limit(p), 10).ok, "limit ell=" + std::to_string(ell));
    for (std::size_t i = 0; i < rhos.size(); ++i) {
      const auto& [r1, r2] = rhos[i];
      const auto pole = [&](const RhoParam& r) {
        return !r.infinite && r.value.sign > 0 && r.value.exponent == ell + 1;
      };
      if (pole(r1) || pole(r2)) continue;
      const BaileyPairA1 q = transform_a1(p, r1, r2);
      const std::string what = "rho set " + std::to_string(i) + " ell=" + std::to_string(ell);
      t.expect(verify_a1_pair(q, 10).ok, what);
      t.expect(verify_a1_pair(transform_a1_limit(q), 10).ok, what + " then limit");
    }
  }
  const BaileyPairA2 seed = superid_seed_pair(8);
  t.expect(verify_a2_pair(seed, 8).ok, "A2 seed");
  const BaileyPairA2 once = transform_a2(seed);
  t.expect(verify_a2_pair(once, 8).ok, "A2 transform");
  t.expect(verify_a2_pair(transform_a2(once), 8).ok, "A2 transform twice");
  for (ClassicalId id : {ClassicalId::Sum1, ClassicalId::Sum2})
    for (int ell = 0; ell <= 2; ++ell)
      for (int k1 = -3; k1 <= 3; ++k1)
        for (int k2 = -3; k2 <= k1; ++k2) {
          if (k2 < -k1 - k2) continue;
          for (int M1 = 0; M1 <= 4; ++M1)
            for (int M2 = 0; M2 <= 4; ++M2) {
              const Params p{{"M1", M1}, {"M2", M2}, {"k1", k1}, {"k2", k2}, {"ell", ell}};
              bool ok = false;
              try {
                ok = verify_classical_identity(id, p);
              } catch (const std::exception&) {
              }
              t.expect(ok, describe(id == ClassicalId::Sum1 ? "sum1" : "sum2", p));
            }
        }
  return t;
}

Tally finite_a2() {
  Tally t;
  for (int L1 = 0; L1 <= 8; ++L1)
    for (int L2 = 0; L1 + L2 <= 8; ++L2) {
      const Params L{{"L1", L1}, {"L2", L2}};
      const auto with = [&](std::initializer_list<std::pair<const std::string, int>> extra) {
        Params p = L;
        for (const auto& [k, v] : extra) p[k] = v;
        return p;
      };
      verify(t, "A2Euler", L);
      verify(t, "detform-equiv", L);
      verify(t, "GK-seed", L);
      verify(t, "RRA2repb", L);
      verify(t, "RRA1repb", L);
      for (int sigma = 0; sigma <= 1; ++sigma) {
        verify(t, "RRA2rep", with({{"sigma", sigma}}));
        verify(t, "RRA1rep", with({{"sigma", sigma}}));
      }
      for (int k = 1; k <= 3; ++k) {
        for (int i = 1; i <= k; ++i) {
          verify(t, "finite5", with({{"k", k}, {"i", i}}));
          verify(t, "finite6", with({{"k", k}, {"i", i}}));
          verify(t, "M33k-finite", with({{"k", k}, {"i", i}}));
        }
        for (int ell = 0; ell <= 2; ++ell) {
          verify(t, "genell", with({{"k", k}, {"ell", ell}}));
          verify(t, "genelldual", with({{"k", k}, {"ell", ell}}));
        }
        for (int ell = 0; ell <= 1; ++ell) {
          verify(t, "ell01-simplify", with({{"k", k}, {"ell", ell}}));
          verify(t, "ell01dual", with({{"k", k}, {"ell", ell}}));
        }
        if (k >= 2) {
          verify(t, "ell2-simplify", with({{"k", k}}));
          verify(t, "ell2dual", with({{"k", k}}));
        }
      }
      for (int k = 1; k <= 2; ++k)
        for (int i = 1; i <= k; ++i)
          for (const auto& [k1, k2] : triangular_pairs(3)) verify(t, "itK", with({{"k", k}, {"i", i}, {"k1", k1}, {"k2", k2}}));
    }
  for (int sigma = 0; sigma <= 1; ++sigma)
    for (int L1 = 0; L1 <= 8; ++L1)
      for (int L2 = 0; L2 <= 8; ++L2) verify(t, "RRA1-RRA2-equal", {{"sigma", sigma}, {"L1", L1}, {"L2", L2}});
  return t;
}

Tally series_identities() {
  Tally t;
  const int order = 40;
  const double limit = 30;
  verify(t, "RR1", {}, order, limit);
  verify(t, "RR2", {}, order, limit);
  for (int k = 1; k <= 4; ++k) {
    verify(t, "AG1", {{"k", k}}, order, limit);
    verify(t, "AG2", {{"k", k}}, order, limit);
    for (int i = 1; i <= k; ++i) verify(t, "AG3", {{"k", k}, {"i", i}}, order, limit);
  }
  for (int k = 2; k <= 3; ++k) {
    for (int i = 1; i <= k; ++i) {
      verify(t, "AGA2", {{"k", k}, {"i", i}}, order, limit);
      verify(t, "AGA2c", {{"k", k}, {"i", i}}, order, limit);
      verify(t, "M33k", {{"k", k}, {"i", i}}, order, limit);
    }
    for (int sigma = 0; sigma <= 1; ++sigma) {
      verify(t, "AGA2b", {{"k", k}, {"sigma", sigma}}, order, limit);
      verify(t, "AGA2d", {{"k", k}, {"sigma", sigma}}, order, limit);
    }
  }
  verify(t, "A2RR-1", {}, order, limit);
  verify(t, "A2RR-2", {}, order, limit);
  for (int form = 0; form <= 2; ++form) verify(t, "A2RR-3", {{"form", form}}, order, limit);
  for (int k = 2; k <= 4; ++k)
    for (int i = 1; i <= k; ++i) verify(t, "bressoud", {{"k", k}, {"i", i}}, order, limit);
  for (int k = 1; k <= 2; ++k)
    for (int i = 1; i <= k; ++i)
      for (const auto& [k1, k2] : triangular_pairs(2))
        verify(t, "kostka-final", {{"k", k}, {"i", i}, {"k1", k1}, {"k2", k2}}, order, limit);
  return t;
}

Tally characters() {
  Tally t;
  for (int family = 0; family <= 3; ++family)
    for (int k = 2; k <= 3; ++k) {
      const bool by_i = family == 0 || family == 2;
      for (int j = by_i ? 1 : 0; j <= (by_i ? k : 1); ++j)
        verify(t, "char-match", {{"family", family}, {"k", k}, {"j", j}}, 40, 30);
    }
  return t;
}

Tally kostka() {
  Tally t;
  for (int n = 1; n <= 8; ++n)
    for (int L2 = 0; 2 * L2 <= n; ++L2) {
      const int L1 = n - 2 * L2;
      const Partition mu = Partition::from_multiplicities({L1, L2});
      for (const Partition& lambda : partitions_of(n, INT_MAX, 3))
        t.expect(identical(kostka_charge(lambda.conjugate(), mu), kostka_from_supernomial(lambda, L1, L2)),
                 "routes " + lambda.to_string() + " / " + mu.to_string());
    }
  for (int n = 1; n <= 8; ++n)
    for (const Partition& lambda : partitions_of(n))
      for (const Partition& mu : partitions_of(n)) {
        Integer at_one = 0;
        const LaurentSeries k = kostka_charge(lambda, mu);
        for (const Integer& c : k.coefficients()) at_one += c;
        t.expect(at_one == kostka_number(lambda, mu.parts()), "K(1) " + lambda.to_string() + " / " + mu.to_string());
      }
  for (int L1 = 0; L1 <= 8; ++L1)
    for (int L2 = 0; L1 + L2 <= 8; ++L2)
      for (const auto& [l1, l2] : triangular_pairs(4)) {
        const Params p{{"L1", L1}, {"L2", L2}, {"l1", l1}, {"l2", l2}};
        if (admissible("kostka-k1-bounded", p)) verify(t, "kostka-k1-bounded", p);
      }
  for (const auto& [l1, l2] : triangular_pairs(3)) verify(t, "branching", {{"l1", l1}, {"l2", l2}}, 20);
  return t;
}

Tally macdonald() {
  Tally t;
  const std::vector<std::vector<int>> specs = {{0, 1}, {0, 3}, {2, -1}, {1, 4}, {0, 1, 2}, {0, 2, 5}, {1, -2, 4}, {0, 3, 7}};
  for (int nome : {1, 2, 3, 5, 7})
    for (const auto& c : specs) {
      const LaurentSeries s = macdonald_sum(c, 20, nome);
      const LaurentSeries p = macdonald_product(c, 20, nome);
      std::string what = "n=" + std::to_string(c.size()) + " nome=" + std::to_string(nome);
      t.expect(std::min(s.order(), p.order()) >= 20, what + " order");
      t.expect(s == p, what);
    }
  return t;
}

Tally cli() {
  Tally t;
  const auto code = [&](const std::string& args, int expected) {
    const int got = run_cli(args).exit_code;
    t.expect(got == expected, "'" + args + "' exited " + std::to_string(got));
  };
  code("verify RR1 --order 30 --json", 0);
  code("verify euler --params L=4", 0);
  code("verify nonsense", 2);
  code("verify euler --params L=x", 2);
  code("verify euler --params L=-1", 2);
  code("verify euler", 2);
  code("sweep euler --range L=0..x", 2);
  code("frobnicate", 2);
  code("sweep superid --range L1=0..3 --range L2=0..3 --range ell=0..2 --jobs 2", 0);

  const auto schema = [&](const std::string& args) {
    std::istringstream in(run_cli(args).out);
    int lines = 0;
    for (std::string line; std::getline(in, line); ++lines) {
      try {
        const std::string err = report_schema_error(nlohmann::json::parse(line));
        t.expect(err.empty(), "'" + args + "': " + err);
      } catch (const std::exception& e) {
        t.expect(false, "'" + args + "' emitted non-JSON: " + e.what());
      }
    }
    t.expect(lines > 0, "'" + args + "' printed nothing");
  };
  schema("verify RR1 --order 30 --json");
  schema("verify superid --params L1=2,L2=3,ell=1 --json");
  schema("sweep strong --params L=2,ell=1 --range a=0..3 --range t=-4..3 --json --jobs 2");

  const std::string human = run_cli("verify euler --params L=4").out;
  t.expect(human.rfind("PASS euler(L=4) [exact@", 0) == 0, "human line '" + human + "'");

  std::istringstream list(run_cli("list").out);
  std::size_t n = 0;
  for (std::string line; std::getline(list, line);) ++n;
  t.expect(n == catalog_entries().size(), "list printed " + std::to_string(n) + " ids");
  return t;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Tally()>>> criteria = {
      {"supernomial triple agreement", supernomial_agreement},
      {"superid over L1+L2<=12, ell<=4", superid},
      {"strong lemma", strong},
      {"id lemma", id_lemma},
      {"gamma/delta/epsilon routes, symmetries, recurrences", gde},
      {"Bailey machinery", bailey},
      {"finite A2 families", finite_a2},
      {"infinite identities to order 40", series_identities},
      {"character identification", characters},
      {"Kostka cross-validation", kostka},
      {"Macdonald identity", macdonald},
      {"CLI exit codes and JSON schema", cli},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Tally t;
    try {
      t = criteria[i].second();
    } catch (const std::exception& e) {
      t.expect(false, std::string("threw: ") + e.what());
    }
    const double s = seconds_since(t0);
    const bool ok = t.failures == 0;
    if (!ok) ++failed;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " (" << t.checks
              << " checks, " << std::fixed << std::setprecision(1) << s << " s)";
    if (!ok) std::cout << " " << t.failures << " failed, first: " << t.first_failure;
    std::cout << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
