#include <charconv>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qseries/catalog/report_json.hpp"
#include "qseries/serialization.hpp"

namespace {

using namespace qseries;
using namespace qseries::catalog;

constexpr int kPass = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int parse_int(const std::string& s, const std::string& what) {
  int v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) throw UsageError("malformed " + what + " '" + s + "'");
  return v;
}

// k=v,k=v,...
Params parse_params(const std::string& text) {
  Params out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("malformed parameter '" + item + "'");
    const std::string name = item.substr(0, eq);
    if (out.count(name)) throw UsageError("parameter '" + name + "' given twice");
    out[name] = parse_int(item.substr(eq + 1), "parameter value");
    pos = comma + 1;
  }
  return out;
}

// name=lo..hi
Range parse_range(const std::string& text) {
  const std::size_t eq = text.find('=');
  const std::size_t dots = text.find("..", eq == std::string::npos ? 0 : eq);
  if (eq == std::string::npos || eq == 0 || dots == std::string::npos) throw UsageError("malformed range '" + text + "'");
  return {text.substr(0, eq), parse_int(text.substr(eq + 1, dots - eq - 1), "range bound"),
          parse_int(text.substr(dots + 2), "range bound")};
}

struct Options {
  std::string id;
  std::string params;
  std::vector<std::string> ranges;
  std::optional<int> order;
  bool json = false;
  int jobs = 1;
};

int run_list(const Options& o) {
  for (const Entry& e : catalog_entries()) {
    if (o.json) {
      nlohmann::ordered_json j;
      j["identity"] = e.id;
      j["params"] = e.params;
      j["mode"] = to_string(e.mode);
      j["domain"] = e.domain;
      std::cout << j.dump() << "\n";
    } else {
      std::string ps;
      for (const std::string& p : e.params) ps += (ps.empty() ? "" : ",") + p;
      std::cout << e.id << "(" << ps << ") [" << to_string(e.mode) << "] " << e.domain << "\n";
    }
  }
  return kPass;
}

void emit(const Report& r, bool json) {
  if (json)
    std::cout << to_json(r).dump() << "\n";
  else
    std::cout << human_line(r) << "\n";
}

int run_verify(const Options& o) {
  const Report r = verify_identity(o.id, parse_params(o.params), o.order);
  emit(r, o.json);
  return r.equal ? kPass : kMismatch;
}

int run_sweep(const Options& o) {
  std::vector<Range> ranges;
  for (const std::string& t : o.ranges) ranges.push_back(parse_range(t));
  if (o.jobs < 1) throw UsageError("--jobs must be at least 1");
  const std::vector<Report> reports = sweep(o.id, parse_params(o.params), ranges, o.order, o.jobs);
  int failed = 0;
  for (const Report& r : reports) {
    emit(r, o.json);
    if (!r.equal) ++failed;
  }
  if (!o.json) std::cout << reports.size() - failed << "/" << reports.size() << " passed\n";
  return failed == 0 ? kPass : kMismatch;
}

int run_expand(const Options& o) {
  const Entry& e = find_entry(o.id);
  const Params p = parse_params(o.params);
  validate_params(e, p);
  const int order = o.order.value_or(e.default_order);
  LaurentSeries lhs, rhs;
  if (e.build_rational) {
    const RationalSides s = e.build_rational(p);
    lhs = s.lhs.series(order);
    rhs = s.rhs.series(order);
  } else {
    const Sides s = e.build(p, order);
    lhs = s.lhs.truncated(order);
    rhs = s.rhs.truncated(order);
  }
  if (o.json) {
    nlohmann::ordered_json j;
    j["identity"] = e.id;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [name, value] : p) params[name] = value;
    j["params"] = params;
    j["order"] = order;
    j["lhs"] = to_fixture(lhs);
    j["rhs"] = to_fixture(rhs);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "lhs " << to_fixture(lhs) << "\n" << "rhs " << to_fixture(rhs) << "\n";
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify q-series identities"};
  app.require_subcommand(1);
  Options o;

  auto* list = app.add_subcommand("list", "List catalog identities with their parameter domains");
  list->add_flag("--json", o.json, "One JSON object per identity");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("id", o.id, "Identity id")->required();
    sub->add_option("--params", o.params, "Parameter assignments k=v,...");
    sub->add_option("--order", o.order, "Truncation order for series entries");
    sub->add_flag("--json", o.json, "JSON output");
  };
  auto* verify = app.add_subcommand("verify", "Verify one identity");
  add_common(verify);
  auto* sw = app.add_subcommand("sweep", "Verify an identity over parameter ranges");
  add_common(sw);
  sw->add_option("--range", o.ranges, "Swept parameter name=lo..hi (repeatable)");
  sw->add_option("--jobs", o.jobs, "Worker threads");
  auto* expand = app.add_subcommand("expand", "Print both sides as series fixtures");
  add_common(expand);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (list->parsed()) return run_list(o);
    if (verify->parsed()) return run_verify(o);
    if (sw->parsed()) return run_sweep(o);
    if (expand->parsed()) return run_expand(o);
  } catch (const UnknownIdentity& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const qseries::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
