#include "binpack/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "binpack/bounds.hpp"
#include "binpack/cli/parallel.hpp"
#include "binpack/cli/records.hpp"
#include "binpack/cli/verify.hpp"
#include "binpack/closed_forms.hpp"
#include "binpack/generalized.hpp"
#include "binpack/oracle.hpp"

namespace binpack::cli {

namespace {

using Json = nlohmann::ordered_json;

// Oracle enumerations are refused above this many candidate configurations.
const BigInt kOracleBudget = BigInt(1) << 25;

enum class Method { Auto, Closed, Pie, Recurrence, Oracle };

const std::map<std::string, Method> kMethods = {
    {"auto", Method::Auto}, {"closed", Method::Closed},         {"pie", Method::Pie},
    {"recurrence", Method::Recurrence}, {"oracle", Method::Oracle},
};

struct QuantityShape {
  std::vector<std::string> names;
};

const std::map<std::string, QuantityShape> kQuantities = {
    {"B", {{"n", "k"}}},      {"M", {{"n", "l", "k"}}},      {"R", {{"n", "l", "k"}}},
    {"K", {{"n", "l"}}},      {"N", {{"l", "k"}}},           {"T", {{"k", "j", "i"}}},
    {"F", {{"k", "j", "t"}}}, {"U", {{"k", "j", "i", "l"}}}, {"G", {{"k", "j", "l"}}},
};

void require(bool condition, const std::string& message) {
  if (!condition) {
    throw DomainError(message);
  }
}

int narrow(std::int64_t value) {
  require(value >= -(1 << 20) && value <= (1 << 20), "parameter out of range for enumeration: " +
                                                         std::to_string(value));
  return static_cast<int>(value);
}

void require_oracle_budget(const BigInt& space) {
  require(space <= kOracleBudget, "oracle search space of " + to_string(space) +
                                      " configurations exceeds the limit of " + to_string(kOracleBudget) +
                                      "; use --method closed, pie or recurrence");
}

// Compositions of n into positive parts number 2^(n-1).
void require_oracle_total(std::int64_t n) {
  require(n <= 64, "oracle search space too large for n=" + std::to_string(n) +
                       "; use --method closed, pie or recurrence");
  if (n >= 1) require_oracle_budget(pow2(n - 1));
}

[[noreturn]] void unsupported(const std::string& quantity, const std::string& method) {
  throw DomainError("method " + method + " is not available for " + quantity);
}

std::string method_tag(Method method) {
  switch (method) {
    case Method::Closed:
      return "closed_form";
    case Method::Pie:
      return "pie";
    case Method::Recurrence:
      return "recurrence";
    case Method::Oracle:
      return "oracle";
    case Method::Auto:
      break;
  }
  return "auto";
}

REvaluation evaluation(Method method) {
  return method == Method::Recurrence ? REvaluation::Recurrence : REvaluation::InclusionExclusion;
}

Count b_by_formula(std::int64_t n, std::int64_t k, REvaluation how) {
  Count total = 0;
  for (std::int64_t l = 1; l <= n; ++l) {
    total += m_formula_two(n, l, k, how);
  }
  return total;
}

std::optional<Count> m_closed(std::int64_t n, std::int64_t l, std::int64_t k) {
  if (!m_feasible(n, l, k)) {
    return Count(0);
  }
  const BRegime regime = classify(n, k);
  switch (regime.tag) {
    case RegimeTag::Trivial:
      return Count(0);
    case RegimeTag::Single:
      return Count(l == 1 ? 1 : 0);
    case RegimeTag::Dominant:
      return m_dominant(n, l, k);
    case RegimeTag::Double:
      return m_double(k, l);
    case RegimeTag::DoublePlus:
      return m_double_plus(k, regime.j, l);
    case RegimeTag::General:
      break;
  }
  return std::nullopt;
}

std::pair<Count, Method> evaluate(const std::string& q, const std::vector<std::int64_t>& p, Method method) {
  const auto resolve = [&](bool closed, bool pie) {
    if (method != Method::Auto) return method;
    if (closed) return Method::Closed;
    return pie ? Method::Pie : Method::Oracle;
  };

  if (q == "B") {
    const auto [n, k] = std::pair{p[0], p[1]};
    require(n >= 1 && k >= 1, "B requires n, k >= 1");
    const Method m = resolve(has_closed_form(n, k), true);
    switch (m) {
      case Method::Closed:
        require(has_closed_form(n, k), "B has no closed form for n >= 3k (n=" + std::to_string(n) +
                                           ", k=" + std::to_string(k) + ")");
        return {b_any(n, k), m};
      case Method::Pie:
      case Method::Recurrence:
        return {b_by_formula(n, k, evaluation(m)), m};
      default:
        require_oracle_total(n);
        return {oracle::oracle_B(narrow(n), narrow(k)), m};
    }
  }
  if (q == "M") {
    const std::int64_t n = p[0], l = p[1], k = p[2];
    require(n >= 1 && l >= 1 && k >= 1, "M requires n, l, k >= 1");
    const std::optional<Count> closed = m_closed(n, l, k);
    const Method m = resolve(closed.has_value(), true);
    switch (m) {
      case Method::Closed:
        require(closed.has_value(), "M has no closed form for n >= 3k (n=" + std::to_string(n) +
                                        ", k=" + std::to_string(k) + ")");
        return {*closed, m};
      case Method::Pie:
      case Method::Recurrence:
        return {m_formula_two(n, l, k, evaluation(m)), m};
      default:
        require_oracle_total(n);
        return {oracle::oracle_M(narrow(n), narrow(l), narrow(k)), m};
    }
  }
  if (q == "R") {
    const std::int64_t n = p[0], l = p[1], k = p[2];
    require(n >= 0 && l >= 1 && k >= 1, "R requires n >= 0, l >= 1, k >= 1");
    const Method m = resolve(false, true);
    switch (m) {
      case Method::Closed:
        unsupported("R", "closed");
      case Method::Pie:
        return {r_pie(n, l, k), m};
      case Method::Recurrence:
        return {r_recurrence(n, l, k), m};
      default:
        require(n + l <= 200, "oracle search space too large for R; use --method pie or recurrence");
        require_oracle_budget(binomial(n + l - 1, l - 1));
        return {oracle::oracle_R(narrow(n), narrow(l), narrow(k)), m};
    }
  }
  if (q == "K") {
    const std::int64_t n = p[0], l = p[1];
    require(n >= 1 && l >= 1, "K requires n, l >= 1");
    const Method m = resolve(true, true);
    switch (m) {
      case Method::Closed:
        return {k_total(n, l), m};
      case Method::Pie:
      case Method::Recurrence: {
        Count total = 0;
        for (std::int64_t i = 1; i <= n; ++i) total += m_formula_two(n, l, i, evaluation(m));
        return {total, m};
      }
      default:
        require_oracle_total(n);
        return {oracle::oracle_K(narrow(n), narrow(l)), m};
    }
  }
  if (q == "N") {
    const std::int64_t l = p[0], k = p[1];
    require(l >= 1 && k >= 1, "N requires l, k >= 1");
    const Method m = resolve(true, true);
    switch (m) {
      case Method::Closed:
        return {n_total(l, k), m};
      case Method::Pie:
      case Method::Recurrence: {
        Count total = 0;
        for (std::int64_t n = l + k - 1; n <= l * k; ++n) total += m_formula_two(n, l, k, evaluation(m));
        return {total, m};
      }
      default:
        require(l <= 64, "oracle search space too large for N; use --method closed or pie");
        require_oracle_budget(ipow(k, l));
        return {oracle::oracle_N(narrow(l), narrow(k)), m};
    }
  }

  // The two-full-bin intermediates have a closed form and the oracle only.
  const Method m = resolve(true, false);
  if (m == Method::Pie || m == Method::Recurrence) {
    unsupported(q, method_tag(m));
  }
  const bool closed = m == Method::Closed;
  const std::int64_t k = p[0], j = p[1];
  if (!closed) {
    require(k >= 1 && j >= 0, q + " requires k >= 1 and j >= 0");
    require_oracle_total(2 * k + j);
  }
  if (q == "T") {
    return {closed ? t_two_marked(k, j, p[2]) : oracle::oracle_two_marked(narrow(2 * k + j), narrow(k), narrow(p[2])),
            m};
  }
  if (q == "F") {
    return {closed ? f_at_least(k, j, p[2])
                   : oracle::oracle_at_least_t_full(narrow(2 * k + j), narrow(k), narrow(p[2])),
            m};
  }
  if (q == "U") {
    return {closed ? u_two_marked_fixed(k, j, p[2], p[3])
                   : oracle::oracle_two_marked(narrow(2 * k + j), narrow(k), narrow(p[2]), narrow(p[3])),
            m};
  }
  return {closed ? g_two_full_fixed(k, j, p[2])
                 : oracle::oracle_at_least_t_full(narrow(2 * k + j), narrow(k), 2, narrow(p[2])),
          m};
}

int cmd_count(const std::string& quantity, const std::vector<std::int64_t>& values, const std::string& method_name,
              bool plain, std::ostream& out) {
  const auto shape = kQuantities.find(quantity);
  require(shape != kQuantities.end(), "unknown quantity '" + quantity + "' (expected B, M, R, K, N, T, F, U or G)");
  const auto& names = shape->second.names;
  require(values.size() == names.size(), quantity + " takes " + std::to_string(names.size()) + " parameters, got " +
                                             std::to_string(values.size()));
  const Method method = kMethods.at(method_name);

  auto [value, used] = evaluate(quantity, values, method);
  if (plain) {
    out << value << '\n';
    return kExitOk;
  }
  ResultRecord record{quantity, {}, std::move(value), method_tag(used)};
  for (std::size_t i = 0; i < names.size(); ++i) {
    record.params.emplace_back(names[i], values[i]);
  }
  out << to_json(record).dump() << '\n';
  return kExitOk;
}

int cmd_enumerate(std::int64_t n, std::int64_t l, std::int64_t k, const std::string& mode, std::ostream& out) {
  require(n <= 18, "enumerate lists at most n = 18 (got n=" + std::to_string(n) + "); use `count` instead");
  require(n >= 1 && l >= 1, "enumerate requires n, l >= 1");
  require(mode == "unrestricted" || k >= 1, "enumerate requires k >= 1");
  const bool exact = mode == "exact-max";
  oracle::CompositionStream stream(static_cast<int>(n), static_cast<int>(l),
                                   mode == "unrestricted" ? 0 : static_cast<int>(k));
  std::size_t total = 0;
  while (auto composition = stream.next()) {
    if (exact && composition->max_part() != k) {
      continue;
    }
    for (std::size_t i = 0; i < composition->parts.size(); ++i) {
      out << (i == 0 ? "" : ",") << composition->parts[i];
    }
    out << '\n';
    ++total;
  }
  out << "total=" << total << '\n';
  return kExitOk;
}

int cmd_verify(const std::string& suite_name, VerifyLimits limits, std::optional<unsigned> jobs, std::ostream& out) {
  const std::optional<Suite> suite = parse_suite(suite_name);
  require(suite.has_value(), "unknown suite '" + suite_name + "'");
  require(limits.n_max >= 1 && limits.l_max >= 1 && limits.k_max >= 1, "verify limits must be >= 1");
  limits.jobs = resolve_jobs(jobs);
  const auto results = run_suite(*suite, limits);
  return print_results(out, results) ? kExitOk : kExitFailure;
}

int cmd_distribution(std::int64_t n, std::int64_t k, const std::string& format, const std::string& path,
                     std::ostream& out, std::ostream& err) {
  require(1 <= k && k <= n, "distribution requires 1 <= k <= n, got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k));
  const DistributionTable table = distribution(n, k);
  Json meta{{"n", n},
            {"k", k},
            {"total", to_string(table.total())},
            {"mean_bins", table.mean_bins ? Json(to_decimal_string(*table.mean_bins)) : Json(nullptr)}};

  std::ofstream file;
  if (!path.empty()) {
    file.open(path);
    if (!file) {
      throw std::runtime_error("cannot open " + path + " for writing");
    }
  }
  std::ostream& sink = path.empty() ? out : file;

  if (format == "json") {
    Json rows = Json::array();
    for (const auto& [l, count] : table.rows) {
      rows.push_back({{"l", l}, {"count", to_string(count)}});
    }
    meta["rows"] = std::move(rows);
    sink << meta.dump(2) << '\n';
    return kExitOk;
  }
  sink << "l,count\n";
  for (const auto& [l, count] : table.rows) {
    sink << l << ',' << count << '\n';
  }
  // Metadata never shares a stream with the CSV.
  (path.empty() ? err : out) << meta.dump() << '\n';
  return kExitOk;
}

int cmd_bounds(std::int64_t n, std::int64_t l, std::int64_t k, std::ostream& out) {
  const ContainmentRow row = containment_point(n, l, k);
  const AlphaBeta ab = alpha_beta(n, l, k);
  ResultRecord record{"M", {{"n", n}, {"l", l}, {"k", k}}, row.exact, "pie"};
  Json json = to_json(record);
  json["interval"] = {{"lower", row.interval.lower.to_scientific()}, {"upper", row.interval.upper.to_scientific()}};
  json["alpha"] = ab.alpha;
  json["beta"] = ab.beta;
  json["exact_applicable"] = row.interval.exact_applicable;
  json["contained"] = row.contained;
  out << json.dump() << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of restricted balls-into-bins configurations", "binpack"};
  app.require_subcommand(1);

  std::vector<std::string> method_names;
  for (const auto& entry : kMethods) method_names.push_back(entry.first);

  auto* count = app.add_subcommand("count", "Compute one quantity: B n k | M n l k | R n l k | K n l | N l k | "
                                            "T k j i | F k j t | U k j i l | G k j l");
  std::string quantity;
  std::vector<std::int64_t> values;
  std::string method = "auto";
  bool plain = false;
  count->add_option("quantity", quantity, "B, M, R, K, N, T, F, U or G")->required();
  count->add_option("params", values, "Integer parameters of the quantity")->required();
  count->add_option("--method", method, "auto, closed, pie, recurrence or oracle")
      ->check(CLI::IsMember(method_names));
  count->add_flag("--plain", plain, "Print the bare decimal value");

  auto* enumerate = app.add_subcommand("enumerate", "List compositions of n into l parts");
  std::int64_t en = 0, el = 0, ek = 0;
  std::string mode;
  enumerate->add_option("n", en)->required();
  enumerate->add_option("l", el)->required();
  enumerate->add_option("k", ek)->required();
  enumerate->add_option("mode", mode, "exact-max, atmost-max or unrestricted")
      ->required()
      ->check(CLI::IsMember({"exact-max", "atmost-max", "unrestricted"}));

  auto* verify = app.add_subcommand("verify", "Run property sweeps against the enumeration oracle");
  std::string suite = "all";
  VerifyLimits limits;
  limits.report_path = "envelope_containment.csv";
  std::optional<unsigned> jobs;
  verify->add_option("--suite", suite, "closed-forms, identities, generalized, bounds or all")
      ->check(CLI::IsMember({"closed-forms", "identities", "generalized", "bounds", "all"}));
  verify->add_option("--n-max", limits.n_max, "Largest n in the grids")->capture_default_str();
  verify->add_option("--l-max", limits.l_max, "Largest l in the grids")->capture_default_str();
  verify->add_option("--k-max", limits.k_max, "Largest k in the grids")->capture_default_str();
  verify->add_option("--jobs", jobs, "Worker threads (BINPACK_JOBS overrides)");
  verify->add_option("--report", limits.report_path, "Containment CSV written by the bounds suite")
      ->capture_default_str();

  auto* dist = app.add_subcommand("distribution", "Configurations with largest part k, split by bin count");
  std::int64_t dn = 0, dk = 0;
  std::string format = "csv";
  std::string path;
  dist->add_option("n", dn)->required();
  dist->add_option("k", dk)->required();
  dist->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  dist->add_option("--out", path, "Output file (default: standard output)");

  auto* bounds = app.add_subcommand("bounds", "Exact M next to its analytic envelope");
  std::int64_t bn = 0, bl = 0, bk = 0;
  bounds->add_option("n", bn)->required();
  bounds->add_option("l", bl)->required();
  bounds->add_option("k", bk)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*count) return cmd_count(quantity, values, method, plain, out);
    if (*enumerate) return cmd_enumerate(en, el, ek, mode, out);
    if (*verify) return cmd_verify(suite, limits, jobs, out);
    if (*dist) return cmd_distribution(dn, dk, format, path, out, err);
    if (*bounds) return cmd_bounds(bn, bl, bk, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace binpack::cli
