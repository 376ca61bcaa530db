#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <map>
#include <set>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "trinet/formulas.hpp"
#include "trinet/oracle.hpp"
#include "trinet/report_io.hpp"
#include "trinet/validation.hpp"

namespace trinet::cli {

namespace {

using nlohmann::ordered_json;

constexpr std::int64_t kOracleWarnAbove = 40;
constexpr std::int64_t kEnumerateWarnAbove = 15;
const CLI::Range kPositive(std::int64_t{1}, std::numeric_limits<std::int64_t>::max());

enum class Method { Closed, Recurrence, Oracle };
enum class Format { Table, Csv, Json, BFile };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<std::string, Method> kMethods = {
    {"closed", Method::Closed}, {"recurrence", Method::Recurrence}, {"oracle", Method::Oracle}};

std::string method_name(Method m) {
  for (const auto& [name, value] : kMethods)
    if (value == m) return name;
  return "?";
}

PolygonClass require_class(const std::string& name) {
  auto c = parse_class(name);
  if (!c) throw UsageError("unknown class '" + name + "' (expected triangle, quadrilateral, pentagon or hexagon)");
  return *c;
}

std::vector<PolygonClass> parse_class_list(const std::string& list) {
  std::vector<PolygonClass> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    PolygonClass c = require_class(item);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  if (out.empty()) throw UsageError("no classes given");
  return out;
}

void require_formula(PolygonClass c, Method m) {
  if (m != Method::Oracle && !validation::formula_classes().contains(c))
    throw UsageError("method " + method_name(m) + " has no formula for " + std::string(class_name(c)) +
                     "; use --method oracle");
}

ExactCount count_with(PolygonClass c, NetSize n, Method m) {
  switch (m) {
    case Method::Closed:
      return c == PolygonClass::Pentagon ? formulas::pentagon_closed(n) : formulas::hexagon_closed(n);
    case Method::Recurrence:
      return c == PolygonClass::Pentagon ? formulas::pentagon_recurrence(n) : formulas::hexagon_recurrence(n);
    case Method::Oracle:
      return ExactCount(count_by_class(n)[c]);
  }
  return ExactCount{};
}

void apply_threads(int threads) {
  if (threads <= 0) {
    if (const char* env = std::getenv("TRINET_THREADS")) {
      try {
        threads = std::stoi(env);
      } catch (const std::exception&) {
        throw UsageError(std::string("TRINET_THREADS is not an integer: ") + env);
      }
    }
  }
  if (threads > 0) set_threads(threads);
}

std::string vertices_field(const std::vector<TriCoord>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ';';
    s += std::to_string(vs[i].alpha) + ' ' + std::to_string(vs[i].beta) + ' ' + std::to_string(vs[i].gamma);
  }
  return s;
}

// ---- count ---------------------------------------------------------------

struct CountArgs {
  std::int64_t n = 1;
  std::string classes = "pentagon,hexagon";
  Method method = Method::Closed;
  Format format = Format::Table;
};

int cmd_count(const CountArgs& a, std::ostream& out, std::ostream& err) {
  const NetSize n(a.n);
  const auto classes = parse_class_list(a.classes);
  for (PolygonClass c : classes) require_formula(c, a.method);
  if (a.method == Method::Oracle && a.n > kOracleWarnAbove)
    err << "warning: enumeration above n=" << kOracleWarnAbove << " may take a long time\n";

  std::vector<std::pair<PolygonClass, ExactCount>> rows;
  if (a.method == Method::Oracle) {
    const CountTable table = count_by_class(n);
    for (PolygonClass c : classes) rows.emplace_back(c, ExactCount(table[c]));
  } else {
    for (PolygonClass c : classes) rows.emplace_back(c, count_with(c, n, a.method));
  }

  switch (a.format) {
    case Format::Csv:
      out << "n,class,method,count\n";
      for (const auto& [c, v] : rows) out << a.n << ',' << class_name(c) << ',' << method_name(a.method) << ',' << v.to_string() << '\n';
      break;
    case Format::Json: {
      ordered_json j;
      j["n"] = a.n;
      j["method"] = method_name(a.method);
      j["counts"] = ordered_json::object();
      for (const auto& [c, v] : rows) j["counts"][std::string(class_name(c))] = v.to_string();
      out << j.dump(2) << '\n';
      break;
    }
    default:
      for (const auto& [c, v] : rows) out << class_name(c) << '=' << v.to_string() << '\n';
  }
  return kOk;
}

// ---- sequence ------------------------------------------------------------

struct SequenceArgs {
  std::string cls;
  std::int64_t n_max = 1;
  Method method = Method::Closed;
  Format format = Format::Csv;
};

int cmd_sequence(const SequenceArgs& a, std::ostream& out, std::ostream& err) {
  const PolygonClass c = require_class(a.cls);
  require_formula(c, a.method);
  const NetSize n_max(a.n_max);
  if (a.method == Method::Oracle && a.n_max > kOracleWarnAbove)
    err << "warning: enumeration above n=" << kOracleWarnAbove << " may take a long time\n";

  std::vector<ExactCount> terms;
  if (a.method == Method::Recurrence) {
    terms = formulas::order2_sequence(
        c == PolygonClass::Pentagon ? formulas::pentagon_recurrence_def() : formulas::hexagon_recurrence_def(),
        n_max);
  } else {
    for (std::int64_t n = 1; n <= a.n_max; ++n) terms.push_back(count_with(c, NetSize(n), a.method));
  }

  switch (a.format) {
    case Format::Csv:
      out << "n,count\n";
      for (std::size_t i = 0; i < terms.size(); ++i) out << i + 1 << ',' << terms[i].to_string() << '\n';
      break;
    case Format::Json: {
      ordered_json j;
      j["class"] = class_name(c);
      j["method"] = method_name(a.method);
      j["terms"] = ordered_json::array();
      for (std::size_t i = 0; i < terms.size(); ++i)
        j["terms"].push_back({{"n", i + 1}, {"count", terms[i].to_string()}});
      out << j.dump(2) << '\n';
      break;
    }
    case Format::BFile:
      for (std::size_t i = 0; i < terms.size(); ++i) out << i + 1 << ' ' << terms[i].to_string() << '\n';
      break;
    case Format::Table: {
      const std::size_t width = std::max<std::size_t>(terms.back().to_string().size(), 5);
      out << std::setw(8) << "n" << "  " << std::setw(static_cast<int>(width)) << "count" << '\n';
      for (std::size_t i = 0; i < terms.size(); ++i)
        out << std::setw(8) << i + 1 << "  " << std::setw(static_cast<int>(width)) << terms[i].to_string() << '\n';
      break;
    }
  }
  return kOk;
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
  std::int64_t n_max = 1;
  bool formula_only = false;
  bool no_timing = false;
  std::string classes = "pentagon,hexagon";
  Format format = Format::Table;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const NetSize n_max(a.n_max);
  validation::VerificationReport report;
  if (a.formula_only) {
    report = validation::formula_only_validate(n_max);
  } else {
    const auto list = parse_class_list(a.classes);
    std::set<PolygonClass> classes(list.begin(), list.end());
    for (PolygonClass c : classes) require_formula(c, Method::Closed);
    if (a.n_max > kOracleWarnAbove)
      err << "warning: enumeration above n=" << kOracleWarnAbove << " may take a long time\n";
    report = validation::cross_validate(n_max, classes);
  }
  if (a.no_timing) report.timing.reset();

  switch (a.format) {
    case Format::Json: out << validation::to_json(report); break;
    case Format::Csv: out << validation::to_csv(report); break;
    default: {
      out << "verify n=1.." << report.n_max << (report.formula_only ? " (formula only)" : " (enumeration, closed form, recurrence)")
          << '\n';
      out << "records: " << report.records.size() << '\n';
      for (const auto& c : report.checks)
        out << "check " << c.name << ": " << (c.passed() ? "pass" : "FAIL") << " (" << c.cases << " cases)\n";
      for (const auto& m : report.mismatches) out << "mismatch: " << m << '\n';
      if (report.timing) {
        const auto ms = [](std::int64_t ns) { return static_cast<double>(ns) / 1e6; };
        out << std::fixed << std::setprecision(3) << "timing ms: oracle=" << ms(report.timing->oracle_ns)
            << " closed=" << ms(report.timing->closed_ns) << " recurrence=" << ms(report.timing->recurrence_ns)
            << " identities=" << ms(report.timing->identities_ns) << '\n';
      }
      out << "verdict: " << (report.verdict ? "agree" : "MISMATCH") << '\n';
    }
  }
  return report.verdict ? kOk : kMismatch;
}

// ---- enumerate -----------------------------------------------------------

struct EnumerateArgs {
  std::int64_t n = 1;
  std::string cls;
  Format format = Format::Table;
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out, std::ostream& err) {
  const NetSize n(a.n);
  std::optional<PolygonClass> filter;
  if (!a.cls.empty() && a.cls != "all") filter = require_class(a.cls);
  if (a.n > kEnumerateWarnAbove)
    err << "warning: dumping every polygon above n=" << kEnumerateWarnAbove << " produces a lot of output\n";

  if (a.format == Format::Json) {
    ordered_json arr = ordered_json::array();
    for_each_polygon(n, filter, [&](const LatticePolygon& p) {
      const auto& b = p.bounds;
      ordered_json verts = ordered_json::array();
      for (const auto& v : p.vertices) verts.push_back({v.alpha, v.beta, v.gamma});
      arr.push_back({
          {"bounds",
           {{"lo_alpha", b.lo_alpha},
            {"lo_beta", b.lo_beta},
            {"lo_gamma", b.lo_gamma},
            {"cut_alpha", b.cut_alpha},
            {"cut_beta", b.cut_beta},
            {"cut_gamma", b.cut_gamma}}},
          {"class", class_name(p.cls)},
          {"vertices", std::move(verts)},
          {"touches", {{"OA", p.touches.oa}, {"OB", p.touches.ob}, {"AB", p.touches.ab}}},
      });
    });
    out << arr.dump(2) << '\n';
    return kOk;
  }

  if (a.format == Format::Csv)
    out << "lo_alpha,lo_beta,lo_gamma,cut_alpha,cut_beta,cut_gamma,class,vertices,touches_oa,touches_ob,touches_ab\n";
  const auto flag = [](bool b) { return b ? "true" : "false"; };
  for_each_polygon(n, filter, [&](const LatticePolygon& p) {
    const auto& b = p.bounds;
    if (a.format == Format::Csv) {
      out << b.lo_alpha << ',' << b.lo_beta << ',' << b.lo_gamma << ',' << b.cut_alpha << ',' << b.cut_beta << ','
          << b.cut_gamma << ',' << class_name(p.cls) << ',' << vertices_field(p.vertices) << ',' << flag(p.touches.oa)
          << ',' << flag(p.touches.ob) << ',' << flag(p.touches.ab) << '\n';
    } else {
      out << class_name(p.cls) << " lo=(" << b.lo_alpha << ',' << b.lo_beta << ',' << b.lo_gamma << ") cuts=("
          << b.cut_alpha << ',' << b.cut_beta << ',' << b.cut_gamma << ") vertices=";
      for (const auto& v : p.vertices) out << v.to_string();
      out << " touches=" << (p.touches.oa ? "OA" : "") << (p.touches.ob ? "OB" : "") << (p.touches.ab ? "AB" : "")
          << '\n';
    }
  });
  return kOk;
}

void add_format(CLI::App* sub, Format& target, bool with_bfile) {
  std::map<std::string, Format> formats = {{"table", Format::Table}, {"csv", Format::Csv}, {"json", Format::Json}};
  if (with_bfile) formats["bfile"] = Format::BFile;
  sub->add_option("--format", target, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of convex polygons in an n-triangular net"};
  app.name(args.empty() ? "trinet" : args.front());
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "Threads for enumeration (default: TRINET_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Count polygons of the given classes in one net");
  count->add_option("--n", count_args.n, "Net order")->required()->check(kPositive);
  count->add_option("--classes", count_args.classes, "Comma-separated classes")->capture_default_str();
  count->add_option("--method", count_args.method, "closed, recurrence or oracle")
      ->transform(CLI::CheckedTransformer(kMethods, CLI::ignore_case));
  add_format(count, count_args.format, false);

  SequenceArgs seq_args;
  auto* sequence = app.add_subcommand("sequence", "Print counts for n = 1..n_max");
  sequence->add_option("--class", seq_args.cls, "Polygon class")->required();
  sequence->add_option("--n-max", seq_args.n_max, "Last n")->required()->check(kPositive);
  sequence->add_option("--method", seq_args.method, "closed, recurrence or oracle")
      ->transform(CLI::CheckedTransformer(kMethods, CLI::ignore_case));
  add_format(sequence, seq_args.format, true);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Cross-check enumeration, closed forms and recurrences");
  verify->add_option("--n-max", verify_args.n_max, "Last n")->required()->check(kPositive);
  verify->add_flag("--formula-only", verify_args.formula_only, "Skip enumeration");
  verify->add_flag("--no-timing", verify_args.no_timing, "Omit timings (byte-stable output)");
  verify->add_option("--classes", verify_args.classes, "Comma-separated classes")->capture_default_str();
  add_format(verify, verify_args.format, false);

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "Dump every polygon of a net");
  enumerate->add_option("--n", enum_args.n, "Net order")->required()->check(kPositive);
  enumerate->add_option("--class", enum_args.cls, "Polygon class (default: all)");
  add_format(enumerate, enum_args.format, false);

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    apply_threads(threads);
    if (*count) return cmd_count(count_args, out, err);
    if (*sequence) return cmd_sequence(seq_args, out, err);
    if (*verify) return cmd_verify(verify_args, out, err);
    if (*enumerate) return cmd_enumerate(enum_args, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ArithmeticOverflow& e) {
    err << "error: n is beyond the 128-bit range (" << e.what() << ")\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace trinet::cli
