#include "trinet/report_io.hpp"

#include <json.hpp>
#include <sstream>

namespace trinet::validation {

namespace {

using nlohmann::json;

json count_or_null(const std::optional<ExactCount>& c) { return c ? json(c->to_string()) : json(nullptr); }

std::optional<ExactCount> parse_optional_count(const json& j) {
  if (j.is_null()) return std::nullopt;
  return ExactCount::parse(j.get<std::string>());
}

PolygonClass class_from(const json& j) {
  auto c = parse_class(j.get<std::string>());
  if (!c) throw std::invalid_argument("unknown polygon class in report: " + j.get<std::string>());
  return *c;
}

}  // namespace

std::string to_json(const VerificationReport& report, int indent) {
  json j;
  j["n_min"] = report.n_min;
  j["n_max"] = report.n_max;
  j["mode"] = report.formula_only ? "formula_only" : "full";
  j["classes"] = json::array();
  for (PolygonClass c : report.classes) j["classes"].push_back(class_name(c));
  j["verdict"] = report.verdict;

  json records = json::array();
  for (const Record& r : report.records) {
    records.push_back({
        {"n", r.n},
        {"class", class_name(r.cls)},
        {"oracle", count_or_null(r.oracle)},
        {"closed", r.closed.to_string()},
        {"recurrence", r.recurrence.to_string()},
        {"f_or_g_oracle", count_or_null(r.forcing_oracle)},
        {"f_or_g_closed", r.forcing_closed.to_string()},
        {"angle_law", r.angle_law ? json(*r.angle_law) : json(nullptr)},
        {"agree", r.agree},
    });
  }
  j["records"] = std::move(records);

  json checks = json::array();
  for (const IdentityCheck& c : report.checks)
    checks.push_back({{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}, {"first_failure", c.first_failure}});
  j["checks"] = std::move(checks);
  j["mismatches"] = report.mismatches;

  if (report.timing) {
    j["timing_ns"] = {
        {"oracle", report.timing->oracle_ns},
        {"closed", report.timing->closed_ns},
        {"recurrence", report.timing->recurrence_ns},
        {"identities", report.timing->identities_ns},
    };
  }
  return j.dump(indent) + "\n";
}

VerificationReport from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    VerificationReport r;
    r.n_min = j.at("n_min").get<std::int64_t>();
    r.n_max = j.at("n_max").get<std::int64_t>();
    const auto mode = j.at("mode").get<std::string>();
    if (mode != "full" && mode != "formula_only") throw std::invalid_argument("unknown mode " + mode);
    r.formula_only = mode == "formula_only";
    for (const auto& c : j.at("classes")) r.classes.push_back(class_from(c));
    r.verdict = j.at("verdict").get<bool>();
    for (const auto& jr : j.at("records")) {
      Record rec;
      rec.n = jr.at("n").get<std::int64_t>();
      rec.cls = class_from(jr.at("class"));
      rec.oracle = parse_optional_count(jr.at("oracle"));
      rec.closed = ExactCount::parse(jr.at("closed").get<std::string>());
      rec.recurrence = ExactCount::parse(jr.at("recurrence").get<std::string>());
      rec.forcing_oracle = parse_optional_count(jr.at("f_or_g_oracle"));
      rec.forcing_closed = ExactCount::parse(jr.at("f_or_g_closed").get<std::string>());
      if (!jr.at("angle_law").is_null()) rec.angle_law = jr.at("angle_law").get<bool>();
      rec.agree = jr.at("agree").get<bool>();
      r.records.push_back(std::move(rec));
    }
    for (const auto& jc : j.at("checks")) {
      r.checks.push_back({jc.at("name").get<std::string>(), jc.at("cases").get<std::uint64_t>(),
                          jc.at("failures").get<std::uint64_t>(), jc.at("first_failure").get<std::string>()});
    }
    r.mismatches = j.at("mismatches").get<std::vector<std::string>>();
    if (j.contains("timing_ns")) {
      const auto& t = j.at("timing_ns");
      r.timing = Timing{t.at("oracle").get<std::int64_t>(), t.at("closed").get<std::int64_t>(),
                        t.at("recurrence").get<std::int64_t>(), t.at("identities").get<std::int64_t>()};
    }
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

std::string to_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "n,class,oracle,closed,recurrence,f_or_g_oracle,f_or_g_closed,agree\n";
  for (const Record& r : report.records) {
    out << r.n << ',' << class_name(r.cls) << ',' << (r.oracle ? r.oracle->to_string() : "") << ','
        << r.closed.to_string() << ',' << r.recurrence.to_string() << ','
        << (r.forcing_oracle ? r.forcing_oracle->to_string() : "") << ',' << r.forcing_closed.to_string() << ','
        << (r.agree ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace trinet::validation
