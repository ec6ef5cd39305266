#include "dynbax/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "dynbax/errors.hpp"
#include "dynbax/special.hpp"
#include "json.hpp"

namespace dynbax {

using Json = nlohmann::ordered_json;

void Report::param(const std::string& key, const std::string& value) {
  params.emplace_back(key, value);
}
void Report::param(const std::string& key, const char* value) {
  params.emplace_back(key, std::string(value));
}
void Report::param(const std::string& key, double value) {
  params.emplace_back(key, format_double(value));
}
void Report::param(const std::string& key, int value) {
  params.emplace_back(key, std::to_string(value));
}
void Report::param(const std::string& key, std::complex<double> value) {
  params.emplace_back(key, format_complex(value));
}

void Report::add(std::optional<Vertex> vertex, std::string relation,
                 double residual) {
  per_vertex.push_back({vertex, std::move(relation), residual});
}

void Report::skip(std::optional<Vertex> vertex, std::string reason) {
  skipped.push_back({vertex, std::move(reason)});
}

void Report::finalize() {
  bool nan = false;
  max_residual = 0.0;
  for (const auto& it : per_vertex) {
    if (std::isnan(it.residual)) nan = true;
    else max_residual = std::max(max_residual, it.residual);
  }
  if (nan) max_residual = std::numeric_limits<double>::quiet_NaN();
  if (per_vertex.empty() || nan) {
    pass = false;
  } else if (rule == PassRule::Below) {
    pass = max_residual < tol;
  } else {
    pass = max_residual > tol;
  }
}

bool Report::same_content(const Report& o) const {
  auto eq = [](double a, double b) {
    return a == b || (std::isnan(a) && std::isnan(b));
  };
  if (check != o.check || graph != o.graph || family != o.family ||
      params != o.params || skipped != o.skipped || warnings != o.warnings ||
      !eq(max_residual, o.max_residual) || tol != o.tol || rule != o.rule ||
      pass != o.pass || per_vertex.size() != o.per_vertex.size()) {
    return false;
  }
  for (std::size_t i = 0; i < per_vertex.size(); ++i) {
    const auto& a = per_vertex[i];
    const auto& b = o.per_vertex[i];
    if (a.vertex != b.vertex || a.relation != b.relation ||
        !eq(a.residual, b.residual)) {
      return false;
    }
  }
  return true;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

Json number_or_null(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

double number_from(const Json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return j.get<double>();
}

Json vertex_json(const std::optional<Vertex>& v) {
  if (!v) return nullptr;
  return *v;
}

std::optional<Vertex> vertex_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<Vertex>();
}

Json report_json(const Report& r) {
  Json j;
  j["check"] = r.check;
  j["graph"] = r.graph;
  j["family"] = r.family;
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  Json items = Json::array();
  for (const auto& it : r.per_vertex) {
    Json e;
    e["vertex"] = vertex_json(it.vertex);
    e["relation"] = it.relation;
    e["residual"] = number_or_null(it.residual);
    items.push_back(e);
  }
  j["per_vertex"] = items;
  Json skipped = Json::array();
  for (const auto& s : r.skipped) {
    Json e;
    e["vertex"] = vertex_json(s.vertex);
    e["reason"] = s.reason;
    skipped.push_back(e);
  }
  j["skipped"] = skipped;
  j["warnings"] = r.warnings;
  j["max_residual"] = number_or_null(r.max_residual);
  j["tol"] = r.tol;
  j["rule"] = r.rule == PassRule::Below ? "below" : "above";
  j["pass"] = r.pass;
  j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

Report report_from(const Json& j) {
  Report r;
  r.check = j.at("check").get<std::string>();
  r.graph = j.at("graph").get<std::string>();
  r.family = j.at("family").get<std::string>();
  for (const auto& [k, v] : j.at("params").items()) {
    r.params.emplace_back(k, v.get<std::string>());
  }
  for (const auto& e : j.at("per_vertex")) {
    r.per_vertex.push_back({vertex_from(e.at("vertex")),
                            e.at("relation").get<std::string>(),
                            number_from(e.at("residual"))});
  }
  for (const auto& e : j.at("skipped")) {
    r.skipped.push_back(
        {vertex_from(e.at("vertex")), e.at("reason").get<std::string>()});
  }
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  r.max_residual = number_from(j.at("max_residual"));
  r.tol = j.at("tol").get<double>();
  const auto rule = j.at("rule").get<std::string>();
  if (rule != "below" && rule != "above") {
    throw InputError("unknown pass rule '" + rule + "'");
  }
  r.rule = rule == "below" ? PassRule::Below : PassRule::Above;
  r.pass = j.at("pass").get<bool>();
  r.wall_time_ms = j.at("wall_time_ms").get<double>();
  return r;
}

// nlohmann prints doubles in shortest round-trip form; we want a fixed
// 17-digit rendering, so the document is written by hand.
void write(std::ostringstream& os, const Json& j, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(indent * depth), ' ');
  const char* nl = indent > 0 ? "\n" : "";
  const char* sep = indent > 0 ? ": " : ":";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << '{' << nl;
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) os << ',' << nl;
        first = false;
        os << pad << Json(k).dump() << sep;
        write(os, v, indent, depth + 1);
      }
      os << nl << close << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << '[' << nl;
      bool first = true;
      for (const auto& v : j) {
        if (!first) os << ',' << nl;
        first = false;
        os << pad;
        write(os, v, indent, depth + 1);
      }
      os << nl << close << ']';
      return;
    }
    case Json::value_t::number_float:
      os << format_double(j.get<double>());
      return;
    default:
      os << j.dump();
      return;
  }
}

std::string dump(const Json& j, int indent) {
  std::ostringstream os;
  write(os, j, indent, 0);
  os << '\n';
  return os.str();
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string to_json(const Report& r, int indent) {
  return dump(report_json(r), indent);
}

Report report_from_json(const std::string& text) {
  try {
    return report_from(parse(text));
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

std::string suite_to_json(const std::vector<Report>& reports, int indent) {
  Json j;
  Json arr = Json::array();
  int passed = 0;
  double total_ms = 0.0;
  for (const auto& r : reports) {
    arr.push_back(report_json(r));
    passed += r.pass ? 1 : 0;
    total_ms += r.wall_time_ms;
  }
  j["reports"] = arr;
  Json summary;
  summary["checks"] = static_cast<int>(reports.size());
  summary["passed"] = passed;
  summary["failed"] = static_cast<int>(reports.size()) - passed;
  summary["pass"] = passed == static_cast<int>(reports.size());
  summary["wall_time_ms"] = total_ms;
  j["summary"] = summary;
  return dump(j, indent);
}

std::vector<Report> suite_from_json(const std::string& text) {
  try {
    const Json j = parse(text);
    std::vector<Report> out;
    for (const auto& e : j.at("reports")) out.push_back(report_from(e));
    return out;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed suite document: ") + e.what());
  }
}

std::string to_csv(const std::vector<Report>& reports) {
  std::ostringstream os;
  os << "check,graph,vertex,relation,residual,tol,pass\n";
  for (const auto& r : reports) {
    for (const auto& it : r.per_vertex) {
      os << r.check << ',' << r.graph << ','
         << (it.vertex ? std::to_string(*it.vertex) : std::string()) << ','
         << '"' << it.relation << '"' << ',' << format_double(it.residual)
         << ',' << format_double(r.tol) << ',' << (r.pass ? 1 : 0) << '\n';
    }
  }
  return os.str();
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS " : "FAIL ") << r.check;
  if (!r.graph.empty()) os << " [" << r.graph << ']';
  if (!r.family.empty()) os << " (" << r.family << ')';
  os << " max_residual=" << format_double(r.max_residual)
     << (r.rule == PassRule::Below ? " tol=" : " threshold=")
     << format_double(r.tol);
  if (!r.skipped.empty()) os << " skipped=" << r.skipped.size();
  return os.str();
}

}  // namespace dynbax
