#include "dynbax/family_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dynbax/errors.hpp"

namespace dynbax {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ScalarMap parse_scalars(const json& arr, const Graph& g, const std::string& key) {
  if (!arr.is_array()) throw InputError("'" + key + "' must be an array");
  ScalarMap out;
  for (const auto& e : arr) {
    const Vertex v = e.at("vertex").get<Vertex>();
    if (!g.has_vertex(v)) {
      throw InputError("'" + key + "' names unknown vertex " + std::to_string(v));
    }
    out[v] = Complex(e.at("re").get<double>(), e.value("im", 0.0));
  }
  for (Vertex v : g.vertices()) {
    if (!out.count(v)) {
      throw InputError("'" + key + "' has no entry for vertex " + std::to_string(v));
    }
  }
  return out;
}

LocalOperatorMap build_operators(const FamilyFile& f,
                                 const std::shared_ptr<const FiberSpaceCache>& cache) {
  std::map<Vertex, std::vector<Block>> per_base;
  for (const auto& b : f.blocks) {
    if (!f.graph.has_vertex(b.base)) {
      throw InputError("block base " + std::to_string(b.base) + " is not a vertex");
    }
    if (b.in.empty() || b.out.empty() || b.in.front() != b.base ||
        b.out.front() != b.base) {
      throw ShapeError("block paths must start at their base " +
                       std::to_string(b.base));
    }
    per_base[b.base].push_back({Path(b.in), Path(b.out), b.value});
  }
  LocalOperatorMap ops;
  for (Vertex v : f.graph.vertices()) {
    auto space = cache->get(v, 2);
    auto it = per_base.find(v);
    ops.emplace(v, it == per_base.end() ? FiberOperator::zero(space)
                                        : FiberOperator::from_blocks(space, it->second));
  }
  return ops;
}

std::set<Vertex> all_vertices(const Graph& g) {
  return {g.vertices().begin(), g.vertices().end()};
}

ordered_json scalars_json(const ScalarMap& m) {
  ordered_json arr = ordered_json::array();
  for (const auto& [v, x] : m) {
    arr.push_back({{"vertex", v}, {"re", x.real()}, {"im", x.imag()}});
  }
  return arr;
}

ordered_json skeleton(const Graph& g, const LocalOperatorMap& ops) {
  ordered_json doc;
  ordered_json edges = ordered_json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  doc["graph"] = edges;
  doc["order"] = 2;
  ordered_json blocks = ordered_json::array();
  for (const auto& [v, op] : ops) {
    for (const auto& b : op.blocks()) {
      blocks.push_back({{"base", v},
                        {"in", b.in.vertices()},
                        {"out", b.out.vertices()},
                        {"re", b.value.real()},
                        {"im", b.value.imag()}});
    }
  }
  doc["blocks"] = blocks;
  return doc;
}

void require_kind(const FamilyFile& f, FamilyFileKind k) {
  if (f.kind() != k) {
    throw InputError("family file holds a " + family_file_kind_name(f.kind()) +
                     " family, not " + family_file_kind_name(k));
  }
}

}  // namespace

std::string family_file_kind_name(FamilyFileKind k) {
  switch (k) {
    case FamilyFileKind::TL: return "TL";
    case FamilyFileKind::Hecke: return "Hecke";
    case FamilyFileKind::BMW: return "BMW";
  }
  return "?";
}

FamilyFileKind FamilyFile::kind() const {
  if (kappa) return FamilyFileKind::TL;
  if (nubar) return FamilyFileKind::BMW;
  return FamilyFileKind::Hecke;
}

FamilyFile parse_family_file(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("family file is not valid JSON: ") + e.what());
  }
  try {
    FamilyFile f;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : doc.at("graph")) {
      if (!e.is_array() || e.size() != 2) {
        throw InputError("graph edges must be [u, v] pairs");
      }
      edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    f.graph = Graph::from_edges(std::move(edges));
    f.order = doc.value("order", 2);
    if (f.order != 2) throw InputError("only order-2 families are supported");
    for (const auto& b : doc.at("blocks")) {
      f.blocks.push_back({b.at("base").get<Vertex>(),
                          b.at("in").get<std::vector<Vertex>>(),
                          b.at("out").get<std::vector<Vertex>>(),
                          Complex(b.at("re").get<double>(), b.value("im", 0.0))});
    }
    if (doc.contains("kappa")) f.kappa = parse_scalars(doc["kappa"], f.graph, "kappa");
    if (doc.contains("qbar")) f.qbar = parse_scalars(doc["qbar"], f.graph, "qbar");
    if (doc.contains("nubar")) f.nubar = parse_scalars(doc["nubar"], f.graph, "nubar");
    if (!f.kappa && !f.qbar) throw InputError("family file needs 'kappa' or 'qbar'");
    if (f.kappa && (f.qbar || f.nubar)) {
      throw InputError("'kappa' cannot be combined with 'qbar' or 'nubar'");
    }
    if (f.nubar && !f.qbar) throw InputError("'nubar' requires 'qbar'");
    return f;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed family file: ") + e.what());
  }
}

FamilyFile read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open family file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_family_file(ss.str());
}

TLFamily tl_from_file(const FamilyFile& f, std::string name) {
  require_kind(f, FamilyFileKind::TL);
  TLFamily out;
  out.cache = std::make_shared<const FiberSpaceCache>(f.graph);
  out.complete = all_vertices(f.graph);
  out.name = std::move(name);
  out.T = build_operators(f, out.cache);
  out.kappa = *f.kappa;
  return out;
}

HeckeFamily hecke_from_file(const FamilyFile& f, std::string name) {
  require_kind(f, FamilyFileKind::Hecke);
  HeckeFamily out;
  out.cache = std::make_shared<const FiberSpaceCache>(f.graph);
  out.complete = all_vertices(f.graph);
  out.name = std::move(name);
  out.S = build_operators(f, out.cache);
  out.qbar = *f.qbar;
  return out;
}

BMWFamily bmw_from_file(const FamilyFile& f, std::string name) {
  require_kind(f, FamilyFileKind::BMW);
  auto cache = std::make_shared<const FiberSpaceCache>(f.graph);
  auto U = build_operators(f, cache);
  return make_BMW(cache, std::move(U), *f.qbar, *f.nubar, all_vertices(f.graph),
                  std::move(name));
}

std::string family_to_json(const TLFamily& f) {
  ordered_json doc = skeleton(f.graph(), f.T);
  doc["kappa"] = scalars_json(f.kappa);
  return doc.dump(2);
}

std::string family_to_json(const HeckeFamily& f) {
  ordered_json doc = skeleton(f.graph(), f.S);
  doc["qbar"] = scalars_json(f.qbar);
  return doc.dump(2);
}

std::string family_to_json(const BMWFamily& f) {
  ordered_json doc = skeleton(f.graph(), f.U);
  doc["qbar"] = scalars_json(f.qbar);
  doc["nubar"] = scalars_json(f.nubar);
  return doc.dump(2);
}

}  // namespace dynbax
