#include "dynbax/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <queue>
#include <set>
#include <sstream>

#include "dynbax/errors.hpp"

namespace dynbax {

Graph::Graph(std::vector<Vertex> vertices,
             std::vector<std::pair<Vertex, Vertex>> edges)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw InputError("graph has no vertices");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!index_.emplace(vertices_[i], i).second) {
      throw InputError("duplicate vertex id " + std::to_string(vertices_[i]));
    }
  }
  neighbors_.resize(vertices_.size());
  std::set<std::pair<Vertex, Vertex>> seen;
  for (auto [u, v] : edges) {
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (!has_vertex(u) || !has_vertex(v)) {
      throw InputError("edge " + std::to_string(u) + " " + std::to_string(v) +
                       " touches an unknown vertex");
    }
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      throw InputError("parallel edge " + std::to_string(u) + " " +
                       std::to_string(v));
    }
    neighbors_[index_.at(u)].push_back(v);
    neighbors_[index_.at(v)].push_back(u);
  }
  for (auto& n : neighbors_) std::sort(n.begin(), n.end());

  // connectivity
  std::vector<bool> reached(vertices_.size(), false);
  std::queue<std::size_t> todo;
  todo.push(0);
  reached[0] = true;
  std::size_t count = 1;
  while (!todo.empty()) {
    auto i = todo.front();
    todo.pop();
    for (Vertex w : neighbors_[i]) {
      auto j = index_.at(w);
      if (!reached[j]) {
        reached[j] = true;
        ++count;
        todo.push(j);
      }
    }
  }
  if (count != vertices_.size()) throw InputError("graph is not connected");
}

Graph Graph::from_edges(std::vector<std::pair<Vertex, Vertex>> edges) {
  std::set<Vertex> vs;
  for (auto [u, v] : edges) {
    vs.insert(u);
    vs.insert(v);
  }
  return Graph(std::vector<Vertex>(vs.begin(), vs.end()), std::move(edges));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto it = index_.find(u);
  if (it == index_.end()) return false;
  const auto& n = neighbors_[it->second];
  return std::binary_search(n.begin(), n.end(), v);
}

std::size_t Graph::index_of(Vertex v) const {
  auto it = index_.find(v);
  if (it == index_.end()) {
    throw InputError("unknown vertex " + std::to_string(v));
  }
  return it->second;
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  return neighbors_[index_of(v)];
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (Vertex w : neighbors_[i]) {
      if (vertices_[i] < w) out.emplace_back(vertices_[i], w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Eigen::MatrixXd Graph::adjacency() const {
  const auto n = static_cast<Eigen::Index>(vertices_.size());
  Eigen::MatrixXd y = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (Vertex w : neighbors_[i]) {
      y(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(index_.at(w))) =
          1.0;
    }
  }
  return y;
}

std::vector<Vertex> Graph::ball(Vertex v, int radius) const {
  std::map<Vertex, int> dist{{v, 0}};
  std::queue<Vertex> todo;
  index_of(v);
  todo.push(v);
  while (!todo.empty()) {
    Vertex u = todo.front();
    todo.pop();
    if (dist[u] == radius) continue;
    for (Vertex w : neighbors(u)) {
      if (dist.emplace(w, dist[u] + 1).second) todo.push(w);
    }
  }
  std::vector<Vertex> out;
  for (auto& [w, d] : dist) out.push_back(w);
  return out;
}

Graph read_edge_list(std::istream& in) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ss(line);
    Vertex u{};
    Vertex v{};
    if (!(ss >> u)) {
      std::string rest;
      ss.clear();
      if (ss >> rest) {
        throw InputError("edge list line " + std::to_string(lineno) +
                         ": expected two integer vertex ids");
      }
      continue;  // blank
    }
    std::string extra;
    if (!(ss >> v) || (ss >> extra)) {
      throw InputError("edge list line " + std::to_string(lineno) +
                       ": expected exactly two integer vertex ids");
    }
    edges.emplace_back(u, v);
  }
  if (edges.empty()) throw InputError("edge list is empty");
  return Graph::from_edges(std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file " + path);
  return read_edge_list(in);
}

Path::Path(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw InputError("path needs a base vertex");
}

std::vector<Arrow> Path::arrows() const {
  std::vector<Arrow> out;
  for (int i = 1; i <= length(); ++i) out.push_back(arrow(i));
  return out;
}

bool Path::valid_in(const Graph& g) const {
  if (!g.has_vertex(base())) return false;
  for (int i = 1; i <= length(); ++i) {
    if (!g.adjacent(vertices_[i - 1], vertices_[i])) return false;
  }
  return true;
}

std::string to_string(const Path& p) {
  std::string s;
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    if (i) s += "->";
    s += std::to_string(p.vertices()[i]);
  }
  return s;
}

ReducedWord::ReducedWord(Path p) : path_(std::move(p)) {
  const auto& v = path_.vertices();
  for (std::size_t i = 2; i < v.size(); ++i) {
    if (v[i] == v[i - 2]) throw InputError("word is not reduced");
  }
}

std::vector<Path> paths_from(const Graph& g, Vertex base, int k) {
  if (!g.has_vertex(base)) {
    throw InputError("unknown vertex " + std::to_string(base));
  }
  if (k < 1) throw InputError("path length must be positive");
  std::vector<Path> out;
  std::vector<Vertex> current{base};
  // Depth-first over sorted neighbor lists yields lexicographic order.
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(current.size()) == k + 1) {
      out.emplace_back(current);
      return;
    }
    for (Vertex w : g.neighbors(current.back())) {
      current.push_back(w);
      self(self);
      current.pop_back();
    }
  };
  extend(extend);
  return out;
}

ReducedWord reduce(const Path& p) {
  std::vector<Vertex> stack;
  for (Vertex v : p.vertices()) {
    if (stack.size() >= 2 && stack[stack.size() - 2] == v) {
      stack.pop_back();
    } else {
      stack.push_back(v);
    }
  }
  return ReducedWord(Path(std::move(stack)));
}

std::size_t count_closed_paths(const Graph& g, int k) {
  std::size_t n = 0;
  for (Vertex v : g.vertices()) {
    for (const auto& p : paths_from(g, v, k)) {
      if (p.end() == v) ++n;
    }
  }
  return n;
}

}  // namespace dynbax
