#pragma once

// Graph groupoids: finite simple connected graphs, their oriented arrows,
// composable paths and freely reduced words.

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace dynbax {

using Vertex = int;

/// Finite simple connected graph with integer vertex ids.
///
/// Vertices are kept in the order given at construction; neighbor lists are
/// sorted ascending so every enumeration derived from a graph is
/// deterministic.
class Graph {
 public:
  Graph() = default;

  /// Throws InputError if the graph has a self-loop, a repeated vertex, an
  /// edge touching an unknown vertex, or is disconnected. Repeated edges are
  /// rejected as parallel edges.
  Graph(std::vector<Vertex> vertices,
        std::vector<std::pair<Vertex, Vertex>> edges);

  /// Builds a graph from its edge list only; vertices are sorted ascending.
  static Graph from_edges(std::vector<std::pair<Vertex, Vertex>> edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }

  bool has_vertex(Vertex v) const { return index_.count(v) != 0; }
  bool adjacent(Vertex u, Vertex v) const;

  /// Position of v in vertices(); throws InputError for unknown vertices.
  std::size_t index_of(Vertex v) const;

  /// Sorted neighbors of v; throws InputError for unknown vertices.
  const std::vector<Vertex>& neighbors(Vertex v) const;

  /// Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// Adjacency matrix in the order of vertices().
  Eigen::MatrixXd adjacency() const;

  /// Vertices at graph distance <= radius from v, sorted.
  std::vector<Vertex> ball(Vertex v, int radius) const;

  /// Short human-readable name; empty unless set by the catalog.
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.neighbors_ == b.neighbors_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::map<Vertex, std::size_t> index_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::string name_;
};

/// Reads a plain-text edge list: one "u v" pair per line; blank lines and
/// '#' comments are ignored.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

/// Oriented edge of the graph groupoid.
struct Arrow {
  Vertex source;
  Vertex target;

  Arrow inverse() const { return {target, source}; }
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Sequence of composable arrows, stored as its vertex sequence
/// (base, t(arrow 1), ..., t(arrow k)).
class Path {
 public:
  Path() = default;
  explicit Path(std::vector<Vertex> vertices);
  static Path identity(Vertex base) { return Path({base}); }

  Vertex base() const { return vertices_.front(); }
  Vertex end() const { return vertices_.back(); }
  int length() const { return static_cast<int>(vertices_.size()) - 1; }

  /// i-th arrow, 1-based as in tensor-leg numbering.
  Arrow arrow(int i) const { return {vertices_[i - 1], vertices_[i]}; }
  std::vector<Arrow> arrows() const;

  /// Vertex reached after i steps (0 = base).
  Vertex at(int i) const { return vertices_[i]; }
  const std::vector<Vertex>& vertices() const { return vertices_; }

  /// True if consecutive vertices are adjacent in g.
  bool valid_in(const Graph& g) const;

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path& a, const Path& b) {
    return a.vertices_ <=> b.vertices_;
  }

 private:
  std::vector<Vertex> vertices_;
};

std::string to_string(const Path& p);

/// Path with no adjacent inverse pair; the identity word has no arrows.
class ReducedWord {
 public:
  explicit ReducedWord(Path p);

  const Path& path() const { return path_; }
  Vertex base() const { return path_.base(); }
  bool is_identity() const { return path_.length() == 0; }

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
  friend auto operator<=>(const ReducedWord& a, const ReducedWord& b) {
    return a.path_ <=> b.path_;
  }

 private:
  Path path_;
};

/// All length-k paths starting at base, in lexicographic order of their
/// target sequences. Throws InputError for an unknown base or k < 1.
std::vector<Path> paths_from(const Graph& g, Vertex base, int k);

/// Free reduction in the graph groupoid (cancels a -> b -> a).
ReducedWord reduce(const Path& p);

/// Closed length-k paths summed over all bases.
std::size_t count_closed_paths(const Graph& g, int k);

}  // namespace dynbax
