#pragma once

// Block algebra of operators on source fibers of V^{\otimes k}, where every
// graph edge carries a one-dimensional space: a basis of the fiber at a base
// vertex is the set of length-k paths starting there, and operators are
// sparse complex matrices on that basis.

#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <vector>

#include <Eigen/SparseCore>

#include "dynbax/graph.hpp"

namespace dynbax {

using Complex = std::complex<double>;

/// Ordered basis of the source fiber s^{-1}(base) of V^{\otimes order}.
class FiberSpace {
 public:
  FiberSpace(const Graph& g, Vertex base, int order);

  Vertex base() const { return base_; }
  int order() const { return order_; }
  std::size_t dimension() const { return paths_.size(); }

  const std::vector<Path>& paths() const { return paths_; }
  const Path& path(std::size_t i) const { return paths_[i]; }

  /// Index of p, or npos if p is not a length-order path from base.
  std::size_t find(const std::vector<Vertex>& p) const;
  std::size_t index_of(const Path& p) const;

  /// Identifier of the reduced-word class of each path.
  const std::vector<std::size_t>& degree_class() const { return class_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  Vertex base_;
  int order_;
  std::vector<Path> paths_;
  std::map<std::vector<Vertex>, std::size_t> index_;
  std::vector<std::size_t> class_;
};

using FiberSpacePtr = std::shared_ptr<const FiberSpace>;

/// Shared FiberSpace instances keyed by (base, order) for one graph.
class FiberSpaceCache {
 public:
  explicit FiberSpaceCache(Graph g) : graph_(std::move(g)) {}
  const Graph& graph() const { return graph_; }
  FiberSpacePtr get(Vertex base, int order) const;

 private:
  Graph graph_;
  mutable std::map<std::pair<Vertex, int>, FiberSpacePtr> spaces_;
};

/// One nonzero block of a fiber operator.
struct Block {
  Path in;
  Path out;
  Complex value;
};

/// Operator on one source fiber. Column = in-path, row = out-path.
class FiberOperator {
 public:
  using Matrix = Eigen::SparseMatrix<Complex>;

  FiberOperator() = default;
  FiberOperator(FiberSpacePtr space, Matrix m);

  static FiberOperator zero(FiberSpacePtr space);
  static FiberOperator identity(FiberSpacePtr space);
  /// Diagonal operator; value(p) is evaluated on each basis path.
  static FiberOperator diagonal(FiberSpacePtr space,
                                const std::function<Complex(const Path&)>& value);
  /// Throws ShapeError if a block does not belong to the space or breaks
  /// degree preservation (reduce(in) != reduce(out)).
  static FiberOperator from_blocks(FiberSpacePtr space,
                                   const std::vector<Block>& blocks);

  Vertex base() const { return space_->base(); }
  int order() const { return space_->order(); }
  const FiberSpacePtr& space() const { return space_; }
  const Matrix& matrix() const { return m_; }

  /// Block value from in-path to out-path (zero when absent).
  Complex block(const Path& in, const Path& out) const;
  std::vector<Block> blocks() const;
  std::size_t nonzeros() const;

  /// True if every nonzero block maps between paths with equal reduced word.
  bool degree_preserving() const;

 private:
  FiberSpacePtr space_;
  Matrix m_;
};

/// (f o g)[p -> r] = sum_q f[q -> r] g[p -> q]. Throws ShapeError on base or
/// order mismatch.
FiberOperator compose(const FiberOperator& f, const FiberOperator& g);
FiberOperator add(const FiberOperator& f, const FiberOperator& g);
FiberOperator subtract(const FiberOperator& f, const FiberOperator& g);
FiberOperator scale(Complex s, const FiberOperator& f);
FiberOperator commutator(const FiberOperator& f, const FiberOperator& g);

/// Inverse computed block by block over reduced-word classes. Throws
/// InversionError naming the base vertex when a block is singular.
FiberOperator inverse(const FiberOperator& f);

/// Max |f - g| over the union of block supports.
double residual(const FiberOperator& f, const FiberOperator& g);
/// Max |f| over its support.
double max_abs(const FiberOperator& f);

FiberOperator operator*(const FiberOperator& f, const FiberOperator& g);
FiberOperator operator+(const FiberOperator& f, const FiberOperator& g);
FiberOperator operator-(const FiberOperator& f, const FiberOperator& g);
FiberOperator operator*(Complex s, const FiberOperator& f);

/// Vertex -> order-2 fiber operator. Every entry lives on the fiber of its
/// key vertex.
using LocalOperatorMap = std::map<Vertex, FiberOperator>;

/// Places the local order-2 family on legs (position, position+1) of the
/// order-`total` fiber at base: the block used on an in-path p is taken from
/// family.at(p[position-1]), the vertex reached after position-1 steps.
/// Throws DomainError when p[position-1] has no family entry. Positions are
/// 1-based, 1 <= position <= total-1.
FiberOperator embed_with_shift(const FiberSpaceCache& cache,
                               const LocalOperatorMap& family, Vertex base,
                               int position, int total);

/// Embeds on every vertex of the graph.
LocalOperatorMap embed_with_shift(const FiberSpaceCache& cache,
                                  const LocalOperatorMap& family, int position,
                                  int total);

/// Diagonal operator on the order-`order` fiber at base whose value on path
/// p is value(p[leg]); leg 0 is the base (no shift).
FiberOperator shifted_scalar(const FiberSpaceCache& cache, Vertex base,
                             int order, int leg,
                             const std::function<Complex(Vertex)>& value);

}  // namespace dynbax
