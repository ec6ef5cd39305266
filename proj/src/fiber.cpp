#include "dynbax/fiber.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/LU>

#include "dynbax/errors.hpp"

namespace dynbax {

FiberSpace::FiberSpace(const Graph& g, Vertex base, int order)
    : base_(base), order_(order), paths_(paths_from(g, base, order)) {
  std::map<ReducedWord, std::size_t> classes;
  class_.reserve(paths_.size());
  for (std::size_t i = 0; i < paths_.size(); ++i) {
    index_.emplace(paths_[i].vertices(), i);
    auto [it, inserted] = classes.emplace(reduce(paths_[i]), classes.size());
    class_.push_back(it->second);
  }
}

std::size_t FiberSpace::find(const std::vector<Vertex>& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? npos : it->second;
}

std::size_t FiberSpace::index_of(const Path& p) const {
  auto i = find(p.vertices());
  if (i == npos) {
    throw ShapeError("path " + to_string(p) + " is not in the order-" +
                     std::to_string(order_) + " fiber at " +
                     std::to_string(base_));
  }
  return i;
}

FiberSpacePtr FiberSpaceCache::get(Vertex base, int order) const {
  auto key = std::make_pair(base, order);
  auto it = spaces_.find(key);
  if (it != spaces_.end()) return it->second;
  auto space = std::make_shared<const FiberSpace>(graph_, base, order);
  spaces_.emplace(key, space);
  return space;
}

FiberOperator::FiberOperator(FiberSpacePtr space, Matrix m)
    : space_(std::move(space)), m_(std::move(m)) {
  const auto n = static_cast<Eigen::Index>(space_->dimension());
  if (m_.rows() != n || m_.cols() != n) {
    throw ShapeError("matrix size does not match fiber dimension");
  }
  m_.makeCompressed();
}

FiberOperator FiberOperator::zero(FiberSpacePtr space) {
  const auto n = static_cast<Eigen::Index>(space->dimension());
  return FiberOperator(std::move(space), Matrix(n, n));
}

FiberOperator FiberOperator::identity(FiberSpacePtr space) {
  return diagonal(std::move(space), [](const Path&) { return Complex(1.0); });
}

FiberOperator FiberOperator::diagonal(
    FiberSpacePtr space, const std::function<Complex(const Path&)>& value) {
  const auto n = static_cast<Eigen::Index>(space->dimension());
  std::vector<Eigen::Triplet<Complex>> t;
  t.reserve(space->dimension());
  for (Eigen::Index i = 0; i < n; ++i) {
    Complex v = value(space->path(static_cast<std::size_t>(i)));
    if (v != Complex(0.0)) t.emplace_back(i, i, v);
  }
  Matrix m(n, n);
  m.setFromTriplets(t.begin(), t.end());
  return FiberOperator(std::move(space), std::move(m));
}

FiberOperator FiberOperator::from_blocks(FiberSpacePtr space,
                                         const std::vector<Block>& blocks) {
  const auto n = static_cast<Eigen::Index>(space->dimension());
  std::vector<Eigen::Triplet<Complex>> t;
  for (const auto& b : blocks) {
    auto col = space->index_of(b.in);
    auto row = space->index_of(b.out);
    if (space->degree_class()[col] != space->degree_class()[row]) {
      throw ShapeError("block " + to_string(b.in) + " => " + to_string(b.out) +
                       " does not preserve the groupoid degree");
    }
    t.emplace_back(static_cast<Eigen::Index>(row),
                   static_cast<Eigen::Index>(col), b.value);
  }
  Matrix m(n, n);
  m.setFromTriplets(t.begin(), t.end());
  return FiberOperator(std::move(space), std::move(m));
}

Complex FiberOperator::block(const Path& in, const Path& out) const {
  auto col = space_->find(in.vertices());
  auto row = space_->find(out.vertices());
  if (col == FiberSpace::npos || row == FiberSpace::npos) return 0.0;
  return m_.coeff(static_cast<Eigen::Index>(row),
                  static_cast<Eigen::Index>(col));
}

std::vector<Block> FiberOperator::blocks() const {
  std::vector<Block> out;
  for (Eigen::Index k = 0; k < m_.outerSize(); ++k) {
    for (Matrix::InnerIterator it(m_, k); it; ++it) {
      if (it.value() == Complex(0.0)) continue;
      out.push_back({space_->path(static_cast<std::size_t>(it.col())),
                     space_->path(static_cast<std::size_t>(it.row())),
                     it.value()});
    }
  }
  return out;
}

std::size_t FiberOperator::nonzeros() const {
  std::size_t n = 0;
  for (Eigen::Index k = 0; k < m_.outerSize(); ++k) {
    for (Matrix::InnerIterator it(m_, k); it; ++it) {
      if (it.value() != Complex(0.0)) ++n;
    }
  }
  return n;
}

bool FiberOperator::degree_preserving() const {
  const auto& cls = space_->degree_class();
  for (Eigen::Index k = 0; k < m_.outerSize(); ++k) {
    for (Matrix::InnerIterator it(m_, k); it; ++it) {
      if (it.value() == Complex(0.0)) continue;
      if (cls[static_cast<std::size_t>(it.row())] !=
          cls[static_cast<std::size_t>(it.col())]) {
        return false;
      }
    }
  }
  return true;
}

namespace {

void require_same_fiber(const FiberOperator& f, const FiberOperator& g) {
  if (f.space() == g.space()) return;
  if (f.base() != g.base() || f.order() != g.order() ||
      f.space()->dimension() != g.space()->dimension()) {
    throw ShapeError("fiber mismatch: base " + std::to_string(f.base()) +
                     " order " + std::to_string(f.order()) + " vs base " +
                     std::to_string(g.base()) + " order " +
                     std::to_string(g.order()));
  }
}

}  // namespace

FiberOperator compose(const FiberOperator& f, const FiberOperator& g) {
  require_same_fiber(f, g);
  FiberOperator::Matrix m = f.matrix() * g.matrix();
  return FiberOperator(f.space(), std::move(m));
}

FiberOperator add(const FiberOperator& f, const FiberOperator& g) {
  require_same_fiber(f, g);
  FiberOperator::Matrix m = f.matrix() + g.matrix();
  return FiberOperator(f.space(), std::move(m));
}

FiberOperator subtract(const FiberOperator& f, const FiberOperator& g) {
  require_same_fiber(f, g);
  FiberOperator::Matrix m = f.matrix() - g.matrix();
  return FiberOperator(f.space(), std::move(m));
}

FiberOperator scale(Complex s, const FiberOperator& f) {
  FiberOperator::Matrix m = s * f.matrix();
  return FiberOperator(f.space(), std::move(m));
}

FiberOperator commutator(const FiberOperator& f, const FiberOperator& g) {
  return subtract(compose(f, g), compose(g, f));
}

FiberOperator inverse(const FiberOperator& f) {
  const auto& space = *f.space();
  const auto& cls = space.degree_class();
  std::map<std::size_t, std::vector<Eigen::Index>> groups;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    groups[cls[i]].push_back(static_cast<Eigen::Index>(i));
  }
  Eigen::MatrixXcd dense = Eigen::MatrixXcd(f.matrix());
  std::vector<Eigen::Triplet<Complex>> t;
  for (const auto& [c, idx] : groups) {
    const auto k = static_cast<Eigen::Index>(idx.size());
    Eigen::MatrixXcd blk(k, k);
    for (Eigen::Index r = 0; r < k; ++r) {
      for (Eigen::Index s = 0; s < k; ++s) blk(r, s) = dense(idx[r], idx[s]);
    }
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(blk);
    if (!lu.isInvertible()) {
      throw InversionError("fiber operator at vertex " +
                           std::to_string(f.base()) + " is not invertible");
    }
    Eigen::MatrixXcd inv = lu.inverse();
    for (Eigen::Index r = 0; r < k; ++r) {
      for (Eigen::Index s = 0; s < k; ++s) {
        if (inv(r, s) != Complex(0.0)) t.emplace_back(idx[r], idx[s], inv(r, s));
      }
    }
  }
  const auto n = static_cast<Eigen::Index>(space.dimension());
  FiberOperator::Matrix m(n, n);
  m.setFromTriplets(t.begin(), t.end());
  return FiberOperator(f.space(), std::move(m));
}

double max_abs(const FiberOperator& f) {
  double r = 0.0;
  for (Eigen::Index k = 0; k < f.matrix().outerSize(); ++k) {
    for (FiberOperator::Matrix::InnerIterator it(f.matrix(), k); it; ++it) {
      r = std::max(r, std::abs(it.value()));
    }
  }
  return r;
}

double residual(const FiberOperator& f, const FiberOperator& g) {
  return max_abs(subtract(f, g));
}

FiberOperator operator*(const FiberOperator& f, const FiberOperator& g) {
  return compose(f, g);
}
FiberOperator operator+(const FiberOperator& f, const FiberOperator& g) {
  return add(f, g);
}
FiberOperator operator-(const FiberOperator& f, const FiberOperator& g) {
  return subtract(f, g);
}
FiberOperator operator*(Complex s, const FiberOperator& f) {
  return scale(s, f);
}

FiberOperator embed_with_shift(const FiberSpaceCache& cache,
                               const LocalOperatorMap& family, Vertex base,
                               int position, int total) {
  if (position < 1 || position > total - 1) {
    throw InputError("embedding position " + std::to_string(position) +
                     " outside 1.." + std::to_string(total - 1));
  }
  auto space = cache.get(base, total);
  const auto n = static_cast<Eigen::Index>(space->dimension());
  std::vector<Eigen::Triplet<Complex>> t;
  for (std::size_t col = 0; col < space->dimension(); ++col) {
    const auto& p = space->path(col).vertices();
    const Vertex shifted = p[static_cast<std::size_t>(position - 1)];
    auto it = family.find(shifted);
    if (it == family.end()) {
      throw DomainError("operator family has no entry at vertex " +
                        std::to_string(shifted));
    }
    const FiberOperator& local = it->second;
    const auto& lspace = *local.space();
    const auto i0 = static_cast<std::size_t>(position);
    const auto lcol = lspace.find({shifted, p[i0], p[i0 + 1]});
    if (lcol == FiberSpace::npos) continue;
    for (FiberOperator::Matrix::InnerIterator e(local.matrix(),
                                                static_cast<Eigen::Index>(lcol));
         e; ++e) {
      if (e.value() == Complex(0.0)) continue;
      const auto& lout = lspace.path(static_cast<std::size_t>(e.row()));
      std::vector<Vertex> q = p;
      q[i0] = lout.at(1);
      q[i0 + 1] = lout.at(2);
      const auto row = space->find(q);
      if (row == FiberSpace::npos) {
        throw ShapeError("local block at vertex " + std::to_string(shifted) +
                         " does not preserve the path endpoint");
      }
      t.emplace_back(static_cast<Eigen::Index>(row),
                     static_cast<Eigen::Index>(col), e.value());
    }
  }
  FiberOperator::Matrix m(n, n);
  m.setFromTriplets(t.begin(), t.end());
  return FiberOperator(space, std::move(m));
}

LocalOperatorMap embed_with_shift(const FiberSpaceCache& cache,
                                  const LocalOperatorMap& family, int position,
                                  int total) {
  LocalOperatorMap out;
  for (Vertex v : cache.graph().vertices()) {
    out.emplace(v, embed_with_shift(cache, family, v, position, total));
  }
  return out;
}

FiberOperator shifted_scalar(const FiberSpaceCache& cache, Vertex base,
                             int order, int leg,
                             const std::function<Complex(Vertex)>& value) {
  if (leg < 0 || leg > order) throw InputError("leg index out of range");
  return FiberOperator::diagonal(cache.get(base, order), [&](const Path& p) {
    return value(p.at(leg));
  });
}

}  // namespace dynbax
