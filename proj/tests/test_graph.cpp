#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "dynbax/catalog.hpp"
#include "dynbax/errors.hpp"
#include "dynbax/operators.hpp"
#include "oracles.hpp"

using namespace dynbax;

namespace {

Graph a3() { return build_diagram(DiagramFamily::A, 3); }

std::vector<std::vector<Vertex>> as_vectors(const std::vector<Path>& ps) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& p : ps) out.push_back(p.vertices());
  return out;
}

/// Random degree-preserving operator with unit-scale entries.
FiberOperator random_op(const FiberSpacePtr& space, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Block> blocks;
  for (const auto& p : space->paths()) {
    for (const auto& q : space->paths()) {
      if (reduce(p) == reduce(q)) blocks.push_back({p, q, Complex(u(rng), u(rng))});
    }
  }
  return FiberOperator::from_blocks(space, blocks);
}

}  // namespace

TEST_SUITE("groupoid-core") {

TEST_CASE("graph validation rejects loops, parallel edges and disconnected input") {
  CHECK_THROWS_AS(Graph({1, 2}, {{1, 1}}), InputError);
  CHECK_THROWS_AS(Graph({1, 2}, {{1, 2}, {2, 1}}), InputError);
  CHECK_THROWS_AS(Graph({1, 2, 3}, {{1, 2}}), InputError);
  CHECK_THROWS_AS(Graph({1, 1}, {{1, 1}}), InputError);
  CHECK_THROWS_AS(Graph({1, 2}, {{1, 5}}), InputError);
  const Graph g = Graph::from_edges({{3, 1}, {1, 2}});
  CHECK(g.vertices() == std::vector<Vertex>{1, 2, 3});
  CHECK(g.neighbors(1) == std::vector<Vertex>{2, 3});
}

TEST_CASE("edge list reader skips comments and blank lines") {
  std::istringstream in("# triangle plus tail\n1 2\n\n2 3  # inline\n3 1\n3 4\n");
  const Graph g = read_edge_list(in);
  CHECK(g.size() == 4);
  CHECK(g.edges().size() == 4);
  std::istringstream bad("1 x\n");
  CHECK_THROWS_AS(read_edge_list(bad), InputError);
}

TEST_CASE("paths from a base in lexicographic order") {
  const Graph g = a3();
  CHECK(as_vectors(paths_from(g, 2, 1)) == std::vector<std::vector<Vertex>>{{2, 1}, {2, 3}});
  CHECK(as_vectors(paths_from(g, 1, 2)) ==
        std::vector<std::vector<Vertex>>{{1, 2, 1}, {1, 2, 3}});
  CHECK_THROWS_AS(paths_from(g, 7, 1), InputError);
  CHECK_THROWS_AS(paths_from(g, 1, 0), InputError);
}

TEST_CASE("A4 has 36 closed paths of length 6") {
  const Graph g = build_diagram(DiagramFamily::A, 4);
  std::size_t closed = 0;
  for (Vertex v : g.vertices()) {
    for (const auto& p : paths_from(g, v, 6)) closed += p.end() == v;
  }
  CHECK(closed == 36);
  CHECK(oracle::closed_walks(g, 6) == 36);
  CHECK(count_closed_paths(g, 6) == 36);
}

TEST_CASE("path enumeration matches row sums of Y^k on the catalog") {
  for (const auto& s : catalog()) {
    const Graph g = build_diagram(s);
    const Eigen::MatrixXd y = g.adjacency();
    Eigen::MatrixXd p = Eigen::MatrixXd::Identity(y.rows(), y.cols());
    for (int k = 1; k <= 5; ++k) {
      p = p * y;
      for (Vertex v : g.vertices()) {
        const double expect = p.row(static_cast<Eigen::Index>(g.index_of(v))).sum();
        CHECK(static_cast<double>(paths_from(g, v, k).size()) == expect);
        CHECK(fiber_dimension(g, v, k) == static_cast<std::size_t>(expect));
      }
    }
  }
}

TEST_CASE("free reduction") {
  CHECK(reduce(Path({1, 2, 1})).is_identity());
  CHECK(reduce(Path({1, 2, 1})).base() == 1);
  CHECK(reduce(Path({1, 2, 3})).path().vertices() == std::vector<Vertex>{1, 2, 3});
  CHECK(reduce(Path({1, 2, 3, 1})).path().length() == 3);
  CHECK(reduce(Path({1, 2, 3, 2, 1, 2})).path().vertices() == std::vector<Vertex>{1, 2});
  const ReducedWord w = reduce(Path({2, 3, 4, 3, 2, 1}));
  CHECK(reduce(w.path()) == w);
}

TEST_CASE("fiber operator algebra") {
  const Graph g = a3();
  FiberSpaceCache cache(g);
  const auto space = cache.get(2, 2);
  const auto tl = build_TL_graph(g, pf_eigen(g));
  const FiberOperator& T = tl.T.at(2);
  const auto id = FiberOperator::identity(space);
  const auto zero = FiberOperator::zero(space);
  CHECK(residual(compose(id, T), T) == 0.0);
  CHECK(max_abs(add(T, scale(-1.0, T))) == 0.0);
  CHECK(residual(T, T) == 0.0);
  CHECK(residual(id, zero) == 1.0);
  CHECK_THROWS_AS(compose(T, FiberOperator::identity(cache.get(1, 2))), ShapeError);
  CHECK_THROWS_AS(compose(T, FiberOperator::identity(cache.get(2, 3))), ShapeError);
}

TEST_CASE("T(2)^2 = sqrt(2) T(2) on A3 by explicit intermediate sums") {
  const Graph g = a3();
  const auto tl = build_TL_graph(g, pf_eigen(g));
  const FiberOperator& T = tl.T.at(2);
  const auto& paths = T.space()->paths();
  double worst = 0.0;
  for (const auto& p : paths) {
    for (const auto& r : paths) {
      Complex sum = 0.0;
      for (const auto& q : paths) sum += T.block(q, r) * T.block(p, q);
      worst = std::max(worst, std::abs(sum - std::sqrt(2.0) * T.block(p, r)));
    }
  }
  CHECK(worst < 1e-12);
  CHECK(residual(compose(T, T), scale(std::sqrt(2.0), T)) < 1e-12);
}

TEST_CASE("degree preservation is enforced") {
  FiberSpaceCache cache(a3());
  const auto space = cache.get(1, 2);
  CHECK_THROWS_AS(FiberOperator::from_blocks(space, {{Path({1, 2, 1}), Path({1, 2, 3}), 1.0}}),
                  ShapeError);
  CHECK_THROWS_AS(FiberOperator::from_blocks(space, {{Path({2, 1, 2}), Path({2, 1, 2}), 1.0}}),
                  ShapeError);
  const auto ok = FiberOperator::from_blocks(space, {{Path({1, 2, 1}), Path({1, 2, 1}), 2.0}});
  CHECK(ok.degree_preserving());
  CHECK(ok.block(Path({1, 2, 1}), Path({1, 2, 1})) == Complex(2.0));
}

TEST_CASE("compose is associative on random operators") {
  const Graph g = build_diagram(DiagramFamily::D_aff, 5);
  FiberSpaceCache cache(g);
  std::mt19937 rng(7);
  for (Vertex base : {1, 3}) {
    const auto space = cache.get(base, 3);
    for (int trial = 0; trial < 5; ++trial) {
      const auto a = random_op(space, rng), b = random_op(space, rng), c = random_op(space, rng);
      CHECK(residual(compose(compose(a, b), c), compose(a, compose(b, c))) < 1e-14 * 64);
    }
  }
}

TEST_CASE("inverse block by block") {
  const Graph g = build_diagram(DiagramFamily::A_aff, 4);
  FiberSpaceCache cache(g);
  std::mt19937 rng(11);
  const auto space = cache.get(1, 3);
  const auto a = random_op(space, rng);
  CHECK(residual(compose(a, inverse(a)), FiberOperator::identity(space)) < 1e-10);
  CHECK_THROWS_AS(inverse(FiberOperator::zero(space)), InversionError);
}

TEST_CASE("embed_with_shift reads the block at the shifted vertex") {
  const Graph g = a3();
  FiberSpaceCache cache(g);
  const auto tl = build_TL_graph(g, pf_eigen(g));
  const auto e = embed_with_shift(cache, tl.T, 1, 2, 3);
  const Path in({1, 2, 1, 2});
  for (Vertex x : {1, 3}) {
    CHECK(e.block(in, Path({1, 2, x, 2})) == tl.T.at(2).block(Path({2, 1, 2}), Path({2, x, 2})));
  }
  CHECK(e.block(in, Path({1, 2, 3, 2})) != Complex(0.0));
  for (Vertex base : g.vertices()) {
    for (int leg : {1, 2}) {
      const auto mine = oracle::dense(embed_with_shift(cache, tl.T, base, leg, 3));
      CHECK(oracle::max_abs(mine - oracle::order3_leg(cache, tl.T, base, leg)) == 0.0);
    }
  }
}

TEST_CASE("identity family embeds to the identity and far legs commute") {
  const Graph g = build_diagram(DiagramFamily::A, 4);
  FiberSpaceCache cache(g);
  LocalOperatorMap idf;
  for (Vertex v : g.vertices()) idf.emplace(v, FiberOperator::identity(cache.get(v, 2)));
  const auto tl = build_TL_graph(g, pf_eigen(g));
  for (Vertex base : g.vertices()) {
    for (int i = 1; i <= 3; ++i) {
      CHECK(residual(embed_with_shift(cache, idf, base, i, 4),
                     FiberOperator::identity(cache.get(base, 4))) == 0.0);
    }
    const auto t1 = embed_with_shift(cache, tl.T, base, 1, 4);
    const auto t3 = embed_with_shift(cache, tl.T, base, 3, 4);
    CHECK(max_abs(commutator(t1, t3)) == 0.0);
  }
  LocalOperatorMap partial{{1, tl.T.at(1)}};
  CHECK_THROWS_AS(embed_with_shift(cache, partial, 1, 2, 3), DomainError);
}

}  // TEST_SUITE
