#include "dynbax/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "dynbax/errors.hpp"

namespace dynbax {

namespace {

constexpr double kSymmetryTol = 1e-10;

std::size_t closed_path_count(const Graph& g, int N) {
  // trace(Y^N) by repeated multiplication in floating point; exact for the
  // sizes that pass the dimension guard.
  const Eigen::MatrixXd y = g.adjacency();
  Eigen::MatrixXd p = Eigen::MatrixXd::Identity(y.rows(), y.cols());
  for (int i = 0; i < N; ++i) p = p * y;
  return static_cast<std::size_t>(std::llround(p.trace()));
}

}  // namespace

ClosedPathBasis::ClosedPathBasis(Graph g, int N, std::size_t max_dim)
    : graph_(std::move(g)), N_(N) {
  if (N < 1) throw InputError("number of sites must be at least 1");
  const std::size_t expected = closed_path_count(graph_, N);
  if (expected > max_dim) {
    throw PreconditionError("closed-path basis has " + std::to_string(expected) +
                            " states; the dense lattice tools stop at " +
                            std::to_string(max_dim) +
                            " (use fewer sites or a smaller graph)");
  }
  states_.reserve(expected);
  std::vector<Vertex> cur;
  std::function<void()> extend = [&] {
    if (static_cast<int>(cur.size()) == N) {
      if (graph_.adjacent(cur.back(), cur.front())) states_.push_back(cur);
      return;
    }
    for (Vertex w : graph_.neighbors(cur.back())) {
      cur.push_back(w);
      extend();
      cur.pop_back();
    }
  };
  if (N == 1) {
    // a_0 adjacent to itself never holds in a simple graph.
  } else {
    for (Vertex v : graph_.vertices()) {
      cur.assign(1, v);
      extend();
    }
  }
  std::sort(states_.begin(), states_.end());
  for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i], i);
}

std::size_t ClosedPathBasis::find(const std::vector<Vertex>& s) const {
  auto it = index_.find(s);
  return it == index_.end() ? npos : it->second;
}

LatticeOperator translation(const BasisPtr& basis) {
  const auto n = static_cast<Eigen::Index>(basis->size());
  LatticeOperator op{basis, Eigen::MatrixXcd::Zero(n, n), "translation"};
  for (std::size_t c = 0; c < basis->size(); ++c) {
    const auto& p = basis->state(c);
    std::vector<Vertex> q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[(i + 1) % p.size()] = p[i];
    op.matrix(static_cast<Eigen::Index>(basis->find(q)),
              static_cast<Eigen::Index>(c)) = 1.0;
  }
  return op;
}

LatticeOperator transfer_matrix(const RFamily& R, Complex z, const BasisPtr& basis) {
  const Graph& g = basis->graph();
  const LocalOperatorMap Rz = R.at(z, g.vertices());
  const auto n = static_cast<Eigen::Index>(basis->size());
  const auto N = static_cast<std::size_t>(basis->sites());
  LatticeOperator op{basis, Eigen::MatrixXcd::Zero(n, n),
                     "transfer(z=" + format_complex(z) + ")"};
  for (std::size_t c = 0; c < basis->size(); ++c) {
    const auto& p = basis->state(c);
    for (std::size_t r = 0; r < basis->size(); ++r) {
      const auto& q = basis->state(r);
      Complex w = 1.0;
      for (std::size_t i = 0; i < N && w != 0.0; ++i) {
        const std::size_t j = (i + 1) % N;
        if (!g.adjacent(q[i], p[i])) {
          w = 0.0;
          break;
        }
        w *= Rz.at(q[i]).block(Path({q[i], p[i], p[j]}), Path({q[i], q[j], p[j]}));
      }
      op.matrix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = w;
    }
  }
  return op;
}

LatticeOperator hamiltonian(const TLFamily& family, const BasisPtr& basis) {
  const Graph& g = basis->graph();
  const auto n = static_cast<Eigen::Index>(basis->size());
  const auto N = static_cast<std::size_t>(basis->sites());
  LatticeOperator op{basis, Eigen::MatrixXcd::Zero(n, n), "hamiltonian"};
  for (std::size_t c = 0; c < basis->size(); ++c) {
    const auto& p = basis->state(c);
    for (std::size_t i = 0; i < N; ++i) {
      const Vertex left = p[(i + N - 1) % N];
      const Vertex right = p[(i + 1) % N];
      if (left != right) continue;
      auto it = family.T.find(left);
      if (it == family.T.end()) {
        throw DomainError("TL family has no operator at vertex " +
                          std::to_string(left));
      }
      for (Vertex a2 : g.neighbors(left)) {
        const Complex w =
            it->second.block(Path({left, p[i], left}), Path({left, a2, left}));
        if (w == 0.0) continue;
        std::vector<Vertex> q = p;
        q[i] = a2;
        op.matrix(static_cast<Eigen::Index>(basis->find(q)),
                  static_cast<Eigen::Index>(c)) += w;
      }
    }
  }
  return op;
}

double commutator_norm(const LatticeOperator& a, const LatticeOperator& b) {
  return (a.matrix * b.matrix - b.matrix * a.matrix).cwiseAbs().maxCoeff();
}

double max_abs_diff(const LatticeOperator& a, const LatticeOperator& b) {
  if (a.matrix.size() == 0) return 0.0;
  return (a.matrix - b.matrix).cwiseAbs().maxCoeff();
}

Eigen::MatrixXcd component(const LatticeOperator& op, Vertex row_base,
                           Vertex col_base) {
  std::vector<Eigen::Index> rows;
  std::vector<Eigen::Index> cols;
  for (std::size_t i = 0; i < op.basis->size(); ++i) {
    const Vertex b = op.basis->state(i).front();
    if (b == row_base) rows.push_back(static_cast<Eigen::Index>(i));
    if (b == col_base) cols.push_back(static_cast<Eigen::Index>(i));
  }
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(rows.size()),
                       static_cast<Eigen::Index>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          op.matrix(rows[r], cols[c]);
    }
  }
  return out;
}

Spectrum diagonalize(const Eigen::MatrixXd& input, double tol) {
  if (input.rows() != input.cols()) throw PreconditionError("matrix is not square");
  const Eigen::Index n = input.rows();
  if (n > 0 && (input - input.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol) {
    throw PreconditionError("matrix is not symmetric within 1e-10");
  }
  Eigen::MatrixXd a = input;
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  auto off = [&] {
    double s = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        if (i != j) s += a(i, j) * a(i, j);
      }
    }
    return std::sqrt(s);
  };
  Spectrum out;
  double o = off();
  while (o >= tol) {
    if (out.sweeps == kMaxJacobiSweeps) {
      throw NumericError("Jacobi iteration did not converge in 100 sweeps");
    }
    ++out.sweeps;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Rotation zeroing a(p,q) (Golub and Van Loan, sym.schur2).
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
    o = off();
  }
  out.off_norm = o;
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return a(x, x) < a(y, y); });
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index k = order[static_cast<std::size_t>(i)];
    out.values(i) = a(k, k);
    out.vectors.col(i) = v.col(k);
  }
  if (n > 0) {
    out.reconstruction =
        (input - out.vectors * out.values.asDiagonal() * out.vectors.transpose())
            .cwiseAbs()
            .maxCoeff();
    out.orthogonality =
        (out.vectors.transpose() * out.vectors - Eigen::MatrixXd::Identity(n, n))
            .cwiseAbs()
            .maxCoeff();
  }
  return out;
}

Spectrum diagonalize(const LatticeOperator& op, double tol) {
  if (op.matrix.size() > 0 && op.matrix.imag().cwiseAbs().maxCoeff() > kSymmetryTol) {
    throw PreconditionError("matrix is not real within 1e-10");
  }
  return diagonalize(Eigen::MatrixXd(op.matrix.real()), tol);
}

PartitionValue partition_function(const RFamily& R, Complex z,
                                  const BasisPtr& basis, int rows) {
  if (rows < 1) throw InputError("number of rows must be at least 1");
  const Eigen::MatrixXcd m = transfer_matrix(R, z, basis).matrix;
  Eigen::MatrixXcd p = m;
  for (int i = 1; i < rows; ++i) p = p * m;
  PartitionValue out{p.trace(), {}};
  if (std::abs(out.value) > 1e300 || !std::isfinite(std::abs(out.value))) {
    out.warnings.push_back("partition function magnitude exceeds 1e300");
  }
  return out;
}

}  // namespace dynbax

namespace dynbax {

namespace {

void describe(Report& r, const Graph& g, const std::string& family, int N) {
  r.graph = g.name();
  r.family = family;
  r.param("sites", N);
}

}  // namespace

Report check_basis_count(const ClosedPathBasis& basis,
                         std::optional<std::size_t> expected) {
  Report r;
  ScopedTimer timer(r);
  r.check = "basis_count";
  describe(r, basis.graph(), "closed-paths", basis.sites());
  r.param("states", static_cast<int>(basis.size()));
  r.tol = 0.5;
  const auto trace = static_cast<double>(closed_path_count(basis.graph(), basis.sites()));
  r.add(std::nullopt, "|states| - trace(Y^N)",
        std::abs(static_cast<double>(basis.size()) - trace));
  if (expected) {
    r.param("expected", static_cast<int>(*expected));
    r.add(std::nullopt, "|states| - expected",
          std::abs(static_cast<double>(basis.size()) - static_cast<double>(*expected)));
  }
  r.finalize();
  return r;
}

Report check_commuting(const RFamily& R, const BasisPtr& basis,
                       const std::vector<double>& zs, const std::vector<double>& ws,
                       double tol) {
  Report r;
  ScopedTimer timer(r);
  r.check = "transfer_commute";
  describe(r, basis->graph(), R.name, basis->sites());
  r.tol = tol;
  std::map<double, LatticeOperator> cached;
  auto get = [&](double z) -> const LatticeOperator& {
    auto it = cached.find(z);
    if (it == cached.end()) it = cached.emplace(z, transfer_matrix(R, z, basis)).first;
    return it->second;
  };
  for (double z : zs) {
    for (double w : ws) {
      r.add(std::nullopt, "z=" + format_double(z) + " w=" + format_double(w),
            commutator_norm(get(z), get(w)));
    }
  }
  r.finalize();
  return r;
}

Report check_translation_limit(const RFamily& R, const BasisPtr& basis) {
  Report r;
  ScopedTimer timer(r);
  r.check = "transfer_at_zero";
  describe(r, basis->graph(), R.name, basis->sites());
  r.tol = kExactTol;
  r.add(std::nullopt, "M(0)-translation",
        max_abs_diff(transfer_matrix(R, 0.0, basis), translation(basis)));
  r.finalize();
  return r;
}

Report check_conservation(const TLFamily& family, const RFamily& R,
                          const BasisPtr& basis, const std::vector<double>& ws,
                          double tol) {
  Report r;
  ScopedTimer timer(r);
  r.check = "hamiltonian_commute";
  describe(r, basis->graph(), R.name, basis->sites());
  r.tol = tol;
  const LatticeOperator H = hamiltonian(family, basis);
  for (double w : ws) {
    r.add(std::nullopt, "[H,M(w)] w=" + format_double(w),
          commutator_norm(H, transfer_matrix(R, w, basis)));
  }
  r.add(std::nullopt, "[H,translation]", commutator_norm(H, translation(basis)));
  r.finalize();
  return r;
}

Report check_hamiltonian_symmetry(const TLFamily& family, const BasisPtr& basis) {
  Report r;
  ScopedTimer timer(r);
  r.check = "hamiltonian_symmetric";
  describe(r, basis->graph(), family.name, basis->sites());
  r.tol = kExactTol;
  const LatticeOperator H = hamiltonian(family, basis);
  r.add(std::nullopt, "H-H^T",
        H.matrix.size() == 0
            ? 0.0
            : (H.matrix - H.matrix.transpose()).cwiseAbs().maxCoeff());
  r.finalize();
  return r;
}

Report check_diagonalization(const TLFamily& family, const BasisPtr& basis,
                             double tol) {
  Report r;
  ScopedTimer timer(r);
  r.check = "jacobi";
  describe(r, basis->graph(), family.name, basis->sites());
  r.tol = tol;
  const Spectrum s = diagonalize(hamiltonian(family, basis));
  r.param("sweeps", s.sweeps);
  r.add(std::nullopt, "reconstruction", s.reconstruction);
  r.add(std::nullopt, "orthogonality", s.orthogonality);
  r.finalize();
  return r;
}

Report check_spectrum(const TLFamily& family, const BasisPtr& basis,
                      const std::vector<double>& expected, double tol) {
  Report r;
  ScopedTimer timer(r);
  r.check = "spectrum";
  describe(r, basis->graph(), family.name, basis->sites());
  r.tol = tol;
  const Spectrum s = diagonalize(hamiltonian(family, basis));
  if (static_cast<std::size_t>(s.values.size()) != expected.size()) {
    r.warnings.push_back("spectrum has " + std::to_string(s.values.size()) +
                         " values, expected " + std::to_string(expected.size()));
    r.add(std::nullopt, "size", std::numeric_limits<double>::infinity());
  } else {
    for (std::size_t i = 0; i < expected.size(); ++i) {
      r.add(std::nullopt, "eigenvalue " + std::to_string(i),
            std::abs(s.values(static_cast<Eigen::Index>(i)) - expected[i]));
    }
  }
  r.finalize();
  return r;
}

}  // namespace dynbax
