#pragma once

// Periodic face models: closed-path states, row transfer matrices obtained
// by tracing out the auxiliary line, the translation operator, the
// Temperley-Lieb spin-chain Hamiltonian, and a Jacobi eigensolver.

#include <limits>
#include <map>
#include <optional>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "dynbax/baxter.hpp"

namespace dynbax {

/// Largest closed-path basis the lattice routines will build.
inline constexpr std::size_t kMaxLatticeDim = 2000;

/// States (a_0, ..., a_{N-1}) with a_i adjacent to a_{i+1 mod N}, in
/// lexicographic order.
class ClosedPathBasis {
 public:
  /// Throws InputError for N < 1 and PreconditionError when the basis would
  /// exceed max_dim states.
  ClosedPathBasis(Graph g, int N, std::size_t max_dim = kMaxLatticeDim);

  const Graph& graph() const { return graph_; }
  int sites() const { return N_; }
  std::size_t size() const { return states_.size(); }
  const std::vector<std::vector<Vertex>>& states() const { return states_; }
  const std::vector<Vertex>& state(std::size_t i) const { return states_[i]; }
  /// Index of a state, or npos.
  std::size_t find(const std::vector<Vertex>& s) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  Graph graph_;
  int N_;
  std::vector<std::vector<Vertex>> states_;
  std::map<std::vector<Vertex>, std::size_t> index_;
};

using BasisPtr = std::shared_ptr<const ClosedPathBasis>;

struct LatticeOperator {
  BasisPtr basis;
  Eigen::MatrixXcd matrix;
  std::string label;
};

/// (a_0, ..., a_{N-1}) -> (a_{N-1}, a_0, ..., a_{N-2}).
LatticeOperator translation(const BasisPtr& basis);

/// Row transfer matrix: the entry from bottom state p to top state q is
/// prod_i W(q_i, p_i, p_{i+1}, q_{i+1}), where W is the block of R(z, q_i)
/// from the in-path q_i -> p_i -> p_{i+1} to the out-path
/// q_i -> q_{i+1} -> p_{i+1} (indices mod N). Blocks absent from R are
/// structural zeros. At z = 0 with R(0) = id this is translation(basis).
LatticeOperator transfer_matrix(const RFamily& R, Complex z, const BasisPtr& basis);

/// H = sum_{i=0}^{N-1} h_i; h_i replaces a_i by a'_i with the weight of
/// T(a_{i-1}) from a_{i-1} -> a_i -> a_{i-1} to a_{i-1} -> a'_i -> a_{i-1}
/// when a_{i-1} = a_{i+1} (indices mod N), and vanishes otherwise.
LatticeOperator hamiltonian(const TLFamily& family, const BasisPtr& basis);

/// max |AB - BA|.
double commutator_norm(const LatticeOperator& a, const LatticeOperator& b);
double max_abs_diff(const LatticeOperator& a, const LatticeOperator& b);

/// Entries between states with a_0 = row_base (top) and a_0 = col_base
/// (bottom).
Eigen::MatrixXcd component(const LatticeOperator& op, Vertex row_base,
                           Vertex col_base);

struct Spectrum {
  /// Ascending.
  Eigen::VectorXd values;
  /// Orthonormal eigenvectors as columns, matching values.
  Eigen::MatrixXd vectors;
  int sweeps = 0;
  double off_norm = 0.0;
  /// max |A - Q diag(values) Q^T|.
  double reconstruction = 0.0;
  /// max |Q^T Q - I|.
  double orthogonality = 0.0;
};

inline constexpr double kDefaultJacobiTol = 1e-12;
inline constexpr int kMaxJacobiSweeps = 100;

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm is below
/// tol. Throws PreconditionError unless the matrix is real symmetric within
/// 1e-10 and NumericError if 100 sweeps do not converge.
Spectrum diagonalize(const Eigen::MatrixXd& a, double tol = kDefaultJacobiTol);
Spectrum diagonalize(const LatticeOperator& op, double tol = kDefaultJacobiTol);

struct PartitionValue {
  Complex value;
  std::vector<std::string> warnings;
};

/// trace(M(z)^rows) by repeated multiplication; warns above 1e300.
PartitionValue partition_function(const RFamily& R, Complex z,
                                  const BasisPtr& basis, int rows);

/// Exact zero demanded: pass iff max_residual < this.
inline constexpr double kExactTol = std::numeric_limits<double>::min();

/// |basis| against trace(Y^N), and against `expected` when given.
Report check_basis_count(const ClosedPathBasis& basis,
                         std::optional<std::size_t> expected = std::nullopt);
/// ||[M(z), M(w)]||_max for every (z, w) in zs x ws.
Report check_commuting(const RFamily& R, const BasisPtr& basis,
                       const std::vector<double>& zs, const std::vector<double>& ws,
                       double tol);
/// max |M(0) - translation|; exact.
Report check_translation_limit(const RFamily& R, const BasisPtr& basis);
/// ||[H, M(w)]||_max and ||[H, translation]||_max.
Report check_conservation(const TLFamily& family, const RFamily& R,
                          const BasisPtr& basis, const std::vector<double>& ws,
                          double tol);
/// max |H - H^T|; exact.
Report check_hamiltonian_symmetry(const TLFamily& family, const BasisPtr& basis);
/// Reconstruction and orthogonality residuals of the Jacobi solver on H.
Report check_diagonalization(const TLFamily& family, const BasisPtr& basis,
                             double tol);
/// Ascending spectrum of H against expected values.
Report check_spectrum(const TLFamily& family, const BasisPtr& basis,
                      const std::vector<double>& expected, double tol);

}  // namespace dynbax
