#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "landau/model.hpp"

// Operator-algebra route, independent of the real-space wavefunctions:
// every operator is a dense complex matrix over the truncated two-mode
// number basis |n_a, n_b>, 0 <= n_a, n_b <= cutoff. Mode a is the
// mechanical (cyclotron) ladder, mode b the guiding-center ladder; the map
// to state labels is n = n_a, m = n_a - n_b, which reproduces m <= n and
// the Landau degeneracy.
//
// Ladder truncation corrupts the top occupation shells, so all algebraic
// identities are asserted on an interior block only (n_a + n_b at least
// `margin` below the cutoff).

namespace landau::fock {

using ComplexMatrix = Eigen::MatrixXcd;

struct FockBasis {
  int cutoff;

  int per_mode() const { return cutoff + 1; }
  int dim() const { return per_mode() * per_mode(); }
  int index(int n_a, int n_b) const { return n_a * per_mode() + n_b; }
  int mode_a(const QuantumNumbers& qn) const { return qn.n; }
  int mode_b(const QuantumNumbers& qn) const { return qn.n - qn.m; }
  QuantumNumbers labels(int n_a, int n_b) const {
    return QuantumNumbers{n_a, n_a - n_b};
  }
};

struct TruncatedOperator {
  std::string label;
  ComplexMatrix mat;
};

inline double hermiticity_residual(const TruncatedOperator& op) {
  return (op.mat - op.mat.adjoint()).cwiseAbs().maxCoeff();
}

struct OperatorSet {
  PhysicalConfig cfg;
  FockBasis basis;

  // ladders (not Hermitian)
  TruncatedOperator a;  // lowers the cyclotron mode
  TruncatedOperator b;  // lowers the guiding-center mode

  // kinematic operators
  TruncatedOperator pi_x, pi_y;  // mechanical momentum
  TruncatedOperator X, Y;        // guiding center
  TruncatedOperator x, y;        // position
  TruncatedOperator p_x, p_y;    // canonical momentum (symmetric gauge)

  TruncatedOperator H;
  TruncatedOperator r_c2;  // squared cyclotron radius (x - X)^2 + (y - Y)^2
  TruncatedOperator R2;    // squared guiding-center distance X^2 + Y^2
  TruncatedOperator r2;    // x^2 + y^2

  // the six OAMs
  TruncatedOperator l_can_origin, l_mech_origin, l_ps_origin;
  TruncatedOperator l_can_gc, l_mech_gc, l_ps_gc;

  std::vector<const TruncatedOperator*> hermitian_members() const {
    return {&pi_x, &pi_y, &X,    &Y,    &x,    &y,
            &p_x,  &p_y,  &H,    &r_c2, &R2,   &r2,
            &l_can_origin, &l_mech_origin, &l_ps_origin,
            &l_can_gc,     &l_mech_gc,     &l_ps_gc};
  }

  const TruncatedOperator& oam(const OamSpec& spec) const {
    if (spec.axis == OamAxis::Origin) {
      switch (spec.kind) {
        case OamKind::Canonical: return l_can_origin;
        case OamKind::Mechanical: return l_mech_origin;
        case OamKind::Pseudo: return l_ps_origin;
      }
    }
    switch (spec.kind) {
      case OamKind::Canonical: return l_can_gc;
      case OamKind::Mechanical: return l_mech_gc;
      case OamKind::Pseudo: return l_ps_gc;
    }
    throw std::logic_error("unreachable OAM spec");
  }
};

namespace detail {

// Symmetrized product. The pairs combined this way commute in the exact
// algebra; the symmetrized matrix stays Hermitian even where truncation
// breaks the commutator at the edge shells.
inline ComplexMatrix sym(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  return 0.5 * (lhs * rhs + rhs * lhs);
}

}  // namespace detail

inline OperatorSet build_operator_set(const PhysicalConfig& cfg, int cutoff) {
  if (cutoff < 4) {
    throw std::domain_error("fock cutoff must be >= 4, got " +
                            std::to_string(cutoff));
  }

  OperatorSet ops;
  ops.cfg = cfg;
  ops.basis = FockBasis{cutoff};
  const FockBasis& basis = ops.basis;
  const int dim = basis.dim();

  ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
  ComplexMatrix b = ComplexMatrix::Zero(dim, dim);
  for (int n_a = 0; n_a <= cutoff; ++n_a) {
    for (int n_b = 0; n_b <= cutoff; ++n_b) {
      if (n_a >= 1) {
        a(basis.index(n_a - 1, n_b), basis.index(n_a, n_b)) =
            std::sqrt(static_cast<double>(n_a));
      }
      if (n_b >= 1) {
        b(basis.index(n_a, n_b - 1), basis.index(n_a, n_b)) =
            std::sqrt(static_cast<double>(n_b));
      }
    }
  }
  const ComplexMatrix a_dag = a.adjoint();
  const ComplexMatrix b_dag = b.adjoint();

  const std::complex<double> im(0.0, 1.0);
  const double l_B = cfg.l_B;
  const double l_B2 = l_B * l_B;
  const double eB = cfg.e * cfg.B;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  // a = (l_B/sqrt(2)) (Pi_x - i Pi_y) inverted; fixes [Pi_x, Pi_y] = -i eB
  ops.pi_x = {"Pi_x", (inv_sqrt2 / l_B) * (a + a_dag)};
  ops.pi_y = {"Pi_y", (inv_sqrt2 / l_B) * (im * (a - a_dag))};

  // b = (X + iY)/(sqrt(2) l_B) inverted; fixes [X, Y] = i l_B^2
  ops.X = {"X", (l_B * inv_sqrt2) * (b + b_dag)};
  ops.Y = {"Y", (l_B * inv_sqrt2) * (-im * (b - b_dag))};

  // invert the guiding-center definitions X = x - Pi_y/(eB), Y = y + Pi_x/(eB)
  ops.x = {"x", ops.X.mat + l_B2 * ops.pi_y.mat};
  ops.y = {"y", ops.Y.mat - l_B2 * ops.pi_x.mat};

  ops.p_x = {"p_x", ops.pi_x.mat + 0.5 * eB * ops.y.mat};
  ops.p_y = {"p_y", ops.pi_y.mat - 0.5 * eB * ops.x.mat};

  const ComplexMatrix pi_x2 = ops.pi_x.mat * ops.pi_x.mat;
  const ComplexMatrix pi_y2 = ops.pi_y.mat * ops.pi_y.mat;
  ops.H = {"H", (pi_x2 + pi_y2) / (2.0 * cfg.m_e)};

  const ComplexMatrix dx = ops.x.mat - ops.X.mat;
  const ComplexMatrix dy = ops.y.mat - ops.Y.mat;
  ops.r_c2 = {"r_c^2", dx * dx + dy * dy};
  ops.R2 = {"R^2", ops.X.mat * ops.X.mat + ops.Y.mat * ops.Y.mat};
  ops.r2 = {"r^2", ops.x.mat * ops.x.mat + ops.y.mat * ops.y.mat};

  using detail::sym;
  ops.l_mech_origin = {"L_mech_origin", sym(ops.x.mat, ops.pi_y.mat) -
                                            sym(ops.y.mat, ops.pi_x.mat)};
  ops.l_ps_origin = {"L_ps_origin",
                     ops.l_mech_origin.mat - 0.5 * eB * ops.r2.mat};
  ops.l_can_origin = {"L_can_origin",
                      sym(ops.x.mat, ops.p_y.mat) - sym(ops.y.mat, ops.p_x.mat)};

  ops.l_mech_gc = {"L_mech_gc", sym(dx, ops.pi_y.mat) - sym(dy, ops.pi_x.mat)};
  ops.l_ps_gc = {"L_ps_gc", ops.l_mech_gc.mat - 0.5 * eB * ops.r_c2.mat};
  ops.l_can_gc = {"L_can_gc", sym(dx, ops.p_y.mat) - sym(dy, ops.p_x.mat)};

  ops.a = {"a", std::move(a)};
  ops.b = {"b", std::move(b)};
  return ops;
}

// States with n_a + n_b <= cutoff - margin. Identities built from at most
// `margin` ladder factors hold exactly there.
struct InteriorProjector {
  int cutoff;
  int margin;

  bool contains(int n_a, int n_b) const {
    return n_a + n_b <= cutoff - margin;
  }
  bool contains(const FockBasis& basis, const QuantumNumbers& qn) const {
    return contains(basis.mode_a(qn), basis.mode_b(qn));
  }
  int rank() const {
    const int s = cutoff - margin;
    return (s + 1) * (s + 2) / 2;
  }
  std::vector<int> indices(const FockBasis& basis) const {
    std::vector<int> idx;
    idx.reserve(rank());
    for (int n_a = 0; n_a <= basis.cutoff; ++n_a) {
      for (int n_b = 0; n_b <= basis.cutoff; ++n_b) {
        if (contains(n_a, n_b)) idx.push_back(basis.index(n_a, n_b));
      }
    }
    return idx;
  }
};

inline InteriorProjector interior_projector(int cutoff, int margin) {
  if (margin <= 0 || margin >= cutoff) {
    throw std::domain_error("need 0 < margin < cutoff, got margin=" +
                            std::to_string(margin) + ", cutoff=" +
                            std::to_string(cutoff));
  }
  return InteriorProjector{cutoff, margin};
}

// || P M P ||_max over the interior block.
inline double interior_max_abs(const FockBasis& basis,
                               const InteriorProjector& proj,
                               const ComplexMatrix& mat) {
  const auto idx = proj.indices(basis);
  double max_abs = 0.0;
  for (int row : idx) {
    for (int col : idx) {
      max_abs = std::max(max_abs, std::abs(mat(row, col)));
    }
  }
  return max_abs;
}

struct ResidualEntry {
  std::string name;
  double residual;
};

// Constants of motion: commutators with H that vanish in the exact algebra.
// L_can_origin is included because it coincides with L_ps_origin in the
// symmetric gauge.
inline std::vector<ResidualEntry> conservation_checks(
    const OperatorSet& ops, const InteriorProjector& proj) {
  const auto commutator_residual = [&](const TruncatedOperator& op) {
    const ComplexMatrix comm = op.mat * ops.H.mat - ops.H.mat * op.mat;
    return interior_max_abs(ops.basis, proj, comm);
  };
  return {
      {"[X, H]", commutator_residual(ops.X)},
      {"[Y, H]", commutator_residual(ops.Y)},
      {"[R^2, H]", commutator_residual(ops.R2)},
      {"[L_ps_origin, H]", commutator_residual(ops.l_ps_origin)},
      {"[L_mech_gc, H]", commutator_residual(ops.l_mech_gc)},
      {"[L_ps_gc, H]", commutator_residual(ops.l_ps_gc)},
      {"[L_can_origin, H]", commutator_residual(ops.l_can_origin)},
  };
}

// Exact operator identities, asserted on the interior block.
inline std::vector<ResidualEntry> identity_checks(const OperatorSet& ops,
                                                  const InteriorProjector& proj,
                                                  const PhysicalConfig& cfg) {
  const std::complex<double> im(0.0, 1.0);
  const double l_B2 = cfg.l_B * cfg.l_B;
  const double eB = cfg.e * cfg.B;
  const int dim = ops.basis.dim();
  const ComplexMatrix eye = ComplexMatrix::Identity(dim, dim);

  const auto residual = [&](const ComplexMatrix& mat) {
    return interior_max_abs(ops.basis, proj, mat);
  };

  const ComplexMatrix number_a = ops.a.mat.adjoint() * ops.a.mat;
  const ComplexMatrix number_b = ops.b.mat.adjoint() * ops.b.mat;
  const ComplexMatrix dx = ops.x.mat - ops.X.mat;
  const ComplexMatrix dy = ops.y.mat - ops.Y.mat;
  const ComplexMatrix pi2 =
      ops.pi_x.mat * ops.pi_x.mat + ops.pi_y.mat * ops.pi_y.mat;

  std::vector<ResidualEntry> entries;
  entries.push_back({"[X, Y] - i l_B^2",
                     residual(ops.X.mat * ops.Y.mat - ops.Y.mat * ops.X.mat -
                              im * l_B2 * eye)});
  entries.push_back({"L_mech_gc - (2/omega) H",
                     residual(ops.l_mech_gc.mat -
                              (2.0 / cfg.omega) * ops.H.mat)});
  entries.push_back({"L_ps_gc - (1/omega) H",
                     residual(ops.l_ps_gc.mat - ops.H.mat / cfg.omega)});
  entries.push_back(
      {"L_can_gc - ((2/omega) H - L_can_origin/2 - (eB/4) r^2)",
       residual(ops.l_can_gc.mat -
                ((2.0 / cfg.omega) * ops.H.mat -
                 0.5 * ops.l_can_origin.mat - 0.25 * eB * ops.r2.mat))});
  entries.push_back({"L_can_origin - (r_c^2 - R^2)/(2 l_B^2)",
                     residual(ops.l_can_origin.mat -
                              (ops.r_c2.mat - ops.R2.mat) / (2.0 * l_B2))});
  entries.push_back({"r_c^2 - l_B^2 (2 a'a + 1)",
                     residual(ops.r_c2.mat -
                              l_B2 * (2.0 * number_a + eye))});
  entries.push_back({"R^2 - l_B^2 (2 b'b + 1)",
                     residual(ops.R2.mat - l_B2 * (2.0 * number_b + eye))});
  entries.push_back({"L_ps_origin - (L_mech_origin - (eB/2) r^2)",
                     residual(ops.l_ps_origin.mat -
                              (ops.l_mech_origin.mat -
                               0.5 * eB * ops.r2.mat))});
  entries.push_back(
      {"(x - X) Pi_y - (y - Y) Pi_x - Pi^2/(eB)",
       residual(detail::sym(dx, ops.pi_y.mat) - detail::sym(dy, ops.pi_x.mat) -
                pi2 / eB)});
  return entries;
}

inline std::vector<ResidualEntry> hermiticity_checks(const OperatorSet& ops) {
  std::vector<ResidualEntry> entries;
  for (const TruncatedOperator* op : ops.hermitian_members()) {
    entries.push_back({op->label, hermiticity_residual(*op)});
  }
  return entries;
}

// Diagonal matrix element <n_a, n_b| M |n_a, n_b> with n_a = n, n_b = n - m.
// The state must sit at least `margin` shells below the cutoff or the
// truncated matrix element is untrustworthy; margin 2 covers every operator
// in the set (all are at most quadratic in the ladders).
inline double expectation_fock(const QuantumNumbers& qn, const OperatorSet& ops,
                               const TruncatedOperator& op, int margin = 2) {
  validate_quantum_numbers(qn.n, qn.m);
  const int n_a = ops.basis.mode_a(qn);
  const int n_b = ops.basis.mode_b(qn);
  if (n_a + n_b > ops.basis.cutoff - margin) {
    throw std::domain_error(
        "state (n=" + std::to_string(qn.n) + ", m=" + std::to_string(qn.m) +
        ") lies outside the interior block at cutoff " +
        std::to_string(ops.basis.cutoff) + ", margin " +
        std::to_string(margin) + "; truncation unsafe");
  }
  return op.mat(ops.basis.index(n_a, n_b), ops.basis.index(n_a, n_b)).real();
}

inline double expectation_fock(const QuantumNumbers& qn, const OperatorSet& ops,
                               const OamSpec& spec, int margin = 2) {
  return expectation_fock(qn, ops, ops.oam(spec), margin);
}

// Ascending eigenvalues of H restricted to the interior block; exact
// spectrum {omega (k + 1/2)} with one copy per admissible n_b.
inline Eigen::VectorXd interior_spectrum(const OperatorSet& ops,
                                         const InteriorProjector& proj) {
  const auto idx = proj.indices(ops.basis);
  const int rank = static_cast<int>(idx.size());
  ComplexMatrix block(rank, rank);
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) {
      block(i, j) = ops.H.mat(idx[i], idx[j]);
    }
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(block,
                                                      Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("interior spectrum eigensolve failed");
  }
  return solver.eigenvalues();
}

}  // namespace landau::fock
