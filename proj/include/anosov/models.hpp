#pragma once

#include <Eigen/Dense>
#include <variant>

#include "anosov/errors.hpp"

namespace anosov {

// Chart conventions
// -----------------
// Suspension model: the mapping torus of a hyperbolic automorphism A of the
// 2-torus with constant roof c.  Fiber points are stored in the eigenbasis of
// A, so stable/unstable leaves are coordinate lines; the canonical chart has
// standard (lattice) coordinates in [0,1)^2 and roof coordinate theta in
// [0,c).  The gluing is (p, c) ~ (A p, 0) and the expansion rate is
// h = log(mu)/c with mu the large eigenvalue.
//
// psl2 model: a local chart of SL(2,R) with determinant-1 matrices as points.
// The flow is right multiplication by diag(e^{t/2}, e^{-t/2}); parametrized
// stable leaves are right cosets of the upper unipotents, unstable leaves of
// the lower unipotents; the rate is h = 1.

inline constexpr double kDefaultChartRadius = 0.25;
inline constexpr double kDeterminantTolerance = 1e-12;

// ---------------------------------------------------------------------------
// Torus automorphism

struct TorusMatrix {
  Eigen::Matrix2i entries = Eigen::Matrix2i::Identity();
  double eigenvalue_large = 0.0;  // mu > 1, spectral radius
  double eigenvalue_small = 0.0;  // 1/mu
  // Signed eigenvalues on the stored eigenvectors (negative for trace < -2).
  double lambda_stable = 0.0;
  double lambda_unstable = 0.0;
  Eigen::Vector2d eigenvector_stable = Eigen::Vector2d::Zero();
  Eigen::Vector2d eigenvector_unstable = Eigen::Vector2d::Zero();
  Eigen::Matrix2d eigenbasis = Eigen::Matrix2d::Identity();  // cols [v_s v_u]
  Eigen::Matrix2d eigenbasis_inv = Eigen::Matrix2d::Identity();

  int trace() const { return entries(0, 0) + entries(1, 1); }
};

// Throws NonHyperbolic unless det = 1 and |trace| > 2.
TorusMatrix make_torus_matrix(int a, int b, int c, int d);

// ---------------------------------------------------------------------------
// Models

struct SuspensionModel {
  TorusMatrix matrix;
  double roof = 1.0;  // constant return time c > 0
  double h = 0.0;     // log(eigenvalue_large) / roof
};

struct Psl2LocalModel {
  double h = 1.0;
};

using Model = std::variant<SuspensionModel, Psl2LocalModel>;

SuspensionModel make_suspension(int a, int b, int c, int d, double roof);
Psl2LocalModel make_psl2();

inline bool is_suspension(const Model& m) {
  return std::holds_alternative<SuspensionModel>(m);
}
inline const SuspensionModel& as_suspension(const Model& m) {
  if (!is_suspension(m)) throw NotSuspension("model is not a suspension");
  return std::get<SuspensionModel>(m);
}
inline const Psl2LocalModel& as_psl2(const Model& m) {
  return std::get<Psl2LocalModel>(m);
}

// Expansion rate h of the model's Marcus parametrization.
double model_rate(const Model& m);

// ---------------------------------------------------------------------------
// Points

struct SuspensionPoint {
  Eigen::Vector2d xi = Eigen::Vector2d::Zero();  // (xi_s, xi_u) eigencoords
  double theta = 0.0;                            // roof coordinate in [0,c)
};

struct ModelPoint {
  std::variant<SuspensionPoint, Eigen::Matrix2d> coords;

  bool is_suspension() const {
    return std::holds_alternative<SuspensionPoint>(coords);
  }
  const SuspensionPoint& susp() const { return std::get<SuspensionPoint>(coords); }
  const Eigen::Matrix2d& psl2() const { return std::get<Eigen::Matrix2d>(coords); }
};

// Fiber coordinate changes.
inline Eigen::Vector2d to_standard(const SuspensionModel& m, const Eigen::Vector2d& xi) {
  return m.matrix.eigenbasis * xi;
}
inline Eigen::Vector2d to_eigen(const SuspensionModel& m, const Eigen::Vector2d& p) {
  return m.matrix.eigenbasis_inv * p;
}

// Exact inverse of a determinant-1 2x2 matrix (adjugate).
inline Eigen::Matrix2d sl2_inverse(const Eigen::Matrix2d& m) {
  Eigen::Matrix2d r;
  r << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return r;
}

// Reduction to the canonical chart.  Already-canonical inputs are returned
// unchanged bit for bit.  Throws NonFinite on NaN/inf coordinates.
ModelPoint normalize(const SuspensionModel& m, const Eigen::Vector2d& xi_raw, double theta_raw);
ModelPoint normalize(const Psl2LocalModel& m, const Eigen::Matrix2d& raw);
ModelPoint normalize(const Model& m, const ModelPoint& raw);

// Convenience constructors (normalizing).
ModelPoint suspension_point(const SuspensionModel& m, double xi_s, double xi_u, double theta);
ModelPoint psl2_point(const Eigen::Matrix2d& g);

// ---------------------------------------------------------------------------
// Flow and metric

// Time-t map of the model flow.  Suspension: advance theta, applying the
// matrix to the fiber at each roof crossing.  psl2: right-multiply by
// diag(e^{t/2}, e^{-t/2}).
ModelPoint flow(const Model& m, const ModelPoint& x, double t);

// Distance.  Suspension: flat product metric, minimized over lattice
// translates and roof-gluing representatives.  psl2: left-invariant
// ||x^{-1} y - I||_F (symmetric for determinant-1 matrices).
double dist(const Model& m, const ModelPoint& x, const ModelPoint& y);

// A flow derived from a model by a constant time rescale: flow_t = model
// flow at time rate*t.  rate = 1 is the model flow itself.
struct Flow {
  Model model;
  double rate = 1.0;
};

inline ModelPoint flow_at(const Flow& f, const ModelPoint& x, double t) {
  return flow(f.model, x, f.rate * t);
}
inline double flow_rate(const Flow& f) { return f.rate * model_rate(f.model); }

// Representative of `target` nearest to `base`: roof-gluing applied at most
// once, fiber lifted to the nearest lattice translate.  Coordinates of the
// result are raw (not reduced to the canonical chart).
SuspensionPoint lift_near(const SuspensionModel& m, const SuspensionPoint& base,
                          const SuspensionPoint& target);

}  // namespace anosov
