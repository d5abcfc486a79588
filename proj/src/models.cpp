#include "anosov/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace anosov {

namespace {

bool finite(double x) { return std::isfinite(x); }

double wrap_unit(double x) { return x - std::floor(x); }

Eigen::Vector2d wrap_fiber(const Eigen::Vector2d& p) {
  return {wrap_unit(p.x()), wrap_unit(p.y())};
}

// Apply the integer matrix k times (A for k > 0, A^{-1} for k < 0) in
// standard coordinates, wrapping after each application so values stay O(1).
Eigen::Vector2d apply_matrix_power(const TorusMatrix& tm, Eigen::Vector2d p, long k) {
  const Eigen::Matrix2d a = tm.entries.cast<double>();
  Eigen::Matrix2d ainv;
  ainv << tm.entries(1, 1), -tm.entries(0, 1), -tm.entries(1, 0), tm.entries(0, 0);
  for (long i = 0; i < k; ++i) p = wrap_fiber(a * p);
  for (long i = 0; i > k; --i) p = wrap_fiber(ainv * p);
  return p;
}

Eigen::Vector2d eigenvector_for(const Eigen::Matrix2i& m, double lambda) {
  const double a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  Eigen::Vector2d v;
  if (b != 0.0) {
    v << b, lambda - a;
  } else if (c != 0.0) {
    v << lambda - d, c;
  } else {
    // Diagonal integer matrices with det 1 have |trace| <= 2; unreachable
    // after the hyperbolicity check.
    v << 1.0, 0.0;
  }
  v.normalize();
  if (v.x() < 0.0 || (v.x() == 0.0 && v.y() < 0.0)) v = -v;
  return v;
}

}  // namespace

TorusMatrix make_torus_matrix(int a, int b, int c, int d) {
  const long det = static_cast<long>(a) * d - static_cast<long>(b) * c;
  if (det != 1) throw NonHyperbolic("torus matrix must have determinant 1");
  const int tr = a + d;
  if (std::abs(tr) <= 2) throw NonHyperbolic("torus matrix must have |trace| > 2");

  TorusMatrix tm;
  tm.entries << a, b, c, d;
  const double disc = std::sqrt(static_cast<double>(tr) * tr - 4.0);
  tm.eigenvalue_large = (std::abs(tr) + disc) / 2.0;
  tm.eigenvalue_small = 1.0 / tm.eigenvalue_large;
  const double sign = tr > 0 ? 1.0 : -1.0;
  tm.lambda_unstable = sign * tm.eigenvalue_large;
  tm.lambda_stable = sign * tm.eigenvalue_small;
  tm.eigenvector_stable = eigenvector_for(tm.entries, tm.lambda_stable);
  tm.eigenvector_unstable = eigenvector_for(tm.entries, tm.lambda_unstable);
  tm.eigenbasis.col(0) = tm.eigenvector_stable;
  tm.eigenbasis.col(1) = tm.eigenvector_unstable;
  tm.eigenbasis_inv = tm.eigenbasis.inverse();
  return tm;
}

SuspensionModel make_suspension(int a, int b, int c, int d, double roof) {
  if (!finite(roof)) throw NonFinite("roof must be finite");
  if (roof <= 0.0) throw IncompatibleSpec("roof must be positive");
  SuspensionModel m;
  m.matrix = make_torus_matrix(a, b, c, d);
  m.roof = roof;
  m.h = std::log(m.matrix.eigenvalue_large) / roof;
  return m;
}

Psl2LocalModel make_psl2() { return Psl2LocalModel{}; }

double model_rate(const Model& m) {
  return std::visit([](const auto& mm) { return mm.h; }, m);
}

ModelPoint normalize(const SuspensionModel& m, const Eigen::Vector2d& xi_raw, double theta_raw) {
  if (!finite(xi_raw.x()) || !finite(xi_raw.y()) || !finite(theta_raw))
    throw NonFinite("suspension coordinates must be finite");

  const Eigen::Vector2d p = to_standard(m, xi_raw);
  if (p.x() >= 0.0 && p.x() < 1.0 && p.y() >= 0.0 && p.y() < 1.0 && theta_raw >= 0.0 &&
      theta_raw < m.roof) {
    return ModelPoint{SuspensionPoint{xi_raw, theta_raw}};  // already canonical
  }

  double kf = std::floor(theta_raw / m.roof);
  long k = static_cast<long>(kf);
  double theta = theta_raw - kf * m.roof;
  if (theta < 0.0) {
    theta += m.roof;
    k -= 1;
  } else if (theta >= m.roof) {
    theta -= m.roof;
    k += 1;
  }
  const Eigen::Vector2d fiber = apply_matrix_power(m.matrix, wrap_fiber(p), k);
  return ModelPoint{SuspensionPoint{to_eigen(m, fiber), theta}};
}

ModelPoint normalize(const Psl2LocalModel&, const Eigen::Matrix2d& raw) {
  if (!raw.allFinite()) throw NonFinite("psl2 coordinates must be finite");
  const double det = raw.determinant();
  if (!finite(det) || det <= 0.0)
    throw OutOfChart("psl2 point must have positive determinant");
  return ModelPoint{Eigen::Matrix2d(raw / std::sqrt(det))};
}

ModelPoint normalize(const Model& m, const ModelPoint& raw) {
  if (is_suspension(m)) {
    const auto& sp = raw.susp();
    return normalize(std::get<SuspensionModel>(m), sp.xi, sp.theta);
  }
  return normalize(std::get<Psl2LocalModel>(m), raw.psl2());
}

ModelPoint suspension_point(const SuspensionModel& m, double xi_s, double xi_u, double theta) {
  return normalize(m, Eigen::Vector2d(xi_s, xi_u), theta);
}

ModelPoint psl2_point(const Eigen::Matrix2d& g) { return normalize(Psl2LocalModel{}, g); }

ModelPoint flow(const Model& m, const ModelPoint& x, double t) {
  if (!std::isfinite(t)) throw NonFinite("flow time must be finite");
  if (is_suspension(m)) {
    const auto& model = std::get<SuspensionModel>(m);
    const auto& sp = x.susp();
    const double tt = sp.theta + t;
    const double kf = std::floor(tt / model.roof);
    long k = static_cast<long>(kf);
    double theta = tt - kf * model.roof;
    if (theta < 0.0) {
      theta += model.roof;
      k -= 1;
    } else if (theta >= model.roof) {
      theta -= model.roof;
      k += 1;
    }
    if (k == 0) return ModelPoint{SuspensionPoint{sp.xi, theta}};
    const Eigen::Vector2d p = to_standard(model, sp.xi);
    const Eigen::Vector2d fiber = apply_matrix_power(model.matrix, wrap_fiber(p), k);
    return ModelPoint{SuspensionPoint{to_eigen(model, fiber), theta}};
  }
  const Eigen::Matrix2d& g = x.psl2();
  Eigen::Matrix2d a_t;
  a_t << std::exp(t / 2.0), 0.0, 0.0, std::exp(-t / 2.0);
  return ModelPoint{Eigen::Matrix2d(g * a_t)};
}

double dist(const Model& m, const ModelPoint& x, const ModelPoint& y) {
  if (is_suspension(m)) {
    const auto& model = std::get<SuspensionModel>(m);
    const auto& a = x.susp();
    const auto& b = y.susp();
    const Eigen::Vector2d pa = to_standard(model, a.xi);
    const Eigen::Vector2d pb = to_standard(model, b.xi);
    // Representatives of y through the roof gluing: (p, theta) ~ (A p, theta - c).
    const long K = std::max<long>(1, static_cast<long>(std::ceil(1.0 / model.roof))) + 1;
    double best = std::numeric_limits<double>::infinity();
    for (long k = -K; k <= K; ++k) {
      const Eigen::Vector2d pk = apply_matrix_power(model.matrix, pb, k);
      const double dtheta = a.theta - (b.theta - static_cast<double>(k) * model.roof);
      Eigen::Vector2d d = pa - pk;
      d.x() -= std::round(d.x());
      d.y() -= std::round(d.y());
      best = std::min(best, std::sqrt(d.squaredNorm() + dtheta * dtheta));
    }
    return best;
  }
  const Eigen::Matrix2d n = sl2_inverse(x.psl2()) * y.psl2();
  return (n - Eigen::Matrix2d::Identity()).norm();
}

SuspensionPoint lift_near(const SuspensionModel& m, const SuspensionPoint& base,
                          const SuspensionPoint& target) {
  SuspensionPoint out = target;
  Eigen::Vector2d p = to_standard(m, target.xi);
  const double dth = target.theta - base.theta;
  if (dth > m.roof / 2.0) {
    out.theta -= m.roof;
    p = apply_matrix_power(m.matrix, p, 1);
  } else if (dth < -m.roof / 2.0) {
    out.theta += m.roof;
    p = apply_matrix_power(m.matrix, p, -1);
  }
  const Eigen::Vector2d pb = to_standard(m, base.xi);
  Eigen::Vector2d d = p - pb;
  d.x() -= std::round(d.x());
  d.y() -= std::round(d.y());
  out.xi = base.xi + to_eigen(m, d);
  return out;
}

}  // namespace anosov
