#include "anosov/marcus.hpp"

#include <cmath>

#include "anosov/sampling.hpp"

namespace anosov {

namespace {

void require_orientable(const SuspensionModel& m) {
  if (m.matrix.lambda_unstable <= 0.0)
    throw NonOrientable(
        "Marcus parametrization needs orientable eigenline bundles; "
        "suspensions with trace < -2 reverse orientation at the gluing");
}

Eigen::Matrix2d upper_unipotent(double s) {
  Eigen::Matrix2d n;
  n << 1.0, s, 0.0, 1.0;
  return n;
}

Eigen::Matrix2d lower_unipotent(double u) {
  Eigen::Matrix2d n;
  n << 1.0, 0.0, u, 1.0;
  return n;
}

}  // namespace

ModelPoint h_plus(const Model& m, const ModelPoint& x, double s) {
  if (!std::isfinite(s)) throw NonFinite("stable parameter must be finite");
  if (is_suspension(m)) {
    const auto& model = std::get<SuspensionModel>(m);
    require_orientable(model);
    const auto& sp = x.susp();
    const double scale = std::pow(model.matrix.eigenvalue_large, sp.theta / model.roof);
    return normalize(model, Eigen::Vector2d(sp.xi.x() + s * scale, sp.xi.y()), sp.theta);
  }
  return ModelPoint{Eigen::Matrix2d(x.psl2() * upper_unipotent(s))};
}

ModelPoint h_minus(const Model& m, const ModelPoint& x, double u) {
  if (!std::isfinite(u)) throw NonFinite("unstable parameter must be finite");
  if (is_suspension(m)) {
    const auto& model = std::get<SuspensionModel>(m);
    require_orientable(model);
    const auto& sp = x.susp();
    const double scale = std::pow(model.matrix.eigenvalue_large, -sp.theta / model.roof);
    return normalize(model, Eigen::Vector2d(sp.xi.x(), sp.xi.y() + u * scale), sp.theta);
  }
  return ModelPoint{Eigen::Matrix2d(x.psl2() * lower_unipotent(u))};
}

MarcusChart make_chart(const Flow& f) {
  if (is_suspension(f.model)) require_orientable(std::get<SuspensionModel>(f.model));
  return MarcusChart{f, flow_rate(f)};
}

LocalTimes su_decompose(const Flow& f, const ModelPoint& base, const ModelPoint& target,
                        double chart_radius) {
  if (dist(f.model, base, target) >= chart_radius)
    throw OutOfChart("points are further apart than the chart radius");

  if (is_suspension(f.model)) {
    const auto& model = std::get<SuspensionModel>(f.model);
    require_orientable(model);
    const auto& b = base.susp();
    const SuspensionPoint t = lift_near(model, b, target.susp());
    const double mu = model.matrix.eigenvalue_large;
    LocalTimes lt;
    lt.t1 = (t.xi.x() - b.xi.x()) * std::pow(mu, -b.theta / model.roof);
    lt.t2 = (t.theta - b.theta) / f.rate;
    lt.t3 = (t.xi.y() - b.xi.y()) * std::pow(mu, t.theta / model.roof);
    return lt;
  }

  const Eigen::Matrix2d n = sl2_inverse(base.psl2()) * target.psl2();
  // n = [[1,t1],[0,1]] * diag(e^{tau/2}, e^{-tau/2}) * [[1,0],[t3,1]]
  // has n22 = e^{-tau/2}; the factorization leaves the chart when n22 <= 0.
  if (n(1, 1) <= 0.0) throw OutOfChart("unipotent-diagonal-unipotent factorization leaves the chart");
  LocalTimes lt;
  lt.t2 = -2.0 * std::log(n(1, 1)) / f.rate;
  lt.t1 = n(0, 1) / n(1, 1);
  lt.t3 = n(1, 0) / n(1, 1);
  return lt;
}

ModelPoint su_recompose(const Flow& f, const ModelPoint& base, const LocalTimes& lt) {
  return h_minus(f.model, flow_at(f, h_plus(f.model, base, lt.t1), lt.t2), lt.t3);
}

ModelPoint bracket(const Model& m, const ModelPoint& x, const ModelPoint& y,
                   double chart_radius) {
  const LocalTimes lt = su_decompose(Flow{m, 1.0}, x, y, chart_radius);
  return h_plus(m, x, lt.t1);
}

ModelPoint stable_holonomy(const Model& m, const ModelPoint& x, const ModelPoint& y,
                           const ModelPoint& xp, double chart_radius, double leaf_tolerance) {
  const LocalTimes lt = su_decompose(Flow{m, 1.0}, x, y, chart_radius);
  if (std::abs(lt.t2) + std::abs(lt.t3) > leaf_tolerance)
    throw NotOnLeaf("holonomy target is not on the local stable leaf of the base point");
  return bracket(m, xp, y, chart_radius);
}

double joint_integrability_defect(const Model& m, const ModelPoint& x, double s_u, double s_s,
                                  double chart_radius) {
  const ModelPoint corner = h_plus(m, h_minus(m, x, s_u), s_s);
  const LocalTimes lt = su_decompose(Flow{m, 1.0}, x, corner, chart_radius);
  return std::abs(lt.t2);
}

ChartDefect commutation_defect(const MarcusChart& chart, Sampler& sampler, int n_samples,
                               double t_max, double s_max) {
  ChartDefect d;
  const Model& m = chart.flow.model;
  for (int i = 0; i < n_samples; ++i) {
    const ModelPoint x = random_point(m, sampler);
    const double s = sampler.uniform(-s_max, s_max);
    const double t = sampler.uniform(-t_max, t_max);
    const double growth = std::exp(chart.h * t);

    const ModelPoint lhs_p = h_plus(m, flow_at(chart.flow, x, t), s);
    const ModelPoint rhs_p = flow_at(chart.flow, h_plus(m, x, s * growth), t);
    d.h_plus_defect = std::max(d.h_plus_defect, dist(m, lhs_p, rhs_p));

    const ModelPoint lhs_m = h_minus(m, flow_at(chart.flow, x, t), s);
    const ModelPoint rhs_m = flow_at(chart.flow, h_minus(m, x, s / growth), t);
    d.h_minus_defect = std::max(d.h_minus_defect, dist(m, lhs_m, rhs_m));
  }
  return d;
}

}  // namespace anosov
