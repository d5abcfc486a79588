#pragma once

#include <functional>

#include "anosov/models.hpp"

namespace anosov {

// Marcus-parametrized stable/unstable flows.  The contract is the pair of
// commutation identities
//
//     h+_s o f_t = f_t o h+_{s e^{h t}},    h-_u o f_t = f_t o h-_{u e^{-h t}},
//
// exact in closed form on both models.  On the suspension the parametrization
// is eigencoordinate displacement scaled by mu^{theta/c}, which is consistent
// across the roof gluing; on psl2 it is right multiplication by unipotents.

// Stable parametrized flow.  Suspension: xi_s += s * mu^{theta/roof}.
// psl2: right-multiply by [[1, s], [0, 1]].
ModelPoint h_plus(const Model& m, const ModelPoint& x, double s);

// Unstable parametrized flow.  Suspension: xi_u += u * mu^{-theta/roof}.
// psl2: right-multiply by [[1, 0], [u, 1]].
ModelPoint h_minus(const Model& m, const ModelPoint& x, double u);

struct MarcusChart {
  Flow flow;
  double h = 0.0;  // commutation rate of the chart's flow
};

// Throws NonOrientable for suspensions with trace < -2 (the gluing reverses
// the eigenline orientations, so no globally consistent parametrization
// exists without passing to a double cover).
MarcusChart make_chart(const Flow& f);

// The triple of the decomposition target = h-_{t3} g_{t2} h+_{t1} (base),
// with t2 measured in the time of the decomposing flow.
struct LocalTimes {
  double t1 = 0.0;  // stable Marcus parameter
  double t2 = 0.0;  // flow time
  double t3 = 0.0;  // unstable Marcus parameter
};

// Unique local decomposition of `target` relative to `base`.
// Suspension: closed-form solve in lifted eigencoordinates.  psl2: the
// upper-unipotent * diagonal * lower-unipotent factorization of
// base^{-1} target.  Throws OutOfChart if dist(base,target) >= chart_radius
// or the factorization leaves the chart.
LocalTimes su_decompose(const Flow& f, const ModelPoint& base, const ModelPoint& target,
                        double chart_radius = kDefaultChartRadius);

// h-_{t3} g_{t2} h+_{t1} (base) for the given flow.
ModelPoint su_recompose(const Flow& f, const ModelPoint& base, const LocalTimes& lt);

// Local product bracket: the unique point of W^s_eps(x) \cap W^{cu}_eps(y).
ModelPoint bracket(const Model& m, const ModelPoint& x, const ModelPoint& y,
                   double chart_radius = kDefaultChartRadius);

// Stable holonomy H^s_{x,y}(xp) = [xp, y] for y on the local stable leaf of
// x and xp on the local center-unstable leaf of x.  Throws NotOnLeaf if y is
// not on W^s(x) at the given tolerance, OutOfChart as for bracket.
ModelPoint stable_holonomy(const Model& m, const ModelPoint& x, const ModelPoint& y,
                           const ModelPoint& xp, double chart_radius = kDefaultChartRadius,
                           double leaf_tolerance = 1e-9);

// |t2| of the decomposition of h+_{s_s}(h-_{s_u}(x)) relative to x: the flow
// displacement obstructing the local su-rectangle from closing up.  Zero iff
// the stable and unstable foliations are jointly integrable at this scale.
double joint_integrability_defect(const Model& m, const ModelPoint& x, double s_u, double s_s,
                                  double chart_radius = kDefaultChartRadius);

// Max commutation defect of the two Marcus identities over random samples;
// used by the verification suites.
struct ChartDefect {
  double h_plus_defect = 0.0;
  double h_minus_defect = 0.0;
  double max() const { return h_plus_defect > h_minus_defect ? h_plus_defect : h_minus_defect; }
};

class Sampler;
ChartDefect commutation_defect(const MarcusChart& chart, Sampler& sampler, int n_samples,
                               double t_max = 5.0, double s_max = 1.0);

// Local times of a foliation equivalence: the unique (t1,t2,t3) with
// phi(f_t(x)) = h-_{t3} g_{t2} h+_{t1} (phi(x)), where f is the source flow
// and the decomposition runs in the chart of g.
template <typename MapFn>
LocalTimes local_times(const MarcusChart& chart_g, const Flow& source, MapFn&& phi,
                       const ModelPoint& x, double t,
                       double chart_radius = kDefaultChartRadius) {
  const ModelPoint base = phi(x);
  const ModelPoint target = phi(flow_at(source, x, t));
  return su_decompose(chart_g.flow, base, target, chart_radius);
}

}  // namespace anosov
