#include "anosov/sampling.hpp"

namespace anosov {

ModelPoint random_point(const Model& m, Sampler& sampler) {
  if (is_suspension(m)) {
    const auto& model = std::get<SuspensionModel>(m);
    const Eigen::Vector2d p(sampler.unit(), sampler.unit());
    const double theta = sampler.uniform(0.0, model.roof);
    return normalize(model, to_eigen(model, p), theta);
  }
  // Chart-local psl2 points: unipotent * diagonal * unipotent with bounded
  // parameters.
  Eigen::Matrix2d lower, diag, upper;
  const double u = sampler.uniform(-0.5, 0.5);
  const double t = sampler.uniform(-0.5, 0.5);
  const double s = sampler.uniform(-0.5, 0.5);
  lower << 1.0, 0.0, u, 1.0;
  diag << std::exp(t / 2.0), 0.0, 0.0, std::exp(-t / 2.0);
  upper << 1.0, s, 0.0, 1.0;
  return normalize(std::get<Psl2LocalModel>(m), lower * diag * upper);
}

}  // namespace anosov
