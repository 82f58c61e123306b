#include <cmath>
#include <stdexcept>
#include <string>

#include "zred/verify.hpp"

namespace zred {

double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("x and y differ in length");
  if (x.size() < 2) throw std::invalid_argument("need at least two points");
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] <= 0) throw std::invalid_argument("x must be positive");
    if (k > 0 && x[k] <= x[k - 1]) throw std::invalid_argument("x must be strictly increasing");
    if (y[k] <= 0) throw std::domain_error("degenerate fit: zero count at point " + std::to_string(k));
  }
  const double count = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double lx = std::log(x[k]);
    const double ly = std::log(y[k]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

ScalingFit scaling_exponent(Family family, Algorithm algorithm,
                            const std::vector<std::size_t>& sizes, Representation rep) {
  if (sizes.size() < 4) throw std::invalid_argument("need at least four sizes");
  ScalingFit fit;
  fit.sizes = sizes;
  std::vector<double> x, y;
  for (std::size_t n : sizes) {
    const auto m = generate({family, n, 0});
    const auto r = reduce(m, algorithm, rep);
    fit.bitflips.push_back(r.stats.bitflips);
    x.push_back(static_cast<double>(n));
    y.push_back(static_cast<double>(r.stats.bitflips));
  }
  fit.slope = fit_loglog_slope(x, y);
  return fit;
}

const std::vector<ExpectedSlope>& expected_separations() {
  static const std::vector<ExpectedSlope> table = {
      {Family::k1, Algorithm::retrospective, 1.0}, {Family::k1, Algorithm::twist, 2.0},
      {Family::k1, Algorithm::swap, 2.0},          {Family::k2, Algorithm::twist, 1.0},
      {Family::k2, Algorithm::swap, 1.0},          {Family::k2, Algorithm::retrospective, 2.0},
      {Family::k3, Algorithm::swap, 1.0},          {Family::k3, Algorithm::twist, 2.0},
      {Family::k4, Algorithm::twist, 1.0},         {Family::k4, Algorithm::swap, 2.0},
  };
  return table;
}

}  // namespace zred
