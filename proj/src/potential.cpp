#include "vnweyl/potential.hpp"

#include <cmath>
#include <stdexcept>

namespace vnweyl {

namespace {
// Morse parameters, fixed by the scenario definitions.
constexpr double kMorseDepth = 20.0;
constexpr double kMorseRate = 0.16;
}  // namespace

PotentialModel PotentialModel::harmonic() {
  PotentialModel m;
  m.kind = PotentialKind::harmonic;
  return m;
}

PotentialModel PotentialModel::quartic(double beta) {
  PotentialModel m;
  m.kind = PotentialKind::quartic;
  m.beta = beta;
  return m;
}

PotentialModel PotentialModel::gaussian_barrier() {
  PotentialModel m;
  m.kind = PotentialKind::gaussian_barrier;
  return m;
}

PotentialModel PotentialModel::morse() {
  PotentialModel m;
  m.kind = PotentialKind::morse;
  return m;
}

PotentialModel PotentialModel::user(std::function<double(double)> value,
                                    std::function<double(double)> d1,
                                    std::function<double(double)> d3) {
  PotentialModel m;
  m.kind = PotentialKind::user;
  m.user_value = std::move(value);
  m.user_d1 = std::move(d1);
  m.user_d3 = std::move(d3);
  if (!m.user_value) throw std::invalid_argument("user potential: value map is required");
  return m;
}

PotentialModel PotentialModel::from_name(const std::string& name, double beta) {
  if (name == "harmonic") return harmonic();
  if (name == "quartic") return quartic(beta);
  if (name == "gaussian_barrier") return gaussian_barrier();
  if (name == "morse") return morse();
  throw std::invalid_argument("unknown potential preset: " + name);
}

std::string PotentialModel::name() const {
  switch (kind) {
    case PotentialKind::harmonic: return "harmonic";
    case PotentialKind::quartic: return "quartic";
    case PotentialKind::gaussian_barrier: return "gaussian_barrier";
    case PotentialKind::morse: return "morse";
    case PotentialKind::user: return "user";
  }
  return "?";
}

double PotentialModel::value(double x) const {
  switch (kind) {
    case PotentialKind::harmonic: return 0.5 * x * x;
    case PotentialKind::quartic: return 0.5 * x * x + 0.25 * beta * x * x * x * x;
    case PotentialKind::gaussian_barrier: return std::exp(-0.5 * x * x);
    case PotentialKind::morse: {
      double u = 1.0 - std::exp(-kMorseRate * x);
      return kMorseDepth * u * u;
    }
    case PotentialKind::user: return user_value(x);
  }
  return 0.0;
}

double PotentialModel::d1(double x) const {
  switch (kind) {
    case PotentialKind::harmonic: return x;
    case PotentialKind::quartic: return x + beta * x * x * x;
    case PotentialKind::gaussian_barrier: return -x * std::exp(-0.5 * x * x);
    case PotentialKind::morse: {
      double e = std::exp(-kMorseRate * x);
      return 2.0 * kMorseDepth * kMorseRate * (1.0 - e) * e;
    }
    case PotentialKind::user:
      if (!user_d1) throw std::runtime_error("user potential: first derivative not provided");
      return user_d1(x);
  }
  return 0.0;
}

double PotentialModel::d3(double x) const {
  switch (kind) {
    case PotentialKind::harmonic: return 0.0;
    case PotentialKind::quartic: return 6.0 * beta * x;
    case PotentialKind::gaussian_barrier: return (3.0 * x - x * x * x) * std::exp(-0.5 * x * x);
    case PotentialKind::morse: {
      // V''' = 2 D r^3 e^{-rx} (1 - 4 e^{-rx})
      double e = std::exp(-kMorseRate * x);
      double r3 = kMorseRate * kMorseRate * kMorseRate;
      return 2.0 * kMorseDepth * r3 * e * (1.0 - 4.0 * e);
    }
    case PotentialKind::user:
      if (!user_d3) throw std::runtime_error("user potential: third derivative not provided");
      return user_d3(x);
  }
  return 0.0;
}

double eval_potential(const PotentialModel& model, double x, int order) {
  switch (order) {
    case 0: return model.value(x);
    case 1: return model.d1(x);
    case 3: return model.d3(x);
    default: throw std::invalid_argument("eval_potential: order must be 0, 1 or 3");
  }
}

std::vector<double> discrete_force(const PotentialModel& model, const Grid1D& grid) {
  const int nx = grid.nx;
  const double dx = grid.dx();
  std::vector<double> force(nx);
  for (int j = 0; j < nx; ++j) {
    const double xp = grid.center(j) + dx;  // valid one ghost cell past each edge
    const double xm = grid.center(j) - dx;
    force[j] = -(model.value(xp) - model.value(xm)) / (2.0 * dx);
  }
  return force;
}

}  // namespace vnweyl
