#include <cmath>
#include <numbers>
#include <random>

#include "memturing/errors.hpp"
#include "memturing/model.hpp"
#include "memturing/spectrum.hpp"
#include "memturing/stability.hpp"

namespace memturing::model {

namespace {

/// Uniform in [-1, 1) from the top 53 bits; independent of the standard
/// library's distribution implementation.
double symmetric_unit(std::mt19937_64& gen) {
  return 2.0 * static_cast<double>(gen() >> 11) * 0x1.0p-53 - 1.0;
}

}  // namespace

InitialState initial_data(InitialPreset preset, const fdm::Grid& grid, const ModelParams& params,
                          const InitialDataOptions& options) {
  InitialState s;
  s.u.resize(grid.size());
  s.v.resize(grid.size());

  switch (preset) {
    case InitialPreset::Wave: {
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const double wave = std::sin(4.0 * std::numbers::pi * grid.centers[i] / grid.L) / 5.0;
        const bool left = grid.is_left(i);
        s.u[i] = (left ? 7.0 / 15.0 : 1.0 / 5.0) + wave;
        s.v[i] = (left ? 1.0 / 3.0 : 3.0 / 5.0) - wave;
      }
      break;
    }
    case InitialPreset::ConstantPlusNoise: {
      const SteadyState eq = steady_state(options.mass, params.eps, params.alpha);
      std::mt19937_64 gen(options.seed);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        s.u[i] = eq.u_bar + options.noise_amplitude * symmetric_unit(gen);
        s.v[i] = eq.v_bar + options.noise_amplitude * symmetric_unit(gen);
      }
      break;
    }
    case InitialPreset::EigenmodePerturbation: {
      if (options.mode < 1) throw DomainError("eigenmode-perturbation: mode index must be >= 1");
      const SteadyState eq = steady_state(options.mass, params.eps, params.alpha);
      const auto modes = spectrum::eigenvalues(params, options.mode);
      const spectrum::EigenMode& mode = modes.back();
      const auto dir = stability::mode_eigenvector(mode.eta, params.theta, eq.jac);
      const std::vector<double> z = spectrum::sample(mode, grid, params);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        s.u[i] = eq.u_bar + options.delta * z[i] * dir.a;
        s.v[i] = eq.v_bar + options.delta * z[i] * dir.b;
      }
      break;
    }
  }
  return s;
}

}  // namespace memturing::model
