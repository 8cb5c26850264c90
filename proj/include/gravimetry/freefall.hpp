#pragma once

// Free fall in the uniform potential U(z) = m g z.
//
// The linear potential only displaces the mean; the covariance evolves as
// for a free particle under S = [[1, tau/m], [0, 1]].

#include "gravimetry/gaussian.hpp"

namespace gravimetry {

struct EvolutionSpec {
  double tau;  // interrogation time, >= 0
  ProbeParams params;
};

/// Symplectic free-particle map for time tau.
Mat2 free_symplectic(double tau, double mass);

/// Throws InvalidArgumentError if spec.tau < 0.
GaussianState evolve(const GaussianState& state, const EvolutionSpec& spec);

/// d(mean)/dg = (-tau²/2, -m tau); independent of the state and of g.
Vec2 mean_sensitivity(const EvolutionSpec& spec);

/// Squeezed vacuum prepared at t = 0 and evolved for tau.
GaussianState evolved_probe(const SqueezeSpec& squeeze, const ProbeParams& params, double tau);

}  // namespace gravimetry
