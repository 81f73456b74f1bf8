#pragma once

#include <array>

#include "gravxs/four_vector.hpp"

namespace gravxs {

// On-shell 2->2 elastic configuration in the rest frame of the heavy
// particle: light particle (mass m) comes in along +z with energy E and
// scatters to polar angle theta, azimuth phi; the heavy particle (mass M)
// starts at rest and recoils.
struct KinematicState {
  double m = 0.0;        // light mass, GeV
  double M = 0.0;        // heavy mass, GeV
  double E = 0.0;        // incoming light energy, GeV
  double theta = 0.0;    // polar scattering angle, radians, (0, pi]
  double phi = 0.0;      // azimuth, radians
  double E_prime = 0.0;  // outgoing light energy, GeV
  FourVector p_i, p_f, q_i, q_f;
};

// beta = |p|/E for an on-shell momentum
inline double speedBeta(double energy, double mass) {
  return std::sqrt((energy - mass) * (energy + mass)) / energy;
}

// Largest lab-frame scattering angle with an elastic solution. Equals pi
// for m <= M; smaller than pi/2 when the projectile outweighs the target.
double maxScatteringAngle(double E, double m, double M);

// Outgoing light-particle energy E' from energy-momentum conservation.
// Requires E > m > 0, M > 0, theta in (0, pi]; the returned root lies in
// [m, E] and is continuous with E' -> E as theta -> 0.
double scatteredEnergy(double E, double m, double M, double theta);

// Outgoing kinetic energy T = E' - m evaluated without cancellation; well
// conditioned even when the light particle nearly stops (m ~ M backscatter
// can drive T orders of magnitude below E'). Complements energyTransfer:
// one of T and E - E' is always well represented in doubles.
double scatteredKineticEnergy(double E, double m, double M, double theta);

// Energy transfer E - E' evaluated without cancellation; well conditioned
// even when E - E' is many orders of magnitude below E. E_prime must be
// the scatteredEnergy root for the same (E, m, M, theta).
double energyTransfer(double E, double E_prime, double m, double M,
                      double theta);

KinematicState buildState(double E, double m, double M, double theta,
                          double phi = 0.0);

// (p_f - p_i)^2; strictly negative for theta > 0
double mandelstamT(const KinematicState& state);

// All four momenta boosted by the same pure boost, order {p_i, p_f, q_i, q_f}.
std::array<FourVector, 4> lorentzBoost(const KinematicState& state,
                                       const Vector3& velocity);

}  // namespace gravxs
