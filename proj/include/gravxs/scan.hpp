#pragma once

#include <cstdint>
#include <string>

#include "gravxs/cross_section.hpp"

namespace gravxs {

enum class ScanMode { AngleScan, EnergyScan, LimitCompare, SelfTest };
enum class OutputUnits { Gev, Millibarn };

// 1 GeV^-2 = 0.3894 mb
inline constexpr double kMillibarnPerGev2 = 0.3894;

struct ScanRequest {
  ScanMode mode = ScanMode::AngleScan;
  double m = 1.0;   // GeV
  double M = 10.0;  // GeV
  double E = 5.0;   // GeV
  CouplingConfig coupling;
  AngularGrid grid{M_PI / 36.0, M_PI, 64, GridSpacing::UniformTheta};
  double theta = M_PI / 2.0;  // fixed angle for energy scans / limit tables
  double E_lo = 0.0, E_hi = 0.0;
  int n_energy = 0;
  OutputUnits units = OutputUnits::Gev;
  double ratio_band = 0.01;  // limit-compare flag threshold on |ratio - 1|
  std::uint64_t seed = 20260826;
  std::string output_path;  // empty = stdout
};

// Full round-trip precision, locale independent.
std::string formatDouble(double x);

// CSV over the angular grid; header
// theta_rad,E_prime_gev,t_gev2,dsigma_full,dsigma_mott_like,
// dsigma_rutherford,dsigma_ultrarel,interaction_strength
std::string angleScanCsv(const ScanRequest& req);

// Same columns over [E_lo, E_hi] at fixed theta, first column energy_gev.
std::string energyScanCsv(const ScanRequest& req);

// Aligned table of limit ratios across a log-spaced E/M grid and a beta
// grid at the requested theta; ratios outside the band are flagged '*',
// undefined ratios are printed as such instead of dividing by zero.
std::string limitCompareTable(const ScanRequest& req);

}  // namespace gravxs
