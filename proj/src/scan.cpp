#include "gravxs/scan.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "gravxs/kinematics.hpp"

namespace gravxs {

namespace {

std::vector<double> gridAngles(const AngularGrid& g) {
  std::vector<double> thetas(g.n_points);
  if (g.spacing == GridSpacing::UniformTheta) {
    const double h = (g.theta_max - g.theta_min) / (g.n_points - 1);
    for (int i = 0; i < g.n_points; ++i) thetas[i] = g.theta_min + i * h;
  } else {
    const double u_hi = std::cos(g.theta_min);
    const double u_lo = std::cos(g.theta_max);
    const double h = (u_hi - u_lo) / (g.n_points - 1);
    for (int i = 0; i < g.n_points; ++i) {
      const double u = std::min(std::max(u_hi - i * h, -1.0), 1.0);
      thetas[i] = std::acos(u);
    }
  }
  thetas.back() = g.theta_max;
  return thetas;
}

std::string scanRow(const ScanRequest& req, double theta, bool lead_energy) {
  const double xs_unit =
      req.units == OutputUnits::Millibarn ? kMillibarnPerGev2 : 1.0;
  const KinematicState s = buildState(req.E, req.m, req.M, theta);
  const double beta = speedBeta(req.E, req.m);
  const double full =
      dsigmaEnergyForm(s.E, s.E_prime, theta, s.m, s.M, req.coupling).value;
  const double mott = mottLikeLimit(beta, theta, req.M, req.coupling).value;
  const double ruth =
      rutherfordLimit(beta, theta, req.M, req.coupling.G).value;
  const double ultra =
      ultrarelativisticLimit(req.E, theta, req.M, req.coupling).value;
  const double strength = interactionStrength(s, req.coupling);

  std::string row;
  if (lead_energy) row += formatDouble(req.E) + ",";
  row += formatDouble(theta) + "," + formatDouble(s.E_prime) + "," +
         formatDouble(mandelstamT(s)) + "," + formatDouble(full * xs_unit) +
         "," + formatDouble(mott * xs_unit) + "," +
         formatDouble(ruth * xs_unit) + "," + formatDouble(ultra * xs_unit) +
         "," + formatDouble(strength) + "\n";
  return row;
}

}  // namespace

std::string formatDouble(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string angleScanCsv(const ScanRequest& req) {
  std::string csv =
      "theta_rad,E_prime_gev,t_gev2,dsigma_full,dsigma_mott_like,"
      "dsigma_rutherford,dsigma_ultrarel,interaction_strength\n";
  for (double theta : gridAngles(req.grid)) {
    csv += scanRow(req, theta, false);
  }
  return csv;
}

std::string energyScanCsv(const ScanRequest& req) {
  if (!(req.E_lo > req.m) || !(req.E_hi > req.E_lo) || req.n_energy < 2) {
    throw std::domain_error(
        "energyScanCsv: require m < E_lo < E_hi and n >= 2");
  }
  std::string csv =
      "energy_gev,theta_rad,E_prime_gev,t_gev2,dsigma_full,dsigma_mott_like,"
      "dsigma_rutherford,dsigma_ultrarel,interaction_strength\n";
  const double ratio = std::pow(req.E_hi / req.E_lo, 1.0 / (req.n_energy - 1));
  ScanRequest node = req;
  for (int i = 0; i < req.n_energy; ++i) {
    node.E = i + 1 == req.n_energy ? req.E_hi : req.E_lo * std::pow(ratio, i);
    csv += scanRow(node, req.theta, true);
  }
  return csv;
}

std::string limitCompareTable(const ScanRequest& req) {
  const double theta = req.theta;
  char line[256];
  std::string table;
  std::snprintf(line, sizeof(line), "# limit ratios at theta = %.9g rad, band = %g\n",
                theta, req.ratio_band);
  table = line;
  std::snprintf(line, sizeof(line), "%-10s %-8s %-14s %-14s %-14s %-14s\n",
                "E_over_M", "beta", "full/mott", "mott/ruth", "full/ultra",
                "ultra/mott1");
  table += line;

  auto ratioCell = [&](double num, double den) -> std::string {
    char cell[40];
    if (den == 0.0) return "undef         ";
    const double r = num / den;
    std::snprintf(cell, sizeof(cell), "%.6e%s", r,
                  std::abs(r - 1.0) > req.ratio_band ? "*" : " ");
    std::string s = cell;
    while (s.size() < 14) s += ' ';
    return s;
  };

  const double e_over_m_grid[] = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5};
  const double beta_grid[] = {1e-3, 1e-2, 1e-1, 0.5, 0.9, 0.99, 1.0};
  const double m = 1.0;
  for (double eom : e_over_m_grid) {
    // ultra -> mott(beta=1) chain depends on E/M and theta only.
    const double ultra_chain =
        ultrarelativisticLimit(eom, theta, 1.0, req.coupling).value;
    const double mott1 = mottLikeLimit(1.0, theta, 1.0, req.coupling).value;
    for (double beta : beta_grid) {
      std::snprintf(line, sizeof(line), "%-10.1e %-8.3g ", eom, beta);
      table += line;
      if (beta < 1.0) {
        const double E = m / std::sqrt((1.0 - beta) * (1.0 + beta));
        const double M = E / eom;
        const double e_prime = scatteredEnergy(E, m, M, theta);
        const double full =
            dsigmaEnergyForm(E, e_prime, theta, m, M, req.coupling).value;
        const double mott = mottLikeLimit(beta, theta, M, req.coupling).value;
        const double ruth = rutherfordLimit(beta, theta, M, req.coupling.G).value;
        const double ultra =
            ultrarelativisticLimit(E, theta, M, req.coupling).value;
        table += ratioCell(full, mott) + " " + ratioCell(mott, ruth) + " " +
                 ratioCell(full, ultra) + " " + ratioCell(ultra_chain, mott1);
      } else {
        // beta = 1 needs a massless beam; only the ultra/mott chain exists.
        std::snprintf(line, sizeof(line), " (mott_like=%.6e)", mott1);
        table += "n/a            n/a            n/a            " +
                 ratioCell(ultra_chain, mott1) + line;
      }
      table += "\n";
    }
  }
  return table;
}

}  // namespace gravxs
