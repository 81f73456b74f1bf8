#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gravxs/scan.hpp"
#include "gravxs/selftest.hpp"

namespace {

int writeOutput(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open --out path '" << path << "'\n";
    return 1;
  }
  out << text;
  return out.good() ? 0 : 1;
}

void addPhysicsFlags(CLI::App* cmd, gravxs::ScanRequest& req) {
  cmd->add_option("--m-gev", req.m, "light particle mass, GeV")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--M-gev", req.M, "heavy particle mass, GeV")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--E-gev", req.E, "incoming light energy, GeV")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--G", req.coupling.G, "Newton constant, GeV^-2")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--g2", req.coupling.g_squared,
                  "dimensionless coupling g^2 (default 4*pi)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--units", [&req](const CLI::results_t& vals) {
        if (vals[0] == "gev") req.units = gravxs::OutputUnits::Gev;
        else if (vals[0] == "millibarn") req.units = gravxs::OutputUnits::Millibarn;
        else return false;
        return true;
      }, "output units: gev | millibarn");
  cmd->add_option("--out", req.output_path, "output file (default stdout)");
  cmd->add_option("--seed", req.seed, "RNG seed for seeded reports");
}

void addGridFlags(CLI::App* cmd, gravxs::ScanRequest& req) {
  cmd->add_option("--theta-min", req.grid.theta_min, "radians, > 0")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--theta-max", req.grid.theta_max, "radians, <= pi");
  cmd->add_option("--n", req.grid.n_points, "grid points")
      ->check(CLI::Range(2, 100000000));
  cmd->add_option("--spacing", [&req](const CLI::results_t& vals) {
        if (vals[0] == "uniform_theta")
          req.grid.spacing = gravxs::GridSpacing::UniformTheta;
        else if (vals[0] == "uniform_cos_theta")
          req.grid.spacing = gravxs::GridSpacing::UniformCosTheta;
        else return false;
        return true;
      }, "uniform_theta | uniform_cos_theta");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tree-level gravitational two-fermion scattering"};
  app.require_subcommand(1);
  gravxs::ScanRequest req;

  CLI::App* angle = app.add_subcommand(
      "angle-scan", "tabulate cross-sections over a theta grid (CSV)");
  addPhysicsFlags(angle, req);
  addGridFlags(angle, req);

  CLI::App* energy = app.add_subcommand(
      "energy-scan", "tabulate cross-sections over an energy range (CSV)");
  addPhysicsFlags(energy, req);
  energy->add_option("--E-lo", req.E_lo, "lowest beam energy, GeV");
  energy->add_option("--E-hi", req.E_hi, "highest beam energy, GeV");
  energy->add_option("--n", req.n_energy, "number of energies")
      ->check(CLI::Range(2, 100000000));
  energy->add_option("--theta", req.theta, "fixed scattering angle, radians");

  CLI::App* limits = app.add_subcommand(
      "limit-compare", "table of asymptotic-limit ratios");
  addPhysicsFlags(limits, req);
  limits->add_option("--theta", req.theta, "scattering angle, radians");
  limits->add_option("--band", req.ratio_band,
                     "flag ratios with |r - 1| above this band");

  CLI::App* selftest = app.add_subcommand(
      "selftest", "run the full invariant suite with a fixed seed");
  selftest->add_option("--seed", req.seed, "RNG seed");
  selftest->add_option("--out", req.output_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (angle->parsed()) {
      return writeOutput(gravxs::angleScanCsv(req), req.output_path);
    }
    if (energy->parsed()) {
      return writeOutput(gravxs::energyScanCsv(req), req.output_path);
    }
    if (limits->parsed()) {
      return writeOutput(gravxs::limitCompareTable(req), req.output_path);
    }
    const auto results = gravxs::runSelfTest(req.seed);
    const int rc = writeOutput(gravxs::formatSelfTestReport(results),
                               req.output_path);
    if (rc != 0) return rc;
    return gravxs::allPassed(results) ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
