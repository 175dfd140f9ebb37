#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "proxforce/geometry.hpp"
#include "record.hpp"

namespace proxforce::cli {

enum ExitCode : int { kExitOk = 0, kExitValidationFailed = 1, kExitUsage = 2 };

enum class Physics { Gravity, Yukawa };
enum class Configuration { SpherePlate, PlatePlate, Layered };

/// A fully parsed single-evaluation request, all values SI.
struct Job {
  Physics physics = Physics::Yukawa;
  Configuration configuration = Configuration::SpherePlate;
  std::vector<std::string> methods;

  double rho1 = 0.0;
  double rho2 = 0.0;
  double d1 = 0.0;  // +inf for an infinitely thick plate
  double d2 = 0.0;
  double radius = 0.0;
  double a = 0.0;
  double alpha = 0.0;
  double lambda = 0.0;
  double G = kNewtonG;
  double rtol = 1e-10;

  // Coated bodies: inner (primed) and outer (double-primed) layers.
  std::optional<std::string> preset;
  double rho1_inner = 0.0, rho1_outer = 0.0, rho2_inner = 0.0, rho2_outer = 0.0;
  double d1_inner = 0.0, d1_outer = 0.0, d2_inner = 0.0, d2_outer = 0.0;

  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  std::optional<double> lateral_cutoff;
  bool stratify = false;
  unsigned jobs = 1;

  std::string command() const;
};

/// Parses a `gravity ...` or `yukawa ...` argument list into a Job.
/// Throws DomainError on missing or malformed parameters.
Job parse_job(const std::vector<std::string>& args, unsigned default_jobs);

/// Evaluates every requested method, in the order given. Throws
/// PreconditionViolation / DomainError for inapplicable requests; numerical
/// failures of one method become a record with an error status.
std::vector<RunRecord> evaluate(const Job& job);

/// Entry point without the program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Jobs default: PROXFORCE_JOBS environment variable, else 1.
unsigned default_jobs_from_env();

}  // namespace proxforce::cli
