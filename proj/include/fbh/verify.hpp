// The acceptance suite: one check per reproduced statement.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fbh/io.hpp"

namespace fbh::verify {

struct Options {
  std::uint64_t seed = 20260516;
  int threads = 1;
  /// Swap one Pasch edge for (2,2,2) so that the Pasch check must fail.
  bool mutant = false;
};

struct CheckReport {
  std::string id;
  std::string claim;
  io::Json parameters;
  io::Json expected;
  io::Json got;
  bool pass = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::vector<std::string> failures;  // first few failing cases
};

/// In running order: pasch, nnn, furedi, eta-psi, con, hall, constructions,
/// zeta, hilbert, cake, dinterval.
const std::vector<std::string>& check_ids();

/// Runs one check; a check that exceeds its time limit fails.
CheckReport run_check(const std::string& id, const Options& options);

io::Json to_json(const CheckReport& r);

}  // namespace fbh::verify
