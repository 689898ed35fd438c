#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace grodiag::selftest {

struct Outcome {
  std::string name;
  bool pass = false;
  std::string detail; // first failure, or a short success note
};

// The randomized verification suites, seeded and deterministic. Each
// outcome corresponds to one documented guarantee of the library.
std::vector<Outcome> run_all(std::uint64_t seed);

bool all_passed(const std::vector<Outcome>& outcomes);

} // namespace grodiag::selftest
