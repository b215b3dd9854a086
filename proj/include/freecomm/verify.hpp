#pragma once

// Verification suites over a HallTower, each a list of named pass/fail checks.
//
//   homomorphism  embed(k, g) o embed(k, h) ~ embed(k, gh)
//   injectivity   embed(k, g) is not the identity for g != e
//   compat        embed(k, ell(g)) = restrict(embed(k-1, g), H_k), k >= 1
//   stallings     H_0 membership against the exponent-sum oracle, fold order
//                 independence, basis round trips
//   hall          finite group embeddings, conjugators, m_map equivariance
//
// Levels 0 and 1 are exhaustive; level 2 draws `samples` seeded elements.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "freecomm/hall.hpp"

namespace freecomm {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct RunReport {
  std::string suite;
  std::size_t attempted = 0;
  std::size_t passed = 0;
  double seconds = 0;
  std::string config_digest;
  // Failed checks, sorted by name.
  std::vector<CheckResult> failures;

  bool ok() const noexcept { return passed == attempted; }
  // "<suite>: <passed>/<attempted> passed in <t>s (config <digest>)"
  std::string summary() const;
};

struct VerifyOptions {
  // Only this level; all levels up to the tower's max level when unset.
  std::optional<std::size_t> level;
  std::size_t samples = 50;
  std::uint64_t seed = 1;
};

const std::vector<std::string>& suite_names();

// Throws unknown_suite, or level_too_large for a level above the maximum.
RunReport run_suite(const HallTower& hall, std::string_view suite, const VerifyOptions& options);

}  // namespace freecomm
