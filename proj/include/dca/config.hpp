#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dca {

// Thrown when an enumeration would exceed a configured cap.  Callers must
// treat this as "answer not computed", never as "answer is zero".
struct cap_exceeded : std::runtime_error {
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a verification that is expected to hold fails hard
// (inconsistent propagation, cross-field disagreement, ...).
struct verify_error : std::runtime_error {
  explicit verify_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a deterministic procedure cannot decide within its caps
// (e.g. indecomposability with a huge endomorphism ring).
struct undecided_error : std::runtime_error {
  explicit undecided_error(const std::string& what) : std::runtime_error(what) {}
};

struct Config {
  // Enumeration caps.  All enumerations fail loudly instead of truncating.
  long long vector_enum_cap = 1'000'000;   // q^d objects (vectors, End elements, Ext classes)
  long long subspace_enum_cap = 1'000'000; // lines / hyperplanes / subspaces
  long long lattice_node_cap = 2'000'000;  // full submodule-lattice closure
  long long dfs_node_cap = 5'000'000;      // guided submodule search
  int gr_dim_cap = 8;                      // total dimension for GR recursion

  int threads = 1;
  std::uint64_t seed = 0x5eed0fa11;

  std::string hash() const;
};

Config& config();  // process-wide configuration

// Field battery defaults.  q >= 3 throughout; even q excluded for E8.
std::vector<std::pair<int, int>> default_battery(bool odd_only);

}  // namespace dca
