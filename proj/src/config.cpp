#include "dca/config.hpp"

#include <sstream>

namespace dca {

Config& config() {
  static Config c;
  return c;
}

std::string Config::hash() const {
  std::ostringstream os;
  os << vector_enum_cap << "|" << subspace_enum_cap << "|" << lattice_node_cap << "|"
     << dfs_node_cap << "|" << gr_dim_cap << "|" << threads << "|" << seed;
  std::uint64_t h = 1469598103934665603ull;
  for (char ch : os.str()) {
    h ^= (unsigned char)ch;
    h *= 1099511628211ull;
  }
  std::ostringstream hex;
  hex << std::hex << h;
  return hex.str();
}

std::vector<std::pair<int, int>> default_battery(bool odd_only) {
  if (odd_only) return {{3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}};
  return {{3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}};
}

}  // namespace dca
