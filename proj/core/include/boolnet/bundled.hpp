#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "boolnet/network.hpp"

namespace boolnet {

/// A rule file shipped with the library together with its sidecar directives.
struct BundledNetwork {
  std::string_view name;
  std::string_view description;
  std::string_view rules;
  std::vector<std::string_view> outputs;
};

/// net31, net29, net14, net09, net09_fitted, in that order.
const std::vector<BundledNetwork>& bundled_networks();

bool is_bundled(std::string_view name);

/// Loads a bundled network with its declared outputs and no pins.
Network load_bundled(std::string_view name);

}  // namespace boolnet
