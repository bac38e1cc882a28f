#pragma once

#include <string>

#include "demoplan/kin/chain.hpp"

namespace demoplan::kin {

/// Loads a chain description: base and tip offsets as xyz plus roll/pitch/yaw,
/// joints with name, axis, origin and limits. Throws std::runtime_error with
/// the filename on missing or malformed input.
KinematicChain load_chain(const std::string& filename);
KinematicChain parse_chain(const std::string& text);

}  // namespace demoplan::kin
