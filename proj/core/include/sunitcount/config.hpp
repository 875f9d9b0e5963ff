#pragma once

#include <string>

#include "sunitcount/bounds.hpp"
#include "sunitcount/counting.hpp"

namespace sunit {

/// Tool-level defaults, loadable from a `key = value` text file.
struct ToolConfig {
  BoundConstants consts;
  Integer height_cap = 1000000;
  CountGuards guards;
};

/// Parses `key = value` lines; '#' starts a comment; blank lines are fine.
/// Unknown keys are an error. See the README for the key list.
ToolConfig load_config(const std::string& path);

/// Loads the file named by $SUNITCOUNT_CONFIG when set, defaults otherwise.
ToolConfig load_default_config();

}  // namespace sunit
