#pragma once

#include <string>

namespace rwg {

/// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double value);

/// Architecture descriptors in file names: ':' becomes '-'.
std::string file_safe(std::string name);

}  // namespace rwg
