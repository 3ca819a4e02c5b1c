#pragma once

#include <map>
#include <string>
#include <vector>

namespace frackansa {

// Flat "key = value" file; '#' starts a comment, blank lines ignored.
// Unknown keys and malformed lines throw std::runtime_error with the line
// number.
std::map<std::string, std::string> read_key_values(
    const std::string& path, const std::vector<std::string>& allowed_keys);

}  // namespace frackansa
