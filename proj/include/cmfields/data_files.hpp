#pragma once

#include <filesystem>
#include <string>

namespace cmf::data {

/// Locate a bundled data file.  CMFIELDS_DATA_DIR overrides the search;
/// otherwise ./data and ancestor directories are probed.
std::filesystem::path find_data_file(const std::string& name);

}  // namespace cmf::data
