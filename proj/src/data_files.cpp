#include "cmfields/data_files.hpp"

#include <cstdlib>
#include <stdexcept>

namespace cmf::data {

namespace fs = std::filesystem;

fs::path find_data_file(const std::string& name) {
    if (const char* env = std::getenv("CMFIELDS_DATA_DIR")) {
        fs::path p = fs::path(env) / name;
        if (fs::exists(p)) return p;
        throw std::runtime_error("data file not found in CMFIELDS_DATA_DIR: " + name);
    }
    fs::path dir = fs::current_path();
    for (int depth = 0; depth < 6; ++depth) {
        fs::path p = dir / "data" / name;
        if (fs::exists(p)) return p;
        if (!dir.has_parent_path() || dir.parent_path() == dir) break;
        dir = dir.parent_path();
    }
    throw std::runtime_error("data file not found: " + name +
                             " (set CMFIELDS_DATA_DIR)");
}

}  // namespace cmf::data
