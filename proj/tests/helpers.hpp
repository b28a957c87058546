#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "gmak/network.hpp"
#include "gmak/structure.hpp"

namespace gmak::test {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline Network load_fixture(const std::string& name,
                            const std::vector<std::pair<std::string, Rat>>& overrides = {}) {
    return parse_network(read_file(std::string(GMAK_FIXTURE_DIR) + "/" + name), overrides);
}

} // namespace gmak::test
