#pragma once

#include <string>

#include "greenseq/io.hpp"

namespace corpus {

inline greenseq::QuiverFile load(const std::string& name) {
  return greenseq::parse_quiver_file(std::string(GREENSEQ_DATA_DIR) + "/" + name);
}

inline greenseq::Quiver quiver(const std::string& name) { return load(name).quiver; }

} // namespace corpus
