#pragma once

#include <string>

#include "zpair/arrangement.hpp"

#ifndef ZPAIR_DATA_DIR
#error "ZPAIR_DATA_DIR must point at the shipped example files"
#endif

namespace fixtures {

inline std::string data_path(const std::string& name) {
  return std::string(ZPAIR_DATA_DIR) + "/" + name;
}

inline zpair::Arrangement load(const std::string& name) {
  return zpair::load_file(data_path(name));
}

}  // namespace fixtures
