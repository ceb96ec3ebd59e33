#pragma once

#include <span>
#include <string_view>

// Implemented by the build-generated shipped_data.cpp.
namespace modjamo::shipped {

struct File {
  std::string_view name;
  std::string_view data;
};

std::span<const File> rule_files();
std::string_view default_layout();

}  // namespace modjamo::shipped
