#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "vcu/family.hpp"

namespace vcu {

/// Text family format:
///
///   # comment
///   n=5
///   -          <- the empty set
///   1,3        <- ascending 1-based elements
///
/// Sets are written ordered by (size, mask). Duplicate set lines are rejected.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

std::string format_subset(SubsetMask s);
std::string serialize_family(const SetFamily& f);
SetFamily parse_family(std::string_view text);

SetFamily read_family_file(const std::filesystem::path& path);
void write_family_file(const std::filesystem::path& path, const SetFamily& f);

}  // namespace vcu
