#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace hypersint::cli {

using Value = std::variant<std::int64_t, double, bool, std::string>;
using Meta = nlohmann::ordered_json;

struct Table {
  Meta meta = Meta::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;

  void add(std::vector<Value> row);
};

enum class Format { json, csv };

std::string render(const Table& t, Format f);
std::string format_double(double v);

// write to a temporary file next to path, then rename; "-" or empty writes to stdout
void write_atomic(const std::string& path, const std::string& content);

}  // namespace hypersint::cli
