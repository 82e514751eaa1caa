#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <unistd.h>

namespace hypersint::cli {

void Table::add(std::vector<Value> row) {
  if (row.size() != columns.size()) throw std::logic_error("row width does not match the header");
  rows.push_back(std::move(row));
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string csv_field(const Value& v) {
  if (auto p = std::get_if<std::int64_t>(&v)) return std::to_string(*p);
  if (auto p = std::get_if<double>(&v)) return format_double(*p);
  if (auto p = std::get_if<bool>(&v)) return *p ? "true" : "false";
  const std::string& s = std::get<std::string>(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

nlohmann::ordered_json json_value(const Value& v) {
  if (auto p = std::get_if<std::int64_t>(&v)) return *p;
  if (auto p = std::get_if<double>(&v)) {
    if (!std::isfinite(*p)) return nullptr;
    return *p;
  }
  if (auto p = std::get_if<bool>(&v)) return *p;
  return std::get<std::string>(v);
}

std::string compact(const nlohmann::ordered_json& j) {
  if (j.is_number_float()) return format_double(j.get<double>());
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ";" : "") + compact(j[i]);
    return s + "]";
  }
  return j.dump();
}

std::string meta_line(const Meta& m) {
  std::string s = "#";
  for (auto it = m.begin(); it != m.end(); ++it) {
    s += ' ';
    s += it.key();
    s += '=';
    s += compact(*it);
  }
  return s;
}

// nlohmann's layout with floats printed as %.17g
void emit(const nlohmann::ordered_json& j, int depth, std::string& out) {
  const std::string pad(2 * (depth + 1), ' '), close(2 * depth, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += pad + nlohmann::ordered_json(it.key()).dump() + ": ";
      emit(*it, depth + 1, out);
    }
    out += "\n" + close + "}";
  } else if (j.is_array()) {
    if (j.empty()) {
      out += "[]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += pad;
      emit(j[i], depth + 1, out);
    }
    out += "\n" + close + "]";
  } else if (j.is_number_float()) {
    const double v = j.get<double>();
    out += std::isfinite(v) ? format_double(v) : "null";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string render(const Table& t, Format f) {
  if (f == Format::json) {
    nlohmann::ordered_json doc;
    doc["meta"] = t.meta;
    doc["records"] = nlohmann::ordered_json::array();
    for (const auto& r : t.rows) {
      nlohmann::ordered_json rec;
      for (std::size_t i = 0; i < r.size(); ++i) rec[t.columns[i]] = json_value(r[i]);
      doc["records"].push_back(rec);
    }
    std::string out;
    emit(doc, 0, out);
    return out + "\n";
  }
  std::string out = meta_line(t.meta) + "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + t.columns[i];
  out += "\n";
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + csv_field(r[i]);
    out += "\n";
  }
  return out;
}

void write_atomic(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    std::cout.flush();
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    os << content;
    os.flush();
    if (!os) {
      os.close();
      fs::remove(tmp);
      throw std::runtime_error("write to " + tmp.string() + " failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot move output into place: " + ec.message());
  }
}

}  // namespace hypersint::cli
