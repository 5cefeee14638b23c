#include "superleibniz/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace superleibniz {

namespace {

Json envelope(const Report& report) {
  return {{"command", report.command}, {"status", report.status()}, {"exit_code", report.exit_code}, {"data", report.data}};
}

bool is_scalar(const Json& v) { return !v.is_object() && !v.is_array(); }

bool is_flat_record(const Json& v) {
  return v.is_object() && std::all_of(v.begin(), v.end(), [](const Json& x) { return is_scalar(x); });
}

void render(const Json& v, int indent, std::ostringstream& out);

void render_table(const Json& rows, int indent, std::ostringstream& out) {
  std::set<std::string> key_set;
  for (const auto& row : rows)
    for (const auto& [k, _] : row.items()) key_set.insert(k);
  const std::vector<std::string> keys(key_set.begin(), key_set.end());
  std::vector<std::vector<std::string>> cells{keys};
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (const auto& k : keys) line.push_back(row.contains(k) ? scalar_text(row.at(k)) : "-");
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(keys.size(), 0);
  for (const auto& line : cells)
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  for (const auto& line : cells) {
    std::string text(static_cast<std::size_t>(indent), ' ');
    for (std::size_t c = 0; c < line.size(); ++c) {
      text += line[c];
      if (c + 1 < line.size()) text += std::string(width[c] - line[c].size() + 2, ' ');
    }
    out << text << "\n";
  }
}

void render_field(const std::string& key, const Json& v, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (is_scalar(v)) {
    out << pad << key << ": " << scalar_text(v) << "\n";
  } else if (v.empty()) {
    out << pad << key << ": (none)\n";
  } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return is_scalar(x); })) {
    std::string joined;
    for (const auto& x : v) joined += (joined.empty() ? "" : ", ") + scalar_text(x);
    out << pad << key << ": " << joined << "\n";
  } else if (v.is_array() && std::all_of(v.begin(), v.end(), is_flat_record)) {
    out << pad << key << ":\n";
    render_table(v, indent + 2, out);
  } else {
    out << pad << key << ":\n";
    render(v, indent + 2, out);
  }
}

void render(const Json& v, int indent, std::ostringstream& out) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) render_field(k, x, indent, out);
    return;
  }
  for (std::size_t i = 0; i < v.size(); ++i) render_field("[" + std::to_string(i) + "]", v[i], indent, out);
}

}  // namespace

std::string scalar_text(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_null()) return "-";
  return value.dump();
}

std::string render_json(const Report& report) { return dump_canonical(envelope(report)); }

std::string render_text(const Report& report) {
  std::ostringstream out;
  out << "command: " << report.command << "\n";
  out << "status: " << report.status() << "\n";
  out << "exit_code: " << report.exit_code << "\n";
  render(report.data, 0, out);
  return out.str();
}

}  // namespace superleibniz
