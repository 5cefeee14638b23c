#ifndef SUPERLEIBNIZ_REPORT_HPP
#define SUPERLEIBNIZ_REPORT_HPP

#include <string>

#include "superleibniz/io.hpp"

namespace superleibniz {

/// Outcome of a command. Both renderings are produced from `data` alone.
struct Report {
  std::string command;
  int exit_code = 0;  ///< 0 success, 1 mathematical failure, 2 usage or parse error
  Json data = Json::object();

  std::string status() const { return exit_code == 0 ? "pass" : exit_code == 1 ? "fail" : "error"; }
};

/// {"command", "data", "exit_code", "status"} in canonical form.
std::string render_json(const Report& report);

/// Indented key/value listing; arrays of flat objects become aligned tables.
std::string render_text(const Report& report);

/// Text form of a JSON scalar as it appears in render_text.
std::string scalar_text(const Json& value);

}  // namespace superleibniz

#endif  // SUPERLEIBNIZ_REPORT_HPP
