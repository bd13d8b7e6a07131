#pragma once

// Locale-independent number formatting and a JSON writer that prints every
// floating value with 17 significant digits.

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include <cmath>
#include <ostream>
#include <sstream>
#include <string>

namespace bosonalg::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// %.17g; NaN and infinities as "nan", "inf", "-inf".
inline std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", x);
}

namespace internal {

inline void write_json(std::ostream& out, const Json& j, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out << ",\n";
        first = false;
        out << pad << Json(it.key()).dump() << ": ";
        write_json(out, it.value(), indent, depth + 1);
      }
      out << "\n" << close_pad << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      out << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) out << ",\n";
        out << pad;
        write_json(out, j[i], indent, depth + 1);
      }
      out << "\n" << close_pad << "]";
      return;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      // JSON has no literal for non-finite values.
      if (std::isfinite(x)) {
        out << format_double(x);
      } else {
        out << "null";
      }
      return;
    }
    default:
      out << j.dump();
  }
}

}  // namespace internal

inline void write_json(std::ostream& out, const Json& j) {
  internal::write_json(out, j, 2, 0);
  out << "\n";
}

inline std::string to_json_string(const Json& j) {
  std::ostringstream s;
  write_json(s, j);
  return s.str();
}

}  // namespace bosonalg::io
