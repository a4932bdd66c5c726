#include "pnc/json_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "pnc/error.hpp"

namespace pnc::json_io {

namespace {

std::vector<double> number_array(const json& j, const char* what) {
  if (!j.is_array()) throw InvalidArgument(std::string(what) + " must be an array of numbers");
  std::vector<double> out;
  for (const json& x : j) {
    if (!x.is_number()) throw InvalidArgument(std::string(what) + " must be an array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

int dimension(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer()) {
    throw InvalidArgument("expected an object with an integer \"n\"");
  }
  return j.at("n").get<int>();
}

void write(std::ostringstream& os, const json& j, int indent, int depth) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    os << '\n' << std::string(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ',';
        first = false;
        newline(depth + 1);
        os << json(it.key()).dump() << (indent < 0 ? ":" : ": ");
        write(os, it.value(), indent, depth + 1);
      }
      newline(depth);
      os << '}';
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::none_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); });
      os << '[';
      bool first = true;
      for (const json& x : j) {
        if (!first) os << (flat && indent >= 0 ? ", " : ",");
        first = false;
        if (!flat) newline(depth + 1);
        write(os, x, indent, depth + 1);
      }
      if (!flat) newline(depth);
      os << ']';
      return;
    }
    case json::value_t::number_float:
      os << format_double(j.get<double>());
      return;
    default:
      os << j.dump();
  }
}

}  // namespace

PlanarNC value_from_json(const json& j) {
  const int n = dimension(j);
  if (!j.contains("coeffs")) throw InvalidArgument("value needs \"coeffs\"");
  return PlanarNC(n, number_array(j.at("coeffs"), "coeffs"));
}

json value_to_json(const PlanarNC& u) {
  json c = json::array();
  for (double x : u.coeffs()) c.push_back(x);
  return json{{"n", u.dim()}, {"coeffs", c}};
}

NPolynomial poly_from_json(const json& j) {
  const int n = dimension(j);
  if (!j.contains("coeffs") || !j.at("coeffs").is_array()) {
    throw InvalidArgument("polynomial needs a \"coeffs\" array");
  }
  std::vector<PlanarNC> a;
  for (const json& c : j.at("coeffs")) {
    if (c.is_object()) {
      a.push_back(value_from_json(c));
      if (a.back().dim() != n) throw DimensionMismatch(n, a.back().dim());
    } else {
      a.emplace_back(n, number_array(c, "polynomial coefficient"));
    }
  }
  return NPolynomial(n, std::move(a));
}

std::vector<PlanarNC> path_from_json(const json& j) {
  if (!j.is_array()) throw InvalidArgument("path must be a JSON array of values");
  std::vector<PlanarNC> out;
  for (const json& x : j) out.push_back(value_from_json(x));
  return out;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("invalid JSON: ") + e.what());
  }
}

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  std::string s(buf, r.ptr);
  // Keep the token a JSON float so it parses back as a double.
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

std::string dump(const json& j, int indent) {
  std::ostringstream os;
  write(os, j, indent, 0);
  return os.str();
}

}  // namespace pnc::json_io
