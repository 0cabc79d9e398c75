#pragma once

#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace nhssh::cli {

// Parses an angle given either in radians ("1.5708", "-2") or as a multiple
// of pi ("pi", "0.5pi", "-pi", "+.25pi"). Whitespace around the number and
// between the factor and "pi" is tolerated. Throws std::invalid_argument on
// anything else; the caller maps that to a usage error.
inline double parse_angle(const std::string& text) {
  constexpr double kPi = 3.14159265358979323846;
  std::size_t a = 0, b = text.size();
  while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
  std::string s = text.substr(a, b - a);
  if (s.empty()) throw std::invalid_argument("empty angle");

  double scale = 1.0;
  bool has_pi = false;
  if (s.size() >= 2 && (s.compare(s.size() - 2, 2, "pi") == 0 ||
                        s.compare(s.size() - 2, 2, "PI") == 0 ||
                        s.compare(s.size() - 2, 2, "Pi") == 0)) {
    has_pi = true;
    scale = kPi;
    s.erase(s.size() - 2);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.pop_back();
    if (s.empty() || s == "+") return kPi;
    if (s == "-") return -kPi;
  }

  const char* begin = s.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end != begin + s.size())
    throw std::invalid_argument("cannot parse angle: '" + text +
                                "' (expected radians or a multiple of pi "
                                "like '0.5pi')");
  (void)has_pi;
  return value * scale;
}

}  // namespace nhssh::cli
