// Unit-suffixed quantity parsing and fixed-precision formatting.
//
// This is the only place where non-SI units exist.  Accepted suffixes:
//   frequency: THz, GHz, MHz, kHz, Hz          -> Hz
//   length:    um (or µm), nm, mm, cm, m       -> m
//   energy:    eV, meV, J                      -> J
//   time:      ps, fs, ns, us, s               -> s
// A bare number parses as the SI base unit of the expected kind.
// Numbers are printed with 9 significant digits (%.9g); format_quantity
// re-emits the canonical suffix so that parse(format(x)) == x at that
// precision.

#pragma once

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thzdra/constants.hpp"
#include "thzdra/errors.hpp"

namespace thzdra::units {

enum class Kind { Frequency, Length, Energy, Time, Dimensionless };

namespace detail {

struct Suffix {
  const char* text;
  double scale;
};

inline const std::vector<Suffix>& suffixes(Kind kind) {
  static const std::vector<Suffix> frequency = {
      {"THz", 1e12}, {"GHz", 1e9}, {"MHz", 1e6}, {"kHz", 1e3}, {"Hz", 1.0}};
  static const std::vector<Suffix> length = {
      {"um", 1e-6}, {"\xc2\xb5m", 1e-6}, {"nm", 1e-9},
      {"mm", 1e-3}, {"cm", 1e-2},        {"m", 1.0}};
  static const std::vector<Suffix> energy = {
      {"meV", 1e-3 * phys::electron_volt}, {"eV", phys::electron_volt}, {"J", 1.0}};
  static const std::vector<Suffix> time = {
      {"fs", 1e-15}, {"ps", 1e-12}, {"ns", 1e-9}, {"us", 1e-6}, {"s", 1.0}};
  static const std::vector<Suffix> none = {};
  switch (kind) {
    case Kind::Frequency: return frequency;
    case Kind::Length: return length;
    case Kind::Energy: return energy;
    case Kind::Time: return time;
    default: return none;
  }
}

inline const char* kind_name(Kind kind) {
  switch (kind) {
    case Kind::Frequency: return "frequency";
    case Kind::Length: return "length";
    case Kind::Energy: return "energy";
    case Kind::Time: return "time";
    default: return "value";
  }
}

}  // namespace detail

// Formats with 9 significant digits, locale-independent.
inline std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

// Parses "3THz", "0.8 eV", "20um", "1e-6" ... into the SI value.
inline double parse_quantity(std::string_view text, Kind kind) {
  std::string s(text);
  // trim
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty())
    throw ParseError(std::string("empty ") + detail::kind_name(kind) + " value");

  const char* begin = s.c_str();
  char* end = nullptr;
  double value = std::strtod(begin, &end);
  if (end == begin)
    throw ParseError("cannot parse " + std::string(detail::kind_name(kind)) +
                     " from '" + s + "'");
  std::string rest(end);
  while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front())))
    rest.erase(rest.begin());
  if (rest.empty()) return value;  // bare number: SI base unit

  for (const auto& suffix : detail::suffixes(kind)) {
    if (rest == suffix.text) return value * suffix.scale;
  }
  throw ParseError("unknown " + std::string(detail::kind_name(kind)) +
                   " suffix '" + rest + "' in '" + s + "'");
}

// Emits value with the canonical suffix for its kind (the suffix whose scale
// keeps the mantissa closest to the everyday range used by the CLI).
inline std::string format_quantity(double value, Kind kind) {
  switch (kind) {
    case Kind::Frequency: return format_number(value / 1e12) + "THz";
    case Kind::Length:    return format_number(value / 1e-6) + "um";
    case Kind::Energy:    return format_number(value / phys::electron_volt) + "eV";
    case Kind::Time:      return format_number(value / 1e-12) + "ps";
    default:              return format_number(value);
  }
}

}  // namespace thzdra::units
