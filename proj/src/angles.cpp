// Copyright 2026 The cohsim Authors
// SPDX-License-Identifier: Apache-2.0
#include "cohsim/angles.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cohsim {

namespace {
constexpr double kPi = std::numbers::pi;

// Strips ASCII whitespace from both ends.
std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool parse_integer(const std::string& s, long& out) {
  if (s.empty()) return false;
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (end != s.c_str() + s.size()) return false;
  out = v;
  return true;
}
}  // namespace

double parse_angle(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw std::invalid_argument("empty angle expression");

  const std::size_t pi_pos = t.find("pi");
  if (pi_pos == std::string::npos) {
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size()) {
      throw std::invalid_argument("bad angle expression: " + text);
    }
    return v;
  }

  // [-][k*]pi[/m]
  std::string head = trim(t.substr(0, pi_pos));
  std::string tail = trim(t.substr(pi_pos + 2));
  double sign = 1.0;
  if (!head.empty() && (head[0] == '-' || head[0] == '+')) {
    if (head[0] == '-') sign = -1.0;
    head = trim(head.substr(1));
  }
  long num = 1;
  if (!head.empty()) {
    if (head.back() != '*' ||
        !parse_integer(trim(head.substr(0, head.size() - 1)), num)) {
      throw std::invalid_argument("bad angle expression: " + text);
    }
  }
  long den = 1;
  if (!tail.empty()) {
    if (tail.front() != '/' || !parse_integer(trim(tail.substr(1)), den) ||
        den == 0) {
      throw std::invalid_argument("bad angle expression: " + text);
    }
  }
  return sign * static_cast<double>(num) * kPi / static_cast<double>(den);
}

std::string format_angle(double value) {
  if (value == 0.0) return "0";
  // Try k*pi/m for small denominators; smallest m wins.
  for (long m : {1, 2, 3, 4, 6, 8, 12, 16, 32}) {
    const double k_real = value * m / kPi;
    const double k_round = std::round(k_real);
    if (std::abs(k_round) < 0.5 || std::abs(k_round) > 64.0) continue;
    if (std::abs(k_real - k_round) > 1e-12 * std::max(1.0, std::abs(k_real))) {
      continue;
    }
    long k = static_cast<long>(k_round);
    std::string out;
    if (k < 0) {
      out += "-";
      k = -k;
    }
    if (k != 1) out += std::to_string(k) + "*";
    out += "pi";
    if (m != 1) out += "/" + std::to_string(m);
    return out;
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

}  // namespace cohsim
