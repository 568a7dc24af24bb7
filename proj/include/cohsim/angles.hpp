// Copyright 2026 The cohsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

namespace cohsim {

// Parses an angle expression: a decimal literal ("0.5", "-1.2e-3") or a pi
// fraction ("pi", "-pi/2", "3*pi/4", "2*pi").  Throws std::invalid_argument
// on anything else.
double parse_angle(const std::string& text);

// Formats an angle, preferring exact pi fractions ("pi/2", "-3*pi/4",
// "3*pi/2") when the value is k*pi/m for small integers, otherwise a decimal
// with enough digits to round-trip visually ("%.12g").
std::string format_angle(double value);

}  // namespace cohsim
