#pragma once

#include <cstdint>
#include <string>

#include "opoly/checker.hpp"
#include "opoly/field.hpp"

namespace opoly {

/// "0x13"-style lowercase hex rendering of a polynomial bitmask.
std::string hex_mask(std::uint32_t mask);

/// Stable JSON form of a CheckReport. Big integers are decimal strings so
/// any JSON parser round-trips them losslessly; the key order is fixed, so
/// output is byte-stable for fixed inputs.
std::string report_to_json(const CheckReport& report, const FieldSpec& spec,
                           const std::string& function_label);

} // namespace opoly
