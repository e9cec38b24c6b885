#pragma once

#include <functional>
#include <string>

#include "iotforge/model.hpp"

namespace iotforge {

/// Canonical text form: fixed two-space indentation, declaration order
/// preserved, guard expressions printed with canonical spacing. Parsing the
/// output yields a model structurally equal to the input.
std::string serialize_model(const Model& model);

/// Canonical rendering of a guard expression (no surrounding brackets).
/// The optional hook substitutes property identifiers, which the ThingML
/// generator uses when emitted names differ from model names.
std::string serialize_guard(const GuardNode& guard);
std::string serialize_guard(const GuardNode& guard,
                            const std::function<std::string(const std::string&)>& rename);

std::string serialize_literal(const Literal& lit);

/// Microseconds as a `N ms` / `N.NNN ms` time literal.
std::string format_time_ms(Micros micros);

std::string type_name(const SemType& type);

}  // namespace iotforge
