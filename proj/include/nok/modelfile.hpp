#pragma once

#include <string>

#include "nok/model.hpp"

namespace nok {

// expr := term (('+'|'-') term)*; term := [rational ['*']] identifier | '0'.
// Identifiers resolve against basis names first, then curve names.
// Throws ParseError with the offending position.
DivisorClass parse_divisor(const std::string& text, const SurfaceModel& model);

// Canonical textual form over the basis; parse_divisor inverts it.
std::string print_divisor(const SurfaceModel& model, const DivisorClass& D);

// Versioned JSON document; rationals are strings, classes are expressions.
// Throws ParseError on malformed input, DomainError when validation fails.
SurfaceModel model_from_json(const std::string& text);
std::string model_to_json(const SurfaceModel& model);

SurfaceModel load_model(const std::string& path);
void save_model(const SurfaceModel& model, const std::string& path);

}  // namespace nok
