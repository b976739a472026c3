#pragma once

#include <string>
#include <string_view>

#include "sunflower/set_system.hpp"

namespace sunflower {

// Text format: '#' starts a comment, each other line is one member as
// whitespace-separated element labels, and an optional "!ground" line lists
// elements explicitly (isolated elements matter for the random-subset
// probabilities).  Ground order is first appearance.
SetSystem read_system_text(std::string_view text);
std::string write_system_text(const SetSystem& h);

// JSON format: {"ground": [labels], "sets": [[labels], ...]}.
SetSystem read_system_json(std::string_view text);
std::string write_system_json(const SetSystem& h);

// Reads either format from a file; ".json" selects JSON.
SetSystem read_system_file(const std::string& path);
void write_system_file(const SetSystem& h, const std::string& path);

// FNV-1a digest of the canonical text serialization; reports embed it so a
// run can be tied back to its input.
std::string system_digest(const SetSystem& h);

}  // namespace sunflower
