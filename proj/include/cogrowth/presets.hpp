#pragma once

#include <string>
#include <vector>

#include "cogrowth/marked_group.hpp"

namespace cogrowth {

struct PresetInfo {
  std::string id;
  std::string description;
  bool finite_backend;
  bool even_parity;
};

// Identifiers of the built-in marked groups, in listing order:
// trivial, zsquared, z2xz2, s3, sl2z.
std::vector<PresetInfo> list_presets();

// True iff `id` names a built-in preset.
bool is_preset(const std::string &id);

// Loads a built-in preset; throws GroupSpecError on unknown id.
MarkedGroup load_preset(const std::string &id);

// The embedded spec text of a preset (same format as group-spec files).
std::string preset_spec_json(const std::string &id);

}  // namespace cogrowth
