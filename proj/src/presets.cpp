#include "cogrowth/presets.hpp"

#include <array>

namespace cogrowth {

namespace {

struct PresetEntry {
  const char *id;
  const char *json;
};

// Built-in marked groups.  Each is a rank-2 quotient of the free group F_2;
// "even_parity" declares that every kernel word has even length (provable
// from a sign/abelianization homomorphism for each preset that sets it).
constexpr const char *kTrivialJson = R"({
  "id": "trivial",
  "description": "Trivial quotient: both generators map to the identity; the kernel is all of F_2.",
  "even_parity": false,
  "rank": 2,
  "backend": {"type": "finite_table", "size": 1, "identity": 0, "table": [0]},
  "images": [0, 0]
})";

constexpr const char *kZSquaredJson = R"({
  "id": "zsquared",
  "description": "Free abelian quotient Z^2: a -> (1,0), b -> (0,1); the kernel is the commutator subgroup.",
  "even_parity": true,
  "rank": 2,
  "backend": {"type": "free_abelian", "dimension": 2},
  "images": [[1, 0], [0, 1]]
})";

constexpr const char *kZ2xZ2Json = R"({
  "id": "z2xz2",
  "description": "Klein four-group Z/2 x Z/2 as a multiplication table; both generators have order 2.",
  "even_parity": true,
  "rank": 2,
  "backend": {"type": "finite_table", "size": 4, "identity": 0,
              "table": [0, 1, 2, 3,
                        1, 0, 3, 2,
                        2, 3, 0, 1,
                        3, 2, 1, 0]},
  "images": [1, 2]
})";

constexpr const char *kS3Json = R"({
  "id": "s3",
  "description": "Symmetric group S_3 generated by the transpositions (0 1) and (1 2).",
  "even_parity": true,
  "rank": 2,
  "backend": {"type": "permutation", "degree": 3},
  "images": [[1, 0, 2], [0, 2, 1]]
})";

constexpr const char *kSl2zJson = R"({
  "id": "sl2z",
  "description": "SL(2,Z) image: a -> [[1,1],[0,1]], b -> [[1,0],[1,1]] (infinite, nonamenable).",
  "even_parity": true,
  "rank": 2,
  "backend": {"type": "integer_matrix", "dimension": 2},
  "images": [[1, 1, 0, 1], [1, 0, 1, 1]]
})";

constexpr std::array<PresetEntry, 5> kPresets{{
    {"trivial", kTrivialJson},
    {"zsquared", kZSquaredJson},
    {"z2xz2", kZ2xZ2Json},
    {"s3", kS3Json},
    {"sl2z", kSl2zJson},
}};

}  // namespace

std::vector<PresetInfo> list_presets() {
  std::vector<PresetInfo> out;
  for (const auto &p : kPresets) {
    MarkedGroup g = MarkedGroup::from_spec_json(p.json);
    out.push_back(PresetInfo{g.id(), g.description(), g.finite_backend(), g.even_parity_declared()});
  }
  return out;
}

bool is_preset(const std::string &id) {
  for (const auto &p : kPresets)
    if (id == p.id) return true;
  return false;
}

MarkedGroup load_preset(const std::string &id) {
  for (const auto &p : kPresets)
    if (id == p.id) return MarkedGroup::from_spec_json(p.json);
  throw GroupSpecError("unknown preset '" + id + "' (available: trivial, zsquared, z2xz2, s3, sl2z)");
}

std::string preset_spec_json(const std::string &id) {
  for (const auto &p : kPresets)
    if (id == p.id) return p.json;
  throw GroupSpecError("unknown preset '" + id + "'");
}

}  // namespace cogrowth
