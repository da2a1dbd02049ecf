#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cogrowth/errors.hpp"
#include "cogrowth/words.hpp"

namespace cogrowth {

enum class BackendType { FiniteTable, Permutation, IntegerMatrix, FreeAbelian };

std::string backend_type_name(BackendType t);

// Canonical backend value of a group element:
//   FiniteTable   -> {table index}
//   Permutation   -> image array (0-based)
//   IntegerMatrix -> row-major entries, reduced into [0, modulus) when a
//                    modulus is set
//   FreeAbelian   -> integer vector
// Equality of canonical values is equality of group elements.
using Element = std::vector<std::int64_t>;

struct ElementHash {
  std::size_t operator()(const Element &e) const {
    // FNV-1a over the raw bytes of the entries.
    std::uint64_t h = 1469598103934665603ull;
    for (std::int64_t v : e) {
      auto u = static_cast<std::uint64_t>(v);
      for (int i = 0; i < 8; ++i) {
        h ^= (u >> (8 * i)) & 0xffu;
        h *= 1099511628211ull;
      }
    }
    return static_cast<std::size_t>(h);
  }
};

// A group G presented as a quotient of F_r: r generator images in a
// computable backend.  The kernel of the evaluation map is the normal
// subgroup whose growth the counting layer measures.  Immutable after
// construction; all methods are const and re-entrant.
class MarkedGroup {
 public:
  static MarkedGroup finite_table(int rank, std::int64_t size, std::int64_t identity,
                                  std::vector<std::int64_t> table,
                                  std::vector<std::int64_t> image_indices);
  static MarkedGroup permutation(int rank, std::int64_t degree,
                                 std::vector<std::vector<std::int64_t>> images);
  static MarkedGroup integer_matrix(int rank, std::int64_t dimension,
                                    std::optional<std::int64_t> modulus,
                                    std::vector<std::vector<std::int64_t>> images);
  static MarkedGroup free_abelian(int rank, std::int64_t dimension,
                                  std::vector<std::vector<std::int64_t>> images);

  // Parse / render the structured group-spec text format (see README).
  static MarkedGroup from_spec_json(const std::string &json_text);
  std::string to_spec_json() const;

  int rank() const { return rank_; }
  int q() const { return 2 * rank_ - 1; }
  BackendType backend() const { return backend_; }

  const std::string &id() const { return id_; }
  void set_id(std::string id) { id_ = std::move(id); }
  const std::string &description() const { return description_; }
  void set_description(std::string d) { description_ = std::move(d); }
  // Declared metadata: all kernel words have even length (so gamma_odd and
  // walk_odd vanish).  Only asserted where declared.
  bool even_parity_declared() const { return even_parity_; }
  void set_even_parity(bool v) { even_parity_ = v; }

  // True for backend families that are always finite (FiniteTable,
  // Permutation, IntegerMatrix with modulus).
  bool finite_backend() const;

  Element identity_element() const;
  bool is_identity(const Element &x) const;
  Element multiply(const Element &a, const Element &b) const;
  Element invert(const Element &a) const;

  // Image of a single letter code (cached) or of a whole word.
  const Element &image_of(int code) const;
  Element evaluate(const Word &w) const;

  // All elements reachable by words of length <= n, sorted canonically.
  // Throws BallBudgetExceeded when more than `budget` distinct elements
  // would be materialized.
  std::vector<Element> ball(int n, std::size_t budget) const;

  // The subgroup generated by the images (= the marked group itself),
  // enumerated to stabilization.  Finite backends only; the budget guards
  // against huge finite groups.
  std::vector<Element> generated_subgroup(std::size_t budget) const;

 private:
  MarkedGroup() = default;
  void finalize_images(std::vector<Element> positive_images);

  int rank_ = 0;
  BackendType backend_ = BackendType::FiniteTable;
  std::string id_ = "custom";
  std::string description_;
  bool even_parity_ = false;

  // Backend payloads (only the fields for backend_ are meaningful).
  std::int64_t ft_size_ = 0;
  std::int64_t ft_identity_ = 0;
  std::vector<std::int64_t> ft_table_;    // row-major size x size
  std::vector<std::int64_t> ft_inverse_;  // per-element inverse index
  std::vector<std::int64_t> ft_image_indices_;
  std::int64_t pm_degree_ = 0;
  std::int64_t im_dim_ = 0;
  std::optional<std::int64_t> im_modulus_;
  std::int64_t fa_dim_ = 0;

  std::vector<Element> letter_images_;  // indexed by letter code, size 2r
};

}  // namespace cogrowth
