#include "cogrowth/marked_group.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include <json.hpp>

#include "cogrowth/numeric.hpp"

namespace cogrowth {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void spec_error(const std::string &msg) { throw GroupSpecError("group spec: " + msg); }

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("64-bit overflow in backend addition; use a modulus or smaller entries");
  }
  return r;
}

std::int64_t mod_reduce(std::int64_t v, std::int64_t m) {
  std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

// Exact determinant of a small integer matrix via rational Gauss elimination.
Rat rational_det(std::vector<std::vector<Rat>> a) {
  const std::size_t n = a.size();
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    Rat inv = 1 / a[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (a[row][col] == 0) continue;
      Rat f = a[row][col] * inv;
      for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
    }
  }
  return det;
}

// Exact inverse of a small matrix over the rationals (Gauss-Jordan).
std::vector<std::vector<Rat>> rational_inverse(std::vector<std::vector<Rat>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) spec_error("generator image matrix is singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rat f = 1 / a[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      a[col][k] *= f;
      inv[col][k] *= f;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rat g = a[row][col];
      for (std::size_t k = 0; k < n; ++k) {
        a[row][k] -= g * a[col][k];
        inv[row][k] -= g * inv[col][k];
      }
    }
  }
  return inv;
}

std::vector<std::vector<Rat>> to_rational_matrix(const Element &e, std::int64_t dim) {
  std::vector<std::vector<Rat>> m(static_cast<std::size_t>(dim),
                                  std::vector<Rat>(static_cast<std::size_t>(dim)));
  for (std::int64_t i = 0; i < dim; ++i)
    for (std::int64_t j = 0; j < dim; ++j)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          Rat(static_cast<long>(e[static_cast<std::size_t>(i * dim + j)]));
  return m;
}

// Modular inverse via extended Euclid; value must be coprime to m.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t t = 0, newt = 1, r = m, newr = mod_reduce(a, m);
  while (newr != 0) {
    std::int64_t quot = r / newr;
    std::int64_t tmp = t - quot * newt;
    t = newt;
    newt = tmp;
    tmp = r - quot * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) spec_error("generator image determinant is not invertible modulo the modulus");
  return mod_reduce(t, m);
}

}  // namespace

std::string backend_type_name(BackendType t) {
  switch (t) {
    case BackendType::FiniteTable:
      return "finite_table";
    case BackendType::Permutation:
      return "permutation";
    case BackendType::IntegerMatrix:
      return "integer_matrix";
    case BackendType::FreeAbelian:
      return "free_abelian";
  }
  return "?";
}

void MarkedGroup::finalize_images(std::vector<Element> positive_images) {
  letter_images_.resize(static_cast<std::size_t>(2 * rank_));
  for (int i = 0; i < rank_; ++i) {
    Element g = positive_images[static_cast<std::size_t>(i)];
    letter_images_[static_cast<std::size_t>(2 * i)] = g;
    letter_images_[static_cast<std::size_t>(2 * i + 1)] = invert(g);
  }
}

MarkedGroup MarkedGroup::finite_table(int rank, std::int64_t size, std::int64_t identity,
                                      std::vector<std::int64_t> table,
                                      std::vector<std::int64_t> image_indices) {
  check_rank(rank);
  if (size < 1) spec_error("finite_table size must be positive");
  if (identity < 0 || identity >= size) spec_error("finite_table identity index out of range");
  if (static_cast<std::int64_t>(table.size()) != size * size)
    spec_error("finite_table table must have size*size entries");
  for (std::int64_t v : table)
    if (v < 0 || v >= size) spec_error("finite_table entry out of range");
  auto at = [&](std::int64_t x, std::int64_t y) {
    return table[static_cast<std::size_t>(x * size + y)];
  };
  // Identity row and column.
  for (std::int64_t x = 0; x < size; ++x) {
    if (at(identity, x) != x || at(x, identity) != x)
      spec_error("finite_table identity row/column is not the identity map");
  }
  // Each row and column must be a permutation (cancellation).
  for (std::int64_t x = 0; x < size; ++x) {
    std::vector<bool> seen_row(static_cast<std::size_t>(size)), seen_col(seen_row);
    for (std::int64_t y = 0; y < size; ++y) {
      if (seen_row[static_cast<std::size_t>(at(x, y))])
        spec_error("finite_table row is not a permutation");
      if (seen_col[static_cast<std::size_t>(at(y, x))])
        spec_error("finite_table column is not a permutation");
      seen_row[static_cast<std::size_t>(at(x, y))] = true;
      seen_col[static_cast<std::size_t>(at(y, x))] = true;
    }
  }
  // Full associativity check; kept exhaustive because shipped tables are
  // small (cost is size^3).
  if (size <= 512) {
    for (std::int64_t x = 0; x < size; ++x)
      for (std::int64_t y = 0; y < size; ++y)
        for (std::int64_t z = 0; z < size; ++z)
          if (at(at(x, y), z) != at(x, at(y, z))) spec_error("finite_table is not associative");
  }
  if (static_cast<int>(image_indices.size()) != rank)
    spec_error("finite_table needs exactly rank generator image indices");
  for (std::int64_t v : image_indices)
    if (v < 0 || v >= size) spec_error("finite_table image index out of range");

  MarkedGroup g;
  g.rank_ = rank;
  g.backend_ = BackendType::FiniteTable;
  g.ft_size_ = size;
  g.ft_identity_ = identity;
  g.ft_table_ = std::move(table);
  g.ft_image_indices_ = image_indices;
  g.ft_inverse_.assign(static_cast<std::size_t>(size), -1);
  for (std::int64_t x = 0; x < size; ++x) {
    for (std::int64_t y = 0; y < size; ++y) {
      if (g.ft_table_[static_cast<std::size_t>(x * size + y)] == identity) {
        g.ft_inverse_[static_cast<std::size_t>(x)] = y;
        break;
      }
    }
    if (g.ft_inverse_[static_cast<std::size_t>(x)] < 0)
      spec_error("finite_table element has no inverse");
  }
  std::vector<Element> imgs;
  for (std::int64_t v : image_indices) imgs.push_back(Element{v});
  g.finalize_images(std::move(imgs));
  return g;
}

MarkedGroup MarkedGroup::permutation(int rank, std::int64_t degree,
                                     std::vector<std::vector<std::int64_t>> images) {
  check_rank(rank);
  if (degree < 1) spec_error("permutation degree must be positive");
  if (static_cast<int>(images.size()) != rank)
    spec_error("permutation needs exactly rank generator images");
  for (const auto &p : images) {
    if (static_cast<std::int64_t>(p.size()) != degree)
      spec_error("permutation image has wrong length");
    std::vector<bool> seen(static_cast<std::size_t>(degree));
    for (std::int64_t v : p) {
      if (v < 0 || v >= degree || seen[static_cast<std::size_t>(v)])
        spec_error("permutation image is not a permutation");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  MarkedGroup g;
  g.rank_ = rank;
  g.backend_ = BackendType::Permutation;
  g.pm_degree_ = degree;
  std::vector<Element> imgs(images.begin(), images.end());
  g.finalize_images(std::move(imgs));
  return g;
}

MarkedGroup MarkedGroup::integer_matrix(int rank, std::int64_t dimension,
                                        std::optional<std::int64_t> modulus,
                                        std::vector<std::vector<std::int64_t>> images) {
  check_rank(rank);
  if (dimension < 1) spec_error("integer_matrix dimension must be positive");
  if (modulus && *modulus < 2) spec_error("integer_matrix modulus must be at least 2");
  if (modulus && *modulus > (std::int64_t(1) << 31))
    spec_error("integer_matrix modulus too large (must fit 31 bits)");
  if (static_cast<int>(images.size()) != rank)
    spec_error("integer_matrix needs exactly rank generator images");
  MarkedGroup g;
  g.rank_ = rank;
  g.backend_ = BackendType::IntegerMatrix;
  g.im_dim_ = dimension;
  g.im_modulus_ = modulus;
  std::vector<Element> imgs;
  for (auto &m : images) {
    if (static_cast<std::int64_t>(m.size()) != dimension * dimension)
      spec_error("integer_matrix image has wrong entry count");
    Element e(m.begin(), m.end());
    if (modulus)
      for (auto &v : e) v = mod_reduce(v, *modulus);
    imgs.push_back(std::move(e));
  }
  // Invertibility is required up front so inverse letters are well defined;
  // invert() performs the check.
  g.finalize_images(std::move(imgs));
  return g;
}

MarkedGroup MarkedGroup::free_abelian(int rank, std::int64_t dimension,
                                      std::vector<std::vector<std::int64_t>> images) {
  check_rank(rank);
  if (dimension < 1) spec_error("free_abelian dimension must be positive");
  if (static_cast<int>(images.size()) != rank)
    spec_error("free_abelian needs exactly rank generator images");
  MarkedGroup g;
  g.rank_ = rank;
  g.backend_ = BackendType::FreeAbelian;
  g.fa_dim_ = dimension;
  std::vector<Element> imgs;
  for (auto &v : images) {
    if (static_cast<std::int64_t>(v.size()) != dimension)
      spec_error("free_abelian image has wrong length");
    imgs.emplace_back(v.begin(), v.end());
  }
  g.finalize_images(std::move(imgs));
  return g;
}

bool MarkedGroup::finite_backend() const {
  switch (backend_) {
    case BackendType::FiniteTable:
    case BackendType::Permutation:
      return true;
    case BackendType::IntegerMatrix:
      return im_modulus_.has_value();
    case BackendType::FreeAbelian:
      return false;
  }
  return false;
}

Element MarkedGroup::identity_element() const {
  switch (backend_) {
    case BackendType::FiniteTable:
      return Element{ft_identity_};
    case BackendType::Permutation: {
      Element e(static_cast<std::size_t>(pm_degree_));
      for (std::int64_t i = 0; i < pm_degree_; ++i) e[static_cast<std::size_t>(i)] = i;
      return e;
    }
    case BackendType::IntegerMatrix: {
      Element e(static_cast<std::size_t>(im_dim_ * im_dim_), 0);
      for (std::int64_t i = 0; i < im_dim_; ++i) e[static_cast<std::size_t>(i * im_dim_ + i)] = 1;
      return e;
    }
    case BackendType::FreeAbelian:
      return Element(static_cast<std::size_t>(fa_dim_), 0);
  }
  return {};
}

bool MarkedGroup::is_identity(const Element &x) const { return x == identity_element(); }

Element MarkedGroup::multiply(const Element &a, const Element &b) const {
  switch (backend_) {
    case BackendType::FiniteTable:
      return Element{ft_table_[static_cast<std::size_t>(a[0] * ft_size_ + b[0])]};
    case BackendType::Permutation: {
      // Product "a then b": (a*b)[i] = b[a[i]].
      Element r(a.size());
      for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = b[static_cast<std::size_t>(a[i])];
      return r;
    }
    case BackendType::IntegerMatrix: {
      const std::int64_t n = im_dim_;
      Element r(static_cast<std::size_t>(n * n));
      for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = 0; j < n; ++j) {
          __int128 acc = 0;
          for (std::int64_t k = 0; k < n; ++k) {
            acc += static_cast<__int128>(a[static_cast<std::size_t>(i * n + k)]) *
                   static_cast<__int128>(b[static_cast<std::size_t>(k * n + j)]);
          }
          if (im_modulus_) {
            std::int64_t m = *im_modulus_;
            auto v = static_cast<std::int64_t>(acc % m);
            r[static_cast<std::size_t>(i * n + j)] = v < 0 ? v + m : v;
          } else {
            if (acc > std::numeric_limits<std::int64_t>::max() ||
                acc < std::numeric_limits<std::int64_t>::min()) {
              throw OverflowError(
                  "64-bit overflow in integer matrix product; use a modulus or smaller words");
            }
            r[static_cast<std::size_t>(i * n + j)] = static_cast<std::int64_t>(acc);
          }
        }
      }
      return r;
    }
    case BackendType::FreeAbelian: {
      Element r(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
      return r;
    }
  }
  return {};
}

Element MarkedGroup::invert(const Element &a) const {
  switch (backend_) {
    case BackendType::FiniteTable:
      return Element{ft_inverse_[static_cast<std::size_t>(a[0])]};
    case BackendType::Permutation: {
      Element r(a.size());
      for (std::size_t i = 0; i < a.size(); ++i)
        r[static_cast<std::size_t>(a[i])] = static_cast<std::int64_t>(i);
      return r;
    }
    case BackendType::IntegerMatrix: {
      const std::int64_t n = im_dim_;
      auto ratm = to_rational_matrix(a, n);
      Rat det = rational_det(ratm);
      if (det == 0) spec_error("matrix element is singular");
      if (!im_modulus_) {
        if (det != 1 && det != -1)
          spec_error("integer matrix without modulus must be unimodular (det = +-1) to be "
                     "invertible over the integers");
        auto inv = rational_inverse(std::move(ratm));
        Element r(static_cast<std::size_t>(n * n));
        for (std::int64_t i = 0; i < n; ++i)
          for (std::int64_t j = 0; j < n; ++j) {
            Rat v = inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (v.get_den() != 1) spec_error("matrix inverse is not integral");
            r[static_cast<std::size_t>(i * n + j)] = static_cast<std::int64_t>(v.get_num().get_si());
          }
        return r;
      }
      // Modular case: inverse = adjugate * det^{-1} (mod m).  The adjugate is
      // det * inverse over the rationals, which is exactly integral.
      std::int64_t m = *im_modulus_;
      Int det_int(det.get_num());
      std::int64_t det_mod = mod_reduce(mpz_fdiv_ui(det_int.get_mpz_t(), static_cast<unsigned long>(m)), m);
      std::int64_t det_inv = mod_inverse(det_mod, m);
      auto inv = rational_inverse(std::move(ratm));
      Element r(static_cast<std::size_t>(n * n));
      for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) {
          Rat adj = inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * det;
          if (adj.get_den() != 1) spec_error("matrix adjugate is not integral");
          Int entry(adj.get_num());
          std::int64_t e = static_cast<std::int64_t>(
              mpz_fdiv_ui(entry.get_mpz_t(), static_cast<unsigned long>(m)));
          r[static_cast<std::size_t>(i * n + j)] =
              mod_reduce(e * (det_inv % m) % m, m);
        }
      return r;
    }
    case BackendType::FreeAbelian: {
      Element r(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == std::numeric_limits<std::int64_t>::min())
          throw OverflowError("64-bit overflow negating free-abelian element");
        r[i] = -a[i];
      }
      return r;
    }
  }
  return {};
}

const Element &MarkedGroup::image_of(int code) const {
  if (code < 0 || code >= 2 * rank_) throw GroupSpecError("letter code out of range");
  return letter_images_[static_cast<std::size_t>(code)];
}

Element MarkedGroup::evaluate(const Word &w) const {
  Element acc = identity_element();
  for (int c : w) acc = multiply(acc, image_of(c));
  return acc;
}

std::vector<Element> MarkedGroup::ball(int n, std::size_t budget) const {
  if (n < 0) throw GroupSpecError("ball radius must be nonnegative");
  std::unordered_set<Element, ElementHash> seen;
  std::vector<Element> frontier{identity_element()};
  seen.insert(frontier.front());
  if (seen.size() > budget) throw BallBudgetExceeded(budget);
  for (int depth = 0; depth < n && !frontier.empty(); ++depth) {
    std::vector<Element> next;
    for (const Element &x : frontier) {
      for (int c = 0; c < 2 * rank_; ++c) {
        Element y = multiply(x, letter_images_[static_cast<std::size_t>(c)]);
        if (seen.insert(y).second) {
          if (seen.size() > budget) throw BallBudgetExceeded(budget);
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Element> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> MarkedGroup::generated_subgroup(std::size_t budget) const {
  if (!finite_backend()) {
    throw GroupSpecError("backend not finite: cannot enumerate the generated subgroup");
  }
  std::unordered_set<Element, ElementHash> seen;
  std::vector<Element> frontier{identity_element()};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const Element &x : frontier) {
      for (int c = 0; c < 2 * rank_; ++c) {
        Element y = multiply(x, letter_images_[static_cast<std::size_t>(c)]);
        if (seen.insert(y).second) {
          if (seen.size() > budget) throw BallBudgetExceeded(budget);
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Element> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<std::vector<std::int64_t>> parse_image_arrays(const json &j, const char *what) {
  if (!j.is_array()) spec_error(std::string(what) + ": images must be an array");
  std::vector<std::vector<std::int64_t>> out;
  for (const auto &e : j) {
    if (!e.is_array()) spec_error(std::string(what) + ": each image must be an integer array");
    std::vector<std::int64_t> v;
    for (const auto &x : e) {
      if (!x.is_number_integer()) spec_error(std::string(what) + ": image entries must be integers");
      v.push_back(x.get<std::int64_t>());
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

MarkedGroup MarkedGroup::from_spec_json(const std::string &json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const std::exception &e) {
    spec_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) spec_error("top level must be an object");
  if (!j.contains("rank") || !j["rank"].is_number_integer()) spec_error("missing integer field 'rank'");
  if (!j.contains("backend") || !j["backend"].is_object()) spec_error("missing object field 'backend'");
  if (!j.contains("images")) spec_error("missing field 'images'");
  int rank = j["rank"].get<int>();
  const json &b = j["backend"];
  if (!b.contains("type") || !b["type"].is_string()) spec_error("backend needs a string 'type'");
  std::string type = b["type"].get<std::string>();

  MarkedGroup g = [&]() {
    if (type == "finite_table") {
      for (const char *f : {"size", "identity", "table"})
        if (!b.contains(f)) spec_error(std::string("finite_table backend needs field '") + f + "'");
      std::vector<std::int64_t> table;
      for (const auto &x : b["table"]) {
        if (!x.is_number_integer()) spec_error("finite_table table entries must be integers");
        table.push_back(x.get<std::int64_t>());
      }
      std::vector<std::int64_t> idx;
      for (const auto &x : j["images"]) {
        if (!x.is_number_integer()) spec_error("finite_table images must be element indices");
        idx.push_back(x.get<std::int64_t>());
      }
      return finite_table(rank, b["size"].get<std::int64_t>(), b["identity"].get<std::int64_t>(),
                          std::move(table), std::move(idx));
    }
    if (type == "permutation") {
      if (!b.contains("degree")) spec_error("permutation backend needs field 'degree'");
      return permutation(rank, b["degree"].get<std::int64_t>(),
                         parse_image_arrays(j["images"], "permutation"));
    }
    if (type == "integer_matrix") {
      if (!b.contains("dimension")) spec_error("integer_matrix backend needs field 'dimension'");
      std::optional<std::int64_t> modulus;
      if (b.contains("modulus") && !b["modulus"].is_null())
        modulus = b["modulus"].get<std::int64_t>();
      return integer_matrix(rank, b["dimension"].get<std::int64_t>(), modulus,
                            parse_image_arrays(j["images"], "integer_matrix"));
    }
    if (type == "free_abelian") {
      if (!b.contains("dimension")) spec_error("free_abelian backend needs field 'dimension'");
      return free_abelian(rank, b["dimension"].get<std::int64_t>(),
                          parse_image_arrays(j["images"], "free_abelian"));
    }
    spec_error("unknown backend type '" + type + "'");
  }();

  if (j.contains("id") && j["id"].is_string()) g.set_id(j["id"].get<std::string>());
  if (j.contains("description") && j["description"].is_string())
    g.set_description(j["description"].get<std::string>());
  if (j.contains("even_parity") && j["even_parity"].is_boolean())
    g.set_even_parity(j["even_parity"].get<bool>());
  return g;
}

std::string MarkedGroup::to_spec_json() const {
  json j;
  j["id"] = id_;
  if (!description_.empty()) j["description"] = description_;
  j["even_parity"] = even_parity_;
  j["rank"] = rank_;
  json b;
  b["type"] = backend_type_name(backend_);
  json images = json::array();
  switch (backend_) {
    case BackendType::FiniteTable:
      b["size"] = ft_size_;
      b["identity"] = ft_identity_;
      b["table"] = ft_table_;
      for (std::int64_t v : ft_image_indices_) images.push_back(v);
      break;
    case BackendType::Permutation:
      b["degree"] = pm_degree_;
      for (int i = 0; i < rank_; ++i) images.push_back(letter_images_[static_cast<std::size_t>(2 * i)]);
      break;
    case BackendType::IntegerMatrix:
      b["dimension"] = im_dim_;
      if (im_modulus_) b["modulus"] = *im_modulus_;
      for (int i = 0; i < rank_; ++i) images.push_back(letter_images_[static_cast<std::size_t>(2 * i)]);
      break;
    case BackendType::FreeAbelian:
      b["dimension"] = fa_dim_;
      for (int i = 0; i < rank_; ++i) images.push_back(letter_images_[static_cast<std::size_t>(2 * i)]);
      break;
  }
  j["backend"] = b;
  j["images"] = images;
  return j.dump(2);
}

}  // namespace cogrowth
