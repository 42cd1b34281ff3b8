#ifndef GFNF_FIELD_HPP
#define GFNF_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gfnf/errors.hpp"

namespace gfnf {

/// Element of F_q, identified by its canonical index in [0, q):
/// the residue itself for prime fields, sum c_i * p^i of the polynomial
/// coefficients for extension fields.
struct FieldElement {
  std::uint32_t index = 0;

  friend bool operator==(FieldElement a, FieldElement b) { return a.index == b.index; }
  friend bool operator!=(FieldElement a, FieldElement b) { return a.index != b.index; }
  friend bool operator<(FieldElement a, FieldElement b) { return a.index < b.index; }
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Arithmetic context for F_q, q = p^k. Immutable after construction, all
/// operations are pure; contexts may be shared freely between threads.
///
/// Prime fields use direct modular arithmetic. Extension fields reduce
/// modulo a monic irreducible polynomial and keep full q x q add/mul
/// lookup tables when q <= 256.
class Field {
 public:
  /// Builds a field context. For k > 1 without an explicit modulus a
  /// built-in table supplies one for q in {4, 8, 9, 16, 25, 27}.
  static FieldPtr create(std::uint32_t p, std::uint32_t k = 1,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }

  /// Modulus coefficients c_0..c_k (monic, c_k = 1); empty for k = 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }

  /// Checked constructor for an element; index must be < q.
  FieldElement element(std::uint32_t index) const;

  /// All q elements in increasing index order.
  std::vector<FieldElement> elements() const;

  FieldElement add(FieldElement a, FieldElement b) const {
    if (k_ == 1) return {narrow((std::uint64_t(a.index) + b.index) % p_)};
    if (has_tables_) return {add_table_[std::size_t(a.index) * q_ + b.index]};
    return add_generic(a, b);
  }

  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

  FieldElement mul(FieldElement a, FieldElement b) const {
    if (k_ == 1) return {narrow(std::uint64_t(a.index) * b.index % p_)};
    if (has_tables_) return {mul_table_[std::size_t(a.index) * q_ + b.index]};
    return mul_generic(a, b);
  }

  FieldElement neg(FieldElement a) const {
    if (k_ == 1) return {a.index == 0 ? 0 : p_ - a.index};
    if (has_tables_) return {neg_table_[a.index]};
    return neg_generic(a);
  }

  /// Multiplicative inverse; throws DivisionByZero for 0.
  FieldElement inv(FieldElement a) const;

  /// a^e by square-and-multiply; 0^0 is defined as 1.
  FieldElement pow(FieldElement a, std::uint64_t e) const;

  /// Base-p digits c_0..c_{k-1} of the element.
  std::vector<std::uint32_t> decode(FieldElement a) const;
  FieldElement encode(const std::vector<std::uint32_t>& coeffs) const;

  /// Canonical CLI spec string: "p" for prime fields, "p^k:m=<index>" otherwise.
  std::string spec_string() const;

  friend bool same_field(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_;
  }

 private:
  Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus);

  static std::uint32_t narrow(std::uint64_t v) { return static_cast<std::uint32_t>(v); }

  FieldElement add_generic(FieldElement a, FieldElement b) const;
  FieldElement mul_generic(FieldElement a, FieldElement b) const;
  FieldElement neg_generic(FieldElement a) const;
  void build_tables();

  std::uint32_t p_ = 2;
  std::uint32_t k_ = 1;
  std::uint32_t q_ = 2;
  std::vector<std::uint32_t> modulus_;
  bool has_tables_ = false;
  std::vector<std::uint32_t> add_table_;
  std::vector<std::uint32_t> mul_table_;
  std::vector<std::uint32_t> neg_table_;
  std::vector<std::uint32_t> inv_table_;
};

/// Parses a field spec string: "p", "p^k" or "p^k:m=<index>" where <index>
/// is the base-p encoding of the modulus coefficients.
FieldPtr parse_field_spec(std::string_view spec);

/// Field of a given order q, using the default modulus table for prime powers.
FieldPtr field_of_order(std::uint32_t q);

}  // namespace gfnf

#endif
