#ifndef GFNF_POLY_HPP
#define GFNF_POLY_HPP

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gfnf/field.hpp"
#include "gfnf/order.hpp"

namespace gfnf {

/// Default guard on q^n, the dimension of the dense function space the
/// normal-form pipeline materializes. Callers may raise it explicitly.
inline constexpr std::size_t kDefaultDimCap = 4096;

/// Sparse multivariate polynomial over F_q in canonical form: no zero
/// coefficients are stored and every exponent vector has length n.
/// Immutable value semantics apart from add_term, the builder hook.
class Polynomial {
 public:
  using TermMap = std::map<ExponentVec, FieldElement>;

  Polynomial() = default;
  Polynomial(FieldPtr field, std::size_t n) : field_(std::move(field)), n_(n) {}

  static Polynomial constant(FieldPtr field, std::size_t n, FieldElement c);
  static Polynomial monomial(FieldPtr field, std::size_t n, ExponentVec exps, FieldElement c);
  /// x_var (0-based variable index).
  static Polynomial variable(FieldPtr field, std::size_t n, std::size_t var);

  std::size_t nvars() const { return n_; }
  const FieldPtr& field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Accumulates c onto the coefficient of x^exps, pruning zeros.
  void add_term(const ExponentVec& exps, FieldElement c);

  FieldElement coeff(const ExponentVec& exps) const;

  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;

 private:
  FieldPtr field_;
  std::size_t n_ = 0;
  TermMap terms_;
};

/// Grammar (whitespace is permitted between tokens):
///   poly   := term (('+'|'-') term)*
///   term   := coeff ('*' factor)* | factor ('*' factor)*
///   factor := 'x' INT ('^' INT)?
///   coeff  := INT                 -- base-p index of a field element
/// Variables are x1..xn; '-' negates the following term in the field.
Polynomial parse_polynomial(std::string_view text, std::size_t n, const FieldPtr& field);

/// Terms in strictly decreasing monomial order; round-trips through
/// parse_polynomial. The zero polynomial prints as "0".
std::string format_polynomial(const Polynomial& f, const MonomialOrder& order);

std::strong_ordering compare_monomials(const MonomialOrder& order, const ExponentVec& a,
                                       const ExponentVec& b);

std::pair<ExponentVec, FieldElement> leading_term(const Polynomial& f, const MonomialOrder& order);

FieldElement evaluate(const Polynomial& f, std::span<const FieldElement> point);

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division: f = sum h_i * d_i + r with no term of r divisible
/// by any LT(d_i). At each step the first divisor (in the given sequence)
/// whose leading term divides the current leading term is used.
/// Requires a monomial order (CustomTotal is refused).
DivisionResult multivariate_divide(const Polynomial& f, std::span<const Polynomial> divisors,
                                   const MonomialOrder& order);

/// S(f,g) = (LCM/LT(f)) f - (LCM/LT(g)) g for the LCM of the leading monomials.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Buchberger's criterion: true iff every S-pair reduces to zero modulo the
/// family. Requires a monomial order.
bool buchberger_check(std::span<const Polynomial> basis, const MonomialOrder& order);

/// Per-variable exponent reduction induced by a^q = a:
/// 0 -> 0 and e -> ((e-1) mod (q-1)) + 1 for e >= 1.
ExponentVec reduce_exponents(const ExponentVec& exps, std::uint32_t q);

/// The set {0..q-1}^n enumerated in strictly decreasing order under a total
/// order; the coordinate frame shared by the evaluation matrix and the
/// phi maps. Construction enforces the dimension guard on q^n.
class BasisIndex {
 public:
  BasisIndex(FieldPtr field, std::size_t n, MonomialOrder order,
             std::size_t dim_cap = kDefaultDimCap);

  std::size_t size() const { return monomials_.size(); }
  std::size_t nvars() const { return n_; }
  const FieldPtr& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<ExponentVec>& monomials() const { return monomials_; }
  const ExponentVec& monomial(std::size_t i) const { return monomials_[i]; }
  std::size_t position(const ExponentVec& bounded) const;

 private:
  FieldPtr field_;
  std::size_t n_;
  MonomialOrder order_;
  std::vector<ExponentVec> monomials_;
  std::map<ExponentVec, std::size_t> positions_;
};

/// Coordinates of the function induced by f with respect to the bounded
/// monomial basis, via exponent reduction. Length q^n.
std::vector<FieldElement> phi_coordinates(const Polynomial& f, const BasisIndex& basis);

/// The unique polynomial with all exponents below q having the given
/// coordinates; inverse of phi_coordinates on that subspace.
Polynomial phi_inverse(std::span<const FieldElement> coords, const BasisIndex& basis);

}  // namespace gfnf

#endif
