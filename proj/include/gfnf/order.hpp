#ifndef GFNF_ORDER_HPP
#define GFNF_ORDER_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gfnf/errors.hpp"

namespace gfnf {

using ExponentVec = std::vector<std::uint32_t>;

std::uint64_t total_degree(const ExponentVec& e);

/// Term order on exponent vectors. Lex, GrLex and GrevLex are monomial
/// orders (well-orderings compatible with monomial multiplication) on all of
/// (N_0)^n; CustomTotal is an arbitrary strict total order given explicitly
/// on the bounded set {0..q-1}^n and is only usable where no Groebner
/// semantics are required.
class MonomialOrder {
 public:
  enum class Kind { Lex, GrLex, GrevLex, CustomTotal };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, "lex"); }
  static MonomialOrder grlex() { return MonomialOrder(Kind::GrLex, "grlex"); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::GrevLex, "grevlex"); }

  /// Custom order from the full list of the q^n bounded exponent vectors in
  /// strictly decreasing order; validated for completeness and distinctness.
  static MonomialOrder custom_total(std::size_t n, std::uint64_t q,
                                    const std::vector<ExponentVec>& decreasing);

  Kind kind() const { return kind_; }
  bool is_monomial_order() const { return kind_ != Kind::CustomTotal; }
  const std::string& name() const { return name_; }

  std::strong_ordering compare(const ExponentVec& a, const ExponentVec& b) const;

 private:
  MonomialOrder(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

  Kind kind_;
  std::string name_;
  std::size_t n_ = 0;
  std::uint64_t q_ = 0;
  std::map<ExponentVec, std::size_t> rank_;  // CustomTotal only; rank 0 is the greatest
};

}  // namespace gfnf

#endif
