#include "gfnf/order.hpp"

namespace gfnf {

std::uint64_t total_degree(const ExponentVec& e) {
  std::uint64_t d = 0;
  for (std::uint32_t x : e) d += x;
  return d;
}

MonomialOrder MonomialOrder::custom_total(std::size_t n, std::uint64_t q,
                                          const std::vector<ExponentVec>& decreasing) {
  MonomialOrder order(Kind::CustomTotal, "custom");
  order.n_ = n;
  order.q_ = q;
  std::uint64_t expected = 1;
  for (std::size_t i = 0; i < n; ++i) expected *= q;
  if (decreasing.size() != expected) {
    throw Error(ErrorKind::InvalidArgument,
                "custom order must list all " + std::to_string(expected) + " exponent vectors");
  }
  for (std::size_t i = 0; i < decreasing.size(); ++i) {
    const ExponentVec& v = decreasing[i];
    if (v.size() != n) throw Error(ErrorKind::InvalidArgument, "custom order: wrong vector length");
    for (std::uint32_t e : v) {
      if (e >= q) throw Error(ErrorKind::InvalidArgument, "custom order: exponent not below q");
    }
    if (!order.rank_.emplace(v, i).second) {
      throw Error(ErrorKind::InvalidArgument, "custom order: duplicate exponent vector");
    }
  }
  return order;
}

std::strong_ordering MonomialOrder::compare(const ExponentVec& a, const ExponentVec& b) const {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::LengthMismatch, "comparing exponent vectors of different lengths");
  }
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
      }
      return std::strong_ordering::equal;
    case Kind::GrLex: {
      const std::uint64_t da = total_degree(a);
      const std::uint64_t db = total_degree(b);
      if (da != db) return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
      }
      return std::strong_ordering::equal;
    }
    case Kind::GrevLex: {
      const std::uint64_t da = total_degree(a);
      const std::uint64_t db = total_degree(b);
      if (da != db) return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
      for (std::size_t i = a.size(); i-- > 0;) {
        // Equal degrees: the vector whose last differing entry is smaller wins.
        if (a[i] != b[i]) return a[i] > b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
      }
      return std::strong_ordering::equal;
    }
    case Kind::CustomTotal: {
      auto ia = rank_.find(a);
      auto ib = rank_.find(b);
      if (ia == rank_.end() || ib == rank_.end()) {
        throw Error(ErrorKind::NotMonomialOrder,
                    "custom total order is undefined outside {0..q-1}^n");
      }
      if (ia->second == ib->second) return std::strong_ordering::equal;
      return ia->second > ib->second ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace gfnf
