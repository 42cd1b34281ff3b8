#include "gfnf/field.hpp"

#include <algorithm>
#include <charconv>
#include <utility>

namespace gfnf {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint32_t d = 3; std::uint64_t(d) * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

// q = p^k with an overflow/size guard; element indices must fit 31 bits.
std::uint32_t checked_order(std::uint32_t p, std::uint32_t k) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > (std::uint64_t(1) << 31)) {
      throw Error(ErrorKind::InvalidArgument, "field order p^k exceeds 2^31");
    }
  }
  return static_cast<std::uint32_t>(q);
}

// Monic irreducibles over Z_p for the default table, low-to-high coefficients.
std::optional<std::vector<std::uint32_t>> default_modulus(std::uint32_t q) {
  switch (q) {
    case 4: return std::vector<std::uint32_t>{1, 1, 1};            // t^2+t+1
    case 8: return std::vector<std::uint32_t>{1, 1, 0, 1};         // t^3+t+1
    case 9: return std::vector<std::uint32_t>{1, 0, 1};            // t^2+1
    case 16: return std::vector<std::uint32_t>{1, 1, 0, 0, 1};     // t^4+t+1
    case 25: return std::vector<std::uint32_t>{2, 0, 1};           // t^2+2
    case 27: return std::vector<std::uint32_t>{1, 2, 0, 1};        // t^3+2t+1
    default: return std::nullopt;
  }
}

// Remainder of a mod b over Z_p, b monic. Both low-to-high, a is consumed.
std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> a,
                                    const std::vector<std::uint32_t>& b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t j = 0; j <= db; ++j) {
        std::uint64_t t = std::uint64_t(lead) * b[j] % p;
        a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - t) % p);
      }
    }
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// Trial division by every monic polynomial of degree 1..k/2.
bool is_irreducible(const std::vector<std::uint32_t>& modulus, std::uint32_t p) {
  const std::size_t k = modulus.size() - 1;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<std::uint32_t> divisor(d + 1, 0);
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      divisor[d] = 1;
      if (poly_rem(modulus, divisor, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FieldPtr Field::create(std::uint32_t p, std::uint32_t k,
                       std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) {
    throw Error(ErrorKind::NonPrimeCharacteristic,
                "characteristic " + std::to_string(p) + " is not prime");
  }
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");
  const std::uint32_t q = checked_order(p, k);

  std::vector<std::uint32_t> mod;
  if (k == 1) {
    mod.clear();  // ignored for prime fields
  } else if (modulus.has_value()) {
    mod = std::move(*modulus);
    if (mod.size() != k + 1 || mod.back() != 1) {
      throw Error(ErrorKind::InvalidArgument,
                  "modulus must be monic of degree k with k+1 coefficients");
    }
    for (std::uint32_t c : mod) {
      if (c >= p) throw Error(ErrorKind::InvalidArgument, "modulus coefficient out of [0,p)");
    }
  } else {
    auto def = default_modulus(q);
    if (!def) {
      throw Error(ErrorKind::NoDefaultModulus,
                  "no built-in modulus for q = " + std::to_string(q) + "; supply one");
    }
    mod = std::move(*def);
  }

  if (k > 1 && !is_irreducible(mod, p)) {
    throw Error(ErrorKind::ReducibleModulus, "modulus is reducible over Z_" + std::to_string(p));
  }

  return FieldPtr(new Field(p, k, std::move(mod)));
}

Field::Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), q_(checked_order(p, k)), modulus_(std::move(modulus)) {
  if (k_ > 1 && q_ <= 256) build_tables();
}

FieldElement Field::element(std::uint32_t index) const {
  if (index >= q_) {
    throw Error(ErrorKind::InvalidArgument,
                "element index " + std::to_string(index) + " out of [0," + std::to_string(q_) + ")");
  }
  return {index};
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out.push_back({i});
  return out;
}

std::vector<std::uint32_t> Field::decode(FieldElement a) const {
  std::vector<std::uint32_t> coeffs(k_, 0);
  std::uint32_t v = a.index;
  for (std::uint32_t i = 0; i < k_; ++i) {
    coeffs[i] = v % p_;
    v /= p_;
  }
  return coeffs;
}

FieldElement Field::encode(const std::vector<std::uint32_t>& coeffs) const {
  std::uint64_t index = 0;
  std::uint64_t base = 1;
  for (std::uint32_t c : coeffs) {
    index += std::uint64_t(c) * base;
    base *= p_;
  }
  return {narrow(index)};
}

FieldElement Field::add_generic(FieldElement a, FieldElement b) const {
  auto ca = decode(a);
  auto cb = decode(b);
  for (std::uint32_t i = 0; i < k_; ++i) ca[i] = (ca[i] + cb[i]) % p_;
  return encode(ca);
}

FieldElement Field::neg_generic(FieldElement a) const {
  auto ca = decode(a);
  for (std::uint32_t i = 0; i < k_; ++i) ca[i] = ca[i] == 0 ? 0 : p_ - ca[i];
  return encode(ca);
}

FieldElement Field::mul_generic(FieldElement a, FieldElement b) const {
  auto ca = decode(a);
  auto cb = decode(b);
  std::vector<std::uint32_t> prod(2 * k_ - 1, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    if (ca[i] == 0) continue;
    for (std::uint32_t j = 0; j < k_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(ca[i]) * cb[j]) % p_);
    }
  }
  auto rem = poly_rem(std::move(prod), modulus_, p_);
  rem.resize(k_, 0);
  return encode(rem);
}

void Field::build_tables() {
  const std::size_t q = q_;
  add_table_.resize(q * q);
  mul_table_.resize(q * q);
  neg_table_.resize(q);
  inv_table_.assign(q, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    neg_table_[a] = neg_generic({a}).index;
    for (std::uint32_t b = 0; b < q_; ++b) {
      add_table_[std::size_t(a) * q + b] = add_generic({a}, {b}).index;
      const std::uint32_t m = mul_generic({a}, {b}).index;
      mul_table_[std::size_t(a) * q + b] = m;
      if (m == 1) inv_table_[a] = b;
    }
  }
  has_tables_ = true;
}

FieldElement Field::inv(FieldElement a) const {
  if (a.index == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (has_tables_) return {inv_table_[a.index]};
  return pow(a, q_ - 2);
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
  FieldElement result = one();
  FieldElement base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::string Field::spec_string() const {
  if (k_ == 1) return std::to_string(p_);
  std::uint64_t idx = 0;
  std::uint64_t base = 1;
  for (std::uint32_t c : modulus_) {
    idx += std::uint64_t(c) * base;
    base *= p_;
  }
  return std::to_string(p_) + "^" + std::to_string(k_) + ":m=" + std::to_string(idx);
}

namespace {

std::uint64_t parse_uint(std::string_view s, std::size_t& pos) {
  std::uint64_t value = 0;
  const std::size_t start = pos;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
    value = value * 10 + (s[pos] - '0');
    if (value > (std::uint64_t(1) << 40)) {
      throw Error(ErrorKind::FieldSpec, "number too large in field spec");
    }
    ++pos;
  }
  if (pos == start) throw Error(ErrorKind::FieldSpec, "expected a number in field spec");
  return value;
}

}  // namespace

FieldPtr parse_field_spec(std::string_view spec) {
  std::size_t pos = 0;
  const std::uint64_t p = parse_uint(spec, pos);
  std::uint64_t k = 1;
  std::optional<std::vector<std::uint32_t>> modulus;
  if (pos < spec.size() && spec[pos] == '^') {
    ++pos;
    k = parse_uint(spec, pos);
    if (k < 1) throw Error(ErrorKind::FieldSpec, "extension degree must be >= 1");
    if (pos < spec.size()) {
      if (spec.substr(pos, 3) != ":m=") {
        throw Error(ErrorKind::FieldSpec, "expected ':m=<index>' after p^k");
      }
      pos += 3;
      std::uint64_t idx = parse_uint(spec, pos);
      std::vector<std::uint32_t> coeffs(k + 1, 0);
      for (std::size_t i = 0; i <= k; ++i) {
        coeffs[i] = static_cast<std::uint32_t>(idx % p);
        idx /= p;
      }
      if (idx != 0) throw Error(ErrorKind::FieldSpec, "modulus index too large for degree k");
      modulus = std::move(coeffs);
    }
  }
  if (pos != spec.size()) {
    throw Error(ErrorKind::FieldSpec, "trailing characters in field spec '" + std::string(spec) + "'");
  }
  if (p > 0xFFFFFFFFull) throw Error(ErrorKind::FieldSpec, "characteristic too large");
  try {
    return Field::create(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k),
                         std::move(modulus));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument) throw Error(ErrorKind::FieldSpec, e.what());
    throw;
  }
}

FieldPtr field_of_order(std::uint32_t q) {
  if (q < 2) throw Error(ErrorKind::FieldSpec, "field order must be >= 2");
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (!is_prime(p)) continue;
    std::uint64_t v = q;
    std::uint32_t k = 0;
    while (v % p == 0) {
      v /= p;
      ++k;
    }
    if (v == 1) return Field::create(p, k);
    if (q % p == 0) break;  // divisible by p but not a power of it
  }
  throw Error(ErrorKind::FieldSpec, std::to_string(q) + " is not a prime power");
}

}  // namespace gfnf
