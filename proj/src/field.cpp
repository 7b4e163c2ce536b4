#include "fitz/field.hpp"

#include <algorithm>
#include <sstream>

#include "fitz/poly.hpp"

namespace fitz {
namespace {

constexpr std::uint64_t kFieldLimit = (std::uint64_t{1} << 63) - 1;

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;  // a, b < p < 2^63, no wrap
  return s >= p ? s - p : s;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (n) {
    if (n & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    n >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  // extended Euclid over the integers; p prime, 0 < a < p
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p);
  std::int64_t new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t qt = r / new_r;
    t = std::exchange(new_t, t - qt * new_t);
    r = std::exchange(new_r, r - qt * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

// --- dense polynomials over F_p as digit vectors, little-endian ---

using Digits = std::vector<std::uint64_t>;

int deg_of(const Digits& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

void strip(Digits& a) { a.resize(static_cast<std::size_t>(deg_of(a) + 1)); }

Digits mul_digits(const Digits& a, const Digits& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Digits out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = addmod(out[i + j], mulmod(a[i], b[j], p), p);
  }
  strip(out);
  return out;
}

// in-place a mod d, d nonzero
void mod_digits(Digits& a, const Digits& d, std::uint64_t p) {
  int dd = deg_of(d);
  std::uint64_t lead_inv = invmod(d[static_cast<std::size_t>(dd)], p);
  for (int i = deg_of(a); i >= dd; --i) {
    std::uint64_t c = a[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    std::uint64_t f = mulmod(c, lead_inv, p);
    for (int j = 0; j <= dd; ++j) {
      std::size_t idx = static_cast<std::size_t>(i - dd + j);
      a[idx] = submod(a[idx], mulmod(f, d[static_cast<std::size_t>(j)], p), p);
    }
  }
  strip(a);
}

Digits divmod_digits(Digits& a, const Digits& d, std::uint64_t p) {
  int dd = deg_of(d);
  int da = deg_of(a);
  if (da < dd) return {};
  Digits quot(static_cast<std::size_t>(da - dd + 1), 0);
  std::uint64_t lead_inv = invmod(d[static_cast<std::size_t>(dd)], p);
  for (int i = da; i >= dd; --i) {
    std::uint64_t c = a[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    std::uint64_t f = mulmod(c, lead_inv, p);
    quot[static_cast<std::size_t>(i - dd)] = f;
    for (int j = 0; j <= dd; ++j) {
      std::size_t idx = static_cast<std::size_t>(i - dd + j);
      a[idx] = submod(a[idx], mulmod(f, d[static_cast<std::size_t>(j)], p), p);
    }
  }
  strip(a);
  return quot;
}

Digits sub_digits(const Digits& a, const Digits& b, std::uint64_t p) {
  Digits out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t av = i < a.size() ? a[i] : 0;
    std::uint64_t bv = i < b.size() ? b[i] : 0;
    out[i] = submod(av, bv, p);
  }
  strip(out);
  return out;
}

// inverse of a modulo the (irreducible) modulus, both digit vectors
Digits inv_digits(const Digits& a, const Digits& modulus, std::uint64_t p) {
  Digits r0 = modulus, r1 = a;
  strip(r1);
  Digits s0 = {}, s1 = {1};
  while (!r1.empty()) {
    Digits r0_copy = r0;
    Digits q = divmod_digits(r0_copy, r1, p);
    r0 = std::exchange(r1, std::move(r0_copy));
    Digits qs1 = mul_digits(q, s1, p);
    s0 = std::exchange(s1, sub_digits(s0, qs1, p));
  }
  if (deg_of(r0) != 0)
    fail(ErrorKind::ReducibleModulus,
         "element is not invertible; the field modulus is not irreducible");
  std::uint64_t scale = invmod(r0[0], p);
  for (auto& c : s0) c = mulmod(c, scale, p);
  mod_digits(s0, modulus, p);
  return s0;
}

Digits to_digits(std::span<const std::uint64_t> v) { return Digits(v.begin(), v.end()); }

void check_same_spec(const FqElem& a, const FqElem& b) {
  if (a.spec().get() == b.spec().get()) return;
  if (!a.spec()->same_as(*b.spec()))
    fail(ErrorKind::SpecMismatch, "operands belong to different fields");
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t i = 5; i <= n / i; i += 6) {
    if (n % i == 0 || n % (i + 2) == 0) return false;
  }
  return true;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp,
                                         std::uint64_t limit) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) return std::nullopt;
    r *= base;
    if (r > limit) return std::nullopt;
  }
  return r;
}

std::string FieldSpec::modulus_text() const {
  if (e_ == 1) return {};
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(modulus_.size()) - 1; i >= 0; --i) {
    std::uint64_t c = modulus_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c;
    } else {
      if (c != 1) os << c << '*';
      os << 't';
      if (i > 1) os << '^' << i;
    }
  }
  if (first) os << '0';
  return os.str();
}

bool FieldSpec::same_as(const FieldSpec& other) const {
  return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
}

FieldPtr make_prime_field(std::uint64_t p) {
  if (p > kFieldLimit) fail(ErrorKind::Overflow, "characteristic exceeds the 63-bit bound");
  if (!is_prime_u64(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  return FieldPtr(new FieldSpec(p, 1, p, {}));
}

FieldPtr make_extension_field(std::uint64_t p, unsigned e) {
  if (e < 2)
    fail(ErrorKind::OutOfRange, "extension degree must be >= 2; use make_prime_field");
  if (p > kFieldLimit) fail(ErrorKind::Overflow, "characteristic exceeds the 63-bit bound");
  if (!is_prime_u64(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  auto q = checked_pow(p, e, kFieldLimit);
  if (!q) fail(ErrorKind::Overflow, "p^e exceeds the 63-bit bound");

  // scan monic degree-e candidates in base-p order of their lower digits
  FieldPtr prime = make_prime_field(p);
  for (std::uint64_t v = 0;; ++v) {
    std::vector<FqElem> coeffs;
    coeffs.reserve(e + 1);
    std::uint64_t rest = v;
    for (unsigned i = 0; i < e; ++i) {
      coeffs.push_back(FqElem::from_int(prime, static_cast<std::int64_t>(rest % p)));
      rest /= p;
    }
    coeffs.push_back(FqElem::one(prime));
    Poly candidate = Poly::from_coeffs(prime, std::move(coeffs));
    if (is_irreducible(candidate)) {
      std::vector<std::uint64_t> digits(e + 1, 0);
      for (unsigned i = 0; i <= e; ++i) digits[i] = candidate.coeff(i).residues()[0];
      return FieldPtr(new FieldSpec(p, e, *q, std::move(digits)));
    }
    // an irreducible of every degree exists, so the scan terminates
  }
}

FqElem FqElem::zero(FieldPtr spec) {
  std::vector<std::uint64_t> c(spec->ext_degree(), 0);
  return FqElem(std::move(spec), std::move(c));
}

FqElem FqElem::one(FieldPtr spec) {
  std::vector<std::uint64_t> c(spec->ext_degree(), 0);
  c[0] = 1;
  return FqElem(std::move(spec), std::move(c));
}

FqElem FqElem::from_int(FieldPtr spec, std::int64_t n) {
  std::int64_t p = static_cast<std::int64_t>(spec->characteristic());
  std::int64_t r = n % p;
  if (r < 0) r += p;
  std::vector<std::uint64_t> c(spec->ext_degree(), 0);
  c[0] = static_cast<std::uint64_t>(r);
  return FqElem(std::move(spec), std::move(c));
}

FqElem FqElem::from_index(FieldPtr spec, std::uint64_t index) {
  if (index >= spec->q()) fail(ErrorKind::OutOfRange, "element index exceeds q");
  std::uint64_t p = spec->characteristic();
  std::vector<std::uint64_t> c(spec->ext_degree(), 0);
  for (auto& digit : c) {
    digit = index % p;
    index /= p;
  }
  return FqElem(std::move(spec), std::move(c));
}

FqElem FqElem::from_residues(FieldPtr spec, std::vector<std::uint64_t> residues) {
  if (residues.size() != spec->ext_degree())
    fail(ErrorKind::CoefficientOutOfField, "residue vector length must equal e");
  for (auto r : residues)
    if (r >= spec->characteristic())
      fail(ErrorKind::CoefficientOutOfField, "residue exceeds the characteristic");
  return FqElem(std::move(spec), std::move(residues));
}

FqElem FqElem::generator(FieldPtr spec) {
  if (spec->ext_degree() < 2)
    fail(ErrorKind::OutOfRange, "prime fields have no polynomial generator");
  std::uint64_t p = spec->characteristic();
  return from_index(std::move(spec), p);
}

std::uint64_t FqElem::to_index() const {
  std::uint64_t p = spec_->characteristic();
  std::uint64_t idx = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) idx = idx * p + coeffs_[i];
  return idx;
}

bool FqElem::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint64_t c) { return c == 0; });
}

bool FqElem::is_one() const {
  if (coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](std::uint64_t c) { return c == 0; });
}

std::string FqElem::to_string() const {
  if (spec_->ext_degree() == 1) return std::to_string(coeffs_[0]);
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coeffs_[i]);
  }
  s += ']';
  return s;
}

bool operator==(const FqElem& a, const FqElem& b) {
  check_same_spec(a, b);
  return a.coeffs_ == b.coeffs_;
}

FqElem FqElem::operator-() const {
  std::uint64_t p = spec_->characteristic();
  std::vector<std::uint64_t> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = submod(0, coeffs_[i], p);
  return FqElem(spec_, std::move(c));
}

FqElem operator+(const FqElem& a, const FqElem& b) {
  check_same_spec(a, b);
  std::uint64_t p = a.spec_->characteristic();
  std::vector<std::uint64_t> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = addmod(a.coeffs_[i], b.coeffs_[i], p);
  return FqElem(a.spec_, std::move(c));
}

FqElem operator-(const FqElem& a, const FqElem& b) {
  check_same_spec(a, b);
  std::uint64_t p = a.spec_->characteristic();
  std::vector<std::uint64_t> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = submod(a.coeffs_[i], b.coeffs_[i], p);
  return FqElem(a.spec_, std::move(c));
}

FqElem operator*(const FqElem& a, const FqElem& b) {
  check_same_spec(a, b);
  std::uint64_t p = a.spec_->characteristic();
  unsigned e = a.spec_->ext_degree();
  if (e == 1) {
    return FqElem(a.spec_, {mulmod(a.coeffs_[0], b.coeffs_[0], p)});
  }
  Digits prod = mul_digits(a.coeffs_, b.coeffs_, p);
  mod_digits(prod, to_digits(a.spec_->modulus_digits()), p);
  prod.resize(e, 0);
  return FqElem(a.spec_, std::move(prod));
}

FqElem inv(const FqElem& a) {
  if (a.is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  const FieldPtr& spec = a.spec();
  std::uint64_t p = spec->characteristic();
  if (spec->ext_degree() == 1) {
    return FqElem::from_residues(spec, {invmod(a.residues()[0], p)});
  }
  Digits d = inv_digits(to_digits(a.residues()), to_digits(spec->modulus_digits()), p);
  d.resize(spec->ext_degree(), 0);
  return FqElem::from_residues(spec, std::move(d));
}

FqElem pow(const FqElem& a, std::uint64_t n) {
  FqElem result = FqElem::one(a.spec());
  FqElem base = a;
  while (n) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

}  // namespace fitz
