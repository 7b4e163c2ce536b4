#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "fitz/field.hpp"

namespace fitz {

// Dense polynomial over F_q, little-endian coefficients, always normalized:
// the last stored coefficient is nonzero and the zero polynomial is the
// empty sequence. degree() is nullopt for the zero polynomial, which orders
// below every finite degree.
class Poly {
 public:
  static Poly zero(FieldPtr spec);
  static Poly one(FieldPtr spec);
  static Poly x(FieldPtr spec);
  static Poly monomial(FieldPtr spec, std::uint64_t degree);
  static Poly from_coeffs(FieldPtr spec, std::vector<FqElem> coeffs);
  // Little-endian integer coefficients, reduced into the prime subfield.
  static Poly from_ints(FieldPtr spec, std::initializer_list<std::int64_t> coeffs);
  static Poly from_ints(FieldPtr spec, const std::vector<std::int64_t>& coeffs);
  static Poly constant(FqElem c);

  const FieldPtr& spec() const { return spec_; }
  std::optional<std::int64_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const;
  const std::vector<FqElem>& coeffs() const { return coeffs_; }
  // Coefficient of x^i; zero beyond the degree.
  FqElem coeff(std::uint64_t i) const;
  const FqElem& leading() const;  // DivisionByZero on the zero polynomial

  // Canonical rendering, highest degree first: "x^4+x+1", "2*x^2+[1,1]*x".
  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator*(const FqElem& c) const;

  struct DivMod {
    Poly quotient;
    Poly remainder;
  };
  // Exact long division by a nonzero divisor; deg(remainder) < deg(divisor).
  static DivMod divmod(const Poly& a, const Poly& d);

 private:
  Poly(FieldPtr spec, std::vector<FqElem> coeffs)
      : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {}
  void normalize();

  FieldPtr spec_;
  std::vector<FqElem> coeffs_;
};

FqElem eval(const Poly& a, const FqElem& point);

Poly derivative(const Poly& a);

// Monic gcd via Euclid; BothZero when both inputs vanish.
Poly gcd(const Poly& a, const Poly& b);

// base^n mod modulus, binary exponentiation with reduction each step.
Poly powmod(const Poly& base, std::uint64_t n, const Poly& modulus);

// q(x) = p(0)^{-1} x^k p(1/x): coefficients reversed, rescaled monic.
// Requires p monic with p(0) != 0; roots of the result invert those of p.
Poly monic_reciprocal(const Poly& p);

std::uint64_t nonzero_count(const Poly& a);

// Rabin's test: a (monic, degree >= 1) is irreducible over F_q iff
// x^{q^k} = x (mod a) and gcd(x^{q^{k/r}} - x, a) = 1 for every prime r | k.
bool is_irreducible(const Poly& a);

}  // namespace fitz
