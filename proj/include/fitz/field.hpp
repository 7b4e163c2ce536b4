#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fitz/errors.hpp"

namespace fitz {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

// Description of the base field F_q with q = p^e. For e > 1 the field is
// modeled as F_p[t]/(modulus) where modulus is the first monic irreducible
// of degree e in the scan that reads coefficient vectors as base-p integers,
// constant term least significant. The choice is deterministic across runs.
class FieldSpec {
 public:
  std::uint64_t characteristic() const { return p_; }
  unsigned ext_degree() const { return e_; }
  std::uint64_t q() const { return q_; }

  // Digits c_0..c_e of the defining polynomial over F_p (c_e = 1).
  // Empty for prime fields.
  std::span<const std::uint64_t> modulus_digits() const { return modulus_; }

  // "t^2+t+1" style rendering of the modulus; empty string for e = 1.
  std::string modulus_text() const;

  bool same_as(const FieldSpec& other) const;

 private:
  FieldSpec(std::uint64_t p, unsigned e, std::uint64_t q,
            std::vector<std::uint64_t> modulus)
      : p_(p), e_(e), q_(q), modulus_(std::move(modulus)) {}

  std::uint64_t p_;
  unsigned e_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;

  friend FieldPtr make_prime_field(std::uint64_t p);
  friend FieldPtr make_extension_field(std::uint64_t p, unsigned e);
};

// Primality is established by trial division. Rejects composites (NotPrime)
// and p >= 2^63 (Overflow).
FieldPtr make_prime_field(std::uint64_t p);

// F_{p^e} for e >= 2; the modulus is the lexicographically first monic
// irreducible of degree e over F_p. Requires p^e < 2^63.
FieldPtr make_extension_field(std::uint64_t p, unsigned e);

// Element of F_q, stored as e residues mod p, little-endian in the field
// generator. Immutable after construction; all operations return new values.
class FqElem {
 public:
  static FqElem zero(FieldPtr spec);
  static FqElem one(FieldPtr spec);
  // n reduced mod p, embedded in the prime subfield.
  static FqElem from_int(FieldPtr spec, std::int64_t n);
  // index < q read as a base-p digit vector.
  static FqElem from_index(FieldPtr spec, std::uint64_t index);
  static FqElem from_residues(FieldPtr spec, std::vector<std::uint64_t> residues);
  // The class of the generator t; requires e > 1.
  static FqElem generator(FieldPtr spec);

  const FieldPtr& spec() const { return spec_; }
  std::span<const std::uint64_t> residues() const { return coeffs_; }
  std::uint64_t to_index() const;
  bool is_zero() const;
  bool is_one() const;

  // "3" for prime fields, "[1,2]" for extensions.
  std::string to_string() const;

  friend bool operator==(const FqElem& a, const FqElem& b);
  friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }

  FqElem operator-() const;
  friend FqElem operator+(const FqElem& a, const FqElem& b);
  friend FqElem operator-(const FqElem& a, const FqElem& b);
  friend FqElem operator*(const FqElem& a, const FqElem& b);
  FqElem& operator+=(const FqElem& b) { return *this = *this + b; }
  FqElem& operator-=(const FqElem& b) { return *this = *this - b; }
  FqElem& operator*=(const FqElem& b) { return *this = *this * b; }

 private:
  FqElem(FieldPtr spec, std::vector<std::uint64_t> coeffs)
      : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {}

  FieldPtr spec_;
  std::vector<std::uint64_t> coeffs_;  // length e, each in [0, p)
};

// Multiplicative inverse; extended Euclid on the digit vectors for e > 1,
// integer modular inverse for e = 1. Throws DivisionByZero on zero input.
FqElem inv(const FqElem& a);

// Binary exponentiation; 0^0 = 1.
FqElem pow(const FqElem& a, std::uint64_t n);

// p^e with an overflow guard; nullopt when the result would exceed limit.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp,
                                         std::uint64_t limit);

// Trial-division primality for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

}  // namespace fitz
