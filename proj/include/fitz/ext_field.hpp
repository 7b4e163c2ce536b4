#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "fitz/field.hpp"
#include "fitz/poly.hpp"

namespace fitz {

class ExtField;
using ExtFieldPtr = std::shared_ptr<const ExtField>;

// F_{q^k} presented as F_q[x]/(modulus). The modulus must be monic of degree
// k >= 1; irreducibility is the caller's contract and is not re-verified
// here. A reducible modulus surfaces later as ReducibleModulus, either from
// trace() landing outside the base field or from a noninvertible element.
class ExtField : public std::enable_shared_from_this<ExtField> {
 public:
  static ExtFieldPtr make(Poly modulus);

  const FieldPtr& base() const { return base_; }
  const Poly& modulus() const { return modulus_; }
  unsigned k() const { return k_; }
  // q^k - 1; construction rejects fields where this exceeds 2^63 - 1.
  std::uint64_t group_order() const { return group_order_; }
  std::uint64_t element_count() const { return group_order_ + 1; }

  bool same_as(const ExtField& other) const;

 private:
  explicit ExtField(Poly modulus);

  FieldPtr base_;
  Poly modulus_;
  unsigned k_;
  std::uint64_t group_order_;
};

// Element of F_{q^k}: k base-field coordinates, little-endian residue of
// degree < k. Arithmetic always reduces modulo the defining polynomial.
class ExtElem {
 public:
  static ExtElem zero(ExtFieldPtr field);
  static ExtElem one(ExtFieldPtr field);
  // The class of x, a root of the defining polynomial.
  static ExtElem class_of_x(ExtFieldPtr field);
  static ExtElem embed(ExtFieldPtr field, const FqElem& c);
  static ExtElem from_coords(ExtFieldPtr field, std::vector<FqElem> coords);
  static ExtElem from_index(ExtFieldPtr field, std::uint64_t index);
  static ExtElem from_poly(ExtFieldPtr field, const Poly& value);

  const ExtFieldPtr& field() const { return field_; }
  const std::vector<FqElem>& coords() const { return coords_; }
  std::uint64_t to_index() const;
  bool is_zero() const;
  bool is_one() const;
  Poly to_poly() const;
  std::string to_string() const;

  friend bool operator==(const ExtElem& a, const ExtElem& b);
  friend bool operator!=(const ExtElem& a, const ExtElem& b) { return !(a == b); }

  ExtElem operator-() const;
  friend ExtElem operator+(const ExtElem& a, const ExtElem& b);
  friend ExtElem operator-(const ExtElem& a, const ExtElem& b);
  friend ExtElem operator*(const ExtElem& a, const ExtElem& b);
  ExtElem operator*(const FqElem& c) const;

  // Multiplication by the class of x: shift one slot and reduce.
  ExtElem times_x() const;

 private:
  ExtElem(ExtFieldPtr field, std::vector<FqElem> coords)
      : field_(std::move(field)), coords_(std::move(coords)) {}

  ExtFieldPtr field_;
  std::vector<FqElem> coords_;
};

// Extended Euclid against the modulus; DivisionByZero on zero,
// ReducibleModulus if a nonzero element turns out noninvertible.
ExtElem inv(const ExtElem& a);

ExtElem pow(const ExtElem& a, std::uint64_t n);

// Tr(x) = sum of x^{q^i} for i = 0..k-1, by iterated q-th-power Frobenius.
// The result must land in the base field; otherwise ReducibleModulus.
FqElem trace(const ExtElem& x);

// Exact multiplicative order given the factorization of q^k - 1: start from
// the group order and divide out each prime while the power stays 1.
std::uint64_t multiplicative_order(const ExtElem& x,
                                   std::span<const PrimePower> factored_group_order);

// Horner evaluation of a base-field polynomial at an extension point.
ExtElem eval_ext(const Poly& a, const ExtElem& point);

// Linear form equal to the trace: Tr(x) = sum_i x_i * Tr(basis_i). The basis
// traces are computed once with trace(); useful in per-coefficient loops.
class TraceForm {
 public:
  explicit TraceForm(const ExtFieldPtr& field);
  FqElem operator()(const ExtElem& x) const;

 private:
  std::vector<FqElem> basis_traces_;
};

// Fiber sizes of the trace map: counts[i] = #{x : Tr(x) has index i}.
// Enumerates all q^k elements; guarded by a cap on the field size.
std::vector<std::uint64_t> trace_fiber_census(const ExtFieldPtr& field,
                                              std::uint64_t cap = 1u << 20);

}  // namespace fitz
