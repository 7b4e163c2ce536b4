#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fitz/field.hpp"
#include "fitz/fitzgerald.hpp"
#include "fitz/poly.hpp"

namespace fitz {

struct Factorization {
  std::vector<PrimePower> pairs;  // primes strictly increasing
  std::uint64_t n = 1;            // product of prime^multiplicity
};

// Trial-division factorization; requires 1 <= n < 2^63.
Factorization factorize(std::uint64_t n);

std::uint64_t euler_phi(const Factorization& f);

// -1, 0 or 1; zero when any prime appears with multiplicity > 1.
int moebius(const Factorization& f);

// The q^k monic degree-k polynomials in lexicographic coefficient order:
// index read as a base-q integer, constant term least significant.
class MonicRange {
 public:
  MonicRange(FieldPtr spec, unsigned k, std::uint64_t cap = std::uint64_t{1} << 20);

  std::uint64_t size() const { return size_; }
  Poly at(std::uint64_t index) const;

  class iterator {
   public:
    using value_type = Poly;
    using difference_type = std::ptrdiff_t;

    iterator(const MonicRange* range, std::uint64_t index)
        : range_(range), index_(index) {}
    Poly operator*() const { return range_->at(index_); }
    iterator& operator++() { ++index_; return *this; }
    iterator operator++(int) { iterator old = *this; ++index_; return old; }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.index_ == b.index_;
    }

   private:
    const MonicRange* range_;
    std::uint64_t index_;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size_}; }

 private:
  FieldPtr spec_;
  unsigned k_;
  std::uint64_t size_;
};

struct ClassificationRow {
  Poly poly;
  bool irreducible = false;
  bool applicable = false;  // p(0) != 0 and p(1) != 0
  std::optional<FitzgeraldReport> report;
};

struct ClassifySummary {
  std::uint64_t total = 0;
  std::uint64_t irreducible_count = 0;
  std::uint64_t applicable_irreducible_count = 0;
  std::uint64_t primitive_count = 0;
  // Irreducibles rejected by the p(1) gate; zero over F_2 for k >= 2.
  std::uint64_t irreducible_p1_zero_count = 0;

  // External count oracles, not part of the criterion itself:
  // #irreducible = (1/k) sum_{d|k} mu(d) q^{k/d}, #primitive = phi(q^k-1)/k.
  std::uint64_t expected_irreducible = 0;
  std::uint64_t expected_primitive = 0;
  bool counts_ok = false;

  bool all_agree = false;
};

struct ClassifyOptions {
  unsigned jobs = 1;
  std::uint64_t row_cap = std::uint64_t{1} << 20;
  FitzgeraldOptions fitz = {};
};

struct ClassifyResult {
  std::vector<ClassificationRow> rows;
  ClassifySummary summary;
};

// Runs the criterion plus the order test on every applicable monic
// irreducible of degree k over the given field. Rows cover all q^k monic
// candidates exactly once, in enumeration order regardless of job count.
ClassifyResult classify_all(const FieldPtr& spec, unsigned k,
                            const ClassifyOptions& opts = {});

// First monic irreducible of degree k in enumeration order.
Poly first_irreducible(const FieldPtr& spec, unsigned k);

// First monic irreducible that also passes the p(0), p(1) gates.
Poly first_applicable_irreducible(const FieldPtr& spec, unsigned k);

}  // namespace fitz
