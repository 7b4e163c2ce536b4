#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fitz/enumeration.hpp"
#include "fitz/field.hpp"

namespace fitz {

struct PropertyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  unsigned jobs = 1;
  // 0 checks stream equality on every applicable irreducible; otherwise a
  // fixed-seed sample of this size.
  std::uint64_t stream_sample = 0;
  std::uint64_t seed = 0x51f7'5eedULL;
  std::uint64_t row_cap = std::uint64_t{1} << 20;
  std::uint64_t dense_cap = kDefaultDenseCap;
};

// One full-sweep invariant suite for (F_q, k): count identities, verdict
// agreement, the trace identity, the divisibility law, and elementwise
// equality of the division- and trace-sourced coefficient streams.
std::vector<PropertyCheck> verify_sweep(const FieldPtr& spec, unsigned k,
                                        const VerifyOptions& opts = {});

}  // namespace fitz
