#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "fitz/ext_field.hpp"
#include "fitz/field.hpp"
#include "fitz/poly.hpp"

namespace fitz {

// Default ceiling on dense coefficient material (number of stored
// coefficients). Streaming count-only paths are exempt.
inline constexpr std::uint64_t kDefaultDenseCap = std::uint64_t{1} << 24;

// Verdicts and cross-checks for one input polynomial p of degree k over F_q:
// the nonzero-term count of g(x) = (x^m - 1)/((x - 1) p(x)) with m = q^k - 1
// decides primitivity, and the multiplicative-order test plus the trace
// identity corroborate it.
struct FitzgeraldReport {
  unsigned k = 0;
  std::uint64_t m = 0;
  std::uint64_t expected_count = 0;  // (q-1) q^{k-1} - 1 = m - q^{k-1}
  std::uint64_t actual_count = 0;    // nonzero terms of g
  bool fitzgerald_primitive = false;

  std::optional<std::uint64_t> order_e;  // order of the class of x mod p
  std::optional<bool> order_primitive;
  std::optional<bool> agree;  // fitzgerald_primitive == order_primitive

  std::optional<FqElem> trace_of_beta;
  std::optional<bool> lagrange_ok;

  std::optional<bool> stream_ok;  // division stream == trace stream
};

struct FitzgeraldOptions {
  bool with_order = true;
  bool with_lagrange = true;
  bool with_stream_check = false;
  std::uint64_t dense_cap = kDefaultDenseCap;
  // Factorization of m = q^k - 1, if the caller already has it.
  std::span<const PrimePower> factored_m = {};
};

// Coefficients of g indexed by t = 0..m-1, zero-padded above deg(g),
// tagged with which of the two routes produced them.
struct CoefficientStream {
  enum class Source { division, trace };
  Source source;
  std::uint64_t m = 0;
  std::vector<FqElem> values;
};

bool streams_equal(const CoefficientStream& a, const CoefficientStream& b);

// The exact quotient (x^m - 1)/((x - 1) p(x)), by streaming synthetic
// division: the dividend is virtual and only a (k+2)-coefficient remainder
// window is kept while quotient coefficients are emitted top-down. The final
// remainder must vanish; a nonzero one means the preconditions were violated
// (p not irreducible). Gates: p(0) != 0 and p(1) != 0, both NotApplicable.
Poly compute_g(const Poly& p, std::uint64_t dense_cap = kDefaultDenseCap);

// Count-only form of the same division; memory stays O(k), no cap.
std::uint64_t count_g_nonzero(const Poly& p);

CoefficientStream division_coefficient_stream(const Poly& p,
                                              std::uint64_t dense_cap = kDefaultDenseCap);

// Coefficient of x^t in g via the trace identity:
//   coeff_t = p(0)^{-1} (Tr(beta) - Tr(beta alpha^{t+1})),
// where alpha is the class of x in F_q[x]/(q(x)), q the monic reciprocal of
// p, and beta = alpha^{k-1} / (q'(alpha)(1 - alpha)). The running product
// beta alpha^{t+1} advances by one extension multiplication per step.
CoefficientStream trace_coefficient_stream(const Poly& p,
                                           std::uint64_t dense_cap = kDefaultDenseCap);

// Count of nonzero trace-route coefficients, streaming, no cap.
std::uint64_t trace_count_nonzero(const Poly& p);

struct BetaPair {
  ExtElem alpha;
  ExtElem beta;
};

// alpha and beta as above, built in F_q[x]/(q(x)). Both inverse factors are
// nonzero: q is squarefree so q'(alpha) != 0, and q(1) != 0 keeps 1 - alpha
// invertible.
BetaPair compute_beta(const Poly& p);

struct LagrangeCheck {
  FqElem trace_of_beta;
  bool ok;
};

// Executable form of the interpolation identity Tr(beta) = 1/q(1) != 0.
LagrangeCheck lagrange_identity_check(const Poly& p);

// First n coefficients of the power series 1/p(x) by the convolution
// recurrence p * series = 1. Requires p(0) != 0.
std::vector<FqElem> inverse_series_coefficients(const Poly& p, std::size_t n);

// Checks coeffs[j] = p(0)^{-1} Tr(alpha^{k-1+j} / q'(alpha)) for all j,
// the partial-fraction form of the series. p must be monic irreducible
// with p(0) != 0.
bool inverse_series_matches_trace_form(const Poly& p,
                                       std::span<const FqElem> coeffs);

struct OrderResult {
  std::uint64_t e;
  bool primitive;
};

// Multiplicative order of the class of x in F_q[x]/(p); primitive iff it
// equals q^k - 1. The class of x mod p and a root of the reciprocal have
// equal order, so this matches the criterion's alpha.
OrderResult order_primitivity_test(const Poly& p,
                                   std::span<const PrimePower> factored_m);

// With e the order above and N = m - nonzero_count(g): N must be a multiple
// of m/e, and N = q^{k-1} exactly when e = m.
bool order_divisibility_check(const Poly& p);

// Full criterion: irreducibility and applicability gates, the count verdict,
// and the requested cross-checks.
FitzgeraldReport fitzgerald_test(const Poly& p, const FitzgeraldOptions& opts = {});

}  // namespace fitz
