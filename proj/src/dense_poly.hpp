#pragma once

// Dense polynomials over Z used by the gcd machinery. A UPoly is indexed by
// degree; a BPoly is a polynomial in q whose coefficients are UPolys in t.
// Both are kept trimmed: no trailing zero coefficients, zero is empty.

#include <optional>
#include <tuple>
#include <vector>

#include <gmpxx.h>

#include "mlr/qt_algebra.hpp"

namespace mlr::detail {

using UPoly = std::vector<mpz_class>;
using BPoly = std::vector<UPoly>;

// Ordinary polynomial (all exponents >= 0) to dense form and back.
BPoly to_dense(const LaurentPoly& p);
LaurentPoly from_dense(const BPoly& p);

std::optional<UPoly> exact_div(const UPoly& a, const UPoly& b);
std::optional<BPoly> exact_div(const BPoly& a, const BPoly& b);

UPoly gcd(const UPoly& a, const UPoly& b);

struct GcdResult {
    BPoly g;
    BPoly a_over_g;
    BPoly b_over_g;
};

// gcd with cofactors; both inputs nonzero.
GcdResult gcd_cofactors(const BPoly& a, const BPoly& b);

// Reference implementation used as fallback and in tests.
BPoly gcd_prs(const BPoly& a, const BPoly& b);

}  // namespace mlr::detail
