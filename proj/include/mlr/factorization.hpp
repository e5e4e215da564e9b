#pragma once

// Closed-form Macdonald Littlewood-Richardson coefficients for weights with a
// unique semistandard tableau, and their hook-binomial (Stanley) form.

#include <vector>

#include "mlr/partitions.hpp"
#include "mlr/qt_algebra.hpp"
#include "mlr/tableaux.hpp"

namespace mlr {

// Column m contains k but not j; a and b count earlier columns containing
// k but not j, and j but not k.
struct AdmissibleTriple {
    int j = 0;
    int k = 0;
    int m = 0;
    int a = 0;
    int b = 0;
    auto operator<=>(const AdmissibleTriple&) const = default;
};

// Ordered by m, then k, then j.
std::vector<AdmissibleTriple> admissible_triples(const Tableau& T, int n);

// X_i = q^{lambda_i} t^{1-i}; nu = lambda + weight(T) over 1..n.
struct FormulaInput {
    Partition lambda;
    Tableau T;
    int n = 0;
    Composition chi() const { return T.weight(n); }
};

// n = length(nu), T the unique SSYT of shape mu and weight nu - lambda.
// Raises SizeMismatch when lambda is not inside nu or sizes disagree, and
// KostkaNotOne when the weight does not have exactly one tableau.
FormulaInput formula_input(const Partition& lambda, const Partition& mu, const Partition& nu);

// The two X-ratios of one admissible triple, as numerator and denominator products.
struct TripleFactor {
    AdmissibleTriple triple;
    LaurentPoly num;
    LaurentPoly den;
};
// Raises NuNotPartition and NotUniqueTableau.
std::vector<TripleFactor> formula_factors(const FormulaInput& input);

// psi_T times the product of all triple factors.
QtRational formula_coefficient(const FormulaInput& input);
QtRational formula_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// psi_T as one-row U/L ratios per rectangular block.
std::vector<SignedHook> psi_hooks(const Tableau& T);

// Signed U/L binomials whose product is formula_coefficient(input), with
// identical labels in numerator and denominator cancelled.
std::vector<SignedHook> hook_form(const FormulaInput& input);

// Removes pairs of identical hooks with opposite positions; sorted result.
std::vector<SignedHook> cancel_reciprocals(std::vector<SignedHook> hooks);

struct StanleyReport {
    bool laurent = false;   // c * prod_lambda L * prod_mu L * prod_nu U has monomial denominator
    int u_count = 0;        // numerator U factors in the cancelled multiset
    int l_count = 0;        // numerator L factors in the cancelled multiset
    bool factored = false;  // the multiset has no denominators and matches the value up to +-q^a t^b
    HookCheck monomial;
    std::vector<SignedHook> hooks;
    bool passed() const { return laurent && factored && u_count == l_count; }
};

// Raises KostkaNotOne (and SizeMismatch as formula_input).
StanleyReport stanley_check(const Partition& lambda, const Partition& mu, const Partition& nu);

}  // namespace mlr
