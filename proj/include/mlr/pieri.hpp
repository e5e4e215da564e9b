#pragma once

// Pieri multiplication in the Macdonald P-basis and coefficient extraction
// by expanding P_mu in elementary symmetric functions.

#include <map>
#include <optional>
#include <vector>

#include "mlr/partitions.hpp"
#include "mlr/qt_algebra.hpp"
#include "mlr/tableaux.hpp"

namespace mlr {

// Sparse map from partitions to nonzero coefficients.
class Expansion {
public:
    using Map = std::map<Partition, QtRational>;

    Expansion() = default;
    Expansion(std::initializer_list<Map::value_type> init);

    // Adds c to the coefficient of p; entries that become zero are erased.
    void add(const Partition& p, const QtRational& c);
    QtRational coeff(const Partition& p) const;
    const Map& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool operator==(const Expansion& o) const { return terms_ == o.terms_; }

private:
    Map terms_;
};

// Terms index P_nu.
using PBasisExpansion = Expansion;
// Terms index the partition eta' of e_{eta'} = e_{eta'_1} e_{eta'_2} ...
using EBasisExpansion = Expansion;

// (1 - q^a t^{l+1}) / (1 - q^{a+1} t^l) for s in lambda, 1 otherwise.
QtRational b_factor(const Partition& lambda, Cell s);

QtRational psi_prime(const Partition& lambda, const Partition& nu);  // raises NotVerticalStrip
QtRational phi(const Partition& lambda, const Partition& nu);        // raises NotHorizontalStrip
// Coefficient of P_nu in P_lambda * P_(r), r = |nu| - |lambda|.
QtRational horizontal_coefficient(const Partition& lambda, const Partition& nu);
QtRational psi_skew(const Partition& inner, const Partition& outer);  // raises NotHorizontalStrip
QtRational psi_weight(const Tableau& T);

// Results outside [floor, ceiling] or longer than max_rows are dropped.
struct Window {
    Partition floor;
    std::optional<Partition> ceiling;
    std::optional<int> max_rows;
    bool admits(const Partition& p) const;
};

PBasisExpansion multiply_by_e(const PBasisExpansion& exp, int r, const Window& window = {});
PBasisExpansion multiply_by_onerow(const PBasisExpansion& exp, int r);

// Coefficients d with P_mu = sum d_rho e_rho modulo P_kappa with more than
// row_cap rows; rho runs over rho >= mu' in dominance with rho_1 <= row_cap.
// Results are cached per (mu, min(row_cap, |mu|)); safe to call concurrently.
// Raises CapTooSmall when row_cap < length(mu).
EBasisExpansion p_in_e_basis(const Partition& mu, int row_cap);
void clear_e_basis_cache();

struct BruteforceOptions {
    bool prune = true;  // window [lambda, nu] and the row cap; false expands everything
};

// c^nu_{lambda mu}(q, t); zero for impossible triples.
QtRational coeff_bruteforce(const Partition& lambda, const Partition& mu, const Partition& nu,
                            BruteforceOptions options = {});

// All nu with nu / lambda a vertical (resp. horizontal) strip of r boxes.
std::vector<Partition> vertical_strips(const Partition& lambda, int r, std::optional<int> max_rows = std::nullopt);
std::vector<Partition> horizontal_strips(const Partition& lambda, int r);

}  // namespace mlr
