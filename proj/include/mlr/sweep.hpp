#pragma once

// Exhaustive comparison of the closed formula with the Pieri brute force.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "mlr/partitions.hpp"
#include "mlr/qt_algebra.hpp"

namespace mlr {

struct SweepConfig {
    int max_mu_size = 5;
    int box_rows = 4;  // lambda fits in box_rows x box_cols; chi has box_rows entries
    int box_cols = 4;
    std::vector<std::pair<mpq_class, mpq_class>> eval_points;
    int workers = 1;
    bool one_column_mu = false;
    bool symbolic = true;  // false runs only the evaluation screen
};

struct SweepInstance {
    Partition lambda;
    Partition mu;
    Composition chi;
    Partition nu;
};

// All (lambda, mu, chi) in range with lambda + chi a partition and K = 1,
// in canonical order.
std::vector<SweepInstance> sweep_instances(const SweepConfig& config);

struct InstanceResult {
    SweepInstance instance;
    bool nonzero = false;
    bool formula_ok = true;   // canonical equality with the brute force
    bool schur_ok = true;     // q = t image is the LR count, which is 0 or 1
    bool stanley_ok = true;   // checked for nonzero coefficients
    bool eval_ok = true;      // agreement at every configured point
    int poles = 0;            // evaluation points skipped as poles
    std::string error;
    QtRational formula;
    bool passed() const { return formula_ok && schur_ok && stanley_ok && eval_ok && error.empty(); }
};

InstanceResult check_instance(const SweepInstance& instance, const SweepConfig& config);

struct SweepSummary {
    std::vector<InstanceResult> results;  // canonical order
    int checked = 0;
    int passed = 0;
    int failed = 0;
    int nonzero = 0;
};

// Instances are assigned statically to workers by index; results are merged
// in canonical order so the summary does not depend on the worker count.
SweepSummary run_sweep(const SweepConfig& config, const std::function<void(int done, int total)>& progress = {});

}  // namespace mlr
