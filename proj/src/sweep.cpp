#include "mlr/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "mlr/factorization.hpp"
#include "mlr/pieri.hpp"
#include "mlr/tableaux.hpp"

namespace mlr {

std::vector<SweepInstance> sweep_instances(const SweepConfig& config) {
    std::vector<SweepInstance> out;
    for (const auto& lambda : partitions_in_box(config.box_rows, config.box_cols))
        for (int s = 1; s <= config.max_mu_size; ++s)
            for (const auto& mu : partitions_of(s, config.box_rows)) {
                if (config.one_column_mu && mu[1] != 1) continue;
                for (const auto& chi : compositions_of(s, config.box_rows)) {
                    if (!sum_is_partition(lambda, chi) || kostka(mu, chi) != 1) continue;
                    out.push_back({lambda, mu, chi, add(lambda, chi)});
                }
            }
    return out;
}

InstanceResult check_instance(const SweepInstance& in, const SweepConfig& config) {
    InstanceResult r;
    r.instance = in;
    try {
        const QtRational c = formula_coefficient(in.lambda, in.mu, in.nu);
        const QtRational brute = coeff_bruteforce(in.lambda, in.mu, in.nu);
        r.formula = c;
        r.nonzero = !c.is_zero();
        for (const auto& [q0, t0] : config.eval_points) {
            try {
                r.eval_ok = r.eval_ok && eval_rational(c, q0, t0) == eval_rational(brute, q0, t0);
            } catch (const PoleAtPoint&) {
                ++r.poles;
            }
        }
        if (config.symbolic) {
            r.formula_ok = c == brute;
            const QtRational lr(lr_coefficient_schur(in.lambda, in.mu, in.nu));
            r.schur_ok = specialize_q_equals_t(c) == lr && (lr.is_zero() || lr.is_one());
            if (r.nonzero) r.stanley_ok = stanley_check(in.lambda, in.mu, in.nu).passed();
        }
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    return r;
}

SweepSummary run_sweep(const SweepConfig& config, const std::function<void(int, int)>& progress) {
    const auto instances = sweep_instances(config);
    const int total = static_cast<int>(instances.size());
    SweepSummary summary;
    summary.results.resize(instances.size());
    std::atomic<int> done{0};
    std::mutex progress_mutex;
    auto work = [&](int worker, int workers) {
        for (int i = worker; i < total; i += workers) {
            summary.results[static_cast<std::size_t>(i)] = check_instance(instances[static_cast<std::size_t>(i)], config);
            const int d = ++done;
            if (progress) {
                std::lock_guard lock(progress_mutex);
                progress(d, total);
            }
        }
    };
    const int workers = std::max(1, config.workers);
    if (workers == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
        for (auto& th : pool) th.join();
    }
    for (const auto& r : summary.results) {
        ++summary.checked;
        r.passed() ? ++summary.passed : ++summary.failed;
        summary.nonzero += r.nonzero;
    }
    return summary;
}

}  // namespace mlr
