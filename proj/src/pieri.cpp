#include "mlr/pieri.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

namespace mlr {

Expansion::Expansion(std::initializer_list<Map::value_type> init) {
    for (const auto& [p, c] : init) add(p, c);
}

void Expansion::add(const Partition& p, const QtRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

QtRational Expansion::coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? QtRational() : it->second;
}

namespace {

// Product of hook binomials; equal values in numerator and denominator cancel
// before anything is multiplied out.
class HookRatio {
public:
    void times_b(const Partition& lambda, Cell s) {
        if (!lambda.contains(s.row, s.col)) return;
        auto al = arm_leg(lambda, s);
        num_.push_back(HookBinomial::lower(al.arm, al.leg));
        den_.push_back(HookBinomial::upper(al.arm, al.leg));
    }
    void divide_b(const Partition& lambda, Cell s) {
        if (!lambda.contains(s.row, s.col)) return;
        auto al = arm_leg(lambda, s);
        num_.push_back(HookBinomial::upper(al.arm, al.leg));
        den_.push_back(HookBinomial::lower(al.arm, al.leg));
    }
    void times(const HookBinomial& h) { num_.push_back(h); }
    void divide(const HookBinomial& h) { den_.push_back(h); }

    QtRational value() const {
        auto key = [](const HookBinomial& h) { return std::pair{h.alpha, h.beta}; };
        auto by_value = [&](const HookBinomial& a, const HookBinomial& b) { return key(a) < key(b); };
        auto num = num_, den = den_;
        std::sort(num.begin(), num.end(), by_value);
        std::sort(den.begin(), den.end(), by_value);
        std::vector<SignedHook> left;
        std::size_t i = 0, j = 0;
        while (i < num.size() || j < den.size()) {
            if (j == den.size() || (i < num.size() && by_value(num[i], den[j]))) {
                left.push_back({num[i++], true});
            } else if (i == num.size() || by_value(den[j], num[i])) {
                left.push_back({den[j++], false});
            } else {
                ++i;
                ++j;
            }
        }
        return hook_product(left);
    }

private:
    std::vector<HookBinomial> num_;
    std::vector<HookBinomial> den_;
};

std::vector<bool> rows_meeting(const Partition& lambda, const Partition& nu) {
    std::vector<bool> r(static_cast<std::size_t>(nu.length() + 1), false);
    for (int i = 1; i <= nu.length(); ++i) r[static_cast<std::size_t>(i)] = nu[i] > lambda[i];
    return r;
}

std::vector<bool> columns_meeting(const Partition& lambda, const Partition& nu) {
    std::vector<bool> c(static_cast<std::size_t>(nu[1] + 1), false);
    for (Cell s : skew_cells(lambda, nu)) c[static_cast<std::size_t>(s.col)] = true;
    return c;
}

// Vertical strips of r boxes on lambda, each row bounded by ceiling when given.
void vertical_rec(const std::vector<int>& lambda, int row, int r, std::vector<int>& nu,
                  const std::optional<Partition>& ceiling, int max_rows, std::vector<Partition>& out) {
    if (r == 0) {
        std::vector<int> full = nu;
        for (std::size_t i = full.size(); i < lambda.size(); ++i) full.push_back(lambda[i]);
        out.emplace_back(std::move(full));
        return;
    }
    const int rows_left = max_rows - row + 1;
    if (rows_left < r) return;
    const int cur = row <= static_cast<int>(lambda.size()) ? lambda[static_cast<std::size_t>(row - 1)] : 0;
    if (row > static_cast<int>(nu.size())) nu.resize(static_cast<std::size_t>(row), 0);
    nu[static_cast<std::size_t>(row - 1)] = cur;
    vertical_rec(lambda, row + 1, r, nu, ceiling, max_rows, out);
    const int above = row == 1 ? cur + 1 : nu[static_cast<std::size_t>(row - 2)];
    if (above >= cur + 1 && (!ceiling || cur + 1 <= (*ceiling)[row])) {
        nu[static_cast<std::size_t>(row - 1)] = cur + 1;
        vertical_rec(lambda, row + 1, r - 1, nu, ceiling, max_rows, out);
    }
    nu.resize(static_cast<std::size_t>(row - 1));
}

std::vector<Partition> vertical_strips_within(const Partition& lambda, int r, std::optional<int> max_rows,
                                              const std::optional<Partition>& ceiling) {
    std::vector<Partition> out;
    int rows = lambda.length() + r;
    if (max_rows) rows = std::min(rows, *max_rows);
    if (ceiling) rows = std::min(rows, ceiling->length());
    std::vector<int> nu;
    vertical_rec(lambda.parts(), 1, r, nu, ceiling, rows, out);
    return out;
}

}  // namespace

QtRational b_factor(const Partition& lambda, Cell s) {
    HookRatio h;
    h.times_b(lambda, s);
    return h.value();
}

QtRational psi_prime(const Partition& lambda, const Partition& nu) {
    if (!is_vertical_strip(lambda, nu)) throw NotVerticalStrip(lambda.to_string() + " -> " + nu.to_string());
    auto R = rows_meeting(lambda, nu);
    auto C = columns_meeting(lambda, nu);
    HookRatio h;
    for (Cell s : cells(nu)) {
        if (!C[static_cast<std::size_t>(s.col)] || R[static_cast<std::size_t>(s.row)]) continue;
        h.times_b(nu, s);
        h.divide_b(lambda, s);
    }
    return h.value();
}

namespace {

HookRatio phi_ratio(const Partition& lambda, const Partition& nu) {
    if (!is_horizontal_strip(lambda, nu)) throw NotHorizontalStrip(lambda.to_string() + " -> " + nu.to_string());
    auto C = columns_meeting(lambda, nu);
    HookRatio h;
    for (Cell s : cells(nu)) {
        if (!C[static_cast<std::size_t>(s.col)]) continue;
        h.times_b(nu, s);
        h.divide_b(lambda, s);
    }
    return h;
}

}  // namespace

QtRational phi(const Partition& lambda, const Partition& nu) { return phi_ratio(lambda, nu).value(); }

QtRational horizontal_coefficient(const Partition& lambda, const Partition& nu) {
    HookRatio h = phi_ratio(lambda, nu);
    const int r = nu.size() - lambda.size();
    for (int j = 0; j < r; ++j) {
        h.times(HookBinomial::upper(j, 0));
        h.divide(HookBinomial::lower(j, 0));
    }
    return h.value();
}

QtRational psi_skew(const Partition& inner, const Partition& outer) {
    if (!is_horizontal_strip(inner, outer)) throw NotHorizontalStrip(inner.to_string() + " -> " + outer.to_string());
    auto R = rows_meeting(inner, outer);
    auto C = columns_meeting(inner, outer);
    HookRatio h;
    for (Cell s : cells(inner)) {
        if (!R[static_cast<std::size_t>(s.row)] || C[static_cast<std::size_t>(s.col)]) continue;
        h.times_b(inner, s);
        h.divide_b(outer, s);
    }
    return h.value();
}

QtRational psi_weight(const Tableau& T) {
    const auto rows = T.rows();
    QtRational result(1);
    Partition prev;
    for (int i = 1; i <= T.max_entry(); ++i) {
        std::vector<int> parts;
        for (const auto& row : rows)
            parts.push_back(static_cast<int>(std::upper_bound(row.begin(), row.end(), i) - row.begin()));
        Partition cur(parts);
        result *= psi_skew(prev, cur);
        prev = std::move(cur);
    }
    return result;
}

bool Window::admits(const Partition& p) const {
    if (max_rows && p.length() > *max_rows) return false;
    if (ceiling && !contains(*ceiling, p)) return false;
    return contains(p, floor);
}

std::vector<Partition> vertical_strips(const Partition& lambda, int r, std::optional<int> max_rows) {
    return vertical_strips_within(lambda, r, max_rows, std::nullopt);
}

std::vector<Partition> horizontal_strips(const Partition& lambda, int r) {
    std::vector<Partition> out;
    const int rows = lambda.length() + 1;
    std::vector<int> nu(static_cast<std::size_t>(rows), 0);
    std::function<void(int, int)> rec = [&](int row, int left) {
        if (row > rows) {
            if (left == 0) out.emplace_back(nu);
            return;
        }
        const int lo = lambda[row];
        const int hi = row == 1 ? lo + left : std::min(lambda[row - 1], lo + left);
        for (int v = lo; v <= hi; ++v) {
            nu[static_cast<std::size_t>(row - 1)] = v;
            rec(row + 1, left - (v - lo));
        }
    };
    rec(1, r);
    return out;
}

PBasisExpansion multiply_by_e(const PBasisExpansion& exp, int r, const Window& window) {
    PBasisExpansion out;
    for (const auto& [lambda, c] : exp.terms())
        for (const auto& nu : vertical_strips_within(lambda, r, window.max_rows, window.ceiling))
            if (window.admits(nu)) out.add(nu, c * psi_prime(lambda, nu));
    return out;
}

PBasisExpansion multiply_by_onerow(const PBasisExpansion& exp, int r) {
    PBasisExpansion out;
    for (const auto& [lambda, c] : exp.terms())
        for (const auto& nu : horizontal_strips(lambda, r)) out.add(nu, c * horizontal_coefficient(lambda, nu));
    return out;
}

namespace {

std::mutex cache_mutex;
std::map<std::pair<Partition, int>, EBasisExpansion> cache;

PBasisExpansion e_chain(const std::vector<int>& parts, const Window& window, const Partition& start) {
    PBasisExpansion cur{{start, QtRational(1)}};
    for (int r : parts) cur = multiply_by_e(cur, r, window);
    return cur;
}

EBasisExpansion compute_e_basis(const Partition& mu, int cap) {
    Window window{{}, std::nullopt, cap};
    EBasisExpansion d;
    PBasisExpansion rest{{mu, QtRational(1)}};
    while (!rest.empty()) {
        // the lexicographically largest term is maximal in dominance
        auto top = std::prev(rest.terms().end());
        Partition zeta = top->first;
        QtRational c = top->second;
        Partition rho = conjugate(zeta);
        d.add(rho, c);
        const PBasisExpansion e = e_chain(rho.parts(), window, {});
        for (const auto& [kappa, v] : e.terms()) rest.add(kappa, -(c * v));
    }
    return d;
}

}  // namespace

EBasisExpansion p_in_e_basis(const Partition& mu, int row_cap) {
    if (row_cap < mu.length())
        throw CapTooSmall("row cap " + std::to_string(row_cap) + " below length of " + mu.to_string());
    const std::pair key{mu, std::min(row_cap, mu.size())};
    {
        std::lock_guard lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    EBasisExpansion d = compute_e_basis(key.first, key.second);
    std::lock_guard lock(cache_mutex);
    return cache.try_emplace(key, std::move(d)).first->second;
}

void clear_e_basis_cache() {
    std::lock_guard lock(cache_mutex);
    cache.clear();
}

QtRational coeff_bruteforce(const Partition& lambda, const Partition& mu, const Partition& nu,
                            BruteforceOptions options) {
    if (nu.size() != lambda.size() + mu.size() || !contains(nu, lambda)) return {};
    int cap = mu.size();
    Window window;
    if (options.prune) {
        cap = 0;
        for (int i = 1; i <= nu.length(); ++i) cap += nu[i] > lambda[i];
        if (cap < mu.length()) return {};
        window = {lambda, nu, std::nullopt};
    }
    const EBasisExpansion d = p_in_e_basis(mu, cap);

    // chains share prefixes; rho parts are already decreasing
    std::map<std::vector<int>, PBasisExpansion> memo;
    memo[{}] = PBasisExpansion{{lambda, QtRational(1)}};
    std::function<const PBasisExpansion&(const std::vector<int>&)> chain =
        [&](const std::vector<int>& parts) -> const PBasisExpansion& {
        auto it = memo.find(parts);
        if (it != memo.end()) return it->second;
        std::vector<int> prefix(parts.begin(), parts.end() - 1);
        PBasisExpansion next = multiply_by_e(chain(prefix), parts.back(), window);
        return memo.emplace(parts, std::move(next)).first->second;
    };

    QtRational total;
    for (const auto& [rho, c] : d.terms()) total += c * chain(rho.parts()).coeff(nu);
    return total;
}

}  // namespace mlr
