#include "mlr/factorization.hpp"

#include <algorithm>
#include <stdexcept>

#include "mlr/pieri.hpp"

namespace mlr {

std::vector<AdmissibleTriple> admissible_triples(const Tableau& T, int n) {
    const auto& cols = T.columns();
    auto has = [&](std::size_t c, int v) { return std::binary_search(cols[c].begin(), cols[c].end(), v); };
    std::vector<AdmissibleTriple> out;
    for (std::size_t m = 0; m < cols.size(); ++m)
        for (int k : cols[m]) {
            if (k > n) continue;
            for (int j = 1; j < k; ++j) {
                if (has(m, j)) continue;
                AdmissibleTriple tr{j, k, static_cast<int>(m + 1), 0, 0};
                for (std::size_t c = 0; c < m; ++c) {
                    const bool hj = has(c, j), hk = has(c, k);
                    tr.a += hk && !hj;
                    tr.b += hj && !hk;
                }
                out.push_back(tr);
            }
        }
    return out;
}

FormulaInput formula_input(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (!contains(nu, lambda) || nu.size() != lambda.size() + mu.size())
        throw SizeMismatch("need lambda inside nu and |nu| = |lambda| + |mu|");
    const int n = nu.length();
    Composition chi = difference(nu, lambda, n);
    auto r = unique_ssyt(mu, chi);
    if (r.status != UniqueResult::Status::one)
        throw KostkaNotOne("shape " + mu.to_string() + " with weight " + composition_to_string(chi) + " has " +
                           to_string(r.status) + " tableaux");
    return {lambda, *r.tableau, n};
}

namespace {

LaurentPoly x_var(const std::vector<int>& lambda, int i) {
    return LaurentPoly::monomial(1, lambda[static_cast<std::size_t>(i - 1)], 1 - i);
}

// X_k - q^c t^d X_j
LaurentPoly x_difference(const std::vector<int>& lambda, int k, int j, int c, int d) {
    return x_var(lambda, k) - x_var(lambda, j).shifted(c, d);
}

void validate(const FormulaInput& in) {
    if (in.n < in.lambda.length()) throw SizeMismatch("n is smaller than the length of lambda");
    if (in.T.max_entry() > in.n) throw SizeMismatch("tableau entry exceeds n");
    const Composition chi = in.chi();
    if (!sum_is_partition(in.lambda, chi))
        throw NuNotPartition(in.lambda.to_string() + " + " + composition_to_string(chi));
    if (kostka(in.T.shape(), chi) != 1) throw NotUniqueTableau(in.T.render());
}

}  // namespace

std::vector<TripleFactor> formula_factors(const FormulaInput& input) {
    validate(input);
    const std::vector<int> lambda = input.lambda.padded(input.n);
    std::vector<TripleFactor> out;
    for (const auto& tr : admissible_triples(input.T, input.n)) {
        const int j = tr.j, k = tr.k, a = tr.a, b = tr.b;
        LaurentPoly num = x_difference(lambda, k, j, -a + b - 1, 1) * x_difference(lambda, k, j, -a, -1);
        LaurentPoly den = x_difference(lambda, k, j, -a + b, 0) * x_difference(lambda, k, j, -a - 1, 0);
        // distinct t-exponents for j < k
        if (den.is_zero()) throw std::logic_error("vanishing denominator in admissible triple factor");
        out.push_back({tr, std::move(num), std::move(den)});
    }
    return out;
}

QtRational formula_coefficient(const FormulaInput& input) {
    LaurentPoly num(1), den(1);
    for (const auto& f : formula_factors(input)) {
        num *= f.num;
        den *= f.den;
    }
    if (num.is_zero()) return {};
    return psi_weight(input.T) * QtRational(num, den);
}

QtRational formula_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    return formula_coefficient(formula_input(lambda, mu, nu));
}

std::vector<SignedHook> cancel_reciprocals(std::vector<SignedHook> hooks) {
    std::vector<HookBinomial> num, den;
    for (const auto& h : hooks) (h.numerator ? num : den).push_back(h.binomial);
    std::sort(num.begin(), num.end());
    std::sort(den.begin(), den.end());
    std::vector<SignedHook> out;
    std::size_t i = 0, j = 0;
    while (i < num.size() || j < den.size()) {
        if (j == den.size() || (i < num.size() && num[i] < den[j])) {
            out.push_back({num[i++], true});
        } else if (i == num.size() || den[j] < num[i]) {
            out.push_back({den[j++], false});
        } else {
            ++i;
            ++j;
        }
    }
    std::stable_partition(out.begin(), out.end(), [](const SignedHook& h) { return h.numerator; });
    return out;
}

std::vector<SignedHook> psi_hooks(const Tableau& T) {
    std::vector<SignedHook> out;
    for (const auto& block : rectangular_blocks(T)) {
        auto kinds = classify_block(block.columns());
        if (kinds.count(BlockKind::first)) continue;
        const Tableau H = kinds.count(BlockKind::second) ? intrinsic(block) : complement(block);
        // one row: (q;q)_m / (t;q)_m * prod_z (t;q)_{e_z} / (q;q)_{e_z}
        const int m = H.shape().size();
        for (int j = 0; j < m; ++j) {
            out.push_back({HookBinomial::upper(j, 0), true});
            out.push_back({HookBinomial::lower(j, 0), false});
        }
        for (int e : H.weight())
            for (int j = 0; j < e; ++j) {
                out.push_back({HookBinomial::lower(j, 0), true});
                out.push_back({HookBinomial::upper(j, 0), false});
            }
    }
    return out;
}

std::vector<SignedHook> hook_form(const FormulaInput& input) {
    const auto factors = formula_factors(input);
    std::vector<SignedHook> hooks = psi_hooks(input.T);
    if (hook_product(hooks) != psi_weight(input.T))
        throw std::logic_error("one-row psi form disagrees with the tableau weight");
    const std::vector<int> lambda = input.lambda.padded(input.n);
    for (const auto& f : factors) {
        const auto& tr = f.triple;
        const int gap = lambda[static_cast<std::size_t>(tr.j - 1)] - lambda[static_cast<std::size_t>(tr.k - 1)];
        const int a1 = gap - tr.a + tr.b - 1, a2 = gap - tr.a - 1, d = tr.k - tr.j;
        hooks.push_back({HookBinomial::lower(a1, d), true});
        hooks.push_back({HookBinomial::upper(a1, d), false});
        hooks.push_back({HookBinomial::upper(a2, d - 1), true});
        hooks.push_back({HookBinomial::lower(a2, d - 1), false});
    }
    hooks = cancel_reciprocals(std::move(hooks));
    if (hook_product(hooks) != formula_coefficient(input))
        throw std::logic_error("hook form disagrees with the formula");
    return hooks;
}

StanleyReport stanley_check(const Partition& lambda, const Partition& mu, const Partition& nu) {
    const FormulaInput input = formula_input(lambda, mu, nu);
    const QtRational c = formula_coefficient(input);
    std::vector<SignedHook> hooks = hook_form(input);
    LaurentPoly shapes(1);
    auto absorb = [&](const Partition& p, HookKind kind) {
        for (Cell s : cells(p)) {
            auto al = arm_leg(p, s);
            HookBinomial h = kind == HookKind::upper ? HookBinomial::upper(al.arm, al.leg)
                                                     : HookBinomial::lower(al.arm, al.leg);
            shapes *= h.value();
            hooks.push_back({h, true});
        }
    };
    absorb(lambda, HookKind::lower);
    absorb(mu, HookKind::lower);
    absorb(nu, HookKind::upper);

    StanleyReport report;
    report.hooks = cancel_reciprocals(std::move(hooks));
    const QtRational value = c * QtRational(shapes);
    report.laurent = value.is_laurent_polynomial();
    report.monomial = verify_hook_product(value, report.hooks);
    bool has_den = false;
    for (const auto& h : report.hooks) {
        if (!h.numerator) {
            has_den = true;
            continue;
        }
        report.u_count += h.binomial.kind == HookKind::upper;
        report.l_count += h.binomial.kind == HookKind::lower;
    }
    report.factored = report.monomial.ok && !has_den;
    return report;
}

}  // namespace mlr
