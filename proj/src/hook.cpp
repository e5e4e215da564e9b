#include <sstream>

#include "mlr/qt_algebra.hpp"

namespace mlr {

LaurentPoly HookBinomial::value() const {
    return LaurentPoly(1) - LaurentPoly::monomial(1, alpha, beta);
}

std::string HookBinomial::label() const {
    std::ostringstream os;
    if (kind) {
        os << (*kind == HookKind::upper ? "U(" : "L(") << arm << "," << leg << ")";
    } else {
        os << "(" << value().to_string() << ")";
    }
    return os.str();
}

LaurentPoly hook_binomial(int arm, int leg, HookKind kind) {
    return kind == HookKind::upper ? HookBinomial::upper(arm, leg).value()
                                   : HookBinomial::lower(arm, leg).value();
}

QtRational hook_product(const std::vector<SignedHook>& factors) {
    LaurentPoly num(1), den(1);
    for (const auto& f : factors) {
        if (f.numerator)
            num *= f.binomial.value();
        else
            den *= f.binomial.value();
    }
    return QtRational(num, den);
}

HookCheck verify_hook_product(const QtRational& f, const std::vector<SignedHook>& factors) {
    for (const auto& h : factors)
        if (!h.numerator && h.binomial.value().is_zero()) return {};
    QtRational p = hook_product(factors);
    if (p.is_zero()) return f.is_zero() ? HookCheck{true, 0, 0, 1} : HookCheck{};
    if (f.is_zero()) return {};
    QtRational ratio = f / p;
    if (!ratio.is_laurent_polynomial() || !ratio.num().is_monomial()) return {};
    const auto& term = ratio.num().terms().front();
    if (abs(term.coeff) != 1) return {};
    return {true, term.exp.q, term.exp.t, term.coeff > 0 ? 1 : -1};
}

}  // namespace mlr
