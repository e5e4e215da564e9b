#include <stdexcept>

#include "dense_poly.hpp"
#include "mlr/qt_algebra.hpp"

namespace mlr {
namespace {

struct Reduced {
    LaurentPoly g;  // monomial-free, positive lex-least term
    LaurentPoly a_over_g;
    LaurentPoly b_over_g;
};

// Both inputs nonzero. Cofactors keep the monomial parts of the inputs.
Reduced reduce(const LaurentPoly& a, const LaurentPoly& b) {
    Monomial ma = a.min_exponents(), mb = b.min_exponents();
    if (a.is_monomial() || b.is_monomial() || a.is_one() || b.is_one()) {
        mpz_class g;
        mpz_class ca = a.content(), cb = b.content();
        mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        if (g == 1) return {LaurentPoly(1), a, b};
        return {LaurentPoly(g), *a.divide_exact(LaurentPoly(g)), *b.divide_exact(LaurentPoly(g))};
    }
    auto r = detail::gcd_cofactors(detail::to_dense(a.shifted(-ma.q, -ma.t)),
                                   detail::to_dense(b.shifted(-mb.q, -mb.t)));
    Reduced out{detail::from_dense(r.g), detail::from_dense(r.a_over_g).shifted(ma.q, ma.t),
                detail::from_dense(r.b_over_g).shifted(mb.q, mb.t)};
    if (out.g.terms().front().coeff < 0) {
        out.g = -out.g;
        out.a_over_g = -out.a_over_g;
        out.b_over_g = -out.b_over_g;
    }
    return out;
}

}  // namespace

QtRational::QtRational(const LaurentPoly& p) : num_(p), den_(1) {}

QtRational::QtRational(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw ZeroDenominator("zero denominator");
    if (num.is_zero()) {
        num_ = LaurentPoly(0);
        den_ = LaurentPoly(1);
        return;
    }
    Reduced r = reduce(num, den);
    Monomial md = r.b_over_g.min_exponents();
    num_ = r.a_over_g.shifted(-md.q, -md.t);
    den_ = r.b_over_g.shifted(-md.q, -md.t);
    if (den_.terms().front().coeff < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

QtRational rational_normalize(const LaurentPoly& num, const LaurentPoly& den) { return QtRational(num, den); }

QtRational QtRational::operator-() const { return QtRational(-num_, den_, Canonical{}); }

QtRational QtRational::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    Monomial m = num_.min_exponents();
    LaurentPoly n = den_.shifted(-m.q, -m.t);
    LaurentPoly d = num_.shifted(-m.q, -m.t);
    if (d.terms().front().coeff < 0) {
        n = -n;
        d = -d;
    }
    return QtRational(std::move(n), std::move(d), Canonical{});
}

QtRational operator+(const QtRational& a, const QtRational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
        if (a.den_.is_one()) return QtRational(a.num_ + b.num_, LaurentPoly(1), QtRational::Canonical{});
        return QtRational(a.num_ + b.num_, a.den_);
    }
    // With g = gcd(b1, b2): gcd(n1*(b2/g) + n2*(b1/g), b1*b2/g) = gcd(numerator, g).
    Reduced dens = reduce(a.den_, b.den_);
    LaurentPoly n = a.num_ * dens.b_over_g + b.num_ * dens.a_over_g;
    if (n.is_zero()) return QtRational();
    if (dens.g.is_one()) return QtRational(std::move(n), a.den_ * dens.b_over_g, QtRational::Canonical{});
    Reduced fin = reduce(n, dens.g);
    return QtRational(std::move(fin.a_over_g), dens.a_over_g * dens.b_over_g * fin.b_over_g,
                      QtRational::Canonical{});
}

QtRational operator-(const QtRational& a, const QtRational& b) { return a + (-b); }

QtRational operator*(const QtRational& a, const QtRational& b) {
    if (a.is_zero() || b.is_zero()) return QtRational();
    // Cross-cancel; the result is canonical because each denominator stays
    // monomial-free with a positive lex-least term.
    Reduced r1 = reduce(a.num_, b.den_);
    Reduced r2 = reduce(b.num_, a.den_);
    return QtRational(r1.a_over_g * r2.a_over_g, r2.b_over_g * r1.b_over_g, QtRational::Canonical{});
}

QtRational operator/(const QtRational& a, const QtRational& b) {
    if (b.is_zero()) throw DivisionByZero("division by zero rational function");
    return a * b.inverse();
}

std::string QtRational::to_string() const {
    if (den_.is_one()) return num_.to_string();
    auto wrap = [](const LaurentPoly& p) {
        return p.size() > 1 ? "(" + p.to_string() + ")" : p.to_string();
    };
    return wrap(num_) + "/" + wrap(den_);
}

mpq_class eval_rational(const QtRational& f, const mpq_class& q0, const mpq_class& t0) {
    mpq_class d = f.den().evaluate(q0, t0);
    if (d == 0) throw PoleAtPoint("denominator vanishes at the evaluation point");
    mpq_class r = f.num().evaluate(q0, t0) / d;
    r.canonicalize();
    return r;
}

QtRational specialize_q_equals_t(const QtRational& f) {
    LaurentPoly d = f.den().substitute_q_equals_t();
    if (d.is_zero()) throw IdenticallySingular("denominator vanishes identically at q = t");
    return QtRational(f.num().substitute_q_equals_t(), d);
}

LaurentPoly q_pochhammer(int aq, int at, int s) {
    LaurentPoly r(1);
    for (int i = 1; i <= s; ++i) r *= LaurentPoly(1) - LaurentPoly::monomial(1, aq + i - 1, at);
    return r;
}

}  // namespace mlr
