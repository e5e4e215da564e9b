#include <algorithm>
#include <map>
#include <sstream>

#include "dense_poly.hpp"
#include "mlr/qt_algebra.hpp"

namespace mlr {

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_.push_back({{0, 0}, mpz_class(c)});
}

LaurentPoly::LaurentPoly(const mpz_class& c) {
    if (c != 0) terms_.push_back({{0, 0}, c});
}

LaurentPoly LaurentPoly::monomial(const mpz_class& c, int qe, int te) {
    LaurentPoly p;
    if (c != 0) p.terms_.push_back({{qe, te}, c});
    return p;
}

LaurentPoly LaurentPoly::q() { return monomial(1, 1, 0); }
LaurentPoly LaurentPoly::t() { return monomial(1, 0, 1); }

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.exp < b.exp; });
    LaurentPoly p;
    for (auto& term : terms) {
        if (!p.terms_.empty() && p.terms_.back().exp == term.exp) {
            p.terms_.back().coeff += term.coeff;
        } else {
            if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
            p.terms_.push_back(std::move(term));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    return p;
}

LaurentPoly LaurentPoly::from_sorted_terms(std::vector<Term> terms) {
    LaurentPoly p;
    p.terms_ = std::move(terms);
    return p;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == Monomial{});
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].exp == Monomial{} && terms_[0].coeff == 1;
}

Monomial LaurentPoly::min_exponents() const {
    if (terms_.empty()) return {};
    Monomial m = terms_.front().exp;
    for (const auto& term : terms_) m.t = std::min(m.t, term.exp.t);
    return m;
}

Monomial LaurentPoly::max_exponents() const {
    if (terms_.empty()) return {};
    Monomial m = terms_.back().exp;
    for (const auto& term : terms_) m.t = std::max(m.t, term.exp.t);
    return m;
}

mpz_class LaurentPoly::coeff(Monomial m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& a, const Monomial& b) { return a.exp < b; });
    if (it != terms_.end() && it->exp == m) return it->coeff;
    return 0;
}

mpz_class LaurentPoly::content() const {
    mpz_class g = 0;
    for (const auto& term : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), term.coeff.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

LaurentPoly LaurentPoly::shifted(int dq, int dt) const {
    LaurentPoly p = *this;
    for (auto& term : p.terms_) {
        term.exp.q += dq;
        term.exp.t += dt;
    }
    return p;
}

LaurentPoly LaurentPoly::substitute_q_equals_t() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& term : terms_) out.push_back({{0, term.exp.q + term.exp.t}, term.coeff});
    return from_terms(std::move(out));
}

namespace {

mpq_class power(const mpq_class& x, int e) {
    if (e < 0) {
        if (x == 0) throw PoleAtPoint("negative power of zero");
        return power(1 / x, -e);
    }
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

}  // namespace

mpq_class LaurentPoly::evaluate(const mpq_class& q0, const mpq_class& t0) const {
    mpq_class sum = 0;
    for (const auto& term : terms_)
        sum += mpq_class(term.coeff) * power(q0, term.exp.q) * power(t0, term.exp.t);
    return sum;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& term : p.terms_) term.coeff = -term.coeff;
    return p;
}

namespace {

template <class Combine>
std::vector<LaurentPoly::Term> merge(const std::vector<LaurentPoly::Term>& a,
                                     const std::vector<LaurentPoly::Term>& b, Combine combine) {
    std::vector<LaurentPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].exp < b[j].exp)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].exp < a[i].exp) {
            out.push_back({b[j].exp, combine(mpz_class(0), b[j].coeff)});
            ++j;
        } else {
            mpz_class c = combine(a[i].coeff, b[j].coeff);
            if (c != 0) out.push_back({a[i].exp, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    terms_ = merge(terms_, o.terms_, [](const mpz_class& x, const mpz_class& y) { return mpz_class(x + y); });
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    terms_ = merge(terms_, o.terms_, [](const mpz_class& x, const mpz_class& y) { return mpz_class(x - y); });
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const mpz_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& term : terms_) term.coeff *= c;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.size() == 1 || b.size() == 1) {
        const LaurentPoly& mono = a.size() == 1 ? a : b;
        const LaurentPoly& other = a.size() == 1 ? b : a;
        const auto& m = mono.terms_[0];
        LaurentPoly p = other.shifted(m.exp.q, m.exp.t);
        if (m.coeff != 1) p *= m.coeff;
        return p;
    }
    Monomial la = a.min_exponents(), ha = a.max_exponents();
    Monomial lb = b.min_exponents(), hb = b.max_exponents();
    const long width_q = (ha.q - la.q) + (hb.q - lb.q) + 1;
    const long width_t = (ha.t - la.t) + (hb.t - lb.t) + 1;
    const long cells = width_q * width_t;
    const long pairs = static_cast<long>(a.size()) * static_cast<long>(b.size());
    if (cells <= 8 * pairs + 256) {
        std::vector<mpz_class> grid(static_cast<std::size_t>(cells));
        for (const auto& x : a.terms_)
            for (const auto& y : b.terms_) {
                long iq = (x.exp.q - la.q) + (y.exp.q - lb.q);
                long it = (x.exp.t - la.t) + (y.exp.t - lb.t);
                mpz_addmul(grid[static_cast<std::size_t>(iq * width_t + it)].get_mpz_t(),
                           x.coeff.get_mpz_t(), y.coeff.get_mpz_t());
            }
        std::vector<LaurentPoly::Term> out;
        for (long iq = 0; iq < width_q; ++iq)
            for (long it = 0; it < width_t; ++it) {
                auto& c = grid[static_cast<std::size_t>(iq * width_t + it)];
                if (c != 0)
                    out.push_back({{static_cast<int>(iq) + la.q + lb.q, static_cast<int>(it) + la.t + lb.t},
                                   std::move(c)});
            }
        return LaurentPoly::from_sorted_terms(std::move(out));
    }
    std::map<Monomial, mpz_class> acc;
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_)
            mpz_addmul(acc[Monomial{x.exp.q + y.exp.q, x.exp.t + y.exp.t}].get_mpz_t(),
                       x.coeff.get_mpz_t(), y.coeff.get_mpz_t());
    std::vector<LaurentPoly::Term> out;
    for (auto& [m, c] : acc)
        if (c != 0) out.push_back({m, std::move(c)});
    return LaurentPoly::from_sorted_terms(std::move(out));
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("division by the zero polynomial");
    if (is_zero()) return LaurentPoly{};
    Monomial ma = min_exponents(), mb = divisor.min_exponents();
    if (divisor.is_monomial()) {
        const mpz_class& c = divisor.terms_[0].coeff;
        LaurentPoly p = shifted(-mb.q, -mb.t);
        for (auto& term : p.terms_) {
            if (!mpz_divisible_p(term.coeff.get_mpz_t(), c.get_mpz_t())) return std::nullopt;
            mpz_divexact(term.coeff.get_mpz_t(), term.coeff.get_mpz_t(), c.get_mpz_t());
        }
        return p;
    }
    auto a = detail::to_dense(shifted(-ma.q, -ma.t));
    auto b = detail::to_dense(divisor.shifted(-mb.q, -mb.t));
    auto quot = detail::exact_div(a, b);
    if (!quot) return std::nullopt;
    return detail::from_dense(*quot).shifted(ma.q - mb.q, ma.t - mb.t);
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly result(1);
    LaurentPoly base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& term : terms_) {
        mpz_class c = term.coeff;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        c = abs(c);
        first = false;
        bool has_vars = term.exp.q != 0 || term.exp.t != 0;
        if (!has_vars || c != 1) {
            os << c.get_str();
            if (has_vars) os << "*";
        }
        if (term.exp.q != 0) {
            os << "q";
            if (term.exp.q != 1) os << "^" << term.exp.q;
            if (term.exp.t != 0) os << "*";
        }
        if (term.exp.t != 0) {
            os << "t";
            if (term.exp.t != 1) os << "^" << term.exp.t;
        }
    }
    return os.str();
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    auto primitive_shift = [](const LaurentPoly& p) {
        Monomial m = p.min_exponents();
        return p.shifted(-m.q, -m.t);
    };
    if (a.is_zero() || b.is_zero()) {
        LaurentPoly p = primitive_shift(a.is_zero() ? b : a);
        if (p.terms().front().coeff < 0) p = -p;
        return p;
    }
    auto r = detail::gcd_cofactors(detail::to_dense(primitive_shift(a)), detail::to_dense(primitive_shift(b)));
    LaurentPoly g = detail::from_dense(r.g);
    if (g.terms().front().coeff < 0) g = -g;
    return g;
}

}  // namespace mlr
