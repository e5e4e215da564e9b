#pragma once

// Exact arithmetic in Z[q^±1, t^±1] and its fraction field Q(q, t).

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "mlr/errors.hpp"

namespace mlr {

struct Monomial {
    int q = 0;
    int t = 0;
    auto operator<=>(const Monomial&) const = default;
};

class LaurentPoly {
public:
    struct Term {
        Monomial exp;
        mpz_class coeff;
        bool operator==(const Term& o) const { return exp == o.exp && coeff == o.coeff; }
    };

    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT: integers embed as constants
    explicit LaurentPoly(const mpz_class& c);

    static LaurentPoly monomial(const mpz_class& c, int qe, int te);
    static LaurentPoly q();
    static LaurentPoly t();
    // Accepts unsorted terms with repeats; merges them and drops zeros.
    static LaurentPoly from_terms(std::vector<Term> terms);
    // Terms must already be strictly sorted by exponent with nonzero coefficients.
    static LaurentPoly from_sorted_terms(std::vector<Term> terms);

    // Sorted ascending by (q, t); no zero coefficients.
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_one() const;

    // Componentwise minimum and maximum exponents; (0,0) for the zero polynomial.
    Monomial min_exponents() const;
    Monomial max_exponents() const;
    mpz_class coeff(Monomial m) const;
    mpz_class content() const;  // gcd of coefficients, nonnegative

    LaurentPoly shifted(int dq, int dt) const;
    LaurentPoly substitute_q_equals_t() const;
    // Raises PoleAtPoint when a negative power of a zero argument is needed.
    mpq_class evaluate(const mpq_class& q0, const mpq_class& t0) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const mpz_class& c);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const mpz_class& c) { return a *= c; }
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    // Exact quotient when divisor divides *this in Z[q^±1, t^±1], else nullopt.
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;
    LaurentPoly pow(unsigned e) const;

    // Human-readable, e.g. "1 - q^2*t + 3*q^-1".
    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

// gcd in Z[q, t] of the two polynomials after each is divided by its minimal
// monomial. The result has no monomial factor and positive lex-least term.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

// Element of Q(q, t) in canonical form: numerator and denominator coprime,
// denominator free of monomial factors with positive lex-least coefficient,
// zero stored as 0/1.
class QtRational {
public:
    QtRational() : num_(0), den_(1) {}
    QtRational(long c) : num_(c), den_(1) {}  // NOLINT
    QtRational(const LaurentPoly& p);          // NOLINT
    // Normalizing constructor; raises ZeroDenominator.
    QtRational(const LaurentPoly& num, const LaurentPoly& den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_laurent_polynomial() const { return den_.is_one(); }

    QtRational operator-() const;
    QtRational inverse() const;  // raises DivisionByZero
    friend QtRational operator+(const QtRational& a, const QtRational& b);
    friend QtRational operator-(const QtRational& a, const QtRational& b);
    friend QtRational operator*(const QtRational& a, const QtRational& b);
    friend QtRational operator/(const QtRational& a, const QtRational& b);
    QtRational& operator+=(const QtRational& o) { return *this = *this + o; }
    QtRational& operator-=(const QtRational& o) { return *this = *this - o; }
    QtRational& operator*=(const QtRational& o) { return *this = *this * o; }
    QtRational& operator/=(const QtRational& o) { return *this = *this / o; }
    bool operator==(const QtRational& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string to_string() const;

private:
    struct Canonical {};
    QtRational(LaurentPoly num, LaurentPoly den, Canonical)
        : num_(std::move(num)), den_(std::move(den)) {}

    LaurentPoly num_;
    LaurentPoly den_;
};

QtRational rational_normalize(const LaurentPoly& num, const LaurentPoly& den);

// Raises PoleAtPoint when the denominator vanishes at (q0, t0).
mpq_class eval_rational(const QtRational& f, const mpq_class& q0, const mpq_class& t0);

// Image under q -> t, as an element whose exponents all have q-part 0.
// Raises IdenticallySingular when the denominator maps to 0.
QtRational specialize_q_equals_t(const QtRational& f);

// (a; q)_s = prod_{i=1..s} (1 - a q^{i-1}) for a monomial a = q^aq t^at.
LaurentPoly q_pochhammer(int aq, int at, int s);

enum class HookKind { upper, lower };

// 1 - q^alpha t^beta, optionally labelled as U(arm, leg) or L(arm, leg).
struct HookBinomial {
    int alpha = 0;
    int beta = 0;
    std::optional<HookKind> kind;
    int arm = 0;
    int leg = 0;

    static HookBinomial upper(int arm, int leg) { return {arm + 1, leg, HookKind::upper, arm, leg}; }
    static HookBinomial lower(int arm, int leg) { return {arm, leg + 1, HookKind::lower, arm, leg}; }
    static HookBinomial plain(int alpha, int beta) { return {alpha, beta, std::nullopt, 0, 0}; }

    LaurentPoly value() const;
    bool same_value(const HookBinomial& o) const { return alpha == o.alpha && beta == o.beta; }
    // "U(1,0)", "L(0,2)" or "(1-q^2*t)".
    std::string label() const;
    auto operator<=>(const HookBinomial&) const = default;
};

// upper -> 1 - q^{a+1} t^l, lower -> 1 - q^a t^{l+1}.
LaurentPoly hook_binomial(int arm, int leg, HookKind kind);

struct SignedHook {
    HookBinomial binomial;
    bool numerator = true;
    auto operator<=>(const SignedHook&) const = default;
};

struct HookCheck {
    bool ok = false;
    int q_exp = 0;
    int t_exp = 0;
    int sign = 1;
};

// ok iff f = ±q^a t^b * prod(numerator factors) / prod(denominator factors).
HookCheck verify_hook_product(const QtRational& f, const std::vector<SignedHook>& factors);

// Signed product of the factors as a canonical rational function.
QtRational hook_product(const std::vector<SignedHook>& factors);

}  // namespace mlr
