#include "dense_poly.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace mlr::detail {
namespace {

void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(BPoly& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}

int deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }
int deg(const BPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    trim(r);
    return r;
}

// a -= c * x^shift * b
void sub_scaled(UPoly& a, const mpz_class& c, std::size_t shift, const UPoly& b) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift);
    for (std::size_t j = 0; j < b.size(); ++j)
        mpz_submul(a[j + shift].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    trim(a);
}

void sub_scaled(BPoly& a, const UPoly& c, std::size_t shift, const BPoly& b) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift);
    for (std::size_t j = 0; j < b.size(); ++j) {
        UPoly prod = mul(c, b[j]);
        UPoly& dst = a[j + shift];
        if (dst.size() < prod.size()) dst.resize(prod.size());
        for (std::size_t k = 0; k < prod.size(); ++k) dst[k] -= prod[k];
        trim(dst);
    }
    trim(a);
}

void scale(UPoly& p, const mpz_class& c) {
    for (auto& x : p) x *= c;
    trim(p);
}

void scale(BPoly& p, const UPoly& c) {
    for (auto& x : p) x = mul(x, c);
    trim(p);
}

void divexact(UPoly& p, const mpz_class& c) {
    for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

mpz_class content(const UPoly& p) {
    mpz_class g = 0;
    for (const auto& x : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

mpz_class content(const BPoly& p) {
    mpz_class g = 0;
    for (const auto& u : p)
        for (const auto& x : u) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            if (g == 1) return g;
        }
    return g;
}

mpz_class max_norm(const UPoly& p) {
    mpz_class m = 0;
    for (const auto& x : p)
        if (mpz_cmpabs(x.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(x);
    return m;
}

mpz_class max_norm(const BPoly& p) {
    mpz_class m = 0;
    for (const auto& u : p)
        for (const auto& x : u)
            if (mpz_cmpabs(x.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(x);
    return m;
}

mpz_class eval(const UPoly& p, const mpz_class& x) {
    mpz_class r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

UPoly eval_inner(const BPoly& p, const mpz_class& x) {
    UPoly r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = eval(p[i], x);
    trim(r);
    return r;
}

// Balanced base-xi digits of h.
UPoly xi_adic(mpz_class h, const mpz_class& xi) {
    UPoly g;
    mpz_class half = xi / 2;
    while (h != 0) {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
        if (r > half) r -= xi;
        g.push_back(r);
        h -= r;
        mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
    }
    return g;
}

void make_leading_positive(UPoly& p) {
    if (!p.empty() && p.back() < 0)
        for (auto& x : p) x = -x;
}

void make_leading_positive(BPoly& p) {
    if (!p.empty() && p.back().back() < 0)
        for (auto& u : p)
            for (auto& x : u) x = -x;
}

UPoly prem(const UPoly& a, const UPoly& b) {
    UPoly r = a;
    const int db = deg(b);
    const mpz_class& lb = b.back();
    int e = deg(a) - db + 1;
    while (!r.empty() && deg(r) >= db) {
        mpz_class lr = r.back();
        std::size_t shift = static_cast<std::size_t>(deg(r) - db);
        scale(r, lb);
        r.resize(std::max(r.size(), b.size() + shift));
        sub_scaled(r, lr, shift, b);
        --e;
    }
    if (e > 0) {
        mpz_class f;
        mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
        scale(r, f);
    }
    return r;
}

UPoly gcd_prs_uni(UPoly a, UPoly b) {
    if (a.empty()) { make_leading_positive(b); return b; }
    if (b.empty()) { make_leading_positive(a); return a; }
    mpz_class ca = content(a), cb = content(b);
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    divexact(a, ca);
    divexact(b, cb);
    if (deg(a) < deg(b)) std::swap(a, b);
    while (!b.empty()) {
        UPoly r = prem(a, b);
        a = std::move(b);
        if (!r.empty()) divexact(r, content(r));
        b = std::move(r);
    }
    make_leading_positive(a);
    scale(a, c);
    return a;
}

UPoly gcd_heuristic_uni(const UPoly& a0, const UPoly& b0, bool& ok) {
    ok = false;
    UPoly a = a0, b = b0;
    mpz_class ca = content(a), cb = content(b), c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    divexact(a, ca);
    divexact(b, cb);
    if (deg(a) == 0 || deg(b) == 0) {
        ok = true;
        return UPoly{c};
    }
    mpz_class xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        mpz_class h;
        mpz_class av = eval(a, xi), bv = eval(b, xi);
        mpz_gcd(h.get_mpz_t(), av.get_mpz_t(), bv.get_mpz_t());
        UPoly g = xi_adic(h, xi);
        trim(g);
        if (!g.empty()) {
            divexact(g, content(g));
            if (exact_div(a, g) && exact_div(b, g)) {
                make_leading_positive(g);
                scale(g, c);
                ok = true;
                return g;
            }
        }
        xi = xi * 73794 / 27011;
    }
    return {};
}

BPoly prem(const BPoly& a, const BPoly& b) {
    BPoly r = a;
    const int db = deg(b);
    const UPoly& lb = b.back();
    int e = deg(a) - db + 1;
    while (!r.empty() && deg(r) >= db) {
        UPoly lr = r.back();
        std::size_t shift = static_cast<std::size_t>(deg(r) - db);
        scale(r, lb);
        sub_scaled(r, lr, shift, b);
        --e;
    }
    for (; e > 0; --e) scale(r, lb);
    return r;
}

UPoly content_t(const BPoly& p) {
    UPoly g;
    for (const auto& u : p) {
        g = gcd(g, u);
        if (g.size() == 1 && g[0] == 1) break;
    }
    return g;
}

BPoly divide_coeffs(const BPoly& p, const UPoly& c) {
    BPoly r;
    r.reserve(p.size());
    for (const auto& u : p) {
        auto q = exact_div(u, c);
        if (!q) throw std::logic_error("content does not divide coefficient");
        r.push_back(std::move(*q));
    }
    return r;
}

std::optional<GcdResult> gcd_heuristic_bi(const BPoly& a0, const BPoly& b0) {
    BPoly a = a0, b = b0;
    mpz_class ca = content(a), cb = content(b), c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    for (auto& u : a) divexact(u, ca);
    for (auto& u : b) divexact(u, cb);
    mpz_class xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        UPoly av = eval_inner(a, xi), bv = eval_inner(b, xi);
        // The evaluation must preserve the q-degree for the image to be usable.
        if (deg(av) == deg(a) && deg(bv) == deg(b)) {
            UPoly gamma = gcd(av, bv);
            BPoly g(gamma.size());
            for (std::size_t i = 0; i < gamma.size(); ++i) g[i] = xi_adic(gamma[i], xi);
            trim(g);
            if (!g.empty()) {
                mpz_class cg = content(g);
                for (auto& u : g) divexact(u, cg);
                make_leading_positive(g);
                if (auto qa = exact_div(a, g)) {
                    if (auto qb = exact_div(b, g)) {
                        mpz_class fa = ca / c, fb = cb / c;
                        for (auto& u : *qa) scale(u, fa);
                        for (auto& u : *qb) scale(u, fb);
                        for (auto& u : g) scale(u, c);
                        return GcdResult{std::move(g), std::move(*qa), std::move(*qb)};
                    }
                }
            }
        }
        xi = xi * 73794 / 27011;
    }
    return std::nullopt;
}

}  // namespace

BPoly to_dense(const LaurentPoly& p) {
    BPoly r;
    if (p.is_zero()) return r;
    Monomial hi = p.max_exponents();
    r.resize(static_cast<std::size_t>(hi.q) + 1);
    for (const auto& term : p.terms()) {
        assert(term.exp.q >= 0 && term.exp.t >= 0);
        UPoly& u = r[static_cast<std::size_t>(term.exp.q)];
        if (u.size() <= static_cast<std::size_t>(term.exp.t)) u.resize(static_cast<std::size_t>(term.exp.t) + 1);
        u[static_cast<std::size_t>(term.exp.t)] = term.coeff;
    }
    for (auto& u : r) trim(u);
    return r;
}

LaurentPoly from_dense(const BPoly& p) {
    std::vector<LaurentPoly::Term> terms;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p[i].size(); ++j)
            if (p[i][j] != 0)
                terms.push_back({{static_cast<int>(i), static_cast<int>(j)}, p[i][j]});
    return LaurentPoly::from_sorted_terms(std::move(terms));
}

std::optional<UPoly> exact_div(const UPoly& a, const UPoly& b) {
    if (b.empty()) throw DivisionByZero("polynomial division by zero");
    if (a.empty()) return UPoly{};
    if (deg(a) < deg(b)) return std::nullopt;
    if (b[0] != 0 && !mpz_divisible_p(a[0].get_mpz_t(), b[0].get_mpz_t())) return std::nullopt;
    const int db = deg(b);
    const mpz_class& lb = b.back();
    UPoly r = a;
    UPoly quot(static_cast<std::size_t>(deg(a) - db + 1));
    for (int i = deg(a); i >= db; --i) {
        mpz_class& ri = r[static_cast<std::size_t>(i)];
        if (ri == 0) continue;
        if (!mpz_divisible_p(ri.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), ri.get_mpz_t(), lb.get_mpz_t());
        std::size_t shift = static_cast<std::size_t>(i - db);
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_submul(r[j + shift].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
        quot[shift] = std::move(c);
    }
    for (int i = 0; i < db; ++i)
        if (r[static_cast<std::size_t>(i)] != 0) return std::nullopt;
    trim(quot);
    return quot;
}

std::optional<BPoly> exact_div(const BPoly& a, const BPoly& b) {
    if (b.empty()) throw DivisionByZero("polynomial division by zero");
    if (a.empty()) return BPoly{};
    if (deg(a) < deg(b)) return std::nullopt;
    const int db = deg(b);
    const UPoly& lb = b.back();
    BPoly r = a;
    BPoly quot(static_cast<std::size_t>(deg(a) - db + 1));
    for (int i = deg(a); i >= db; --i) {
        if (static_cast<int>(r.size()) <= i || r[static_cast<std::size_t>(i)].empty()) continue;
        auto c = exact_div(r[static_cast<std::size_t>(i)], lb);
        if (!c) return std::nullopt;
        std::size_t shift = static_cast<std::size_t>(i - db);
        sub_scaled(r, *c, shift, b);
        quot[shift] = std::move(*c);
    }
    if (!r.empty()) return std::nullopt;
    trim(quot);
    return quot;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return gcd_prs_uni(a, b);
    bool ok = false;
    UPoly g = gcd_heuristic_uni(a, b, ok);
    if (ok) return g;
    return gcd_prs_uni(a, b);
}

BPoly gcd_prs(const BPoly& a0, const BPoly& b0) {
    BPoly a = a0, b = b0;
    if (a.empty()) { make_leading_positive(b); return b; }
    if (b.empty()) { make_leading_positive(a); return a; }
    UPoly ca = content_t(a), cb = content_t(b);
    UPoly c = gcd(ca, cb);
    a = divide_coeffs(a, ca);
    b = divide_coeffs(b, cb);
    if (deg(a) < deg(b)) std::swap(a, b);
    while (!b.empty()) {
        BPoly r = prem(a, b);
        a = std::move(b);
        if (!r.empty()) r = divide_coeffs(r, content_t(r));
        b = std::move(r);
    }
    a = divide_coeffs(a, content_t(a));
    make_leading_positive(a);
    scale(a, c);
    return a;
}

GcdResult gcd_cofactors(const BPoly& a, const BPoly& b) {
    assert(!a.empty() && !b.empty());
    auto constant_case = [&]() -> std::optional<GcdResult> {
        bool a_const = a.size() == 1 && a[0].size() == 1;
        bool b_const = b.size() == 1 && b[0].size() == 1;
        if (!a_const && !b_const) return std::nullopt;
        mpz_class g;
        mpz_class ca = content(a), cb = content(b);
        mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        GcdResult r{BPoly{UPoly{g}}, a, b};
        for (auto& u : r.a_over_g) divexact(u, g);
        for (auto& u : r.b_over_g) divexact(u, g);
        return r;
    };
    if (auto r = constant_case()) return *r;

    if (auto r = gcd_heuristic_bi(a, b)) return std::move(*r);
    BPoly g = gcd_prs(a, b);
    GcdResult r;
    auto qa = exact_div(a, g);
    auto qb = exact_div(b, g);
    if (!qa || !qb) throw std::logic_error("gcd does not divide its arguments");
    r.g = std::move(g);
    r.a_over_g = std::move(*qa);
    r.b_over_g = std::move(*qb);
    return r;
}

}  // namespace mlr::detail
