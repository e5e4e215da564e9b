#include "mlr/json_io.hpp"

namespace mlr {

namespace {

json poly_to_json(const LaurentPoly& p) {
    json out = json::array();
    for (const auto& term : p.terms()) out.push_back({term.exp.q, term.exp.t, term.coeff.get_str()});
    return out;
}

LaurentPoly poly_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("polynomial must be an array of terms");
    std::vector<LaurentPoly::Term> terms;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer() || !t[2].is_string())
            throw ParseError("term must be [q_exp, t_exp, \"coeff\"]");
        mpz_class c;
        if (c.set_str(t[2].get<std::string>(), 10) != 0) throw ParseError("bad coefficient " + t[2].dump());
        terms.push_back({{t[0].get<int>(), t[1].get<int>()}, c});
    }
    return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

json to_json(const QtRational& f) { return {{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}}; }

QtRational qt_rational_from_json(const json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den")) throw ParseError("expected {\"num\", \"den\"}");
    return QtRational(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

json to_json(const Partition& p) { return p.parts(); }

json to_json(const Tableau& T) { return {{"shape", T.shape().parts()}, {"rows", T.rows()}}; }

json to_json(const Expansion& e) {
    json out = json::array();
    for (const auto& [p, c] : e.terms()) out.push_back({{"index", p.parts()}, {"coeff", to_json(c)}});
    return out;
}

json to_json(const SignedHook& h) {
    return {{"label", h.binomial.label()}, {"alpha", h.binomial.alpha}, {"beta", h.binomial.beta}, {"numerator", h.numerator}};
}

json to_json(const StanleyReport& r) {
    return {{"laurent", r.laurent},
            {"u_count", r.u_count},
            {"l_count", r.l_count},
            {"factored", r.factored},
            {"monomial", {r.monomial.q_exp, r.monomial.t_exp, r.monomial.sign}}};
}

json to_json(const InstanceResult& r) {
    json j{{"lambda", to_json(r.instance.lambda)},
           {"mu", to_json(r.instance.mu)},
           {"chi", r.instance.chi},
           {"nu", to_json(r.instance.nu)},
           {"nonzero", r.nonzero},
           {"formula_ok", r.formula_ok},
           {"schur_ok", r.schur_ok},
           {"stanley_ok", r.stanley_ok},
           {"eval_ok", r.eval_ok},
           {"poles", r.poles}};
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

}  // namespace mlr
