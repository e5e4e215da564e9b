// Command-line front end: coefficients, Kostka numbers, e-basis expansions,
// Stanley-form reports and the verification sweep.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mlr/factorization.hpp"
#include "mlr/json_io.hpp"
#include "mlr/pieri.hpp"
#include "mlr/sweep.hpp"
#include "mlr/tableaux.hpp"

namespace {

using namespace mlr;

constexpr int kOk = 0;
constexpr int kParse = 2;
constexpr int kPrecondition = 3;
constexpr int kVerification = 4;

struct Globals {
    bool json = false;
    std::string eval;
    int workers = 1;
};

// Raised for a verification failure after output has been written.
struct VerificationFailed {};

std::pair<mpq_class, mpq_class> parse_point(const std::string& text) {
    std::optional<mpq_class> q0, t0;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("expected q=R,t=R, got '" + text + "'");
        std::string name = item.substr(0, eq), value = item.substr(eq + 1);
        mpq_class v;
        if (value.empty() || v.set_str(value, 10) != 0) throw ParseError("bad rational '" + value + "'");
        v.canonicalize();
        if (name == "q")
            q0 = v;
        else if (name == "t")
            t0 = v;
        else
            throw ParseError("unknown variable '" + name + "'");
    }
    if (!q0 || !t0) throw ParseError("both q and t are required in --eval");
    return {*q0, *t0};
}

std::string hooks_to_string(const std::vector<SignedHook>& hooks) {
    std::string num, den;
    int dens = 0;
    for (const auto& h : hooks) {
        if (h.binomial.value().is_zero() && h.numerator) return "0";
        std::string& s = h.numerator ? num : den;
        if (!s.empty()) s += "*";
        s += h.binomial.label();
        dens += !h.numerator;
    }
    if (num.empty()) num = "1";
    if (dens == 0) return num;
    return num + " / " + (dens > 1 ? "(" + den + ")" : den);
}

std::string eval_string(const QtRational& f, const std::pair<mpq_class, mpq_class>& point) {
    try {
        return eval_rational(f, point.first, point.second).get_str();
    } catch (const PoleAtPoint&) {
        return "pole";
    }
}

void emit(const Globals& g, const json& j, const std::string& text) {
    if (g.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_coeff(const Globals& g, const std::string& ls, const std::string& ms, const std::string& ns,
              const std::string& method) {
    const Partition lambda = parse_partition(ls), mu = parse_partition(ms), nu = parse_partition(ns);
    std::optional<std::pair<mpq_class, mpq_class>> point;
    if (!g.eval.empty()) point = parse_point(g.eval);
    json j{{"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"nu", to_json(nu)}, {"method", method}};
    std::ostringstream os;
    os << "lambda = " << lambda.to_string() << "   mu = " << mu.to_string() << "   nu = " << nu.to_string() << "\n";

    std::optional<QtRational> formula, brute;
    if (method == "formula" || method == "both") {
        FormulaInput in = formula_input(lambda, mu, nu);
        formula = formula_coefficient(in);
        auto hooks = hook_form(in);
        j["formula"] = to_json(*formula);
        j["hook_form"] = json::array();
        for (const auto& h : hooks) j["hook_form"].push_back(to_json(h));
        os << "formula: " << hooks_to_string(hooks) << "\n";
        os << "       = " << formula->to_string() << "\n";
    }
    if (method == "pieri" || method == "both" || method == "schur") {
        brute = coeff_bruteforce(lambda, mu, nu);
        j["pieri"] = to_json(*brute);
        if (method != "schur") os << "pieri:   " << brute->to_string() << "\n";
    }
    if (method == "schur") {
        const long lr = lr_coefficient_schur(lambda, mu, nu);
        const QtRational spec = specialize_q_equals_t(*brute);
        j["lr"] = lr;
        j["q_equals_t"] = to_json(spec);
        os << "LR coefficient: " << lr << "\n";
        os << "q = t:          " << spec.to_string() << "\n";
    }
    if (point) {
        json e{{"q", point->first.get_str()}, {"t", point->second.get_str()}};
        os << "at q = " << point->first.get_str() << ", t = " << point->second.get_str() << ":";
        if (formula) {
            e["formula"] = eval_string(*formula, *point);
            os << " formula " << e["formula"].get<std::string>();
        }
        if (brute) {
            e["pieri"] = eval_string(*brute, *point);
            os << " pieri " << e["pieri"].get<std::string>();
        }
        os << "\n";
        j["eval"] = e;
    }
    bool agree = true;
    if (method == "both") {
        agree = *formula == *brute;
        j["agree"] = agree;
        os << (agree ? "agree: yes\n" : "agree: NO\n");
    }
    emit(g, j, os.str());
    if (!agree) throw VerificationFailed{};
    return kOk;
}

int cmd_kostka(const Globals& g, const std::string& ms, const std::string& ws) {
    const Partition mu = parse_partition(ms);
    const Composition w = parse_composition(ws);
    const long k = kostka(mu, w);
    emit(g, json{{"mu", to_json(mu)}, {"weight", w}, {"kostka", k}}, std::to_string(k) + "\n");
    return kOk;
}

int cmd_unique(const Globals& g, const std::string& ms, const std::string& ws) {
    const Partition mu = parse_partition(ms);
    const Composition w = parse_composition(ws);
    auto r = unique_ssyt(mu, w);
    json j{{"mu", to_json(mu)}, {"weight", w}, {"status", to_string(r.status)}};
    std::string text = std::string(to_string(r.status)) + "\n";
    if (r.tableau) {
        j["tableau"] = to_json(*r.tableau);
        text = r.tableau->render();
    }
    emit(g, j, text);
    return kOk;
}

int cmd_expand(const Globals& g, const std::string& ms) {
    const Partition mu = parse_partition(ms);
    // the full expansion: no index exceeds |mu|
    auto d = p_in_e_basis(mu, std::max(1, mu.size()));
    std::ostringstream os;
    os << "P_(" << mu.to_string() << ") =\n";
    for (auto it = d.terms().rbegin(); it != d.terms().rend(); ++it)
        os << "  + [" << it->second.to_string() << "] e_(" << it->first.to_string() << ")\n";
    emit(g, json{{"mu", to_json(mu)}, {"expansion", to_json(d)}}, os.str());
    return kOk;
}

int cmd_stanley(const Globals& g, const std::string& ls, const std::string& ms, const std::string& ns) {
    const Partition lambda = parse_partition(ls), mu = parse_partition(ms), nu = parse_partition(ns);
    auto r = stanley_check(lambda, mu, nu);
    json j = to_json(r);
    j["hooks"] = json::array();
    for (const auto& h : r.hooks) j["hooks"].push_back(to_json(h));
    std::ostringstream os;
    os << "product: " << hooks_to_string(r.hooks) << "\n";
    os << "monomial: " << (r.monomial.sign < 0 ? "-" : "") << "q^" << r.monomial.q_exp << "*t^" << r.monomial.t_exp
       << "\n";
    os << "laurent: " << (r.laurent ? "yes" : "no") << "   factored: " << (r.factored ? "yes" : "no")
       << "   U: " << r.u_count << "   L: " << r.l_count << "\n";
    emit(g, j, os.str());
    if (!r.passed()) throw VerificationFailed{};
    return kOk;
}

int cmd_verify(const Globals& g, int max_mu, const std::string& box, bool one_column, bool quiet) {
    SweepConfig c;
    c.max_mu_size = max_mu;
    c.workers = g.workers;
    c.one_column_mu = one_column;
    auto x = box.find('x');
    try {
        if (x == std::string::npos) throw std::invalid_argument("x");
        c.box_rows = std::stoi(box.substr(0, x));
        c.box_cols = std::stoi(box.substr(x + 1));
    } catch (const std::exception&) {
        throw ParseError("box must look like 4x4");
    }
    if (c.max_mu_size < 1 || c.box_rows < 1 || c.box_cols < 1) throw ParseError("sweep ranges must be positive");
    if (!g.eval.empty()) c.eval_points.push_back(parse_point(g.eval));

    auto progress = [&](int done, int total) {
        if (!quiet && (done % 250 == 0 || done == total)) std::cerr << "\r" << done << "/" << total << std::flush;
    };
    auto s = run_sweep(c, progress);
    if (!quiet) std::cerr << "\n";
    json j{{"checked", s.checked}, {"passed", s.passed}, {"failed", s.failed}, {"nonzero", s.nonzero}};
    j["failures"] = json::array();
    std::ostringstream os;
    os << "checked " << s.checked << "   passed " << s.passed << "   failed " << s.failed << "   nonzero "
       << s.nonzero << "\n";
    for (const auto& r : s.results) {
        if (r.passed()) continue;
        j["failures"].push_back(to_json(r));
        os << "FAILED lambda=" << r.instance.lambda.to_string() << " mu=" << r.instance.mu.to_string()
           << " nu=" << r.instance.nu.to_string() << (r.error.empty() ? "" : "  " + r.error) << "\n";
    }
    emit(g, j, os.str());
    if (s.failed) throw VerificationFailed{};
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Macdonald Littlewood-Richardson coefficients for unique tableaux"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--json", g.json, "JSON output");
    app.add_option("--eval", g.eval, "also evaluate at q=R,t=R (exact rationals a/b)");
    app.add_option("--workers", g.workers, "sweep worker threads")->check(CLI::PositiveNumber);

    std::string lambda, mu, nu, weight, method = "both", box = "4x4";
    int max_mu = 5;
    bool one_column = false, quiet = false;

    auto* coeff = app.add_subcommand("coeff", "coefficient of P_nu in P_lambda P_mu");
    coeff->add_option("--lambda", lambda)->required();
    coeff->add_option("--mu", mu)->required();
    coeff->add_option("--nu", nu)->required();
    coeff->add_option("--method", method)->check(CLI::IsMember({"formula", "pieri", "both", "schur"}));

    auto* kost = app.add_subcommand("kostka", "number of SSYT of shape mu and weight");
    kost->add_option("--mu", mu)->required();
    kost->add_option("--weight", weight)->required();

    auto* uniq = app.add_subcommand("unique", "the SSYT of shape mu and weight, if unique");
    uniq->add_option("--mu", mu)->required();
    uniq->add_option("--weight", weight)->required();

    auto* expand = app.add_subcommand("expand", "P_mu in the elementary basis");
    expand->add_option("--mu", mu)->required();

    auto* verify = app.add_subcommand("verify", "compare the formula with the Pieri brute force");
    verify->add_option("--max-mu", max_mu, "largest |mu|");
    verify->add_option("--box", box, "lambda box, rows x cols");
    verify->add_flag("--one-column", one_column, "only one-column mu");
    verify->add_flag("--quiet", quiet, "no progress on stderr");

    auto* stanley = app.add_subcommand("stanley", "hook-binomial form of c * prod L * prod L * prod U");
    stanley->add_option("--lambda", lambda)->required();
    stanley->add_option("--mu", mu)->required();
    stanley->add_option("--nu", nu)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    try {
        if (*coeff) return cmd_coeff(g, lambda, mu, nu, method);
        if (*kost) return cmd_kostka(g, mu, weight);
        if (*uniq) return cmd_unique(g, mu, weight);
        if (*expand) return cmd_expand(g, mu);
        if (*verify) return cmd_verify(g, max_mu, box, one_column, quiet);
        if (*stanley) return cmd_stanley(g, lambda, mu, nu);
    } catch (const VerificationFailed&) {
        return kVerification;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const InvalidPartition& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const Error& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return kPrecondition;
    }
    return kOk;
}
