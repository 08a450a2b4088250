// gerstkit: exact verification of Gerstenhaber/BV identities on polynomial
// Lie algebroids. Exit codes: 0 all checks pass, 1 a check failed,
// 2 usage or parse error.

#include <CLI11.hpp>

#include "gerstkit/suites.hpp"

#include <iostream>

using namespace gerstkit;

namespace {

struct GlobalOpts {
    std::string algebroid = "standard(2)";
    int trials = 100;
    std::uint64_t seed = 1;
    int grade_bound = 3;
    int degree_bound = 3;
    std::string convention = "bracket-side";
    std::string divergence;
    bool json = false;
    bool timing = false;
};

Convention parse_convention(const std::string& s) {
    if (s == "bracket-side") return Convention::BracketSide;
    if (s == "paper-sec2") return Convention::PaperSec2;
    throw CLI::ValidationError("--convention must be bracket-side or paper-sec2");
}

RunConfig make_config(const GlobalOpts& g) {
    RunConfig cfg;
    cfg.pres = load_algebroid(g.algebroid);
    cfg.trials = g.trials;
    cfg.seed = g.seed;
    cfg.grade_bound = g.grade_bound;
    cfg.degree_bound = g.degree_bound;
    cfg.convention = parse_convention(g.convention);
    if (!g.divergence.empty())
        cfg.divergence_values = parse_divergence(g.divergence, cfg.pres).values;
    return cfg;
}

void print_report(const Report& rep, const GlobalOpts& g) {
    if (g.json)
        std::cout << rep.to_json(g.timing).dump(2) << "\n";
    else
        std::cout << rep.to_text(g.timing);
}

int finish(const std::vector<Report>& reports, const GlobalOpts& g) {
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.all_passed();
    if (g.json && reports.size() > 1) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(r.to_json(g.timing));
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& r : reports) print_report(r, g);
    }
    return ok ? 0 : 1;
}

void add_global_opts(CLI::App* cmd, GlobalOpts& g) {
    cmd->add_option("--algebroid", g.algebroid, "standard(n) or a JSON presentation file");
    cmd->add_option("--trials", g.trials, "sample count per check")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", g.seed, "root seed; every report records it");
    cmd->add_option("--grade-bound", g.grade_bound)->check(CLI::PositiveNumber);
    cmd->add_option("--degree-bound", g.degree_bound)->check(CLI::PositiveNumber);
    cmd->add_option("--convention", g.convention, "bracket-side | paper-sec2");
    cmd->add_option("--c", g.divergence, "divergence values, e.g. \"c(e1)=x2, c(e2)=0\"");
    cmd->add_flag("--json", g.json, "structured output (schema 1)");
    cmd->add_flag("--timing", g.timing, "include elapsed time in the output");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Gerstenhaber / Batalin-Vilkovisky identity checker"};
    app.require_subcommand(1);
    GlobalOpts g;

    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::string suite = "all";
    verify->add_option("--suite", suite, "algebroid, gerstenhaber, bicomplex-u, hochschild-g, "
                                         "squares, bv, canonical, or all");
    int squares_n = 3;
    verify->add_option("--n", squares_n, "max position for the squares suite");
    add_global_opts(verify, g);

    auto* eval_cmd = app.add_subcommand("eval", "evaluate an operator on expressions");
    std::string op;
    std::vector<std::string> operands;
    eval_cmd->add_option("operator", op,
                         "bracket | wedge | delta | derham | derham-g | d-hochschild | d-chevalley")
        ->required();
    eval_cmd->add_option("operands", operands, "expressions (forms as JSON for derham ops)");
    add_global_opts(eval_cmd, g);

    auto* divcheck = app.add_subcommand("div-check", "check (Div1)/(Div2) and d_total(c) = eps");
    add_global_opts(divcheck, g);

    auto* bvcheck = app.add_subcommand("bv-check", "build Delta from --c and run the quasi-BV suite");
    add_global_opts(bvcheck, g);

    auto* torsor = app.add_subcommand("torsor", "difference form of two divergences and closedness");
    std::string c1_spec, c2_spec;
    torsor->add_option("--c1", c1_spec)->required();
    torsor->add_option("--c2", c2_spec)->required();
    add_global_opts(torsor, g);

    auto* derham = app.add_subcommand("derham", "classical de Rham differential of a form");
    std::string form_src;
    derham->add_option("--form", form_src, "JSON file or inline {\"arity\":..,\"values\":{..}}")
        ->required();
    add_global_opts(derham, g);

    auto* derhamg = app.add_subcommand("derham-g", "graded de Rham differential via extend/restrict");
    std::string formg_src, derhamg_op = "d";
    derhamg->add_option("--form", formg_src)->required();
    derhamg->add_option("--op", derhamg_op, "d (default)");
    add_global_opts(derhamg, g);

    auto* lemma35 = app.add_subcommand("lemma35", "d_H[ , ] = 0 and its four-term expanded form");
    add_global_opts(lemma35, g);

    auto* canonical = app.add_subcommand("canonical", "identities of the canonical cochains I, omega, m");
    add_global_opts(canonical, g);

    auto* hochschild = app.add_subcommand("hochschild",
                                          "graded Hochschild differential of a named cochain");
    std::string h_op = "d", h_cochain = "I";
    hochschild->add_option("--op", h_op, "d (default)");
    hochschild->add_option("--cochain", h_cochain, "I | bracket | m | Delta");
    add_global_opts(hochschild, g);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        RunConfig cfg = make_config(g);
        const PresPtr& pres = cfg.pres;

        if (*verify) {
            std::vector<Report> reports;
            if (suite == "all") {
                for (const auto& name : all_suites())
                    reports.push_back(name == "squares" ? suite_squares(cfg, squares_n)
                                                        : run_suite(name, cfg));
            } else if (suite == "squares") {
                reports.push_back(suite_squares(cfg, squares_n));
            } else if (suite == "div") {
                reports.push_back(suite_divergence(cfg));
            } else {
                reports.push_back(run_suite(suite, cfg));
            }
            return finish(reports, g);
        }

        if (*eval_cmd) {
            auto expr = [&](std::size_t i) {
                if (i >= operands.size()) throw std::invalid_argument("missing operand");
                return parse_polyvector(operands[i], pres);
            };
            Polyvector out(pres);
            nlohmann::json jout;
            bool is_form_out = false;
            if (op == "bracket") {
                out = schouten_bracket(expr(0), expr(1));
            } else if (op == "wedge") {
                out = wedge(expr(0), expr(1));
            } else if (op == "delta") {
                Divergence c = cfg.divergence(cfg.convention);
                DeltaOp delta(c, cfg.convention, cfg.degree_bound, cfg.grade_bound);
                out = delta.apply(expr(0));
            } else if (op == "derham") {
                if (operands.empty()) throw std::invalid_argument("missing form operand");
                ClassicalForm f = load_form(operands[0], pres);
                jout = form_to_json(classical_derham_d(f));
                is_form_out = true;
            } else if (op == "derham-g") {
                if (operands.empty()) throw std::invalid_argument("missing form operand");
                ClassicalForm f = load_form(operands[0], pres);
                SampleSpec spec = cfg.sample("eval-derham-g", 64);
                BigForm df = derham_d_g(extend_classical(f, spec), spec);
                jout = form_to_json(restrict_to_classical(df));
                is_form_out = true;
            } else if (op == "d-hochschild") {
                GradedHCochain delta_c{
                    1, -1, DeltaOp(cfg.divergence(cfg.convention), cfg.convention).as_cochain()};
                GradedHCochain d = d_hochschild_g(delta_c);
                out = evaluate(d.cochain, {expr(0), expr(1)});
            } else if (op == "d-chevalley") {
                Line0Cochain I = identity_line0(pres);
                out = evaluate(d_chevalley_g(I).cochain, {expr(0), expr(1)});
            } else {
                throw std::invalid_argument("unknown operator: " + op);
            }
            if (is_form_out)
                std::cout << (g.json ? jout.dump(2) : jout.dump()) << "\n";
            else if (g.json) {
                nlohmann::json j;
                j["result"] = out.to_string();
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << out.to_string() << "\n";
            }
            return 0;
        }

        if (*divcheck) return finish({suite_divergence(cfg)}, g);
        if (*bvcheck) return finish({suite_bv(cfg)}, g);

        if (*torsor) {
            Divergence c1 = parse_divergence(c1_spec, pres);
            Divergence c2 = parse_divergence(c2_spec, pres);
            std::vector<Poly> diff;
            for (int i = 0; i < pres->num_gens(); ++i)
                diff.push_back(c1.values[static_cast<std::size_t>(i)] -
                               c2.values[static_cast<std::size_t>(i)]);
            ClassicalForm y = one_form(pres, diff);
            SampleSpec spec = cfg.sample("torsor");
            std::string w;
            bool closed = is_closed_1form(y, spec, &w);
            Report rep;
            rep.suite = "torsor";
            rep.seed = cfg.seed;
            rep.add("difference form is closed", closed, spec.trials, w);
            if (!g.json) std::cout << "difference: " << form_to_json(y).dump() << "\n";
            return finish({rep}, g);
        }

        if (*derham) {
            ClassicalForm f = load_form(form_src, pres);
            nlohmann::json j = form_to_json(classical_derham_d(f));
            std::cout << (g.json ? j.dump(2) : j.dump()) << "\n";
            return 0;
        }

        if (*derhamg) {
            if (derhamg_op != "d") throw std::invalid_argument("derham-g supports --op d");
            ClassicalForm f = load_form(formg_src, pres);
            SampleSpec spec = cfg.sample("derham-g", 64);
            BigForm df = derham_d_g(extend_classical(f, spec), spec);
            nlohmann::json j = form_to_json(restrict_to_classical(df));
            std::cout << (g.json ? j.dump(2) : j.dump()) << "\n";
            return 0;
        }

        if (*lemma35) {
            Report all = suite_hochschild_g(cfg);
            Report rep;
            rep.suite = "lemma35";
            rep.seed = cfg.seed;
            for (const auto& c : all.checks)
                if (c.name.rfind("d_H[ , ] = 0", 0) == 0 || c.name.rfind("four-term bracket", 0) == 0)
                    rep.checks.push_back(c);
            rep.elapsed_ms = all.elapsed_ms;
            return finish({rep}, g);
        }

        if (*canonical) return finish({suite_canonical(cfg)}, g);

        if (*hochschild) {
            if (h_op != "d") throw std::invalid_argument("hochschild supports --op d");
            GradedHCochain f = identity_cochain(pres);
            if (h_cochain == "I") {
                f = identity_cochain(pres);
            } else if (h_cochain == "bracket") {
                f = bracket_cochain(pres);
            } else if (h_cochain == "m") {
                f = GradedHCochain{2, 0, m_line1(pres).cochain};
            } else if (h_cochain == "Delta") {
                f = GradedHCochain{
                    1, -1, DeltaOp(cfg.divergence(cfg.convention), cfg.convention).as_cochain()};
            } else {
                throw std::invalid_argument("unknown cochain: " + h_cochain);
            }
            GradedHCochain d = d_hochschild_g(f);
            SampleSpec spec = cfg.sample("hochschild-eval", 128);
            EqualResult z = cochain_is_zero(d.cochain, spec);
            Report rep;
            rep.suite = "hochschild";
            rep.seed = cfg.seed;
            rep.add("d_H(" + h_cochain + ") = 0", z.equal, spec.trials, z.witness);
            print_report(rep, g);
            return 0;  // informational: a nonzero differential is not a failure
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
