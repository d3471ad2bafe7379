// Command-line front end: bracket evaluation, axiom checks, derivation
// classification, and automorphism verification, with text or JSON reports.
// Exit codes: 0 success/verified, 1 mathematical verification failure, 2 invalid input.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>

#include "wsuper/automorphisms.hpp"
#include "wsuper/derivations.hpp"
#include "wsuper/expectation.hpp"
#include "wsuper/textio.hpp"

using json = nlohmann::ordered_json;
using namespace wsuper;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

struct Options {
    std::string s = "0";
    std::string lambda = "symbolic";
    std::int64_t window = 0; // 0 = per-command default
    std::int64_t interior = 4;
    std::string format = "text";
    std::uint64_t seed = 0;
    std::string degrees = "-3..3";

    // sigma parameters
    int epsilon = 1;
    std::string alpha = "1", mu = "1", x = "1", beta = "0", gamma = "0";
    std::vector<std::string> inner_exps;
    bool with_sigma = false;
    std::int64_t samples = 0;

    std::vector<std::string> elements;
};

ScalarMode parse_mode(const std::string& text) {
    if (text == "symbolic" || text == "l")
        return ScalarMode::symbolic();
    return ScalarMode::specialized(Rational::parse(text));
}

AlgebraConfig make_config(const Options& opt) {
    HalfInt s = parse_halfint(opt.s);
    return AlgebraConfig(s, parse_mode(opt.lambda));
}

HalfInt checked_window(std::int64_t n, std::int64_t fallback) {
    std::int64_t w = n == 0 ? fallback : n;
    if (w < 1 || w > 32)
        fail(Errc::InvalidIndex, "window must be between 1 and 32");
    return HalfInt::whole(w);
}

SigmaParams sigma_from_options(const AlgebraConfig& cfg, const Options& opt) {
    SigmaParams p;
    p.epsilon = opt.epsilon;
    p.alpha = parse_scalar(opt.alpha, cfg.mode);
    p.mu = parse_scalar(opt.mu, cfg.mode);
    p.x = parse_scalar(opt.x, cfg.mode);
    p.beta = parse_scalar(opt.beta, cfg.mode);
    p.gamma = parse_scalar(opt.gamma, cfg.mode);
    return p;
}

std::pair<Scalar, std::int64_t> parse_inner_exp(const std::string& text, const ScalarMode& mode) {
    auto comma = text.rfind(',');
    if (comma == std::string::npos)
        throw ParseFailure(0, "--inner-exp expects 'alpha,k'");
    Scalar alpha = parse_scalar(text.substr(0, comma), mode);
    HalfInt k = parse_halfint(text.substr(comma + 1));
    if (!k.is_integer())
        fail(Errc::InvalidIndex, "inner-exponential index k must be an integer");
    return {alpha, k.integer_value()};
}

json violations_json(const std::vector<HomViolation>& vs) {
    json out = json::array();
    for (const auto& v : vs)
        out.push_back({{"x", v.x.to_string()},
                       {"y", v.y.to_string()},
                       {"lhs", render_element(v.lhs)},
                       {"rhs", render_element(v.rhs)}});
    return out;
}

int cmd_bracket(const Options& opt) {
    AlgebraConfig cfg = make_config(opt);
    Element x = parse_element(opt.elements.at(0), cfg);
    Element y = parse_element(opt.elements.at(1), cfg);
    std::cout << render_element(bracket(cfg, x, y)) << "\n";
    return 0;
}

int cmd_check_axioms(const Options& opt) {
    AlgebraConfig cfg = make_config(opt);
    HalfInt window = checked_window(opt.window, 5);
    auto skew = check_super_skew(cfg, window);
    auto jacobi = check_super_jacobi(cfg, window);
    if (opt.format == "json") {
        json out = json::array();
        for (const auto* list : {&skew, &jacobi})
            for (const auto& v : *list) {
                json w = json::array();
                for (const auto& b : v.where)
                    w.push_back(b.to_string());
                out.push_back({{"rule", v.rule}, {"where", w}, {"defect", render_element(v.defect)}});
            }
        std::cout << out.dump() << "\n";
    } else {
        for (const auto* list : {&skew, &jacobi})
            for (const auto& v : *list)
                std::cout << v.to_string() << ": defect " << render_element(v.defect) << "\n";
        std::cout << "super-skew violations: " << skew.size()
                  << ", super-jacobi violations: " << jacobi.size() << "\n";
    }
    return skew.empty() && jacobi.empty() ? 0 : kExitVerifyFailed;
}

json classification_json(const ClassificationReport& report) {
    json out;
    out["s"] = report.cfg.s_string();
    out["lambda"] = report.cfg.mode.to_string();
    out["window"] = report.window.integer_value();
    out["interior"] = report.interior.integer_value();
    out["cells"] = json::array();
    for (const auto& cell : report.cells) {
        json c;
        c["parity"] = parity_name(cell.parity);
        c["degree"] = cell.degree.to_string();
        c["dim_nullspace_interior"] = cell.dim_nullspace_interior;
        c["dim_inner_interior"] = cell.dim_inner_interior;
        c["dim_outer"] = cell.dim_outer;
        c["outer_labels"] = cell.outer_labels;
        out["cells"].push_back(std::move(c));
    }
    return out;
}

int cmd_classify(const Options& opt) {
    AlgebraConfig cfg = make_config(opt);
    HalfInt window = checked_window(opt.window, 8);
    HalfInt interior = HalfInt::whole(opt.interior);
    if (window.twice < interior.twice + 4)
        fail(Errc::InteriorTooLarge, "classify needs window >= interior + 2");
    auto dots = opt.degrees.find("..");
    if (dots == std::string::npos)
        throw ParseFailure(0, "--degrees expects 'lo..hi'");
    HalfInt lo = parse_halfint(opt.degrees.substr(0, dots));
    HalfInt hi = parse_halfint(opt.degrees.substr(dots + 2));

    ClassificationReport report =
        classify(cfg, lo, hi, {Parity::Even, Parity::Odd}, window, interior);

    bool matches = true;
    for (const auto& cell : report.cells) {
        auto expect = expected_outer_labels(cfg.s, cfg.mode, cell.parity, cell.degree);
        if (cell.dim_outer != static_cast<int>(expect.size()) ||
            (cell.dim_outer > 0 && cell.outer_labels != expect))
            matches = false;
    }

    if (opt.format == "json") {
        std::cout << classification_json(report).dump() << "\n";
    } else {
        std::cout << "s = " << cfg.s_string() << ", lambda = " << cfg.mode.to_string()
                  << ", window = " << window.to_string() << ", interior = " << interior.to_string()
                  << "\n";
        for (const auto& cell : report.cells) {
            std::cout << "  (" << parity_name(cell.parity) << ", degree " << cell.degree.to_string()
                      << "): nullspace " << cell.dim_nullspace_interior << ", inner "
                      << cell.dim_inner_interior << ", outer " << cell.dim_outer;
            if (!cell.outer_labels.empty()) {
                std::cout << " [";
                for (std::size_t i = 0; i < cell.outer_labels.size(); ++i)
                    std::cout << (i ? ", " : "") << cell.outer_labels[i];
                std::cout << "]";
            }
            std::cout << "\n";
        }
        std::cout << (matches ? "expected outer dimensions: match" : "MISMATCH with expected table")
                  << "\n";
    }
    return matches ? 0 : kExitVerifyFailed;
}

int cmd_aut_verify(const Options& opt, bool have_params) {
    AlgebraConfig cfg = make_config(opt);
    HalfInt window = checked_window(opt.window, 6);
    if (opt.samples > 0 && !have_params) {
        // Seeded sample suite over valid parameter regimes.
        std::uint64_t state = opt.seed * 6364136223846793005ULL + 1442695040888963407ULL;
        auto next = [&]() {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            return state >> 33;
        };
        const Rational roots[] = {Rational(1), Rational(2), Rational(1, 3), Rational(-2),
                                  Rational(3, 2)};
        const Rational small[] = {Rational(0), Rational(3), Rational(-1, 2), Rational(1, 4)};
        bool sym_or_nonzero = cfg.mode.is_symbolic() || !cfg.mode.lambda0().is_zero();
        int failures = 0;
        for (std::int64_t i = 0; i < opt.samples; ++i) {
            int eps = sym_or_nonzero ? 1 : (next() % 2 ? 1 : -1);
            Rational ar = roots[next() % 5];
            Rational mr = sym_or_nonzero ? Rational(1) : roots[next() % 5];
            Scalar beta = Scalar::from_rational(small[next() % 4], cfg.mode);
            Scalar gamma = Scalar::from_rational(small[next() % 4], cfg.mode);
            SigmaParams p =
                suggest_sigma_params(cfg, eps, ar, mr, next() % 2 == 0, beta, gamma);
            AutMap f = make_sigma(cfg, p, window);
            auto vs = verify_homomorphism(cfg, f, window);
            if (!vs.empty())
                ++failures;
        }
        std::cout << "samples: " << opt.samples << ", failures: " << failures << "\n";
        return failures == 0 ? 0 : kExitVerifyFailed;
    }
    SigmaParams p = sigma_from_options(cfg, opt);
    AutMap f = make_sigma(cfg, p, window);
    auto vs = verify_homomorphism(cfg, f, window);
    if (opt.format == "json") {
        std::cout << violations_json(vs).dump() << "\n";
    } else {
        for (const auto& v : vs)
            std::cout << "violation at (" << v.x.to_string() << ", " << v.y.to_string()
                      << "): lhs = " << render_element(v.lhs)
                      << ", rhs = " << render_element(v.rhs) << "\n";
        std::cout << "violations: " << vs.size() << "\n";
    }
    return vs.empty() ? 0 : kExitVerifyFailed;
}

int cmd_aut_apply(const Options& opt, bool have_params) {
    AlgebraConfig cfg = make_config(opt);
    HalfInt window = checked_window(opt.window, 6);
    AutMap f = identity_aut(cfg, window);
    if (opt.with_sigma || have_params)
        f = make_sigma(cfg, sigma_from_options(cfg, opt), window);
    for (const auto& text : opt.inner_exps) {
        auto [alpha, k] = parse_inner_exp(text, cfg.mode);
        f = compose(f, make_inner_exp(cfg, alpha, k, window));
    }
    Element e = parse_element(opt.elements.at(0), cfg);
    std::cout << render_element(f.apply(e)) << "\n";
    return 0;
}

int cmd_aut_conjugate(const Options& opt) {
    AlgebraConfig cfg = make_config(opt);
    HalfInt window = checked_window(opt.window, 6);
    AutMap sigma = make_sigma(cfg, sigma_from_options(cfg, opt), window);
    if (opt.inner_exps.empty())
        fail(Errc::InvalidIndex, "conjugate requires --inner-exp alpha,k");
    AutMap e = identity_aut(cfg, window);
    for (const auto& text : opt.inner_exps) {
        auto [alpha, k] = parse_inner_exp(text, cfg.mode);
        e = compose(e, make_inner_exp(cfg, alpha, k, window));
    }
    AutMap conj = compose(sigma, compose(e, invert(sigma)));
    try {
        JDecomposition d = decompose_into_inner_group(cfg, conj);
        if (opt.format == "json") {
            json out = json::array();
            for (const auto& [alpha, k] : d.factors)
                out.push_back({{"alpha", alpha.to_string()}, {"k", k}});
            std::cout << out.dump() << "\n";
        } else {
            for (const auto& [alpha, k] : d.factors)
                std::cout << "factor: alpha = " << alpha.to_string() << ", k = " << k << "\n";
            std::cout << "conjugate lies in the inner subgroup (" << d.factors.size()
                      << " factor(s))\n";
        }
        return 0;
    } catch (const AlgebraError& err) {
        if (err.code() != Errc::NotInJ)
            throw;
        std::cout << err.what() << "\n";
        return kExitVerifyFailed;
    }
}

int cmd_aut_constraints(const Options& opt) {
    AlgebraConfig cfg = make_config(opt);
    SigmaParams p = sigma_from_options(cfg, opt);
    SigmaConstraintReport report = check_sigma_constraints(cfg, p);
    if (opt.format == "json") {
        json out = json::array();
        for (const auto& line : report.lines)
            out.push_back({{"name", line.name}, {"pass", line.pass}});
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& line : report.lines)
            std::cout << line.name << ": " << (line.pass ? "pass" : "fail") << "\n";
    }
    return report.all_pass ? 0 : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"Exact computational kernel for the deformative super W-algebras W^s_l(2,2)"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--s", opt.s, "grading offset: 0 or 1/2");
        cmd->add_option("--lambda", opt.lambda, "symbolic (or l) | rational value");
        cmd->add_option("--window", opt.window, "index window [-N, N]");
        cmd->add_option("--interior", opt.interior, "interior half-width M");
        cmd->add_option("--format", opt.format, "text | json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--seed", opt.seed, "seed for sampled suites");
    };

    CLI::App* bracket_cmd = app.add_subcommand("bracket", "compute [x, y] of two elements");
    add_common(bracket_cmd);
    bracket_cmd->add_option("elements", opt.elements, "two element strings")->expected(2);

    CLI::App* axioms_cmd =
        app.add_subcommand("check-axioms", "verify super skew-symmetry and super Jacobi");
    add_common(axioms_cmd);

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "classify homogeneous derivations on a window");
    add_common(classify_cmd);
    classify_cmd->add_option("--degrees", opt.degrees, "degree range lo..hi");

    CLI::App* aut_cmd = app.add_subcommand("aut", "automorphism operations");
    aut_cmd->require_subcommand(1);
    std::vector<CLI::App*> aut_subs;
    CLI::App* verify_cmd = aut_cmd->add_subcommand("verify", "verify a sigma-family map");
    CLI::App* apply_cmd = aut_cmd->add_subcommand("apply", "apply an automorphism to an element");
    CLI::App* conj_cmd =
        aut_cmd->add_subcommand("conjugate", "conjugate an inner exponential by sigma");
    CLI::App* constraints_cmd =
        aut_cmd->add_subcommand("constraints", "evaluate the sigma parameter identities");
    for (CLI::App* cmd : {verify_cmd, apply_cmd, conj_cmd, constraints_cmd}) {
        add_common(cmd);
        cmd->add_option("--epsilon", opt.epsilon, "+1 or -1")->check(CLI::IsMember({1, -1}));
        cmd->add_option("--alpha", opt.alpha, "nonzero scalar");
        cmd->add_option("--mu", opt.mu, "nonzero scalar");
        cmd->add_option("--x", opt.x, "scalar with x^2 = alpha^{2s} mu^3");
        cmd->add_option("--beta", opt.beta, "scalar");
        cmd->add_option("--gamma", opt.gamma, "scalar");
        cmd->add_option("--inner-exp", opt.inner_exps, "inner exponential 'alpha,k'")
            ->allow_extra_args(false);
        aut_subs.push_back(cmd);
    }
    verify_cmd->add_option("--samples", opt.samples, "verify K sampled valid sigma maps");
    apply_cmd->add_flag("--sigma", opt.with_sigma, "start from the sigma map");
    apply_cmd->add_option("element", opt.elements, "element string")->expected(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitBadInput;
    }

    auto param_given = [&](CLI::App* cmd) {
        for (const char* name : {"--epsilon", "--alpha", "--mu", "--x", "--beta", "--gamma"})
            if (cmd->count(name) > 0)
                return true;
        return false;
    };

    try {
        if (bracket_cmd->parsed())
            return cmd_bracket(opt);
        if (axioms_cmd->parsed())
            return cmd_check_axioms(opt);
        if (classify_cmd->parsed())
            return cmd_classify(opt);
        if (aut_cmd->parsed()) {
            if (verify_cmd->parsed())
                return cmd_aut_verify(opt, param_given(verify_cmd));
            if (apply_cmd->parsed())
                return cmd_aut_apply(opt, param_given(apply_cmd));
            if (conj_cmd->parsed())
                return cmd_aut_conjugate(opt);
            if (constraints_cmd->parsed())
                return cmd_aut_constraints(opt);
        }
        return kExitBadInput;
    } catch (const ParseFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const AlgebraError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
}
