#include "rclean/cli.hpp"

#include <functional>
#include <memory>
#include <optional>

#include "CLI11.hpp"
#include "rclean/report.hpp"
#include "rclean/series.hpp"

namespace rclean::cli {

namespace {

using report::Json;

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ParseError:
        case ErrorKind::DenominatorNotUnit:
        case ErrorKind::InvalidRingSpec:
        case ErrorKind::RingMismatch:
        case ErrorKind::PrecisionMismatch: return kParseError;
        case ErrorKind::PreconditionViolated:
        case ErrorKind::NotAUnit:
        case ErrorKind::NotInvertible:
        case ErrorKind::CharTwo:
        case ErrorKind::NotSimpleRoot:
        case ErrorKind::NotSolvable:
        case ErrorKind::NotASquare: return kPrecondition;
        case ErrorKind::BudgetExceeded: return kBudget;
        case ErrorKind::WitnessVerificationFailed:
        case ErrorKind::Internal: return kVerification;
    }
    return kVerification;
}

struct Common {
    std::string ring;
    std::string format = "text";
};

void add_common(CLI::App* sub, Common& common) {
    sub->add_option("--ring", common.ring, "ring spec: Zmod:<p^k>, Zloc:<p>, Padic:<p>:<prec>, Series(<spec>;<m>)")->required();
    sub->add_option("--format", common.format, "output format")->check(CLI::IsMember({"text", "json"}));
}

std::optional<Elem> solvable_or_empty(const std::function<Elem()>& solve) {
    try {
        return solve();
    } catch (const AlgebraError& e) {
        if (e.kind() == ErrorKind::NotSolvable || e.kind() == ErrorKind::NotASquare) return std::nullopt;
        throw;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Strongly rad-clean 2x2 matrices over commutative local rings", "rclean"};
    app.require_subcommand(1);

    Common common;
    std::string matrix_text, mu_text, lambda_text, c_text, b0_text, check = "all";
    bool with_witness = false;
    bool serial = false;
    unsigned max_modulus = oracle::Limits{}.max_modulus;
    std::optional<std::size_t> samples;

    auto* classify = app.add_subcommand("classify", "decide strong (rad-)cleanness of a matrix");
    add_common(classify, common);
    classify->add_option("--matrix", matrix_text, "matrix literal \"a,b;c,d\"")->required();
    classify->add_flag("--witness", with_witness, "include the verified decomposition A = E + U");

    auto* normalize = app.add_subcommand("normalize", "reduce a unit-trace matrix to companion form");
    add_common(normalize, common);
    normalize->add_option("--matrix", matrix_text, "matrix literal \"a,b;c,d\"")->required();

    auto* roots = app.add_subcommand("roots", "split t^2 + mu t + lambda into a radical and a unit root");
    add_common(roots, common);
    roots->add_option("--mu", mu_text, "unit coefficient of t")->required();
    roots->add_option("--lambda", lambda_text, "radical constant term")->required();

    auto* solve = app.add_subcommand("solve", "radical root of x^2 + x = c");
    add_common(solve, common);
    solve->add_option("--c", c_text, "radical right-hand side")->required();

    auto* lift = app.add_subcommand("lift", "lift a base root through a truncated power-series ring");
    add_common(lift, common);
    lift->add_option("--mu", mu_text, "series coefficient of t")->required();
    lift->add_option("--lambda", lambda_text, "series constant term")->required();
    lift->add_option("--b0", b0_text, "radical root of the constant-term quadratic")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive brute-force cross-check over Zmod");
    add_common(oracle_cmd, common);
    oracle_cmd->add_option("--check", check, "which definitions to brute-force")
        ->check(CLI::IsMember({"all", "clean", "rad-clean", "j-clean", "quasipolar"}));
    oracle_cmd->add_flag("--serial", serial, "use the single-threaded reference kernel");
    oracle_cmd->add_option("--max-modulus", max_modulus, "enumeration guard on p^k");

    auto* trace_cmd = app.add_subcommand("trace-property", "is every unit-trace matrix strongly rad-clean?");
    add_common(trace_cmd, common);
    trace_cmd->add_option("--samples", samples, "pair budget (exhaustive for Zmod, sampled otherwise)");

    std::vector<const char*> argv{"rclean"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kParseError;
    }

    const bool json = common.format == "json";
    auto emit = [&](const Json& j) { out << (json ? report::dump(j) : report::to_text(j)); };

    try {
        const RingPtr ring = Ring::parse(common.ring);

        if (classify->parsed()) {
            const Mat2 a = parse_matrix(matrix_text, ring);
            const Classification cls = ring->family() == Family::Series ? classify_series_matrix(a) : classify_rad_clean(a);
            emit(report::classification_json(a, cls, with_witness));
        } else if (normalize->parsed()) {
            const Mat2 a = parse_matrix(matrix_text, ring);
            const Normalization n = normalize_invertible_trace(a);
            Json j;
            j["ring"] = ring->to_string();
            j["matrix"] = report::matrix_json(a);
            j["case"] = to_string(n.kind);
            j["transform"] = report::matrix_json(n.transform);
            j["normal_form"] = report::matrix_json(n.normal_form);
            j["gl2_certificate"] = n.kind == NormalCase::IV;
            emit(j);
        } else if (roots->parsed()) {
            const MonicQuadratic q{parse_elem(mu_text, ring), parse_elem(lambda_text, ring)};
            Json j;
            j["ring"] = ring->to_string();
            j["mu"] = to_string(q.mu);
            j["lambda"] = to_string(q.lam);
            std::optional<RootPair> pair;
            try {
                pair = solve_split_quadratic(q);
            } catch (const AlgebraError& e) {
                if (e.kind() != ErrorKind::NotSolvable) throw;
            }
            j["solvable"] = pair.has_value();
            if (pair) {
                j["alpha"] = to_string(pair->alpha);
                j["beta"] = to_string(pair->beta);
            }
            emit(j);
        } else if (solve->parsed()) {
            const Elem c = parse_elem(c_text, ring);
            const auto root = solvable_or_empty([&] { return solve_x2_plus_x(c); });
            Json j;
            j["ring"] = ring->to_string();
            j["c"] = to_string(c);
            j["solvable"] = root.has_value();
            if (root) j["root"] = to_string(*root);
            emit(j);
        } else if (lift->parsed()) {
            if (ring->family() != Family::Series) throw AlgebraError(ErrorKind::InvalidRingSpec, "lift needs a Series ring");
            const Elem mu = parse_elem(mu_text, ring);
            const Elem lam = parse_elem(lambda_text, ring);
            const Elem b0 = parse_elem(b0_text, ring->base());
            const Elem y = lift_root_recurrence(mu, lam, b0);
            const Elem residual = y * y + mu * y + lam;
            Json j;
            j["ring"] = ring->to_string();
            j["mu"] = to_string(mu);
            j["lambda"] = to_string(lam);
            j["b0"] = to_string(b0);
            j["root"] = to_string(y);
            j["residual"] = to_string(residual);
            j["residual_zero"] = residual.is_zero();
            emit(j);
        } else if (oracle_cmd->parsed()) {
            oracle::Checks checks = oracle::Checks::all();
            if (check == "clean") checks = oracle::Checks::only(oracle::Predicate::Clean);
            else if (check == "rad-clean") checks = oracle::Checks::only(oracle::Predicate::RadClean);
            else if (check == "j-clean") checks = oracle::Checks::only(oracle::Predicate::JClean);
            else if (check == "quasipolar") checks = oracle::Checks::only(oracle::Predicate::Quasipolar);
            const auto exec = serial ? oracle::Execution::Serial : oracle::Execution::Parallel;
            const auto rep = oracle::exhaustive_cross_check(ring, checks, exec, oracle::Limits{max_modulus});
            emit(report::oracle_json(rep));
            if (!rep.clean_run()) return kVerification;
        } else if (trace_cmd->parsed()) {
            const bool exhaustive = ring->family() == Family::Zmod;
            const std::size_t budget = samples.value_or(exhaustive ? 1'000'000 : 100);
            emit(report::trace_json(ring, trace_property_check(ring, budget)));
        }
    } catch (const AlgebraError& e) {
        const int code = exit_code_for(e.kind());
        if (json) {
            Json j;
            j["error"] = std::string(to_string(e.kind()));
            j["message"] = e.what();
            out << report::dump(j);
        }
        err << "error: " << e.what() << "\n";
        return code;
    }
    return kOk;
}

}  // namespace rclean::cli
