// Command line surface for the library: relation checking, stability
// decisions in the chamber, cohomology of the deformation complex, wall
// witnesses, the lifting solver, the Vandermonde family, the obstruction
// search, and the aggregated verification suite.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 input error.

#include "enhadhm/constructions.hpp"
#include "enhadhm/deformation.hpp"
#include "enhadhm/errors.hpp"
#include "enhadhm/oracle.hpp"
#include "enhadhm/stability.hpp"
#include "enhadhm/suite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace enhadhm;
using nlohmann::json;

namespace {

struct Options {
    std::string format = "json";
    bool pretty = false;
};

struct CommandOutput {
    json inputs = json::object();
    json results = json::array();
    std::string status = "pass"; // pass | fail | partial
};

void add_result(CommandOutput& out, const std::string& name, bool ok, const std::string& detail)
{
    out.results.push_back(json{{"name", name}, {"status", ok ? "pass" : "fail"},
                               {"detail", detail}});
    if (!ok)
        out.status = "fail";
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail(Errc::bad_json, "cannot read file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int emit(const Options& options, const std::string& command, const CommandOutput& out,
         long long timing_ms)
{
    json report{
        {"command", command},
        {"inputs", out.inputs},
        {"results", out.results},
        {"status", out.status},
        {"timing_ms", timing_ms},
    };
    if (options.format == "text") {
        std::cout << command << ": " << out.status << " (" << timing_ms << " ms)\n";
        for (const json& r : out.results)
            std::cout << "  [" << r.at("status").get<std::string>() << "] "
                      << r.at("name").get<std::string>() << ": "
                      << r.at("detail").get<std::string>() << "\n";
    } else {
        std::cout << (options.pretty ? report.dump(2) : report.dump()) << "\n";
    }
    return out.status == "fail" ? 1 : 0;
}

json h_json(const CohomologyReport& coh)
{
    return json{{"h", coh.h}, {"euler", coh.euler}};
}

CommandOutput run_check(const std::string& file)
{
    CommandOutput out;
    out.inputs["file"] = file;
    EnhancedRep x = rep_from_json(read_file(file));
    RelationResidual res = relation_residuals(x);
    const auto residual = [&](const char* name, const RatMatrix& m) {
        add_result(out, name, m.is_zero(), m.is_zero() ? "zero" : "nonzero residual");
    };
    residual("R1 [A,B]+IJ", res.r1);
    residual("R2 AF-FA'", res.r2);
    residual("R3 BF-FB'", res.r3);
    residual("R4 JF", res.r4);
    residual("R5 [A',B']", res.r5);
    return out;
}

CommandOutput run_stability(const std::string& file, const std::string& theta,
                            const std::string& theta_prime)
{
    CommandOutput out;
    out.inputs = json{{"file", file}, {"theta", theta}, {"theta_prime", theta_prime}};
    EnhancedRep x = rep_from_json(read_file(file));
    StabilityParam p = make_param(parse_rational(theta), parse_rational(theta_prime), x.dims);
    out.inputs["theta_inf"] = format_rational(p.theta_inf);
    out.results.push_back(json{{"name", "chamber"}, {"status", "pass"},
                               {"detail", chamber_name(chamber_of(p))}});

    bool stable = is_stable_in_chamber(x, p); // throws outside the chamber
    std::size_t f_rank = rank(x.F);
    Subspace closure = krylov_closure(x.A, x.B, column_space(x.I));
    add_result(out, "F injective", f_rank == x.dims.cprime,
               "rank(F) = " + std::to_string(f_rank) + " of " + std::to_string(x.dims.cprime));
    add_result(out, "closure of im(I) full", closure.is_full(),
               "dim = " + std::to_string(closure.dim()) + " of " + std::to_string(x.dims.c));
    out.results.push_back(json{{"name", "verdict"}, {"status", stable ? "pass" : "fail"},
                               {"detail", stable ? "stable" : "unstable"}});
    out.status = stable ? "pass" : "fail";
    return out;
}

CommandOutput run_cohomology(const std::string& file, bool general)
{
    CommandOutput out;
    out.inputs = json{{"file", file}, {"general_complex", general}};
    EnhancedRep x = rep_from_json(read_file(file));
    ChainComplex complex = deformation_complex(
        x, general ? ComplexMode::General : ComplexMode::Auto);
    CohomologyReport coh = cohomology(complex);

    json report = h_json(coh);
    report["degree_dims"] = complex.degree_dims();
    report["expected_dimension"] = expected_dimension(x.dims);
    out.results.push_back(json{{"name", "cohomology"}, {"status", "pass"},
                               {"detail", report.dump()}});

    bool stable = is_stable_in_chamber(x, make_param(-2, 1, x.dims));
    if (stable) {
        bool perfect = coh.h[0] == 0 && coh.h[3] == 0;
        add_result(out, "perfect obstruction (h0 = h3 = 0)", perfect,
                   "h0 = " + std::to_string(coh.h[0]) + ", h3 = " + std::to_string(coh.h[3]));
        add_result(out, "unobstructed (h2 = 0)", coh.h[2] == 0,
                   "h2 = " + std::to_string(coh.h[2]));
    } else {
        out.results.push_back(json{{"name", "perfect obstruction"}, {"status", "pass"},
                                   {"detail", "not applicable: representation is unstable"}});
    }
    return out;
}

CommandOutput run_walls(std::size_t r, std::size_t c, std::size_t cprime)
{
    CommandOutput out;
    out.inputs = json{{"r", r}, {"c", c}, {"cprime", cprime}};
    for (Wall wall : {Wall::Minus, Wall::Plus}) {
        WallReport report = verify_wall_witness(wall, {r, c, cprime});
        add_result(out, wall == Wall::Minus ? "minus witness" : "plus witness",
                   report.strictly_semistable, to_json(report));
    }
    return out;
}

CommandOutput run_lift(const std::string& base_file, const std::string& aprime_file,
                       const std::string& bprime_file, std::size_t samples, std::uint64_t seed,
                       const std::string& emit_file)
{
    CommandOutput out;
    out.inputs = json{{"base", base_file}, {"aprime", aprime_file}, {"bprime", bprime_file},
                      {"samples", samples}, {"seed", seed}};

    AdhmRep base = adhm_from_json(read_file(base_file));
    RatMatrix aprime = matrix_from_json(read_file(aprime_file));
    RatMatrix bprime = matrix_from_json(read_file(bprime_file));
    LiftSolveResult solved = lift_solve(base, aprime, bprime);

    DimVector dims{base.r, base.c + aprime.rows(), aprime.rows()};
    StabilityParam p = make_param(-2, 1, dims);

    std::mt19937_64 rng(seed);
    std::size_t assembled = 0;
    std::size_t stable = 0;
    std::vector<EnhancedRep> stable_reps;
    for (std::size_t s = 0; s < samples; ++s) {
        RatMatrix coeffs(solved.kernel_dim, 1);
        for (std::size_t i = 0; i < solved.kernel_dim; ++i)
            coeffs.at(i, 0) = static_cast<long>(rng() % 5) - 2;
        EnhancedRep x = assemble_lift(
            ansatz_from_vector(base, aprime, bprime, solved.kernel * coeffs));
        if (!satisfies_relations(x))
            continue;
        ++assembled;
        if (is_stable_in_chamber(x, p)) {
            ++stable;
            stable_reps.push_back(std::move(x));
        }
    }

    add_result(out, "solution space",
               true, "kernel dimension " + std::to_string(solved.kernel_dim));
    add_result(out, "sampled solutions assemble", assembled == samples,
               std::to_string(assembled) + " of " + std::to_string(samples)
                   + " with zero residuals");
    out.results.push_back(json{{"name", "stable lifts"},
                               {"status", stable > 0 ? "pass" : "inconclusive"},
                               {"detail", std::to_string(stable) + " of "
                                    + std::to_string(samples) + " samples stable"}});
    if (stable == 0 && out.status == "pass")
        out.status = "partial";

    if (!emit_file.empty()) {
        std::ofstream corpus(emit_file);
        if (!corpus)
            fail(Errc::bad_json, "cannot write file '" + emit_file + "'");
        write_corpus(corpus, dims, seed, stable_reps);
        add_result(out, "corpus written", true,
                   emit_file + " (" + std::to_string(stable_reps.size()) + " lines)");
    }
    return out;
}

CommandOutput run_vandermonde(std::size_t r, std::size_t c, const std::string& lambdas)
{
    CommandOutput out;
    out.inputs = json{{"r", r}, {"c", c}, {"lambdas", lambdas}};

    VandermondeParams params{r, c, {}};
    std::stringstream stream(lambdas);
    std::string item;
    while (std::getline(stream, item, ','))
        params.lambdas.push_back(parse_rational(item));

    EnhancedRep x = vandermonde_rep(params);
    bool stable = is_stable_in_chamber(x, make_param(-2, 1, x.dims));
    add_result(out, "stable", stable, stable ? "stable in the chamber" : "unstable");

    CohomologyReport coh = cohomology(deformation_complex(x));
    std::size_t expected_h1 = 2 * r * c - r + 1;
    bool h_ok = coh.h == std::vector<std::size_t>{0, expected_h1, 0, 0};
    add_result(out, "h = (0, 2rc-r+1, 0, 0)", h_ok, h_json(coh).dump());
    add_result(out, "rho1 surjective on cocycles", check_rho1_surjective_on_cocycles(x), "");
    return out;
}

CommandOutput run_suite(std::size_t max_r, std::size_t max_c, std::uint64_t seed, bool deep)
{
    CommandOutput out;
    out.inputs = json{{"max_r", max_r}, {"max_c", max_c}, {"seed", seed}, {"deep", deep}};

    SuiteOptions options;
    options.seed = seed;
    options.deep = deep;
    options.sample_r_max = max_r;
    options.sample_c_max = max_c;

    for (const CriterionResult& r : run_acceptance_suite(options)) {
        out.results.push_back(json{{"name", std::to_string(r.index) + ": " + r.name},
                                   {"status", r.status}, {"detail", r.detail}});
        if (r.failed())
            out.status = "fail";
        else if (!r.passed() && out.status == "pass")
            out.status = "partial";
    }
    return out;
}

CommandOutput run_search_obstructed(std::size_t r, std::size_t c, std::size_t cprime,
                                    std::size_t attempts, std::uint64_t seed)
{
    CommandOutput out;
    out.inputs = json{{"r", r}, {"c", c}, {"cprime", cprime}, {"attempts", attempts},
                      {"seed", seed}};
    auto hit = search_obstructed({r, c, cprime}, seed, attempts);
    if (hit) {
        json found{{"h", hit->coh.h}, {"representation", json::parse(to_json(hit->rep))}};
        out.results.push_back(json{{"name", "obstructed point"}, {"status", "pass"},
                                   {"detail", found.dump()}});
    } else {
        out.results.push_back(json{{"name", "obstructed point"}, {"status", "pass"},
                                   {"detail", "none found within the attempt budget"}});
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact computations with representations of the enhanced ADHM quiver"};
    app.require_subcommand(1);
    app.fallthrough();

    Options options;
    app.add_option("--format", options.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--pretty", options.pretty, "Pretty-print JSON output");

    std::string file, theta = "-2", theta_prime = "1";
    std::string base_file, aprime_file, bprime_file, emit_file, lambdas;
    std::size_t r = 1, c = 1, cprime = 1;
    std::size_t samples = 20, max_attempts = 1000, max_r = 3, max_c = 5;
    std::uint64_t seed = 0;
    bool deep = false, general = false;

    CLI::App* check = app.add_subcommand("check", "Relations and shape validation");
    check->add_option("file", file, "Representation JSON file")->required();

    CLI::App* stability = app.add_subcommand("stability", "Chamber stability verdict");
    stability->add_option("file", file)->required();
    stability->add_option("--theta", theta, "theta (rational)");
    stability->add_option("--theta-prime", theta_prime, "theta' (rational)");

    CLI::App* cohomology_cmd = app.add_subcommand("cohomology", "Deformation complex cohomology");
    cohomology_cmd->add_option("file", file)->required();
    cohomology_cmd->add_flag("--general", general,
                             "Use the general complex even when cprime = 1");

    CLI::App* walls = app.add_subcommand("walls", "Construct and verify the wall witnesses");
    walls->add_option("r", r)->required();
    walls->add_option("c", c)->required();
    walls->add_option("cprime", cprime)->required();

    CLI::App* lift = app.add_subcommand("lift", "Solve the lifting system and sample solutions");
    lift->add_option("base", base_file, "ADHM base JSON file")->required();
    lift->add_option("aprime", aprime_file, "Aprime matrix JSON file")->required();
    lift->add_option("bprime", bprime_file, "Bprime matrix JSON file")->required();
    lift->add_option("--samples", samples, "Number of kernel samples");
    lift->add_option("--seed", seed, "Random seed");
    lift->add_option("--emit", emit_file, "Write the stable lifts as a JSON-lines corpus");

    CLI::App* vandermonde = app.add_subcommand("vandermonde", "Build and verify a family member");
    vandermonde->add_option("r", r)->required();
    vandermonde->add_option("c", c)->required();
    vandermonde->add_option("lambdas", lambdas, "Comma-separated rationals")->required();

    CLI::App* suite = app.add_subcommand("suite", "Run the full verification battery");
    suite->add_option("--max-r", max_r, "Sampling grid bound for r");
    suite->add_option("--max-c", max_c, "Sampling grid bound for c");
    suite->add_option("--seed", seed, "Random seed");
    suite->add_flag("--deep", deep, "Term-by-term exactness of the long sequence");

    CLI::App* search = app.add_subcommand("search-obstructed",
                                          "Search for a stable point with h2 > 0");
    search->add_option("r", r)->required();
    search->add_option("c", c)->required();
    search->add_option("cprime", cprime)->required();
    search->add_option("--max-attempts", max_attempts, "Attempt budget");
    search->add_option("--seed", seed, "Random seed");

    CLI11_PARSE(app, argc, argv);

    const auto started = std::chrono::steady_clock::now();
    try {
        CommandOutput out;
        std::string name;
        if (check->parsed()) {
            name = "check";
            out = run_check(file);
        } else if (stability->parsed()) {
            name = "stability";
            out = run_stability(file, theta, theta_prime);
        } else if (cohomology_cmd->parsed()) {
            name = "cohomology";
            out = run_cohomology(file, general);
        } else if (walls->parsed()) {
            name = "walls";
            out = run_walls(r, c, cprime);
        } else if (lift->parsed()) {
            name = "lift";
            out = run_lift(base_file, aprime_file, bprime_file, samples, seed, emit_file);
        } else if (vandermonde->parsed()) {
            name = "vandermonde";
            out = run_vandermonde(r, c, lambdas);
        } else if (suite->parsed()) {
            name = "suite";
            out = run_suite(max_r, max_c, seed, deep);
        } else {
            name = "search-obstructed";
            out = run_search_obstructed(r, c, cprime, max_attempts, seed);
        }
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - started)
                                 .count();
        return emit(options, name, out, elapsed);
    } catch (const Error& e) {
        json err{{"error", {{"code", errc_name(e.code())}, {"message", e.what()}}}};
        std::cout << (options.pretty ? err.dump(2) : err.dump()) << "\n";
        return 2;
    } catch (const std::exception& e) {
        json err{{"error", {{"code", "internal"}, {"message", e.what()}}}};
        std::cout << (options.pretty ? err.dump(2) : err.dump()) << "\n";
        return 2;
    }
}
