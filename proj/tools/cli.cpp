#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "uqd/ensemble.hpp"
#include "uqd/error.hpp"
#include "uqd/measures.hpp"
#include "uqd/simulate.hpp"
#include "uqd/spec_json.hpp"

namespace uqd::cli {

namespace {

using nlohmann::json;

struct RunConfig {
    std::string unit = "bits";
    bool raw = false;
    double tolerance = 1e-10;
    std::size_t mc_samples = 100'000;
    std::uint64_t seed = 42;
    std::string format = "csv";
    std::string out_path;

    std::string input;        // eval: inline JSON or path; ensemble: path
    std::string panels_path;  // panel: optional override set

    std::vector<double> theta_star{0.3, 0.7};
    std::vector<double> prior;  // empty: all ones
    std::vector<std::size_t> schedule = CurveConfig{}.schedule;
    std::size_t replications = 200;
    bool verify = false;

    MeasureOptions measure_options() const {
        return {unit == "nats" ? Unit::nats : Unit::bits, !raw};
    }

    EngineConfig engine() const {
        EngineConfig e;
        e.tolerance = tolerance;
        e.mc_samples = mc_samples;
        e.seed = seed;
        return e;
    }
};

struct Record {
    std::string name;
    UncertaintyTriple triple;
    EntropyBounds bounds;
    std::optional<std::size_t> members;  // ensemble M
    std::size_t classes = 0;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool looks_like_json(const std::string& text) {
    const auto pos = text.find_first_not_of(" \t\r\n");
    return pos != std::string::npos && (text[pos] == '{' || text[pos] == '[');
}

std::string kind_name(const SecondOrderDistribution& q) {
    switch (q.variant().index()) {
        case 0: return "point";
        case 1: return "dirichlet";
        case 2: return "interval_uniform";
        case 3: return "ensemble";
        default: return "mixture";
    }
}

Record evaluate(std::string name, const SecondOrderDistribution& q, const RunConfig& cfg) {
    const auto options = cfg.measure_options();
    return {std::move(name), decompose(q, options, cfg.engine()), aleatoric_bounds(q, options), std::nullopt,
            q.dimension()};
}

json record_json(const Record& r) {
    json j = {
        {"name", r.name},
        {"total", r.triple.total},
        {"aleatoric", r.triple.aleatoric},
        {"epistemic", r.triple.epistemic},
        {"alea_lower", r.bounds.lower},
        {"alea_upper", r.bounds.upper},
        {"error_bound", r.triple.error_bound},
        {"unit", std::string(to_string(r.triple.unit))},
        {"normalized", r.triple.normalized},
        {"K", r.classes},
    };
    if (r.members) j["M"] = *r.members;
    return j;
}

void write_records(std::ostream& os, const std::vector<Record>& records, const RunConfig& cfg, bool as_array) {
    if (cfg.format == "json") {
        json doc = json::array();
        for (const auto& r : records) doc.push_back(record_json(r));
        os << (as_array ? doc : doc.front()).dump(2) << '\n';
        return;
    }
    os << kRecordHeader << '\n';
    for (const auto& r : records) {
        os << r.name << ',' << fmt(r.triple.total) << ',' << fmt(r.triple.aleatoric) << ','
           << fmt(r.triple.epistemic) << ',' << fmt(r.bounds.lower) << ',' << fmt(r.bounds.upper) << ','
           << fmt(r.triple.error_bound) << '\n';
    }
}

std::vector<std::pair<std::string, SecondOrderDistribution>> default_panels() {
    const auto point = [](double t) { return SecondOrderDistribution::point(Categorical({t, 1.0 - t})); };
    std::vector<std::pair<std::string, SecondOrderDistribution>> panels;
    panels.emplace_back("uniform_full", SecondOrderDistribution::interval_uniform(0.0, 1.0));
    panels.emplace_back("dirac_half", point(0.5));
    panels.emplace_back("uniform_03_10", SecondOrderDistribution::interval_uniform(0.3, 1.0));
    panels.emplace_back("uniform_03_07", SecondOrderDistribution::interval_uniform(0.3, 0.7));
    panels.emplace_back("uniform_06_10", SecondOrderDistribution::interval_uniform(0.6, 1.0));
    panels.emplace_back("dirac_mixture_01",
                        SecondOrderDistribution::mixture({0.5, 0.5}, {point(1.0), point(0.0)}));
    return panels;
}

std::vector<std::pair<std::string, SecondOrderDistribution>> panels_from_file(const std::string& path) {
    json doc;
    try {
        doc = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON in panel file: ") + e.what());
    }
    if (!doc.is_array()) throw ParseError("panel file must be an array of {\"name\", \"spec\"} objects");
    std::vector<std::pair<std::string, SecondOrderDistribution>> panels;
    for (const auto& entry : doc) {
        if (!entry.is_object() || !entry.contains("name") || !entry["name"].is_string() || !entry.contains("spec")) {
            throw ParseError("panel entries need a string 'name' and a 'spec'");
        }
        panels.emplace_back(entry["name"].get<std::string>(), distribution_from_json(entry["spec"]));
    }
    return panels;
}

EnsemblePrediction ensemble_from_text(const std::string& text) {
    if (!looks_like_json(text)) {
        std::istringstream in(text);
        return parse_member_matrix(in);
    }
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || doc.value("kind", "") != "ensemble" || !doc.contains("members") ||
        !doc["members"].is_array()) {
        throw ParseError("expected {\"kind\":\"ensemble\",\"members\":[[...],...]}");
    }
    std::vector<Categorical> members;
    for (const auto& row : doc["members"]) {
        if (!row.is_array()) throw ParseError("each member must be an array of numbers");
        std::vector<double> probs;
        for (const auto& v : row) {
            if (!v.is_number()) throw ParseError("each member must be an array of numbers");
            probs.push_back(v.get<double>());
        }
        members.emplace_back(std::move(probs));
    }
    std::vector<double> weights;
    if (doc.contains("weights")) {
        for (const auto& v : doc["weights"]) {
            if (!v.is_number()) throw ParseError("weights must be numbers");
            weights.push_back(v.get<double>());
        }
    }
    return EnsemblePrediction(std::move(members), std::move(weights));
}

void cmd_eval(std::ostream& os, const RunConfig& cfg) {
    const std::string text = looks_like_json(cfg.input) ? cfg.input : read_file(cfg.input);
    const auto q = parse_distribution(text);
    write_records(os, {evaluate(kind_name(q), q, cfg)}, cfg, false);
}

void cmd_panel(std::ostream& os, const RunConfig& cfg) {
    const auto panels = cfg.panels_path.empty() ? default_panels() : panels_from_file(cfg.panels_path);
    std::vector<Record> records;
    records.reserve(panels.size());
    for (const auto& [name, q] : panels) records.push_back(evaluate(name, q, cfg));
    write_records(os, records, cfg, true);
}

void cmd_ensemble(std::ostream& os, const RunConfig& cfg) {
    const auto e = ensemble_from_text(read_file(cfg.input));
    const auto options = cfg.measure_options();
    Record r{"ensemble_M" + std::to_string(e.size()) + "_K" + std::to_string(e.dimension()),
             ensemble_decompose(e, options), aleatoric_bounds(e.as_distribution(), options), e.size(),
             e.dimension()};
    write_records(os, {r}, cfg, false);
}

void cmd_curve(std::ostream& os, const RunConfig& cfg) {
    const Categorical theta_star(cfg.theta_star);
    const BayesState prior = cfg.prior.empty() ? BayesState::uniform_prior(theta_star.size()) : BayesState(cfg.prior);
    CurveConfig curve_cfg;
    curve_cfg.schedule = cfg.schedule;
    curve_cfg.replications = cfg.replications;
    curve_cfg.seed = cfg.seed;
    curve_cfg.options = cfg.measure_options();
    curve_cfg.engine = cfg.engine();
    curve_cfg.engine.verify_epistemic = cfg.verify;
    const auto curve = learning_curve(theta_star, prior, curve_cfg);

    if (cfg.format == "json") {
        json doc = json::array();
        for (const auto& p : curve) {
            doc.push_back({{"n", p.n},
                           {"total", p.triple.total},
                           {"aleatoric", p.triple.aleatoric},
                           {"epistemic", p.triple.epistemic},
                           {"total_minus_epistemic", total_minus_epistemic(p.triple)},
                           {"replications", p.replications}});
        }
        os << doc.dump(2) << '\n';
        return;
    }
    os << kCurveHeader << '\n';
    for (const auto& p : curve) {
        os << p.n << ',' << fmt(p.triple.total) << ',' << fmt(p.triple.aleatoric) << ','
           << fmt(p.triple.epistemic) << ',' << fmt(total_minus_epistemic(p.triple)) << '\n';
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Entropy-based decomposition of predictive uncertainty for second-order distributions"};
    app.fallthrough();
    app.require_subcommand(1);

    app.add_option("--unit", cfg.unit, "Unit of raw values")->check(CLI::IsMember({"bits", "nats"}));
    app.add_flag("--raw", cfg.raw, "Report raw values instead of dividing by log K");
    app.add_option("--tol", cfg.tolerance, "Absolute quadrature tolerance")->check(CLI::PositiveNumber);
    app.add_option("--mc-samples", cfg.mc_samples, "Monte Carlo sample count")->check(CLI::Range(2, 1'000'000'000));
    app.add_option("--seed", cfg.seed, "Seed for every Monte Carlo path");
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", cfg.out_path, "Write output to this file instead of stdout");

    auto* eval = app.add_subcommand("eval", "Decompose one distribution given as JSON (inline or file path)");
    eval->add_option("spec", cfg.input, "Distribution spec JSON or path to a file containing it")->required();

    auto* panel = app.add_subcommand("panel", "Evaluate the built-in set of illustrative distributions");
    panel->add_option("--panels", cfg.panels_path, "JSON file with [{\"name\":..., \"spec\":{...}}, ...]");

    auto* curve = app.add_subcommand("curve", "Average uncertainty along a Bayesian learning curve");
    curve->add_option("--theta-star", cfg.theta_star, "Ground-truth class probabilities")->delimiter(',');
    curve->add_option("--prior", cfg.prior, "Dirichlet prior counts (default all ones)")->delimiter(',');
    curve->add_option("--schedule", cfg.schedule, "Sample sizes, strictly increasing from 0")->delimiter(',');
    curve->add_option("--replications", cfg.replications, "Number of simulated runs")->check(CLI::PositiveNumber);
    curve->add_flag("--verify", cfg.verify, "Cross-check every point with the expected-KL route");

    auto* ensemble = app.add_subcommand("ensemble", "Decompose ensemble member predictions from a file");
    ensemble->add_option("file", cfg.input, "Member matrix (one member per line) or ensemble JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    std::ostringstream buffer;
    try {
        if (*eval) {
            cmd_eval(buffer, cfg);
        } else if (*panel) {
            cmd_panel(buffer, cfg);
        } else if (*curve) {
            cmd_curve(buffer, cfg);
        } else if (*ensemble) {
            cmd_ensemble(buffer, cfg);
        }
    } catch (const IntegrationFailure& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumericalFailure;
    } catch (const ConsistencyFailure& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumericalFailure;
    } catch (const Error& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInputError;
    }

    if (cfg.out_path.empty()) {
        out << buffer.str();
        return kExitOk;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
        err << "input error: cannot write '" << cfg.out_path << "'\n";
        return kExitInputError;
    }
    file << buffer.str();
    return kExitOk;
}

}  // namespace uqd::cli
