// botcut: bot detection on retweet interaction graphs via exact min-cut
// inference in a pairwise energy model, plus evaluation, heterophily
// statistics, differential hashtags and a planted-truth synthetic generator.
//
// Exit codes: 0 success, 1 domain error (bad records, invalid parameters,
// inconsistent inputs), 2 I/O or usage error.

#include <charconv>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "botcut/detection.hpp"
#include "botcut/energy.hpp"
#include "botcut/hashtag_diff.hpp"
#include "botcut/interaction_graph.hpp"
#include "botcut/io.hpp"
#include "botcut/rates.hpp"
#include "botcut/roc.hpp"
#include "botcut/synth.hpp"
#include "botcut/version.hpp"

#include "manifest.hpp"

namespace {

using namespace botcut;
using nlohmann::ordered_json;

double parse_double_value(const std::string& key, const std::string& value) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw InputError("parameter " + key + ": not a number: \"" + value + "\"");
    return v;
}

// Energy parameters resolve in three layers: built-in defaults, then a
// key=value file, then explicit flags. epsilon derives from the
// submodularity equality whenever it is not given by either source.
struct ParamOptions {
    std::optional<double> gamma, lambda1, lambda2, epsilon, delta, alpha1, alpha2;
    std::string params_file;

    void attach(CLI::App& cmd) {
        cmd.add_option("--params-file", params_file,
                       "key=value file with any of the parameters below");
        cmd.add_option("--gamma", gamma, "link-energy weight (default 1)");
        cmd.add_option("--lambda1", lambda1, "bot-retweets-bot multiplier (default 0.8)");
        cmd.add_option("--lambda2", lambda2, "human-retweets-human multiplier (default 0.6)");
        cmd.add_option("--epsilon", epsilon,
                       "bot-retweets-human multiplier (default: lambda2+lambda1-1+delta)");
        cmd.add_option("--delta", delta, "submodularity slack (default 0)");
        cmd.add_option("--alpha1", alpha1, "retweeter out-strength threshold (default 100)");
        cmd.add_option("--alpha2", alpha2, "target in-strength threshold (default 100)");
    }

    EnergyParams resolve() const {
        EnergyParams p;
        std::optional<double> eps;

        if (!params_file.empty()) {
            const auto kv = io::read_kv_config(params_file);
            for (const auto& [key, value] : kv) {
                const double v = parse_double_value(key, value);
                if (key == "gamma") p.gamma = v;
                else if (key == "lambda1") p.lambda1 = v;
                else if (key == "lambda2") p.lambda2 = v;
                else if (key == "epsilon") eps = v;
                else if (key == "delta") p.delta = v;
                else if (key == "alpha1") p.alpha1 = v;
                else if (key == "alpha2") p.alpha2 = v;
                else throw InputError(params_file + ": unknown parameter \"" + key + "\"");
            }
        }
        if (gamma) p.gamma = *gamma;
        if (lambda1) p.lambda1 = *lambda1;
        if (lambda2) p.lambda2 = *lambda2;
        if (delta) p.delta = *delta;
        if (alpha1) p.alpha1 = *alpha1;
        if (alpha2) p.alpha2 = *alpha2;
        if (epsilon) eps = *epsilon;

        p.epsilon = eps ? *eps : p.lambda2 + p.lambda1 - 1.0 + p.delta;
        return p;
    }

    static ordered_json as_json(const EnergyParams& p) {
        ordered_json j;
        j["gamma"] = p.gamma;
        j["lambda1"] = p.lambda1;
        j["lambda2"] = p.lambda2;
        j["epsilon"] = p.epsilon;
        j["delta"] = p.delta;
        j["alpha1"] = p.alpha1;
        j["alpha2"] = p.alpha2;
        return j;
    }
};

void validate_or_throw(const EnergyParams& params) {
    const auto violations = validate(params);
    if (violations.empty()) return;
    std::string msg = "invalid energy parameters";
    for (const auto& v : violations)
        msg += std::string("\n  ") + constraint_name(v.constraint) + ": " + v.detail;
    throw Error(msg);
}

io::EdgeFormat parse_format(const std::string& name) {
    if (name == "csv") return io::EdgeFormat::csv;
    if (name == "jsonl") return io::EdgeFormat::jsonl;
    return io::EdgeFormat::auto_detect;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

// ---------------------------------------------------------------------------

int cmd_validate(const ParamOptions& opts, const std::string& manifest_path) {
    Timer timer;
    const EnergyParams params = opts.resolve();
    const auto violations = validate(params);
    for (const auto& v : violations)
        std::cout << constraint_name(v.constraint) << ": " << v.detail << '\n';

    cli::RunManifest manifest;
    manifest.subcommand = "validate";
    manifest.parameters = ParamOptions::as_json(params);
    manifest.parameters["valid"] = violations.empty();
    if (!opts.params_file.empty()) manifest.inputs.push_back(opts.params_file);
    manifest.wall_seconds = timer.seconds();
    manifest.write(manifest_path);

    return violations.empty() ? 0 : 1;
}

int cmd_detect(const ParamOptions& opts, const std::string& edges_path, bool header,
               const std::string& format, const std::string& prior_labels_path,
               double prior_strength, bool no_marginals, unsigned workers,
               const std::string& out_path, std::string manifest_path) {
    Timer timer;
    const EnergyParams params = opts.resolve();
    validate_or_throw(params);  // fail fast, before touching the graph

    const auto records = io::read_edge_records(edges_path, header, parse_format(format));
    std::size_t dropped = 0;
    const InteractionGraph graph = build_graph(records, &dropped);
    std::cerr << "botcut detect: " << graph.node_count() << " nodes, " << graph.edge_count()
              << " edges, " << dropped << " self-loops dropped\n";

    NodePrior prior;
    if (!prior_labels_path.empty()) {
        const auto truth = build_ground_truth(io::read_label_records(prior_labels_path, header));
        prior = prior_from_labels(truth, prior_strength);
    }

    DetectOptions dopts;
    dopts.marginals = !no_marginals;
    dopts.workers = workers;
    const DetectionResult result = detect(graph, params, prior, dopts);
    std::cerr << "botcut detect: min cut " << io::format_double(result.min_cut_value) << " in "
              << io::format_double(result.wall_seconds) << " s\n";

    io::write_detection_jsonl(out_path, graph, result);

    ordered_json meta;
    meta["nodes"] = result.node_count;
    meta["edges"] = result.edge_count;
    meta["self_loops_dropped"] = dropped;
    meta["min_cut_value"] = result.min_cut_value;
    meta["max_flow_value"] = result.max_flow_value;
    meta["marginals"] = !no_marginals;
    meta["solve_seconds"] = result.wall_seconds;
    const std::string meta_path = out_path + ".meta.json";
    {
        std::ofstream meta_out(meta_path, std::ios::binary);
        if (!meta_out) throw FileError("cannot write " + meta_path);
        meta_out << meta.dump(2) << '\n';
    }

    if (manifest_path.empty()) manifest_path = out_path + ".manifest.json";
    cli::RunManifest manifest;
    manifest.subcommand = "detect";
    manifest.parameters = ParamOptions::as_json(params);
    manifest.parameters["marginals"] = !no_marginals;
    manifest.parameters["prior_strength"] = prior_strength;
    manifest.inputs.push_back(edges_path);
    if (!prior_labels_path.empty()) manifest.inputs.push_back(prior_labels_path);
    if (!opts.params_file.empty()) manifest.inputs.push_back(opts.params_file);
    manifest.outputs = {out_path, meta_path};
    manifest.wall_seconds = timer.seconds();
    manifest.write(manifest_path);
    return 0;
}

int cmd_eval(const std::string& detections_path, const std::string& truth_path, bool header,
             const std::string& roc_path, const std::string& summary_path,
             std::string manifest_path) {
    Timer timer;
    const auto detections = io::read_detection_jsonl(detections_path);
    const auto truth = build_ground_truth(io::read_label_records(truth_path, header));

    std::unordered_map<AccountId, double> scores;
    scores.reserve(detections.size());
    for (const auto& d : detections)
        if (d.p_bot) scores[d.account] = *d.p_bot;

    const EvalReport report = roc_curve(scores, truth);
    io::write_roc_csv(roc_path, report);
    io::write_eval_summary_json(summary_path, report);
    std::cout << io::format_double(report.auc) << '\n';

    if (manifest_path.empty()) manifest_path = summary_path + ".manifest.json";
    cli::RunManifest manifest;
    manifest.subcommand = "eval";
    manifest.parameters["auc"] = report.auc;
    manifest.inputs = {detections_path, truth_path};
    manifest.outputs = {roc_path, summary_path};
    manifest.wall_seconds = timer.seconds();
    manifest.write(manifest_path);
    return 0;
}

int cmd_stats(const std::string& edges_path, bool header, const std::string& format,
              const std::string& labels_path, const std::string& out_path,
              std::string manifest_path) {
    Timer timer;
    const auto records = io::read_edge_records(edges_path, header, parse_format(format));
    const InteractionGraph graph = build_graph(records);
    const auto truth = build_ground_truth(io::read_label_records(labels_path, header));

    if (truth.count(Label::bot) < 2 || truth.count(Label::human) < 2)
        throw Error("stats needs at least 2 labeled accounts per class (got " +
                    std::to_string(truth.count(Label::bot)) + " bots, " +
                    std::to_string(truth.count(Label::human)) + " humans)");

    const auto stats = io::heterophily_stats(retweet_rates(graph, truth));
    io::write_stats_csv(out_path, stats);
    std::cerr << "botcut stats: mean rates B->H " << io::format_double(stats.mean_bot_to_human)
              << ", B->B " << io::format_double(stats.mean_bot_to_bot) << ", H->H "
              << io::format_double(stats.mean_human_to_human) << ", H->B "
              << io::format_double(stats.mean_human_to_bot) << '\n';

    if (manifest_path.empty()) manifest_path = out_path + ".manifest.json";
    cli::RunManifest manifest;
    manifest.subcommand = "stats";
    manifest.inputs = {edges_path, labels_path};
    manifest.outputs = {out_path};
    manifest.wall_seconds = timer.seconds();
    manifest.write(manifest_path);
    return 0;
}

int cmd_synth(const SynthConfig& config, const std::string& edges_path,
              const std::string& truth_path, const std::string& config_path,
              std::string manifest_path) {
    Timer timer;
    const SynthOutput output = generate(config);
    io::write_edge_csv(edges_path, output.graph);
    io::write_label_csv(truth_path, output.truth);

    ordered_json echo;
    echo["n_accounts"] = config.n_accounts;
    echo["bot_fraction"] = config.bot_fraction;
    echo["events_per_bot"] = config.events_per_bot;
    echo["events_per_human"] = config.events_per_human;
    echo["p_bot_targets_human"] = config.p_bot_targets_human;
    echo["p_human_targets_human"] = config.p_human_targets_human;
    echo["popularity_skew"] = config.popularity_skew;
    echo["seed"] = config.seed;
    echo["bot_count"] = output.bot_count;
    echo["human_count"] = output.human_count;
    {
        std::ofstream out(config_path, std::ios::binary);
        if (!out) throw FileError("cannot write " + config_path);
        out << echo.dump(2) << '\n';
    }
    std::cerr << "botcut synth: " << output.graph.node_count() << " nodes, "
              << output.graph.edge_count() << " edges, total weight "
              << output.graph.total_weight() << '\n';

    if (manifest_path.empty()) manifest_path = edges_path + ".manifest.json";
    cli::RunManifest manifest;
    manifest.subcommand = "synth";
    manifest.parameters = echo;
    manifest.outputs = {edges_path, truth_path, config_path};
    manifest.wall_seconds = timer.seconds();
    manifest.write(manifest_path);
    return 0;
}

int cmd_hashtags(const std::string& tweets_path, const std::string& detections_path,
                 const std::string& out_path, std::string manifest_path) {
    Timer timer;
    const auto tweets = io::read_hashtag_jsonl(tweets_path);
    const auto detections = io::read_detection_jsonl(detections_path);

    GroundTruth predicted;
    predicted.labels.reserve(detections.size());
    for (const auto& d : detections) predicted.labels[d.account] = d.map_label;

    const auto diff = hashtag_diff(tweets, predicted);
    io::write_hashtag_csv(out_path, diff);

    if (manifest_path.empty()) manifest_path = out_path + ".manifest.json";
    cli::RunManifest manifest;
    manifest.subcommand = "hashtags";
    manifest.inputs = {tweets_path, detections_path};
    manifest.outputs = {out_path};
    manifest.wall_seconds = timer.seconds();
    manifest.write(manifest_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bot detection on retweet graphs via exact min-cut inference"};
    app.set_version_flag("--version", botcut::kVersion);
    app.require_subcommand(1);

    std::function<int()> run;

    // --- validate ---
    {
        auto* cmd = app.add_subcommand("validate", "check energy parameters against the "
                                                   "feasible region");
        auto opts = std::make_shared<ParamOptions>();
        opts->attach(*cmd);
        auto manifest = std::make_shared<std::string>("botcut-validate.manifest.json");
        cmd->add_option("--manifest", *manifest, "manifest output path");
        cmd->callback([&run, opts, manifest] {
            run = [opts, manifest] { return cmd_validate(*opts, *manifest); };
        });
    }

    // --- detect ---
    {
        auto* cmd = app.add_subcommand("detect", "MAP bot labeling plus marginal bot "
                                                 "probabilities");
        auto opts = std::make_shared<ParamOptions>();
        opts->attach(*cmd);
        struct Args {
            std::string edges, format = "auto", prior_labels, out = "detections.jsonl", manifest;
            bool header = false, no_marginals = false;
            double prior_strength = 0.9;
            unsigned workers = 0;
        };
        auto a = std::make_shared<Args>();
        cmd->add_option("--edges", a->edges, "edge file (CSV src,dst[,weight] or JSONL)")
            ->required();
        cmd->add_flag("--header", a->header, "input CSV files start with a header row");
        cmd->add_option("--format", a->format, "edge file format: auto|csv|jsonl")
            ->check(CLI::IsMember({"auto", "csv", "jsonl"}));
        cmd->add_option("--prior-labels", a->prior_labels,
                        "label CSV turned into node priors");
        cmd->add_option("--prior-strength", a->prior_strength,
                        "prior bot probability for accounts labeled bot (default 0.9)");
        cmd->add_flag("--no-marginals", a->no_marginals,
                      "skip per-node marginal probabilities (MAP labels only)");
        cmd->add_option("--workers", a->workers,
                        "worker threads for marginal solves (default: processor count)");
        cmd->add_option("--out", a->out, "detection JSONL output path");
        cmd->add_option("--manifest", a->manifest, "manifest output path");
        cmd->callback([&run, opts, a] {
            run = [opts, a] {
                return cmd_detect(*opts, a->edges, a->header, a->format, a->prior_labels,
                                  a->prior_strength, a->no_marginals, a->workers, a->out,
                                  a->manifest);
            };
        });
    }

    // --- eval ---
    {
        auto* cmd = app.add_subcommand("eval", "ROC curve and AUC against ground-truth labels");
        struct Args {
            std::string detections, truth, roc = "roc.csv", summary = "eval.json", manifest;
            bool header = false;
        };
        auto a = std::make_shared<Args>();
        cmd->add_option("--detections", a->detections, "detection JSONL from detect")->required();
        cmd->add_option("--truth", a->truth, "label CSV with ground truth")->required();
        cmd->add_flag("--header", a->header, "truth CSV starts with a header row");
        cmd->add_option("--roc-out", a->roc, "ROC CSV output path");
        cmd->add_option("--summary-out", a->summary, "AUC summary JSON output path");
        cmd->add_option("--manifest", a->manifest, "manifest output path");
        cmd->callback([&run, a] {
            run = [a] {
                return cmd_eval(a->detections, a->truth, a->header, a->roc, a->summary,
                                a->manifest);
            };
        });
    }

    // --- stats ---
    {
        auto* cmd = app.add_subcommand("stats", "retweet-rate heterophily statistics and KS "
                                                "tests");
        struct Args {
            std::string edges, labels, format = "auto", out = "stats.csv", manifest;
            bool header = false;
        };
        auto a = std::make_shared<Args>();
        cmd->add_option("--edges", a->edges, "edge file")->required();
        cmd->add_option("--labels", a->labels, "label CSV")->required();
        cmd->add_flag("--header", a->header, "input CSV files start with a header row");
        cmd->add_option("--format", a->format, "edge file format: auto|csv|jsonl")
            ->check(CLI::IsMember({"auto", "csv", "jsonl"}));
        cmd->add_option("--out", a->out, "stats CSV output path");
        cmd->add_option("--manifest", a->manifest, "manifest output path");
        cmd->callback([&run, a] {
            run = [a] {
                return cmd_stats(a->edges, a->header, a->format, a->labels, a->out, a->manifest);
            };
        });
    }

    // --- synth ---
    {
        auto* cmd = app.add_subcommand("synth", "generate a planted-truth synthetic retweet "
                                                "graph");
        auto cfg = std::make_shared<SynthConfig>();
        struct Paths {
            std::string edges = "synth_edges.csv", truth = "synth_truth.csv",
                        config = "synth_config.json", manifest;
        };
        auto paths = std::make_shared<Paths>();
        cmd->add_option("--n-accounts", cfg->n_accounts, "number of accounts (default 5000)");
        cmd->add_option("--bot-fraction", cfg->bot_fraction,
                        "fraction of accounts that are bots (default 0.1)");
        cmd->add_option("--events-per-bot", cfg->events_per_bot,
                        "retweet events per bot (default 50)");
        cmd->add_option("--events-per-human", cfg->events_per_human,
                        "retweet events per human (default 10)");
        cmd->add_option("--p-bot-targets-human", cfg->p_bot_targets_human,
                        "probability a bot event targets a human (default 0.9)");
        cmd->add_option("--p-human-targets-human", cfg->p_human_targets_human,
                        "probability a human event targets a human (default 0.9)");
        cmd->add_option("--popularity-skew", cfg->popularity_skew,
                        "Zipf exponent for within-class target choice (default 1.2)");
        cmd->add_option("--seed", cfg->seed, "RNG seed (default 7)");
        cmd->add_option("--edges-out", paths->edges, "edge CSV output path");
        cmd->add_option("--truth-out", paths->truth, "label CSV output path");
        cmd->add_option("--config-out", paths->config, "config echo JSON output path");
        cmd->add_option("--manifest", paths->manifest, "manifest output path");
        cmd->callback([&run, cfg, paths] {
            run = [cfg, paths] {
                return cmd_synth(*cfg, paths->edges, paths->truth, paths->config,
                                 paths->manifest);
            };
        });
    }

    // --- hashtags ---
    {
        auto* cmd = app.add_subcommand("hashtags", "hashtags used by predicted bots and no "
                                                   "predicted human");
        struct Args {
            std::string tweets, detections, out = "hashtags.csv", manifest;
        };
        auto a = std::make_shared<Args>();
        cmd->add_option("--tweets", a->tweets, "per-account hashtag JSONL")->required();
        cmd->add_option("--detections", a->detections, "detection JSONL from detect")->required();
        cmd->add_option("--out", a->out, "ranked hashtag CSV output path");
        cmd->add_option("--manifest", a->manifest, "manifest output path");
        cmd->callback([&run, a] {
            run = [a] { return cmd_hashtags(a->tweets, a->detections, a->out, a->manifest); };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return run();
    } catch (const botcut::FileError& e) {
        std::cerr << "botcut: error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "botcut: error: " << e.what() << '\n';
        return 1;
    }
}
