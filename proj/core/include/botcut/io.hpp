#pragma once
// File formats: edge lists (CSV "src,dst,weight" with optional weight, or
// JSONL records), label CSVs, detection JSONL, per-account hashtag JSONL,
// ROC/stats/hashtag CSVs and key=value parameter files. Readers report the
// 1-based line number of the first malformed record; writers emit
// deterministic bytes (shortest round-trip doubles, '\n' line ends).

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "botcut/detection.hpp"
#include "botcut/hashtag_diff.hpp"
#include "botcut/interaction_graph.hpp"
#include "botcut/rates.hpp"
#include "botcut/roc.hpp"

namespace botcut::io {

std::string format_double(double value);  // shortest round-trip decimal

enum class EdgeFormat { auto_detect, csv, jsonl };

// CSV fields: src,dst[,weight]; JSONL fields: {"src","dst","weight"?}.
// `header_row` skips the first CSV line. auto_detect picks JSONL for a
// ".jsonl" extension, CSV otherwise.
std::vector<EdgeRecord> read_edge_records(const std::filesystem::path& path,
                                          bool header_row = false,
                                          EdgeFormat format = EdgeFormat::auto_detect);

// CSV fields: account_id,label with label in {bot, human}.
std::vector<LabelRecord> read_label_records(const std::filesystem::path& path,
                                            bool header_row = false);

void write_edge_csv(const std::filesystem::path& path, const InteractionGraph& g);
void write_label_csv(const std::filesystem::path& path, const GroundTruth& truth);

struct DetectionRecord {
    AccountId account;
    Label map_label = Label::human;
    std::optional<double> p_bot;
    std::uint64_t z_out = 0;
    std::uint64_t z_in = 0;
};

// One JSONL record per node in canonical order:
// {"account_id","map_label","p_bot"?,"z_out","z_in"}; p_bot is present only
// when the result carries marginals.
void write_detection_jsonl(const std::filesystem::path& path, const InteractionGraph& g,
                           const DetectionResult& result);
std::vector<DetectionRecord> read_detection_jsonl(const std::filesystem::path& path);

// JSONL: {"account_id": "...", "hashtags": ["...", ...]}; tags are
// normalized on ingest and repeated account lines merge.
AccountHashtags read_hashtag_jsonl(const std::filesystem::path& path);

void write_roc_csv(const std::filesystem::path& path, const EvalReport& report);
void write_eval_summary_json(const std::filesystem::path& path, const EvalReport& report);
void write_hashtag_csv(const std::filesystem::path& path, std::span<const HashtagCount> rows);

// Heterophily summary in Table-style column order: the four distribution
// means, then the four KS p-values.
struct HeterophilyStats {
    double mean_bot_to_human;
    double mean_bot_to_bot;
    double mean_human_to_human;
    double mean_human_to_bot;
    double p_bb_vs_bh;
    double p_hh_vs_hb;
    double p_bh_vs_hh;
    double p_hb_vs_bb;
};

HeterophilyStats heterophily_stats(const RateDistributions& rates);
void write_stats_csv(const std::filesystem::path& path, const HeterophilyStats& stats);

// Plain key=value lines; blank lines and '#' comments are ignored.
std::unordered_map<std::string, std::string> read_kv_config(const std::filesystem::path& path);

}  // namespace botcut::io
