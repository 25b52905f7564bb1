#include "botcut/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>

#include <nlohmann/json.hpp>

#include "botcut/ks_test.hpp"

namespace botcut::io {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string loc(const std::filesystem::path& path, std::size_t line) {
    return path.string() + ":" + std::to_string(line);
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot open " + path.string());
    return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FileError("cannot write " + path.string());
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_csv(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

std::optional<std::uint64_t> parse_u64(std::string_view s) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

// Calls fn(line_number, content) for every non-empty line.
template <typename Fn>
void for_each_line(const std::filesystem::path& path, bool skip_first, Fn&& fn) {
    auto in = open_input(path);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (skip_first && number == 1) continue;
        if (trim(line).empty()) continue;
        fn(number, line);
    }
}

ordered_json parse_json_line(const std::filesystem::path& path, std::size_t number,
                             const std::string& line) {
    ordered_json j = ordered_json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        throw InputError(loc(path, number) + ": malformed JSON record");
    return j;
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return ec == std::errc{} ? std::string(buf, ptr) : "nan";
}

std::vector<EdgeRecord> read_edge_records(const std::filesystem::path& path, bool header_row,
                                          EdgeFormat format) {
    if (format == EdgeFormat::auto_detect)
        format = path.extension() == ".jsonl" ? EdgeFormat::jsonl : EdgeFormat::csv;

    std::vector<EdgeRecord> records;
    if (format == EdgeFormat::csv) {
        for_each_line(path, header_row, [&](std::size_t number, const std::string& line) {
            const auto fields = split_csv(line);
            if (fields.size() < 2 || fields.size() > 3)
                throw InputError(loc(path, number) + ": expected src,dst[,weight], got " +
                                 std::to_string(fields.size()) + " fields");
            if (fields[0].empty() || fields[1].empty())
                throw InputError(loc(path, number) + ": empty account id");
            std::uint64_t weight = 1;
            if (fields.size() == 3) {
                const auto w = parse_u64(fields[2]);
                if (!w || *w == 0)
                    throw InputError(loc(path, number) + ": weight must be a positive integer");
                weight = *w;
            }
            records.push_back({std::string(fields[0]), std::string(fields[1]), weight});
        });
    } else {
        for_each_line(path, false, [&](std::size_t number, const std::string& line) {
            const auto j = parse_json_line(path, number, line);
            if (!j.contains("src") || !j["src"].is_string() || !j.contains("dst") ||
                !j["dst"].is_string())
                throw InputError(loc(path, number) + ": record needs string src and dst");
            std::uint64_t weight = 1;
            if (j.contains("weight")) {
                if (!j["weight"].is_number_unsigned() || j["weight"].get<std::uint64_t>() == 0)
                    throw InputError(loc(path, number) +
                                     ": weight must be a positive integer");
                weight = j["weight"].get<std::uint64_t>();
            }
            records.push_back({j["src"].get<std::string>(), j["dst"].get<std::string>(), weight});
        });
    }
    return records;
}

std::vector<LabelRecord> read_label_records(const std::filesystem::path& path, bool header_row) {
    std::vector<LabelRecord> records;
    for_each_line(path, header_row, [&](std::size_t number, const std::string& line) {
        const auto fields = split_csv(line);
        if (fields.size() != 2)
            throw InputError(loc(path, number) + ": expected account_id,label");
        if (fields[0].empty()) throw InputError(loc(path, number) + ": empty account id");
        if (!parse_label(fields[1]))
            throw InputError(loc(path, number) + ": unknown label \"" + std::string(fields[1]) +
                             "\" (expected bot or human)");
        records.push_back({std::string(fields[0]), std::string(fields[1])});
    });
    return records;
}

void write_edge_csv(const std::filesystem::path& path, const InteractionGraph& g) {
    auto out = open_output(path);
    for (const auto& e : g.edges())
        out << g.id_of(e.src) << ',' << g.id_of(e.dst) << ',' << e.weight << '\n';
}

void write_label_csv(const std::filesystem::path& path, const GroundTruth& truth) {
    std::vector<const AccountId*> ids;
    ids.reserve(truth.labels.size());
    for (const auto& [id, label] : truth.labels) ids.push_back(&id);
    std::sort(ids.begin(), ids.end(), [](const auto* a, const auto* b) { return *a < *b; });

    auto out = open_output(path);
    for (const auto* id : ids) out << *id << ',' << label_name(truth.labels.at(*id)) << '\n';
}

void write_detection_jsonl(const std::filesystem::path& path, const InteractionGraph& g,
                           const DetectionResult& result) {
    auto out = open_output(path);
    const bool with_p = !result.p_bot.empty();
    for (std::uint32_t i = 0; i < g.node_count(); ++i) {
        ordered_json j;
        j["account_id"] = g.id_of(i);
        j["map_label"] = label_name(result.map_bot[i] ? Label::bot : Label::human);
        if (with_p) j["p_bot"] = result.p_bot[i];
        j["z_out"] = g.out_strength(i);
        j["z_in"] = g.in_strength(i);
        out << j.dump() << '\n';
    }
}

std::vector<DetectionRecord> read_detection_jsonl(const std::filesystem::path& path) {
    std::vector<DetectionRecord> records;
    for_each_line(path, false, [&](std::size_t number, const std::string& line) {
        const auto j = parse_json_line(path, number, line);
        DetectionRecord r;
        if (!j.contains("account_id") || !j["account_id"].is_string())
            throw InputError(loc(path, number) + ": record needs a string account_id");
        r.account = j["account_id"].get<std::string>();
        if (!j.contains("map_label") || !j["map_label"].is_string())
            throw InputError(loc(path, number) + ": record needs a string map_label");
        const auto label = parse_label(j["map_label"].get<std::string>());
        if (!label)
            throw InputError(loc(path, number) + ": unknown map_label \"" +
                             j["map_label"].get<std::string>() + "\"");
        r.map_label = *label;
        if (j.contains("p_bot")) {
            if (!j["p_bot"].is_number())
                throw InputError(loc(path, number) + ": p_bot must be a number");
            r.p_bot = j["p_bot"].get<double>();
        }
        if (j.contains("z_out")) r.z_out = j["z_out"].get<std::uint64_t>();
        if (j.contains("z_in")) r.z_in = j["z_in"].get<std::uint64_t>();
        records.push_back(std::move(r));
    });
    return records;
}

AccountHashtags read_hashtag_jsonl(const std::filesystem::path& path) {
    AccountHashtags tweets;
    for_each_line(path, false, [&](std::size_t number, const std::string& line) {
        const auto j = parse_json_line(path, number, line);
        if (!j.contains("account_id") || !j["account_id"].is_string())
            throw InputError(loc(path, number) + ": record needs a string account_id");
        if (!j.contains("hashtags") || !j["hashtags"].is_array())
            throw InputError(loc(path, number) + ": record needs a hashtags array");
        auto& counts = tweets[j["account_id"].get<std::string>()];
        for (const auto& tag : j["hashtags"]) {
            if (!tag.is_string())
                throw InputError(loc(path, number) + ": hashtags must be strings");
            const std::string norm = normalize_hashtag(tag.get<std::string>());
            if (!norm.empty()) ++counts[norm];
        }
    });
    return tweets;
}

void write_roc_csv(const std::filesystem::path& path, const EvalReport& report) {
    auto out = open_output(path);
    out << "fpr,tpr,threshold\n";
    for (const auto& p : report.points)
        out << format_double(p.fpr) << ',' << format_double(p.tpr) << ','
            << format_double(p.threshold) << '\n';
}

void write_eval_summary_json(const std::filesystem::path& path, const EvalReport& report) {
    ordered_json j;
    j["auc"] = report.auc;
    j["positives"] = report.positives;
    j["negatives"] = report.negatives;
    open_output(path) << j.dump(2) << '\n';
}

void write_hashtag_csv(const std::filesystem::path& path, std::span<const HashtagCount> rows) {
    auto out = open_output(path);
    out << "hashtag,count\n";
    for (const auto& r : rows) out << r.tag << ',' << r.count << '\n';
}

HeterophilyStats heterophily_stats(const RateDistributions& rates) {
    const auto bh = RateDistributions::values(rates.bot_to_human);
    const auto bb = RateDistributions::values(rates.bot_to_bot);
    const auto hh = RateDistributions::values(rates.human_to_human);
    const auto hb = RateDistributions::values(rates.human_to_bot);

    auto pvalue = [](const std::vector<double>& a, const std::vector<double>& b) {
        return ks_pvalue(ks_statistic(a, b), a.size(), b.size());
    };

    return {RateDistributions::mean(rates.bot_to_human), RateDistributions::mean(rates.bot_to_bot),
            RateDistributions::mean(rates.human_to_human),
            RateDistributions::mean(rates.human_to_bot),
            pvalue(bb, bh), pvalue(hh, hb), pvalue(bh, hh), pvalue(hb, bb)};
}

void write_stats_csv(const std::filesystem::path& path, const HeterophilyStats& s) {
    auto out = open_output(path);
    out << "mean_bot_to_human,mean_bot_to_bot,mean_human_to_human,mean_human_to_bot,"
           "p_botbot_vs_bothuman,p_humanhuman_vs_humanbot,p_bothuman_vs_humanhuman,"
           "p_humanbot_vs_botbot\n";
    out << format_double(s.mean_bot_to_human) << ',' << format_double(s.mean_bot_to_bot) << ','
        << format_double(s.mean_human_to_human) << ',' << format_double(s.mean_human_to_bot) << ','
        << format_double(s.p_bb_vs_bh) << ',' << format_double(s.p_hh_vs_hb) << ','
        << format_double(s.p_bh_vs_hh) << ',' << format_double(s.p_hb_vs_bb) << '\n';
}

std::unordered_map<std::string, std::string> read_kv_config(const std::filesystem::path& path) {
    std::unordered_map<std::string, std::string> kv;
    for_each_line(path, false, [&](std::size_t number, const std::string& line) {
        const auto content = trim(line);
        if (content.empty() || content.front() == '#') return;
        const auto eq = content.find('=');
        if (eq == std::string_view::npos)
            throw InputError(loc(path, number) + ": expected key=value");
        const auto key = trim(content.substr(0, eq));
        const auto value = trim(content.substr(eq + 1));
        if (key.empty()) throw InputError(loc(path, number) + ": empty key");
        kv[std::string(key)] = std::string(value);
    });
    return kv;
}

}  // namespace botcut::io
