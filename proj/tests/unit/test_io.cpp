#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>

#include "botcut/io.hpp"
#include "botcut/synth.hpp"
#include "oracles.hpp"

using namespace botcut;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("botcut_io_test_" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::filesystem::path file(const std::string& name) const { return path / name; }
};

void write_text(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

std::string read_text(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("edge CSV parsing") {
    TempDir dir;
    SUBCASE("weight defaults to 1 and header can be skipped") {
        write_text(dir.file("e.csv"), "src,dst,weight\na,b,3\nb,c\n");
        const auto records = io::read_edge_records(dir.file("e.csv"), /*header_row=*/true);
        REQUIRE(records.size() == 2);
        CHECK(records[0].count == 3);
        CHECK(records[1].count == 1);
    }
    SUBCASE("bad arity names the line") {
        write_text(dir.file("e.csv"), "a,b,1\na,b,1,junk\n");
        CHECK_THROWS_WITH_AS(io::read_edge_records(dir.file("e.csv")),
                             doctest::Contains(":2"), InputError);
    }
    SUBCASE("non-positive weight names the line") {
        write_text(dir.file("e.csv"), "a,b,0\n");
        CHECK_THROWS_WITH_AS(io::read_edge_records(dir.file("e.csv")),
                             doctest::Contains(":1"), InputError);
    }
    SUBCASE("missing file is a FileError") {
        CHECK_THROWS_AS(io::read_edge_records(dir.file("nope.csv")), FileError);
    }
    SUBCASE("jsonl records") {
        write_text(dir.file("e.jsonl"),
                   R"({"src":"a","dst":"b","weight":4})" "\n" R"({"src":"b","dst":"c"})" "\n");
        const auto records = io::read_edge_records(dir.file("e.jsonl"));
        REQUIRE(records.size() == 2);
        CHECK(records[0].count == 4);
        CHECK(records[1].count == 1);
    }
    SUBCASE("malformed jsonl names the line") {
        write_text(dir.file("e.jsonl"), R"({"src":"a","dst":"b"})" "\n{oops\n");
        CHECK_THROWS_WITH_AS(io::read_edge_records(dir.file("e.jsonl")),
                             doctest::Contains(":2"), InputError);
    }
}

TEST_CASE("label CSV parsing") {
    TempDir dir;
    write_text(dir.file("l.csv"), "a,bot\nb,human\n");
    const auto records = io::read_label_records(dir.file("l.csv"));
    REQUIRE(records.size() == 2);
    CHECK(records[0].label_token == "bot");

    write_text(dir.file("bad.csv"), "a,robot\n");
    CHECK_THROWS_WITH_AS(io::read_label_records(dir.file("bad.csv")),
                         doctest::Contains("robot"), InputError);
}

TEST_CASE("graph round-trips through edge CSV") {
    TempDir dir;
    std::mt19937_64 rng(64);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = testing::random_graph(rng, {.min_nodes = 2, .max_nodes = 15,
                                                   .edge_probability = 0.4});
        io::write_edge_csv(dir.file("g.csv"), g);
        const auto back = build_graph(io::read_edge_records(dir.file("g.csv")));
        // Nodes that only ever appeared as dropped self-loops are not in the
        // CSV; compare against the edge-supported subgraph.
        const auto reference = build_graph([&] {
            std::vector<EdgeRecord> r;
            for (const auto& e : g.edges()) r.push_back({g.id_of(e.src), g.id_of(e.dst), e.weight});
            return r;
        }());
        CHECK(back == reference);
    }
}

TEST_CASE("detection JSONL round-trips") {
    TempDir dir;
    const auto g = build_graph(std::vector<EdgeRecord>{{"a", "b", 2}});
    DetectionResult result;
    result.map_bot = {1, 0};
    result.p_bot = {0.75, 0.25};
    io::write_detection_jsonl(dir.file("d.jsonl"), g, result);

    const auto records = io::read_detection_jsonl(dir.file("d.jsonl"));
    REQUIRE(records.size() == 2);
    CHECK(records[0].account == "a");
    CHECK(records[0].map_label == Label::bot);
    CHECK(records[0].p_bot == 0.75);
    CHECK(records[0].z_out == 2);
    CHECK(records[1].map_label == Label::human);

    SUBCASE("p_bot is omitted without marginals") {
        DetectionResult bare;
        bare.map_bot = {1, 0};
        io::write_detection_jsonl(dir.file("bare.jsonl"), g, bare);
        const auto rows = io::read_detection_jsonl(dir.file("bare.jsonl"));
        CHECK(!rows[0].p_bot.has_value());
    }
}

TEST_CASE("hashtag JSONL merges repeated accounts and normalizes") {
    TempDir dir;
    write_text(dir.file("t.jsonl"),
               R"({"account_id":"a","hashtags":["#X","x","Y"]})" "\n"
               R"({"account_id":"a","hashtags":["y"]})" "\n");
    const auto tweets = io::read_hashtag_jsonl(dir.file("t.jsonl"));
    CHECK(tweets.at("a").at("x") == 2);
    CHECK(tweets.at("a").at("y") == 2);

    write_text(dir.file("bad.jsonl"), R"({"account_id":"a","hashtags":["x"]})" "\nnot json\n");
    CHECK_THROWS_WITH_AS(io::read_hashtag_jsonl(dir.file("bad.jsonl")),
                         doctest::Contains(":2"), InputError);
}

TEST_CASE("synthetic output serializes deterministically") {
    TempDir dir;
    SynthConfig cfg;
    cfg.n_accounts = 120;
    cfg.seed = 5;
    const auto out1 = generate(cfg);
    const auto out2 = generate(cfg);
    io::write_edge_csv(dir.file("e1.csv"), out1.graph);
    io::write_edge_csv(dir.file("e2.csv"), out2.graph);
    CHECK(read_text(dir.file("e1.csv")) == read_text(dir.file("e2.csv")));
    io::write_label_csv(dir.file("t1.csv"), out1.truth);
    io::write_label_csv(dir.file("t2.csv"), out2.truth);
    CHECK(read_text(dir.file("t1.csv")) == read_text(dir.file("t2.csv")));
}

TEST_CASE("kv config parsing") {
    TempDir dir;
    write_text(dir.file("p.conf"), "# params\ngamma = 2\nlambda1=0.9\n\n");
    const auto kv = io::read_kv_config(dir.file("p.conf"));
    CHECK(kv.at("gamma") == "2");
    CHECK(kv.at("lambda1") == "0.9");

    write_text(dir.file("bad.conf"), "gamma 2\n");
    CHECK_THROWS_WITH_AS(io::read_kv_config(dir.file("bad.conf")),
                         doctest::Contains(":1"), InputError);
}

TEST_CASE("format_double is round-trip stable") {
    for (double v : {0.45, 1.0 / 3.0, 1e-86, 123456.789, 0.0}) {
        const auto s = io::format_double(v);
        CHECK(std::stod(s) == v);
    }
    CHECK(io::format_double(std::numeric_limits<double>::infinity()) == "inf");
}
