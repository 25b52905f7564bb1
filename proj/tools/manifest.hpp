#pragma once
// Per-run provenance record: subcommand, resolved parameters, input file
// digests, output paths and wall-clock timing. Timestamps live only here,
// keeping the data outputs byte-identical across reruns.

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace botcut::cli {

// FNV-1a 64-bit over the file bytes, hex encoded.
std::string file_digest(const std::filesystem::path& path);

struct RunManifest {
    std::string subcommand;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    std::vector<std::filesystem::path> inputs;
    std::vector<std::filesystem::path> outputs;
    double wall_seconds = 0.0;

    void write(const std::filesystem::path& path) const;
};

}  // namespace botcut::cli
