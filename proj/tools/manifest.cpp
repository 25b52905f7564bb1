#include "manifest.hpp"

#include <cstdint>
#include <fstream>

#include "botcut/errors.hpp"
#include "botcut/version.hpp"

namespace botcut::cli {

std::string file_digest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot open " + path.string());

    std::uint64_t hash = 0xcbf29ce484222325ull;
    char buffer[1 << 16];
    while (in.read(buffer, sizeof(buffer)) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            hash ^= static_cast<unsigned char>(buffer[i]);
            hash *= 0x100000001b3ull;
        }
    }

    char hex[17];
    std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(hash));
    return hex;
}

void RunManifest::write(const std::filesystem::path& path) const {
    nlohmann::ordered_json j;
    j["tool"] = "botcut";
    j["version"] = kVersion;
    j["subcommand"] = subcommand;
    j["parameters"] = parameters;
    j["inputs"] = nlohmann::ordered_json::array();
    for (const auto& input : inputs)
        j["inputs"].push_back({{"path", input.string()}, {"digest", file_digest(input)}});
    j["outputs"] = nlohmann::ordered_json::array();
    for (const auto& output : outputs) j["outputs"].push_back(output.string());
    j["wall_seconds"] = wall_seconds;

    std::ofstream out(path, std::ios::binary);
    if (!out) throw FileError("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

}  // namespace botcut::cli
