#include "dstorus/manifest.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace dst::io {

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr)) {
        throw std::runtime_error("sha256_hex: digest failed");
    }
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 0xf]);
    }
    return out;
}

void write_manifest(const std::string& dir, const RunManifest& m) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    nlohmann::json j;
    j["artifact_version"] = m.artifact_version;
    j["config"] = nlohmann::json::parse(m.config_echo.empty() ? "{}" : m.config_echo);
    j["explicit_keys"] = m.explicit_keys;
    j["input_hash"] = m.input_hash;
    j["seed"] = m.seed;
    j["threads"] = m.threads;
    j["grid"] = {{"L", m.L}, {"nx", m.nx}, {"ny", m.ny}};
    j["steps"] = m.steps;
    j["wall_seconds"] = m.wall_seconds;
    j["status"] = m.status;
    std::ofstream out(fs::path(dir) / "manifest.json");
    if (!out) throw std::runtime_error("write_manifest: cannot open " + dir + "/manifest.json");
    out << j.dump(2) << "\n";
}

}  // namespace dst::io
