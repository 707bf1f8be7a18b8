#ifndef DSTORUS_MANIFEST_HPP
#define DSTORUS_MANIFEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace dst::io {

// Reproducibility record; one per output directory, written last as the
// commit marker.
struct RunManifest {
    std::string artifact_version;
    std::string config_echo;                  // normalized JSON text
    std::vector<std::string> explicit_keys;   // provenance: user-set vs defaulted
    std::string input_hash;                   // sha256 of the raw config text
    std::uint64_t seed = 0;
    int threads = 1;
    double L = 0.0;
    int nx = 0, ny = 0;
    long steps = 0;
    double wall_seconds = 0.0;
    std::string status;
};

std::string sha256_hex(const std::string& data);

// Serializes to manifest.json inside dir (created if needed).
void write_manifest(const std::string& dir, const RunManifest& m);

}  // namespace dst::io

#endif
