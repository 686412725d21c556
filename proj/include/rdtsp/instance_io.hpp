#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rdtsp/core.hpp"

namespace rdtsp {

inline constexpr std::string_view kGeneratorVersion = "rdtsp-gen/1";

// Where an instance came from. `clique` is filled for adversarial stars so a
// clique-first reference tour can be rebuilt from the file alone.
struct Provenance {
    std::string kind;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::string generator_version{kGeneratorVersion};
    std::vector<Node> clique;
};

struct InstanceFile {
    MetricInstance instance;
    std::optional<Provenance> provenance;
};

// Emits `points` when the instance is Euclidean-backed, `dist` otherwise.
// Doubles use shortest round-trip formatting, so parse(write(x)) is bit-exact.
std::string write_instance_json(const MetricInstance& inst,
                                const std::optional<Provenance>& provenance = std::nullopt);
InstanceFile read_instance_json(std::string_view text);

void save_instance(const std::string& path, const MetricInstance& inst,
                   const std::optional<Provenance>& provenance = std::nullopt);
InstanceFile load_instance(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace rdtsp
