#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "bks/pairing.hpp"
#include "bks/weyl.hpp"

namespace bks::app {

struct RunConfig {
    char type_letter = 0;
    int rank = 0;
    int k = 0;
    Conventions conventions;
    std::uint64_t seed = 42;
    std::filesystem::path weyl_cache_dir;
    std::string output = "json";
    std::size_t max_weyl = kDefaultMaxWeyl;
    int trials = 200;
    std::string suite = "all";

    bool has_group() const { return type_letter != 0; }
};

/// Settings in the order defaults < config file < BKS_CACHE_DIR < flags. Flags
/// are stored as text and parsed by apply_setting so that all three sources
/// share one validator.
using Settings = std::map<std::string, std::string>;

/// Flat "key = value" file; '#' starts a comment. Throws ValidationError on a
/// malformed line or an unknown key.
Settings read_config_file(const std::filesystem::path& path);

/// Throws ValidationError for an unknown key or a bad value.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

/// Applies each layer in turn, then checks cross-field constraints.
RunConfig resolve_config(const Settings& file, const std::optional<std::string>& env_cache_dir,
                         const Settings& flags);

/// Throws ValidationError if the group is missing or invalid.
void require_group(const RunConfig& config);

}  // namespace bks::app
