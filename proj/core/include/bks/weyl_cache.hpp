#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "bks/rootsys.hpp"
#include "bks/weyl.hpp"

namespace bks {

/// Bumped whenever enumeration order or the record layout changes.
inline constexpr int kWeylCacheCodeVersion = 1;

/// Text cache of a Weyl group enumeration:
///
///     bks-weyl-cache 1
///     type F
///     rank 4
///     count 1152
///     <word> : <row-major entries as p/q>
///     ...
///
/// `<word>` is "e" or a comma separated list of 1-based generators.
std::string serialize_weyl(const RootSystem& rs, const std::vector<WeylElement>& elements);

/// Inverse of serialize_weyl. Throws std::runtime_error on a malformed file or a
/// header that does not match rs.
std::vector<WeylElement> deserialize_weyl(const RootSystem& rs, const std::string& text);

std::filesystem::path weyl_cache_path(const std::filesystem::path& dir, const RootSystem& rs);

struct WeylLoad {
    std::vector<WeylElement> elements;
    bool from_cache = false;
};

/// Loads the cached enumeration from dir if present, otherwise enumerates and
/// writes the cache. An empty dir disables caching.
WeylLoad load_or_enumerate_weyl(const RootSystem& rs, const std::filesystem::path& dir,
                                std::size_t max_size = kDefaultMaxWeyl);

}  // namespace bks
