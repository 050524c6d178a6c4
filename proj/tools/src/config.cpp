#include "config.hpp"

#include <charconv>
#include <fstream>

#include "bks/errors.hpp"
#include "bks/rootsys.hpp"

namespace bks::app {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& value) {
    T out{};
    const auto* end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc() || ptr != end) throw ValidationError(key + ": '" + value + "' is not a valid number");
    return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "on") return true;
    if (value == "false" || value == "0" || value == "off") return false;
    throw ValidationError(key + ": '" + value + "' is not a boolean");
}

}  // namespace

Settings read_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read config file " + path.string());
    Settings out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ValidationError(path.string() + ":" + std::to_string(lineno) + ": expected key = value");
        out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

void apply_setting(RunConfig& c, const std::string& key, const std::string& value) {
    if (key == "type") {
        if (value.size() != 1) throw ValidationError("type must be a single letter, got '" + value + "'");
        c.type_letter = static_cast<char>(std::toupper(static_cast<unsigned char>(value[0])));
    } else if (key == "rank") {
        c.rank = parse_number<int>(key, value);
    } else if (key == "k") {
        c.k = parse_number<int>(key, value);
        if (c.k < 1) throw ValidationError("k must be >= 1, got " + value);
    } else if (key == "haar") {
        c.conventions.haar = parse_haar(value);
    } else if (key == "phase_k" || key == "phase-k") {
        c.conventions.phase_k = parse_bool(key, value);
    } else if (key == "seed") {
        c.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "weyl_cache_dir" || key == "cache-dir") {
        c.weyl_cache_dir = value;
    } else if (key == "output") {
        if (value != "json" && value != "csv") throw ValidationError("output must be json or csv, got '" + value + "'");
        c.output = value;
    } else if (key == "max_weyl" || key == "max-weyl") {
        c.max_weyl = parse_number<std::size_t>(key, value);
        if (c.max_weyl < 1) throw ValidationError("max_weyl must be >= 1");
    } else if (key == "trials") {
        c.trials = parse_number<int>(key, value);
        if (c.trials < 1) throw ValidationError("trials must be >= 1, got " + value);
    } else if (key == "suite") {
        if (value != "densities" && value != "signs" && value != "oracles" && value != "all")
            throw ValidationError("suite must be densities, signs, oracles or all; got '" + value + "'");
        c.suite = value;
    } else {
        throw ValidationError("unknown setting '" + key + "'");
    }
}

RunConfig resolve_config(const Settings& file, const std::optional<std::string>& env_cache_dir,
                         const Settings& flags) {
    RunConfig c;
    for (const auto& [k, v] : file) apply_setting(c, k, v);
    if (env_cache_dir && !env_cache_dir->empty()) c.weyl_cache_dir = *env_cache_dir;
    for (const auto& [k, v] : flags) apply_setting(c, k, v);
    if (c.has_group() && !is_valid_type(c.type_letter, c.rank))
        throw ValidationError(std::string("invalid group ") + c.type_letter + std::to_string(c.rank) +
                              "; valid: " + valid_type_ranges());
    return c;
}

void require_group(const RunConfig& c) {
    if (!c.has_group()) throw ValidationError("--type and --rank are required");
    if (!is_valid_type(c.type_letter, c.rank))
        throw ValidationError(std::string("invalid group ") + c.type_letter + std::to_string(c.rank) +
                              "; valid: " + valid_type_ranges());
}

}  // namespace bks::app
