#include "bks/weyl_cache.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "bks/errors.hpp"

namespace bks {

namespace {

std::string expect_field(std::istream& in, const std::string& key) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("weyl cache: missing '" + key + "' line");
    const std::string prefix = key + " ";
    if (line.rfind(prefix, 0) != 0) throw std::runtime_error("weyl cache: expected '" + key + "', got '" + line + "'");
    return line.substr(prefix.size());
}

}  // namespace

std::string serialize_weyl(const RootSystem& rs, const std::vector<WeylElement>& elements) {
    std::ostringstream os;
    os << "bks-weyl-cache " << kWeylCacheCodeVersion << '\n';
    os << "type " << rs.type_letter << '\n';
    os << "rank " << rs.rank << '\n';
    os << "count " << elements.size() << '\n';
    for (const auto& w : elements) {
        os << w.word_string() << " :";
        for (const auto& x : w.matrix.data()) os << ' ' << x.str();
        os << '\n';
    }
    return os.str();
}

std::vector<WeylElement> deserialize_weyl(const RootSystem& rs, const std::string& text) {
    std::istringstream in(text);
    const std::string version = expect_field(in, "bks-weyl-cache");
    if (version != std::to_string(kWeylCacheCodeVersion))
        throw std::runtime_error("weyl cache: version " + version + " is not supported");
    if (expect_field(in, "type") != std::string(1, rs.type_letter) ||
        expect_field(in, "rank") != std::to_string(rs.rank))
        throw std::runtime_error("weyl cache: header does not match " + rs.name());
    const std::size_t count = std::stoull(expect_field(in, "count"));

    const auto n = static_cast<std::size_t>(rs.rank);
    std::vector<WeylElement> out;
    out.reserve(count);
    std::string line;
    while (std::getline(in, line)) {
        const auto colon = line.find(" :");
        if (colon == std::string::npos) throw std::runtime_error("weyl cache: malformed record '" + line + "'");
        WeylElement w{RationalMatrix(n, n), {}};
        const std::string word = line.substr(0, colon);
        std::size_t k = 0;
        try {
            if (word != "e") {
                std::istringstream ws(word);
                std::string tok;
                while (std::getline(ws, tok, ',')) w.word.push_back(std::stoi(tok));
            }
            std::istringstream es(line.substr(colon + 2));
            std::string tok;
            while (es >> tok) {
                if (k >= n * n) throw std::runtime_error("weyl cache: too many matrix entries");
                w.matrix(k / n, k % n) = Rational::parse(tok);
                ++k;
            }
        } catch (const std::logic_error& e) {
            throw std::runtime_error("weyl cache: malformed record '" + line + "': " + e.what());
        }
        if (k != n * n) throw std::runtime_error("weyl cache: too few matrix entries");
        out.push_back(std::move(w));
    }
    if (out.size() != count) throw std::runtime_error("weyl cache: record count mismatch");
    return out;
}

std::filesystem::path weyl_cache_path(const std::filesystem::path& dir, const RootSystem& rs) {
    return dir / ("weyl_" + rs.name() + "_v" + std::to_string(kWeylCacheCodeVersion) + ".txt");
}

WeylLoad load_or_enumerate_weyl(const RootSystem& rs, const std::filesystem::path& dir, std::size_t max_size) {
    if (!dir.empty()) {
        const auto path = weyl_cache_path(dir, rs);
        std::ifstream in(path, std::ios::binary);
        if (in) {
            std::ostringstream buf;
            buf << in.rdbuf();
            auto elements = deserialize_weyl(rs, buf.str());
            if (elements.size() > max_size) {
                throw ResourceLimitError("cached Weyl group of " + rs.name() + " exceeds max_size=" +
                                             std::to_string(max_size),
                                         elements.size());
            }
            return {std::move(elements), true};
        }
    }
    WeylLoad result{enumerate_weyl(rs, max_size), false};
    if (!dir.empty()) {
        std::filesystem::create_directories(dir);
        const auto path = weyl_cache_path(dir, rs);
        const auto tmp = path.string() + ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            out << serialize_weyl(rs, result.elements);
            if (!out) throw std::runtime_error("cannot write Weyl cache " + tmp);
        }
        std::filesystem::rename(tmp, path);
    }
    return result;
}

}  // namespace bks
