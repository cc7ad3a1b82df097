#include "mockeis/cache.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "mockeis/numtheory.hpp"
#include "mockeis/rational.hpp"

namespace mockeis {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {
constexpr int kCacheVersion = 1;
}

fs::path default_cache_dir() {
    if (const char* env = std::getenv("MOCKEIS_CACHE_DIR"); env && *env) return fs::path(env);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return fs::path(xdg) / "mockeis";
    if (const char* home = std::getenv("HOME"); home && *home)
        return fs::path(home) / ".cache" / "mockeis";
    return {};
}

fs::path bernoulli_cache_file(const fs::path& dir) { return dir / "bernoulli-v1.json"; }

std::size_t load_bernoulli_cache(const fs::path& file) noexcept {
    try {
        std::ifstream in(file);
        if (!in) return 0;
        const json j = json::parse(in, nullptr, /*allow_exceptions=*/false);
        if (j.is_discarded() || !j.is_object()) return 0;
        if (!j.contains("version") || j.at("version") != kCacheVersion) return 0;
        if (!j.contains("bernoulli") || !j.at("bernoulli").is_array()) return 0;
        // Collect the longest well-formed prefix; the seeding step re-validates
        // every value structurally, so a damaged file degrades to a shorter
        // table rather than an error.
        std::vector<std::pair<int, Rational>> entries;
        for (const auto& s : j.at("bernoulli")) {
            if (!s.is_string()) break;
            try {
                entries.emplace_back(static_cast<int>(entries.size()),
                                     parse_rational(s.get<std::string>()));
            } catch (const std::invalid_argument&) {
                break;
            }
        }
        return bernoulli_table_seed(entries);
    } catch (...) {
        return 0;
    }
}

bool save_bernoulli_cache(const fs::path& file) noexcept {
    try {
        const auto snapshot = bernoulli_table_snapshot();
        if (snapshot.empty()) return false;
        json arr = json::array();
        for (const auto& [n, b] : snapshot) arr.push_back(to_string(b));
        const json j{{"bernoulli", std::move(arr)}, {"version", kCacheVersion}};

        std::error_code ec;
        if (!file.parent_path().empty()) fs::create_directories(file.parent_path(), ec);
        fs::path tmp = file;
        tmp += ".tmp";
        {
            std::ofstream out(tmp, std::ios::trunc);
            if (!out) return false;
            out << j.dump();
            out.flush();
            if (!out) {
                fs::remove(tmp, ec);
                return false;
            }
        }
        fs::rename(tmp, file, ec);
        if (ec) {
            fs::remove(tmp, ec);
            return false;
        }
        return true;
    } catch (...) {
        return false;
    }
}

}  // namespace mockeis
