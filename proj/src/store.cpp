#include "spst/store.hpp"

#include <unistd.h>

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

#include "spst/errors.hpp"

namespace spst {

std::uint64_t checksum64(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

Store::Store(std::filesystem::path directory) : dir_(std::move(directory)) {}

Store Store::from_environment() {
    if (const char* env = std::getenv("SPST_CACHE_DIR"); env && *env)
        return Store(std::filesystem::path(env));
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return Store(std::filesystem::path(xdg) / "spst");
    if (const char* home = std::getenv("HOME"); home && *home)
        return Store(std::filesystem::path(home) / ".cache" / "spst");
    return Store(std::filesystem::path(".spst-cache"));
}

std::filesystem::path Store::file_path(const CacheKey& key) const {
    return dir_ / (key.kind + "-" + std::to_string(key.cap) + "-v" + std::to_string(key.schema) +
                   ".json.spst");
}

Store::LoadResult Store::load(const CacheKey& key) const {
    std::ifstream in(file_path(key), std::ios::binary);
    if (!in.is_open()) return {LoadStatus::Missing, {}};

    std::string header;
    if (!std::getline(in, header)) return {LoadStatus::Corrupt, {}};
    std::istringstream fields(header);
    std::string magic, kind;
    int schema = -1, cap = -1;
    fields >> magic >> schema >> kind >> cap;
    if (fields.fail() || magic != "SPST") return {LoadStatus::Corrupt, {}};
    if (schema != key.schema) return {LoadStatus::Missing, {}};  // invalidated, not broken
    if (kind != key.kind || cap != key.cap) return {LoadStatus::Corrupt, {}};

    std::string rest((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::size_t last_newline = rest.rfind('\n', rest.empty() ? 0 : rest.size() - 2);
    if (rest.empty() || rest.back() != '\n' || last_newline == std::string::npos)
        return {LoadStatus::Corrupt, {}};
    std::string body = rest.substr(0, last_newline);
    std::string trailer = rest.substr(last_newline + 1, rest.size() - last_newline - 2);

    std::uint64_t stored = 0;
    std::istringstream t(trailer);
    std::string label;
    t >> label >> std::hex >> stored;
    if (t.fail() || label != "crc" || stored != checksum64(body))
        return {LoadStatus::Corrupt, {}};
    return {LoadStatus::Ok, std::move(body)};
}

void Store::save(const CacheKey& key, std::string_view body) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw IoError("cache: cannot create " + dir_.string() + ": " + ec.message());

    std::filesystem::path target = file_path(key);
    static std::atomic<std::uint64_t> counter{0};
    std::filesystem::path tmp = target.string() + ".tmp." + std::to_string(::getpid()) + "." +
                                std::to_string(counter.fetch_add(1));

    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out.is_open()) throw IoError("cache: cannot open " + tmp.string());
        out << "SPST " << key.schema << ' ' << key.kind << ' ' << key.cap << '\n';
        out << body << '\n';
        char crc[32];
        std::snprintf(crc, sizeof crc, "crc %016llx",
                      static_cast<unsigned long long>(checksum64(body)));
        out << crc << '\n';
        out.flush();
        if (!out.good()) {
            out.close();
            std::filesystem::remove(tmp, ec);
            throw IoError("cache: short write to " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::error_code ignore;
        std::filesystem::remove(tmp, ignore);
        throw IoError("cache: rename to " + target.string() + " failed: " + ec.message());
    }
}

}  // namespace spst
