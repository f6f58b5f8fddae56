#ifndef SPST_STORE_HPP
#define SPST_STORE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace spst {

// Bump to invalidate every previously written table of every kind.
inline constexpr int kCacheSchemaVersion = 1;

struct CacheKey {
    std::string kind;  // "a", "b", "s2m", "m2s", "m2sp", "sp2m", "chartable", ...
    int cap = 0;       // degree cap, or t for character tables
    int schema = kCacheSchemaVersion;
};

/// Directory of cached coefficient tables. One file per key, named
/// <kind>-<cap>-v<schema>.json.spst, laid out as a header line
/// ("SPST <schema> <kind> <cap>"), the JSON body, and a trailing checksum
/// line. Writes go through a temporary file and an atomic rename, so
/// concurrent writers of the same key leave one intact winner and readers
/// never observe a partial file.
class Store {
public:
    explicit Store(std::filesystem::path directory);

    // Honors SPST_CACHE_DIR; falls back to the per-user cache directory
    // ($XDG_CACHE_HOME/spst or ~/.cache/spst), then to ./.spst-cache.
    static Store from_environment();

    enum class LoadStatus { Missing, Ok, Corrupt };
    struct LoadResult {
        LoadStatus status = LoadStatus::Missing;
        std::string body;
    };

    // Absence (including a schema mismatch, which just means invalidated)
    // is not an error. A file that exists but fails the magic, field, or
    // checksum test reports Corrupt; the caller recomputes and overwrites.
    LoadResult load(const CacheKey& key) const;

    // Atomic replace. Throws IoError on filesystem failure; callers treat
    // that as a warning, never as fatal (the cache is an optimization).
    void save(const CacheKey& key, std::string_view body) const;

    std::filesystem::path file_path(const CacheKey& key) const;
    const std::filesystem::path& directory() const { return dir_; }

private:
    std::filesystem::path dir_;
};

// FNV-1a, 64-bit; cheap and catches any single-byte corruption.
std::uint64_t checksum64(std::string_view bytes);

}  // namespace spst

#endif
