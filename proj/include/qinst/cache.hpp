#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace qinst {

/// On-disk result cache. One JSON file per key holding the exact output
/// bytes plus a content digest; a digest or key mismatch invalidates the
/// entry. Access is serialized through an advisory file lock.
class ResultCache {
public:
    /// Directory from QINSTANTON_CACHE, falling back to ".qinstanton-cache".
    ResultCache();
    explicit ResultCache(std::string dir);

    const std::string& dir() const noexcept { return dir_; }

    /// Returns the stored payload when present and intact.
    std::optional<std::string> lookup(const std::string& key) const;
    void store(const std::string& key, const std::string& payload) const;

    static uint64_t fnv1a64(std::string_view data) noexcept;

private:
    std::string dir_;
    std::string path_for(const std::string& key) const;
    void ensure_dir() const;
};

}  // namespace qinst
