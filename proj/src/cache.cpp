#include "qinst/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <sys/stat.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qinst {

namespace {

// RAII advisory lock on <dir>/.lock
class FileLock {
public:
    FileLock(const std::string& dir, bool exclusive) {
        fd_ = ::open((dir + "/.lock").c_str(), O_CREAT | O_RDWR, 0644);
        if (fd_ >= 0) ::flock(fd_, exclusive ? LOCK_EX : LOCK_SH);
    }
    ~FileLock() {
        if (fd_ >= 0) {
            ::flock(fd_, LOCK_UN);
            ::close(fd_);
        }
    }

private:
    int fd_ = -1;
};

std::string hex64(uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)v);
    return buf;
}

}  // namespace

ResultCache::ResultCache() {
    const char* env = std::getenv("QINSTANTON_CACHE");
    dir_ = env && *env ? env : ".qinstanton-cache";
}

ResultCache::ResultCache(std::string dir) : dir_(std::move(dir)) {}

uint64_t ResultCache::fnv1a64(std::string_view data) noexcept {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string ResultCache::path_for(const std::string& key) const {
    std::string safe;
    safe.reserve(key.size());
    for (char c : key) {
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '.' || c == '_')
            safe += c;
        else
            safe += '_';
    }
    return dir_ + "/" + safe + "-" + hex64(fnv1a64(key)) + ".json";
}

void ResultCache::ensure_dir() const {
    ::mkdir(dir_.c_str(), 0755);  // already existing is fine
}

std::optional<std::string> ResultCache::lookup(const std::string& key) const {
    FileLock lock(dir_, false);
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        nlohmann::json j = nlohmann::json::parse(ss.str());
        if (j.at("schema_version") != "1") return std::nullopt;
        if (j.at("key").get<std::string>() != key) return std::nullopt;
        std::string payload = j.at("payload").get<std::string>();
        if (j.at("digest").get<std::string>() != hex64(fnv1a64(payload))) return std::nullopt;
        return payload;
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;  // corrupt entries are misses
    }
}

void ResultCache::store(const std::string& key, const std::string& payload) const {
    ensure_dir();
    FileLock lock(dir_, true);
    nlohmann::ordered_json j;
    j["schema_version"] = "1";
    j["key"] = key;
    j["digest"] = hex64(fnv1a64(payload));
    j["payload"] = payload;
    const std::string path = path_for(key);
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << j.dump(2) << "\n";
    }
    ::rename(tmp.c_str(), path.c_str());
}

}  // namespace qinst
