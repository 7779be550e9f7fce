#include "modwb/cache.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace modwb {

namespace {

// 64-bit FNV-1a over the key, hex-encoded
std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace

std::string cache_path(const std::string& key) {
    const char* dir = std::getenv("MODWB_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return {};
    return (std::filesystem::path(dir) / (fnv1a_hex(key) + ".cache")).string();
}

std::optional<std::string> cache_lookup(const std::string& key) {
    const std::string path = cache_path(key);
    if (path.empty()) return std::nullopt;
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream payload;
    payload << in.rdbuf();
    if (!in.good() && !in.eof()) return std::nullopt;
    return payload.str();
}

void cache_store(const std::string& key, const std::string& payload) {
    const std::string path = cache_path(key);
    if (path.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(
        std::filesystem::path(path).parent_path(), ec);
    if (ec) return;
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) return;
        out << payload;
        if (!out.good()) return;
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace modwb
