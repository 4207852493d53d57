#include "edgereg/cache.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <thread>

#include <json.hpp>

#include "edgereg/io.hpp"

namespace edgereg {

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string ResultCache::default_directory() {
    const char* env = std::getenv("EDGEREG_CACHE");
    return env && *env ? env : ".edgereg-cache";
}

namespace {

std::string canonical_form(const MonomialIdeal& a, const Field& field, const std::string& method) {
    return format_ideal(a) + "field " + field.name() + "\nmethod " + method + "\n";
}

}  // namespace

std::string ResultCache::key(const MonomialIdeal& a, const Field& field, const std::string& method) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a(canonical_form(a, field, method))));
    return buf;
}

std::string ResultCache::path_for(const std::string& key) const { return dir_ + "/" + key + ".json"; }

std::optional<BettiTable> ResultCache::load(const MonomialIdeal& a, const Field& field,
                                            const std::string& method) const {
    const std::string k = key(a, field, method);
    std::error_code ec;
    if (!std::filesystem::exists(path_for(k), ec)) return std::nullopt;
    try {
        const auto j = nlohmann::json::parse(read_file(path_for(k)));
        // A hash collision or an older engine both count as a miss.
        if (j.at("key") != k || j.at("engine_version") != kEngineVersion ||
            j.at("canonical") != canonical_form(a, field, method))
            return std::nullopt;
        BettiTable t = BettiTable::from_json(j.at("table").dump());
        if (t.field() != field) return std::nullopt;
        return t;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void ResultCache::store(const MonomialIdeal& a, const Field& field, const std::string& method,
                        const BettiTable& t) const {
    static std::atomic<unsigned> counter{0};
    std::filesystem::create_directories(dir_);
    const std::string k = key(a, field, method);
    nlohmann::ordered_json j;
    j["key"] = k;
    j["engine_version"] = kEngineVersion;
    j["canonical"] = canonical_form(a, field, method);
    j["table"] = nlohmann::ordered_json::parse(t.to_json());
    const std::string tmp = path_for(k) + ".tmp." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) +
                            "." + std::to_string(counter++);
    write_file(tmp, j.dump(2) + "\n");
    std::filesystem::rename(tmp, path_for(k));
}

}  // namespace edgereg
