#ifndef EDGEREG_CACHE_HPP
#define EDGEREG_CACHE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "edgereg/homology.hpp"
#include "edgereg/ideal.hpp"

namespace edgereg {

inline constexpr const char* kEngineVersion = "edgereg-engine-1";

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& bytes);

/// On-disk Betti-table cache keyed by (canonical ideal, field, method).
class ResultCache {
public:
    /// $EDGEREG_CACHE, or ".edgereg-cache" when unset.
    static std::string default_directory();
    explicit ResultCache(std::string directory) : dir_(std::move(directory)) {}

    const std::string& directory() const { return dir_; }
    static std::string key(const MonomialIdeal& a, const Field& field, const std::string& method);

    std::optional<BettiTable> load(const MonomialIdeal& a, const Field& field, const std::string& method) const;
    /// Writes to a temporary file and renames it into place.
    void store(const MonomialIdeal& a, const Field& field, const std::string& method, const BettiTable& t) const;

private:
    std::string path_for(const std::string& key) const;
    std::string dir_;
};

}  // namespace edgereg

#endif
