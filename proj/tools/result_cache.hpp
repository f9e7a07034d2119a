// On-disk cache of table cells: one JSON file per cell, written atomically.

#ifndef HECKE_TOOLS_RESULT_CACHE_HPP
#define HECKE_TOOLS_RESULT_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "hecke/json_io.hpp"

namespace hecke::tools {

class ResultCache {
public:
    ResultCache(std::filesystem::path dir, std::string engine_tag);

    /// The stored record for key, unless missing, unreadable or from another engine version.
    std::optional<Json> get(const std::string& key) const;
    /// Writes to a temporary file and renames it into place, so readers never see a partial entry.
    void put(const std::string& key, const Json& record) const;

    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;
    std::string engine_tag_;

    std::filesystem::path path_for(const std::string& key) const;
};

} // namespace hecke::tools

#endif
