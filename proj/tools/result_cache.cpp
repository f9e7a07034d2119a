#include "result_cache.hpp"

#include <atomic>
#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

namespace hecke::tools {

namespace fs = std::filesystem;

ResultCache::ResultCache(fs::path dir, std::string engine_tag) : dir_(std::move(dir)), engine_tag_(std::move(engine_tag))
{
    fs::create_directories(dir_);
}

fs::path ResultCache::path_for(const std::string& key) const
{
    std::string name;
    for (char c : key) name += std::isalnum(static_cast<unsigned char>(c)) || c == '-' ? c : '_';
    return dir_ / (name + ".json");
}

std::optional<Json> ResultCache::get(const std::string& key) const
{
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    Json entry = Json::parse(in, nullptr, false);
    if (entry.is_discarded() || !entry.is_object()) return std::nullopt;
    if (entry.value("key", "") != key || entry.value("engine", "") != engine_tag_) return std::nullopt;
    if (!entry.contains("record")) return std::nullopt;
    return entry.at("record");
}

void ResultCache::put(const std::string& key, const Json& record) const
{
    static std::atomic<unsigned> counter{0};
    const fs::path target = path_for(key);
    std::ostringstream tmp_name;
    tmp_name << target.filename().string() << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "."
             << counter++;
    const fs::path tmp = dir_ / tmp_name.str();
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << Json{{"key", key}, {"engine", engine_tag_}, {"record", record}}.dump() << '\n';
        if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
    }
    fs::rename(tmp, target);
}

} // namespace hecke::tools
