#include "cache.hpp"

#include <minrank/forbidden.hpp>

#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace mrank {

ResultCache::ResultCache(std::string path) : path_(std::move(path))
{
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, '\t'))
            fields.push_back(f);
        if (fields.size() != 5)
            continue;
        if (fields[4] != minrank::engine_version()) {
            ++stale_;
            continue;
        }
        try {
            entries_[{fields[0], std::stoi(fields[1])}] = std::stoi(fields[2]);
        } catch (const std::exception&) {
            continue;
        }
    }
}

std::optional<int> ResultCache::lookup(const std::string& canonical_g6, int p) const
{
    auto it = entries_.find({canonical_g6, p});
    if (it == entries_.end())
        return std::nullopt;
    return it->second;
}

void ResultCache::store(const std::string& canonical_g6, int p, int mr)
{
    std::ofstream out(path_, std::ios::app);
    if (!out)
        throw std::runtime_error("cannot write cache file " + path_);
    const auto now = std::chrono::duration_cast<std::chrono::seconds>(
                         std::chrono::system_clock::now().time_since_epoch())
                         .count();
    out << canonical_g6 << '\t' << p << '\t' << mr << '\t' << now << '\t' << minrank::engine_version() << '\n';
    entries_[{canonical_g6, p}] = mr;
}

} // namespace mrank
