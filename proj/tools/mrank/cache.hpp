#pragma once

// Append-only result cache for mr values.
//
// One tab-separated record per line: canonical graph6, field, mr, unix
// timestamp, engine version. Later records win; records written by another
// engine version are ignored.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace mrank {

class ResultCache {
public:
    explicit ResultCache(std::string path);

    [[nodiscard]] std::optional<int> lookup(const std::string& canonical_g6, int p) const;
    /// Appends a record and throws std::runtime_error when the file cannot be
    /// written.
    void store(const std::string& canonical_g6, int p, int mr);

    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] std::size_t stale() const noexcept { return stale_; }

private:
    std::string path_;
    std::map<std::pair<std::string, int>, int> entries_;
    std::size_t stale_ = 0;
};

} // namespace mrank
