#pragma once

#include <optional>
#include <string>

namespace modwb {

// Content-addressed text cache for the command line tool. Disabled (every
// lookup misses, stores are dropped) unless MODWB_CACHE_DIR names a
// directory. Filenames are the FNV-1a hash of the request key, so any change
// to the inputs addresses a different file; misses recompute silently and IO
// failures are swallowed (the cache is best effort, never load bearing).

std::optional<std::string> cache_lookup(const std::string& key);
void cache_store(const std::string& key, const std::string& payload);

// resolved path for a key, empty string when the cache is disabled
std::string cache_path(const std::string& key);

}  // namespace modwb
