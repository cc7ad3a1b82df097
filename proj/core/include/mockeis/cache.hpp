#pragma once
/**
 * @file cache.hpp
 * @brief Advisory on-disk persistence for the Bernoulli number table.
 *
 * The cache is a versioned JSON file.  Loading is fault-tolerant: a missing,
 * unreadable, corrupted or version-mismatched file simply means the table is
 * rebuilt from scratch, never an error.  Saving is atomic (temp file +
 * rename).  Results never depend on the cache (cold and warm runs produce
 * identical output); it only saves recomputation time.
 */

#include <filesystem>

namespace mockeis {

/// Resolution order: $MOCKEIS_CACHE_DIR, $XDG_CACHE_HOME/mockeis,
/// $HOME/.cache/mockeis.  Empty path when none of the variables is set.
std::filesystem::path default_cache_dir();

/// File used inside a cache directory.
std::filesystem::path bernoulli_cache_file(const std::filesystem::path& dir);

/// Seed the in-memory Bernoulli table from `file`.  Returns the number of
/// entries accepted (0 on any problem; never throws).
std::size_t load_bernoulli_cache(const std::filesystem::path& file) noexcept;

/// Persist the current Bernoulli table to `file`.  Best effort: returns
/// false (without throwing) when the file cannot be written.
bool save_bernoulli_cache(const std::filesystem::path& file) noexcept;

}  // namespace mockeis
