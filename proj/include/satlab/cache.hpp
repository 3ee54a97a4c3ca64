#pragma once

#include <optional>
#include <string>
#include <vector>

#include "satlab/search.hpp"

namespace satlab {

/// Append-only JSON-lines store of ExtremalRecords keyed by
/// (kind, params, budget fingerprint). Corrupt lines are skipped with a
/// warning on stderr. Witnesses are re-validated before a cached record is
/// reused; records whose witnesses fail validation are ignored.
class ResultCache {
  public:
    /// Empty path disables the cache entirely.
    explicit ResultCache(std::string path);

    /// Default path: $SATLAB_CACHE, else "satlab_cache.jsonl" in the working
    /// directory.
    static ResultCache from_environment();

    std::optional<ExtremalRecord> lookup(const std::string& kind,
                                         const std::vector<std::pair<std::string, long long>>& params,
                                         const EnumerationBudget& budget) const;

    void store(const ExtremalRecord& rec, const EnumerationBudget& budget);

    const std::string& path() const { return path_; }

  private:
    std::string path_;
};

/// Stable text fingerprint of the budget knobs that can change an answer.
std::string budget_fingerprint(const EnumerationBudget& budget);

/// True when any embedded witness actually certifies the record's value.
bool witness_validates(const ExtremalRecord& rec);

}  // namespace satlab
