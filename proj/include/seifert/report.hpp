#pragma once

#include "seifert/json_io.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace seifert {

// Append-only JSON-lines cache of d-invariants, keyed by the sorted
// multiplicity tuple plus the orientation sign.
class DCache {
 public:
  explicit DCache(std::filesystem::path path);

  // $SEIFERT_D_CACHE, else $XDG_CACHE_HOME/seifert/d-cache.jsonl, else
  // $HOME/.cache/seifert/d-cache.jsonl, else ./seifert-d-cache.jsonl.
  static std::filesystem::path default_path();
  static std::string key_for(const Multiplicities& m, int sign);

  const std::filesystem::path& path() const { return path_; }
  std::optional<long long> lookup(const std::string& key) const;
  void store(const std::string& key, long long d);
  std::size_t size() const { return entries_.size(); }

 private:
  std::filesystem::path path_;
  std::map<std::string, long long> entries_;
};

// d of the standard-oriented manifold of the tuple, consulting the cache
// when one is given. With verify set, a cache hit is recomputed and a
// mismatch raises std::logic_error.
Int cached_d(const Multiplicities& m, DCache* cache, bool verify = false);

struct ReportRecord {
  std::vector<Int> tuple;
  Int fiber_order;
  SeifertInvariants invariants;
  Int d;
  std::size_t plumbing_rank = 0;
  IntegerPolynomial alexander;
  FoxMilnorResult slice;
  std::optional<WitnessReport> witness;
  std::string witness_note;  // set when no witness exists (unknot)
  std::vector<std::pair<std::string, double>> timings_ms;
};

ReportRecord build_report(const Multiplicities& tuple_with_fiber_last,
                          DCache* cache = nullptr);

ordered_json to_json(const ReportRecord& r, bool include_timings = false);
std::string to_markdown(const ReportRecord& r, bool include_timings = false);

}  // namespace seifert
