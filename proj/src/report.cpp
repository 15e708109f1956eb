#include "seifert/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace seifert {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

DCache::DCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.contains("key") || !j.contains("d")) continue;
    entries_[j["key"].get<std::string>()] = j["d"].get<long long>();
  }
}

std::filesystem::path DCache::default_path() {
  if (const char* p = std::getenv("SEIFERT_D_CACHE")) return p;
  if (const char* x = std::getenv("XDG_CACHE_HOME"))
    return std::filesystem::path(x) / "seifert" / "d-cache.jsonl";
  if (const char* h = std::getenv("HOME"))
    return std::filesystem::path(h) / ".cache" / "seifert" / "d-cache.jsonl";
  return "seifert-d-cache.jsonl";
}

std::string DCache::key_for(const Multiplicities& m, int sign) {
  std::vector<Int> sorted = m.entries();
  std::sort(sorted.begin(), sorted.end());
  std::ostringstream os;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    os << (i ? "," : "") << sorted[i].get_str();
  os << (sign < 0 ? "|-1" : "|+1");
  return os.str();
}

std::optional<long long> DCache::lookup(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void DCache::store(const std::string& key, long long d) {
  if (entries_.count(key)) return;
  entries_[key] = d;
  std::error_code ec;
  if (path_.has_parent_path())
    std::filesystem::create_directories(path_.parent_path(), ec);
  std::ofstream out(path_, std::ios::app);
  if (!out) return;  // cache is best-effort
  nlohmann::ordered_json j;
  j["key"] = key;
  j["d"] = d;
  out << j.dump() << "\n";
}

Int cached_d(const Multiplicities& m, DCache* cache, bool verify) {
  std::string key = cache ? DCache::key_for(m, +1) : std::string();
  if (cache) {
    if (auto hit = cache->lookup(key)) {
      if (!verify) return to_int(*hit);
      Int fresh = d_of_manifold({+1, from_multiplicities(m)});
      if (fresh != to_int(*hit))
        throw std::logic_error("d cache mismatch for key " + key +
                               ": cached " + std::to_string(*hit) +
                               ", recomputed " + fresh.get_str());
      return fresh;
    }
  }
  Int d = d_of_manifold({+1, from_multiplicities(m)});
  if (cache && d.fits_slong_p()) cache->store(key, d.get_si());
  return d;
}

ReportRecord build_report(const Multiplicities& tuple, DCache* cache) {
  if (tuple.empty())
    throw std::invalid_argument("build_report: empty tuple");
  ReportRecord r;
  r.tuple = tuple.entries();
  r.fiber_order = tuple.last();

  auto t0 = Clock::now();
  r.invariants = from_multiplicities(tuple);
  r.timings_ms.emplace_back("invariants", ms_since(t0));

  t0 = Clock::now();
  r.plumbing_rank = plumbing_graph(r.invariants).rank();
  r.d = cached_d(tuple, cache);
  r.timings_ms.emplace_back("d_invariant", ms_since(t0));

  t0 = Clock::now();
  r.alexander = alexander_fiber(tuple);
  r.slice = fox_milnor_verdict(r.alexander);
  r.timings_ms.emplace_back("alexander", ms_since(t0));

  t0 = Clock::now();
  try {
    r.witness = infinite_order_witness(r.invariants);
  } catch (const std::invalid_argument& e) {
    r.witness_note = e.what();
  }
  r.timings_ms.emplace_back("witness", ms_since(t0));
  return r;
}

ordered_json to_json(const ReportRecord& r, bool include_timings) {
  ordered_json j;
  ordered_json tuple = ordered_json::array();
  for (const Int& a : r.tuple) tuple.push_back(int_json(a));
  j["tuple"] = std::move(tuple);
  j["fiber_order"] = int_json(r.fiber_order);
  j["e"] = int_json(r.invariants.e);
  j["invariants"] = to_json(r.invariants, +1);
  j["d"] = int_json(r.d);
  j["plumbing_rank"] = r.plumbing_rank;
  j["alexander"] = to_json(r.alexander);
  j["slice"] = to_json(r.slice);
  if (r.witness)
    j["witness"] = to_json(*r.witness);
  else
    j["witness"] = nullptr;
  if (!r.witness_note.empty()) j["witness_note"] = r.witness_note;
  if (include_timings) {
    ordered_json t;
    for (const auto& [name, ms] : r.timings_ms) t[name] = ms;
    j["timings_ms"] = std::move(t);
  }
  return j;
}

std::string to_markdown(const ReportRecord& r, bool include_timings) {
  std::ostringstream os;
  os << "# Sigma(";
  for (std::size_t i = 0; i < r.tuple.size(); ++i)
    os << (i ? "," : "") << r.tuple[i].get_str();
  os << ") — fiber of order " << r.fiber_order.get_str() << "\n\n";

  os << "| invariant | value |\n|---|---|\n";
  os << "| central invariant e | " << r.invariants.e.get_str() << " |\n";
  os << "| d-invariant | " << r.d.get_str() << " |\n";
  os << "| plumbing rank | " << r.plumbing_rank << " |\n";
  os << "| Alexander polynomial | " << r.alexander.str() << " |\n";
  os << "| Alexander degree | " << r.alexander.degree() << " |\n";
  os << "| slice obstruction | "
     << (r.slice.verdict == SliceVerdict::Obstructed ? "obstructed"
                                                     : "no obstruction")
     << " |\n";
  if (r.witness) {
    os << "| infinite-order witness | 1/" << r.witness->m
       << " surgery, central invariant " << r.witness->central.get_str()
       << " |\n";
  } else {
    os << "| infinite-order witness | none |\n";
  }
  os << "\n" << r.slice.reason << "\n";
  if (r.witness)
    os << "\n" << r.witness->justification << "\n";
  else if (!r.witness_note.empty())
    os << "\n" << r.witness_note << "\n";
  if (include_timings) {
    os << "\n";
    for (const auto& [name, ms] : r.timings_ms)
      os << "- " << name << ": " << ms << " ms\n";
  }
  return os.str();
}

}  // namespace seifert
