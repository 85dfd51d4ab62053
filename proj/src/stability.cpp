#include "plactic/stability.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <set>
#include <stdexcept>
#include <string>

#include <unistd.h>

#include <json.hpp>

#include "plactic/errors.hpp"
#include "plactic/knuth.hpp"
#include "plactic/tableau.hpp"
#include "hashing.hpp"
#include "parallel.hpp"

namespace plactic {

namespace {

struct EngineOut {
  std::uint64_t fp = 0;
  BigInt words = 0;
  std::uint64_t classes = 0;
};

// Class engine: one membership test per plactic class (SSYT over [M] with at
// most L cells), weighting each member class by its standard-tableau count.
EngineOut class_engine(const Word& u, std::size_t max_len, Letter max_letter,
                       const Exec& exec) {
  BigInt budget = 0;
  for (std::size_t n = 0; n <= max_len; ++n) budget += ssyt_count(n, max_letter);
  if (budget > exec.guard)
    throw resource_limit_error("truncated centralizer needs " + budget.str() +
                               " tableau classes, over the guard of " +
                               std::to_string(exec.guard) +
                               " objects; raise --guard to proceed");

  std::vector<Partition> shapes;
  for (std::size_t n = 0; n <= max_len; ++n)
    for (auto& shape : partitions_of(n)) shapes.push_back(std::move(shape));

  detail::GuardCounter guard(exec.guard);
  std::vector<EngineOut> slot(shapes.size());
  detail::run_tasks(exec, shapes.size(), [&](std::size_t si) {
    const Partition& shape = shapes[si];
    if (shape.rows() > max_letter && !shape.empty()) return;
    EngineOut& out = slot[si];
    BigInt weight = hook_count(shape);
    std::uint64_t weight_fp =
        static_cast<std::uint64_t>(weight % detail::kFpPrime);
    std::vector<Letter> rw;
    rw.reserve(shape.cells());
    for_each_ssyt_of_shape(
        shape, 1, max_letter,
        [&](const std::vector<std::vector<Letter>>& rows) {
          guard.bump();
          rw.clear();
          for (auto it = rows.rbegin(); it != rows.rend(); ++it)
            rw.insert(rw.end(), it->begin(), it->end());
          if (!in_centralizer(u, Word{rw})) return;
          out.classes += 1;
          out.words += weight;
          out.fp = detail::add_mod_p(
              out.fp, detail::mul_mod_p(weight_fp, detail::tableau_fp(rows)));
        });
  });

  EngineOut total;
  for (const auto& part : slot) {
    total.fp = detail::add_mod_p(total.fp, part.fp);
    total.words += part.words;
    total.classes += part.classes;
  }
  return total;
}

// Word engine: one membership test per word of [M]^{<=L}.  Exponentially more
// work than the class engine, but it can list the members, and landing on the
// same fingerprint triple is itself a strong cross-check.
EngineOut word_engine(const Word& u, std::size_t max_len, Letter max_letter,
                      const Exec& exec, std::vector<Word>& members) {
  BigInt budget = 1, layer = 1;
  for (std::size_t n = 1; n <= max_len; ++n) {
    layer *= max_letter;
    budget += layer;
  }
  if (budget > exec.guard)
    throw resource_limit_error("truncated centralizer needs " + budget.str() +
                               " member tests, over the guard of " +
                               std::to_string(exec.guard) +
                               " objects; raise --guard to proceed");

  detail::GuardCounter guard(exec.guard);

  EngineOut total;
  guard.bump();  // the empty word, a member of every centralizer
  total.words = 1;
  total.classes = 1;
  total.fp = detail::tableau_fp({});
  members.push_back(Word{});

  if (max_letter == 0) return total;

  struct Task {
    std::size_t len;
    Letter first;
  };
  std::vector<Task> tasks;
  for (std::size_t n = 1; n <= max_len; ++n)
    for (Letter a = 1; a <= max_letter; ++a) tasks.push_back({n, a});

  std::vector<EngineOut> slot(tasks.size());
  std::vector<std::vector<Word>> found(tasks.size());
  detail::run_tasks(exec, tasks.size(), [&](std::size_t ti) {
    auto [n, first] = tasks[ti];
    EngineOut& out = slot[ti];
    std::vector<Letter> w(n, 1);
    w[0] = first;
    while (true) {
      guard.bump();
      Word word{w};
      if (in_centralizer(u, word)) {
        Tableau p = p_tableau(word);
        out.words += 1;
        out.fp = detail::add_mod_p(out.fp, detail::tableau_fp(p.rows()));
        if (p.reading_word() == word) out.classes += 1;
        found[ti].push_back(std::move(word));
      }
      std::size_t pos = n;
      while (pos > 1 && w[pos - 1] == max_letter) w[--pos] = 1;
      if (pos == 1) break;  // the first letter is pinned to this task
      ++w[pos - 1];
    }
  });

  for (std::size_t ti = 0; ti < tasks.size(); ++ti) {
    total.fp = detail::add_mod_p(total.fp, slot[ti].fp);
    total.words += slot[ti].words;
    total.classes += slot[ti].classes;
    for (auto& w : found[ti]) members.push_back(std::move(w));
  }
  return total;
}

// --- cache -----------------------------------------------------------------

std::optional<std::filesystem::path> resolve_cache_dir(
    const StabilityOptions& opts) {
  if (opts.cache_dir) return opts.cache_dir;
  if (const char* env = std::getenv("PLACTIC_CACHE_DIR"); env && *env)
    return std::filesystem::path(env);
  return std::nullopt;
}

std::string cache_key(const Word& u, std::size_t max_len, Letter max_letter) {
  return "v1|" + u.str() + "|" + std::to_string(max_len) + "|" +
         std::to_string(max_letter);
}

std::filesystem::path cache_path(const std::filesystem::path& dir,
                                 const std::string& key) {
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx",
                static_cast<unsigned long long>(detail::string_hash64(key)));
  return dir / ("tc-" + std::string(hex) + ".json");
}

std::optional<EngineOut> cache_load(const std::filesystem::path& dir,
                                    const std::string& key) {
  std::ifstream in(cache_path(dir, key));
  if (!in) return std::nullopt;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("schema") != "v1" || j.at("key") != key) return std::nullopt;
    EngineOut out;
    out.fp = std::stoull(j.at("fingerprint").get<std::string>());
    out.words = BigInt(j.at("word_count").get<std::string>());
    out.classes = j.at("class_count").get<std::uint64_t>();
    return out;
  } catch (...) {
    return std::nullopt;  // stale or foreign file; recompute
  }
}

void cache_store(const std::filesystem::path& dir, const std::string& key,
                 const EngineOut& out) {
  try {
    std::filesystem::create_directories(dir);
    nlohmann::json j{{"schema", "v1"},
                     {"key", key},
                     {"fingerprint", std::to_string(out.fp)},
                     {"word_count", out.words.str()},
                     {"class_count", out.classes}};
    auto final_path = cache_path(dir, key);
    auto tmp_path = final_path;
    tmp_path += ".tmp." + std::to_string(::getpid());
    {
      std::ofstream os(tmp_path, std::ios::trunc);
      os << j.dump() << '\n';
      if (!os) return;
    }
    std::filesystem::rename(tmp_path, final_path);  // atomic publish
  } catch (...) {
    // a cache that cannot be written is just a cache miss next time
  }
}

WitnessDiff diff_members(std::size_t k_from, std::size_t k_to,
                         const std::vector<Word>& from,
                         const std::vector<Word>& to) {
  WitnessDiff d;
  d.k_from = k_from;
  d.k_to = k_to;
  std::set_difference(to.begin(), to.end(), from.begin(), from.end(),
                      std::back_inserter(d.gained));
  std::set_difference(from.begin(), from.end(), to.begin(), to.end(),
                      std::back_inserter(d.lost));
  return d;
}

}  // namespace

bool TruncatedCentralizer::same_set(const TruncatedCentralizer& other) const {
  return fingerprint == other.fingerprint && word_count == other.word_count &&
         class_count == other.class_count;
}

TruncatedCentralizer truncated_centralizer(const Word& u, std::size_t max_len,
                                           Letter max_letter, const Exec& exec,
                                           const StabilityOptions& opts) {
  TruncatedCentralizer out;
  out.base = u;
  out.max_len = max_len;
  out.max_letter = max_letter;

  auto dir = resolve_cache_dir(opts);
  std::string key = cache_key(u, max_len, max_letter);
  if (!opts.with_members && dir) {
    if (auto hit = cache_load(*dir, key)) {
      out.fingerprint = hit->fp;
      out.word_count = hit->words;
      out.class_count = hit->classes;
      return out;
    }
  }

  EngineOut eng;
  if (opts.with_members) {
    std::vector<Word> members;
    eng = word_engine(u, max_len, max_letter, exec, members);
    std::sort(members.begin(), members.end());
    out.members = std::move(members);
  } else {
    eng = class_engine(u, max_len, max_letter, exec);
  }
  out.fingerprint = eng.fp;
  out.word_count = eng.words;
  out.class_count = eng.classes;
  if (dir) cache_store(*dir, key, eng);
  return out;
}

StabilityReport stability_probe(const Word& u, std::size_t max_power,
                                std::size_t max_len, Letter max_letter,
                                const Exec& exec,
                                const StabilityOptions& opts) {
  if (max_power == 0)
    throw std::invalid_argument("stability_probe: max_power must be >= 1");
  StabilityReport rep;
  rep.base = u;
  rep.max_power = max_power;
  rep.max_len = max_len;
  rep.max_letter = max_letter;

  std::vector<TruncatedCentralizer> sets;
  sets.reserve(max_power);
  for (std::size_t k = 1; k <= max_power; ++k) {
    sets.push_back(
        truncated_centralizer(power(u, k), max_len, max_letter, exec, opts));
    rep.powers.push_back({k, sets.back().fingerprint, sets.back().word_count,
                          sets.back().class_count});
  }

  std::size_t idx = max_power;
  for (std::size_t k = max_power - 1; k >= 1; --k) {
    if (!sets[k - 1].same_set(sets[k])) break;
    idx = k;
  }
  if (idx < max_power) rep.observed_stabilization_index = idx;

  if (opts.with_members)
    for (std::size_t k = 1; k < max_power; ++k) {
      if (!sets[k - 1].same_set(sets[k]))
        rep.witness_diffs.push_back(
            diff_members(k, k + 1, *sets[k - 1].members, *sets[k].members));
      sets[k - 1].members.reset();  // only adjacent pairs are ever diffed
    }
  return rep;
}

bool strong_stability_check_two_letter(const Word& u, std::size_t max_power,
                                       std::size_t max_len, Letter max_letter,
                                       const Exec& exec,
                                       const StabilityOptions& opts) {
  auto first = truncated_centralizer(u, max_len, max_letter, exec, opts);
  for (std::size_t k = 2; k <= max_power; ++k)
    if (!truncated_centralizer(power(u, k), max_len, max_letter, exec, opts)
             .same_set(first))
      return false;
  return true;
}

bool m_stability_check_permutation(const Word& u, std::size_t max_power,
                                   std::size_t max_len, Letter max_letter,
                                   const Exec& exec,
                                   const StabilityOptions& opts) {
  if (!is_permutation(u))
    throw std::invalid_argument(
        "m_stability_check_permutation: base word must be a permutation");
  std::size_t m = u.size();
  if (max_power <= m) return true;  // no pairs m <= k < K to compare
  auto prev = truncated_centralizer(power(u, m), max_len, max_letter, exec, opts);
  for (std::size_t k = m; k < max_power; ++k) {
    auto next =
        truncated_centralizer(power(u, k + 1), max_len, max_letter, exec, opts);
    if (!prev.same_set(next)) return false;
    prev = std::move(next);
  }
  return true;
}

PackedSweepReport packed_conjecture_sweep(Letter m, std::size_t max_len,
                                          std::size_t max_power,
                                          std::size_t trunc_len,
                                          const Exec& exec,
                                          const StabilityOptions& opts) {
  if (m == 0)
    throw std::invalid_argument("packed_conjecture_sweep: m must be >= 1");
  if (max_len < m)
    throw std::invalid_argument(
        "packed_conjecture_sweep: packed words need max_len >= m");
  PackedSweepReport rep;
  rep.m = m;
  rep.max_len = max_len;
  rep.max_power = max_power;
  rep.trunc_len = trunc_len;

  // One representative per plactic class: the first word of the class in
  // (length, lexicographic) scan order, deduplicated by P-tableau.
  std::set<Tableau> seen;
  std::vector<Word> reps;
  detail::GuardCounter guard(exec.guard);
  for (std::size_t n = m; n <= max_len; ++n) {
    std::vector<Letter> w(n, 1);
    while (true) {
      guard.bump();
      Word word{w};
      if (is_packed(word, m) && seen.insert(p_tableau(word)).second)
        reps.push_back(std::move(word));
      std::size_t pos = n;
      while (pos > 0 && w[pos - 1] == m) w[--pos] = 1;
      if (pos == 0) break;
      ++w[pos - 1];
    }
  }

  StabilityOptions inner = opts;
  inner.with_members = false;  // the sweep only compares summaries

  rep.all_pass = true;
  for (const auto& base : reps) {
    bool stable = true;
    if (max_power > m) {
      auto prev = truncated_centralizer(power(base, m), trunc_len, m, exec, inner);
      for (std::size_t k = m; k < max_power && stable; ++k) {
        auto next =
            truncated_centralizer(power(base, k + 1), trunc_len, m, exec, inner);
        stable = prev.same_set(next);
        prev = std::move(next);
      }
    }
    rep.entries.push_back({base, stable});
    if (!stable) {
      rep.candidates.push_back(base);
      rep.all_pass = false;
    }
  }
  return rep;
}

}  // namespace plactic
