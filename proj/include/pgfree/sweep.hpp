// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Sweeps: apply a set of checks to every subset of PG(r-1,2)
// (exhaustive, r <= 4) or to seeded random subsets, and aggregate the
// results deterministically.
//
// Sets that fail a check's hypotheses are counted as skipped, never as
// passed. The iteration space is cut into fixed chunks of kChunkSize sets;
// each chunk accumulates its own statistics and chunks are merged in index
// order, so the outcome does not depend on the number of workers. Random
// sample i is drawn from a generator keyed by (seed, i) alone.

#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "pgfree/analysis.hpp"
#include "pgfree/error.hpp"
#include "pgfree/io.hpp"
#include "pgfree/matroid.hpp"
#include "pgfree/point_set.hpp"
#include "pgfree/rational.hpp"
#include "pgfree/spectral.hpp"
#include "pgfree/structure.hpp"
#include "pgfree/version.hpp"

namespace pgfree {

enum class SweepMode { exhaustive, random };

enum class CheckKind {
  bose_burton,
  goevaerts_storme,
  hyperplane_bounds,
  cone,
  counting_bound,
  fano_free_hyperplane,
  triangle_free_flat,
  critical_dichotomy,
  reconcile,
};

// Command-line tokens, in canonical order.
inline constexpr std::array<std::pair<CheckKind, std::string_view>, 9> kCheckTokens{{
    {CheckKind::bose_burton, "bose-burton"},
    {CheckKind::goevaerts_storme, "gs"},
    {CheckKind::hyperplane_bounds, "lemma-2.4"},
    {CheckKind::cone, "lemma-2.5"},
    {CheckKind::counting_bound, "thm-3.1"},
    {CheckKind::fano_free_hyperplane, "thm-4.1"},
    {CheckKind::triangle_free_flat, "thm-1.1"},
    {CheckKind::critical_dichotomy, "cor-1.3"},
    {CheckKind::reconcile, "reconcile"},
}};

inline std::string_view check_token(CheckKind k) {
  for (const auto& [kind, token] : kCheckTokens) {
    if (kind == k) return token;
  }
  return "?";
}

/// Comma-separated tokens, or "all".
inline std::vector<CheckKind> parse_checks(std::string_view text) {
  std::vector<CheckKind> out;
  if (text == "all") {
    for (const auto& entry : kCheckTokens) out.push_back(entry.first);
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view token = text.substr(start, comma - start);
    const auto it = std::find_if(kCheckTokens.begin(), kCheckTokens.end(),
                                 [&](const auto& entry) { return entry.second == token; });
    if (it == kCheckTokens.end()) throw InvalidArgument("unknown check '" + std::string(token) + "'");
    if (std::find(out.begin(), out.end(), it->first) == out.end()) out.push_back(it->first);
    start = comma + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct SweepConfig {
  int rank = 4;
  int level = 3;
  SweepMode mode = SweepMode::exhaustive;
  std::uint64_t sample_count = 0;
  std::uint64_t rng_seed = 0;
  /// Random mode keeps only samples with |E| > density_filter * 2^r.
  std::optional<Rational> density_filter;
  std::vector<CheckKind> checks;
  /// Parallelism only; never part of the outcome.
  int workers = 1;
  /// Critical-number work budget per set; 0 = unlimited. Running out raises
  /// ResourceCapError.
  std::uint64_t chi_work_budget = 0;

  void validate() const {
    if (rank < 1 || rank > kMaxRank) throw InvalidArgument("rank outside [1, 24]");
    if (level < 2 || level > rank) throw InvalidArgument("level must satisfy 2 <= n <= r");
    if (mode == SweepMode::exhaustive && rank > 4) throw InvalidArgument("exhaustive mode needs r <= 4");
    if (mode == SweepMode::random && sample_count < 1) throw InvalidArgument("random mode needs samples >= 1");
    if (checks.empty()) throw InvalidArgument("no checks selected");
    if (workers < 1) throw InvalidArgument("workers must be >= 1");
  }
};

struct Extremum {
  Rational value;
  std::uint64_t index = 0;
  PointSet set{1};
};

struct Violation {
  std::uint64_t index = 0;
  PointSet set{1};
  std::string message;
};

struct CheckStats {
  std::uint64_t checked = 0;    // sets meeting the hypotheses
  std::uint64_t skipped = 0;    // sets failing a hypothesis
  std::uint64_t failed = 0;     // checked sets with at least one violation
  std::uint64_t instances = 0;  // (set, hyperplane) / (set, point) pairs examined
  std::uint64_t violations = 0;
  std::optional<Violation> first_violation;
  std::map<std::string, Extremum> maxima;
  std::map<std::string, Extremum> minima;
  std::map<std::string, std::map<std::int64_t, std::uint64_t>> histograms;
  std::map<std::string, std::uint64_t> tallies;

  std::uint64_t passed() const { return checked - failed; }

  void record_max(const std::string& name, const Rational& v, std::uint64_t index, const PointSet& e) {
    auto it = maxima.find(name);
    if (it == maxima.end() || v > it->second.value || (v == it->second.value && index < it->second.index)) {
      maxima.insert_or_assign(name, Extremum{v, index, e});
    }
  }
  void record_min(const std::string& name, const Rational& v, std::uint64_t index, const PointSet& e) {
    auto it = minima.find(name);
    if (it == minima.end() || v < it->second.value || (v == it->second.value && index < it->second.index)) {
      minima.insert_or_assign(name, Extremum{v, index, e});
    }
  }

  void merge(const CheckStats& o) {
    checked += o.checked;
    skipped += o.skipped;
    failed += o.failed;
    instances += o.instances;
    violations += o.violations;
    if (o.first_violation && (!first_violation || o.first_violation->index < first_violation->index)) {
      first_violation = o.first_violation;
    }
    for (const auto& [k, v] : o.maxima) record_max(k, v.value, v.index, v.set);
    for (const auto& [k, v] : o.minima) record_min(k, v.value, v.index, v.set);
    for (const auto& [k, h] : o.histograms) {
      for (const auto& [bucket, count] : h) histograms[k][bucket] += count;
    }
    for (const auto& [k, v] : o.tallies) tallies[k] += v;
  }
};

struct SweepStats {
  std::uint64_t visited = 0;
  std::uint64_t rejected = 0;
  std::map<CheckKind, CheckStats> checks;

  void merge(const SweepStats& o) {
    visited += o.visited;
    rejected += o.rejected;
    for (const auto& [k, v] : o.checks) checks[k].merge(v);
  }
};

struct ExtremalRecord {
  std::string check;
  std::string label;
  std::uint64_t index = 0;
  PointSet set{1};
  int matroid_rank = 0;
  CriticalNumber chi;
  std::uint64_t triangle_count = 0;
  Rational epsilon_min;
  bool flat_found = false;
  std::size_t flat_size = 0;
};

struct SweepOutcome {
  SweepConfig config;
  SweepStats stats;
  std::vector<ExtremalRecord> records;

  std::uint64_t total_violations() const {
    std::uint64_t n = 0;
    for (const auto& [k, v] : stats.checks) n += v.violations;
    return n;
  }
};

/// Lazily computed facts about one set, shared by all checks.
class SetFacts {
 public:
  SetFacts(const PointSet& e, std::uint64_t chi_budget) : e_(e), chi_budget_(chi_budget) {}

  const PointSet& set() const { return e_; }

  bool pg_free(int n) {
    auto it = free_.find(n);
    if (it == free_.end()) it = free_.emplace(n, is_pg_free(e_, n)).first;
    return it->second;
  }
  int chi() {
    if (!chi_) {
      const CriticalNumber c = critical_number_bounded(e_, chi_budget_);
      if (!c.exact()) throw ResourceCapError("critical number search exceeded its budget");
      chi_ = c.lower;
    }
    return *chi_;
  }
  const Spectrum& spectrum() {
    if (!spectrum_) spectrum_ = walsh_hadamard(e_);
    return *spectrum_;
  }
  std::uint64_t triangles() {
    if (!triangles_) triangles_ = triangle_count_spectral(spectrum());
    return *triangles_;
  }

 private:
  PointSet e_;
  std::uint64_t chi_budget_;
  std::map<int, bool> free_;
  std::optional<int> chi_;
  std::optional<Spectrum> spectrum_;
  std::optional<std::uint64_t> triangles_;
};

namespace detail {

// Per-set bookkeeping for one check.
class Evaluation {
 public:
  Evaluation(CheckStats& stats, std::uint64_t index, const PointSet& e) : s_(stats), index_(index), e_(e) {}
  ~Evaluation() {
    if (counted_ && failed_) ++s_.failed;
  }
  void skip() { ++s_.skipped; }
  void check() {
    ++s_.checked;
    counted_ = true;
  }
  void instance() { ++s_.instances; }
  void fail(const std::string& message) {
    ++s_.violations;
    failed_ = true;
    if (!s_.first_violation || index_ < s_.first_violation->index) {
      s_.first_violation = Violation{index_, e_, message};
    }
  }
  CheckStats& stats() { return s_; }
  std::uint64_t index() const { return index_; }

 private:
  CheckStats& s_;
  std::uint64_t index_;
  const PointSet& e_;
  bool counted_ = false;
  bool failed_ = false;
};

inline Rational size_q(std::size_t n) { return Rational(static_cast<Int128>(n)); }

inline void check_bose_burton(Evaluation& ev, SetFacts& facts, int n) {
  const PointSet& e = facts.set();
  const int r = e.rank();
  if (n > r || !facts.pg_free(n)) return ev.skip();
  ev.check();
  ev.instance();
  const std::size_t bound = (std::size_t{1} << r) - (std::size_t{1} << (r - n + 1));
  ev.stats().record_max("free_size", size_q(e.size()), ev.index(), e);
  if (e.size() > bound) return ev.fail("PG-free set larger than (1 - 2/2^n) 2^r");
  if (e.size() == bound) {
    ++ev.stats().tallies["extremal_sets"];
    const int chi = facts.chi();
    ++ev.stats().histograms["extremal_chi"][chi];
    if (chi > n - 1) ev.fail("extremal set meets every corank-(n-1) flat");
  }
}

inline void check_goevaerts_storme(Evaluation& ev, SetFacts& facts, int n) {
  const PointSet& e = facts.set();
  const int r = e.rank();
  if (r < n + 2) return ev.skip();
  // (1 - 2/2^n - 3/2^{n+2}) 2^r
  const Rational threshold = density_threshold(r, 2, n) - Rational(3 * pow2(r), pow2(n + 2));
  if (!(size_q(e.size()) > threshold) || !facts.pg_free(n)) return ev.skip();
  ev.check();
  ev.instance();
  const int chi = facts.chi();
  ++ev.stats().histograms["chi"][chi];
  ev.stats().record_min("size", size_q(e.size()), ev.index(), e);
  if (chi > n) ev.fail("no corank-n flat disjoint from E");
}

inline void check_hyperplane_bounds_all(Evaluation& ev, SetFacts& facts, int n) {
  const PointSet& e = facts.set();
  const int r = e.rank();
  if (n < 3 || n > r || !facts.pg_free(n)) return ev.skip();
  ev.check();
  for (Word gamma = 1; gamma <= AmbientGeometry(r).point_count(); ++gamma) {
    const Flat h = hyperplane_of(r, gamma);
    if (is_pg_free(e.intersect(flat_points(h)), n - 1)) continue;
    ev.instance();
    try {
      const HyperplaneBoundsReport rep = check_hyperplane_bounds(e, h, n);
      ev.stats().record_min("outside_slack", rep.outside_slack, ev.index(), e);
      if (rep.inside_slack) ev.stats().record_min("inside_slack", *rep.inside_slack, ev.index(), e);
    } catch (const InternalInconsistency& err) {
      ev.fail(std::string(err.what()) + " (gamma=" + std::to_string(gamma) + ")");
    }
  }
}

inline void check_cone_all(Evaluation& ev, SetFacts& facts, int n) {
  const PointSet& e = facts.set();
  const int r = e.rank();
  ev.check();
  const bool free = n >= 3 && n <= r && facts.pg_free(n);
  if (free) ++ev.stats().tallies["pg_free_sets"];
  const Int128 bound = 2 * static_cast<Int128>(e.size()) - pow2(r);
  std::uint64_t sum = 0;
  e.for_each([&](Word p) {
    ev.instance();
    const PointSet ep = cone(e, p);
    sum += ep.size();
    const Int128 slack = static_cast<Int128>(ep.size()) - bound;
    ev.stats().record_min("size_slack", Rational(slack), ev.index(), e);
    if (slack < 0) ev.fail("cone at " + std::to_string(p) + " smaller than 2|E| - 2^r");
    if (free && !is_pg_free(ep, n - 1)) ev.fail("cone at " + std::to_string(p) + " contains PG(n-2,2)");
  });
  if (sum != facts.triangles()) ev.fail("sum of cone sizes differs from T_E");
}

inline void check_counting_bound(Evaluation& ev, SetFacts& facts) {
  const PointSet& e = facts.set();
  ev.check();
  ev.instance();
  const Spectrum& s = facts.spectrum();
  const CountingBound b = counting_bound_check(s, uniformity(s).epsilon_min);
  const Rational slack = b.rhs - b.lhs;
  ev.stats().record_min("slack", slack, ev.index(), e);
  if (slack == Rational(0)) ++ev.stats().tallies["tight"];
}

inline void check_fano_free_hyperplane(Evaluation& ev, SetFacts& facts) {
  const PointSet& e = facts.set();
  const int r = e.rank();
  if (r < 3 || !(8 * static_cast<Int128>(e.size()) > 5 * pow2(r)) || !facts.pg_free(3)) return ev.skip();
  ev.check();
  ev.instance();
  const auto hit = find_pg_free_hyperplane(e, 3);
  if (!hit) return ev.fail("no hyperplane with triangle-free intersection");
  const std::size_t inside = hit->restriction.set.size();
  ev.stats().record_min("intersection_size", size_q(inside), ev.index(), e);
  if (!(4 * static_cast<Int128>(inside) > pow2(r - 1))) ev.fail("triangle-free hyperplane too sparse");
}

inline void check_triangle_free_flat(Evaluation& ev, SetFacts& facts, int n) {
  const PointSet& e = facts.set();
  const int r = e.rank();
  if (n > r || !above_structure_threshold(e, n) || !facts.pg_free(n)) return ev.skip();
  ev.check();
  ev.instance();
  const FlatSearch descent = find_triangle_free_flat(e, n, FlatStrategy::descent);
  if (descent.trace && descent.trace->fallback_level) ++ev.stats().tallies["descent_fallbacks"];
  const StructureResult& res = descent.result;
  if (!res.found) return ev.fail("descent found no triangle-free corank-(n-2) flat");
  if (res.flat->corank() != n - 2) ev.fail("flat has the wrong corank");
  const std::size_t inside = e.count_in(*res.flat);
  if (inside != res.intersection_size) ev.fail("reported intersection size is wrong");
  if (res.flat->rank() >= 1 && triangle_count_naive(restrict_to_flat(e, *res.flat).set) != 0) {
    ev.fail("descent flat meets E in a triangle");
  }
  if (!res.density_claim_holds) ev.fail("|E & K| <= 2^{r(K)} / 4");
  ev.stats().record_min("intersection_size", size_q(res.intersection_size), ev.index(), e);
  if (!find_triangle_free_flat(e, n, FlatStrategy::exhaustive).result.found) {
    ev.fail("exhaustive scan disagrees with descent");
  }
}

inline void check_critical_dichotomy(Evaluation& ev, SetFacts& facts, int n) {
  const PointSet& e = facts.set();
  const int r = e.rank();
  if (n > r || !above_structure_threshold(e, n) || !facts.pg_free(n)) return ev.skip();
  ev.check();
  ev.instance();
  const int chi = facts.chi();
  ++ev.stats().histograms["chi"][chi];
  if (chi != n - 1 && chi != n) ev.fail("critical number " + std::to_string(chi) + " outside {n-1, n}");
}

inline void check_reconcile(Evaluation& ev, SetFacts& facts, int n) {
  const PointSet& e = facts.set();
  const int r = e.rank();
  const bool dense = 4 * static_cast<Int128>(e.size()) >= 3 * pow2(r);
  const bool free = n >= 3 && n <= r && above_structure_threshold(e, n) && facts.pg_free(n);
  if (!dense && !free) return ev.skip();
  ev.check();
  if (dense) ++ev.stats().tallies["dense_condition_sets"];
  if (free) ++ev.stats().tallies["free_condition_sets"];
  for (Word gamma = 1; gamma <= AmbientGeometry(r).point_count(); ++gamma) {
    ev.instance();
    const ReconcileReport rep = reconcile_hyperplane(e, hyperplane_of(r, gamma), n);
    if (!rep.holds) ev.fail("E & H is not a hyperplane of M (gamma=" + std::to_string(gamma) + ")");
  }
}

inline void evaluate(const SweepConfig& cfg, const PointSet& e, std::uint64_t index, SweepStats& stats) {
  ++stats.visited;
  SetFacts facts(e, cfg.chi_work_budget);
  for (CheckKind kind : cfg.checks) {
    Evaluation ev(stats.checks[kind], index, e);
    try {
      switch (kind) {
        case CheckKind::bose_burton: check_bose_burton(ev, facts, cfg.level); break;
        case CheckKind::goevaerts_storme: check_goevaerts_storme(ev, facts, cfg.level); break;
        case CheckKind::hyperplane_bounds: check_hyperplane_bounds_all(ev, facts, cfg.level); break;
        case CheckKind::cone: check_cone_all(ev, facts, cfg.level); break;
        case CheckKind::counting_bound: check_counting_bound(ev, facts); break;
        case CheckKind::fano_free_hyperplane: check_fano_free_hyperplane(ev, facts); break;
        case CheckKind::triangle_free_flat: check_triangle_free_flat(ev, facts, cfg.level); break;
        case CheckKind::critical_dichotomy: check_critical_dichotomy(ev, facts, cfg.level); break;
        case CheckKind::reconcile: check_reconcile(ev, facts, cfg.level); break;
      }
    } catch (const InternalInconsistency& err) {
      ev.fail(err.what());
    } catch (const HypothesisError& err) {
      // Gating passed a set the check itself rejects.
      ev.fail(std::string("hypothesis gating mismatch: ") + err.what());
    } catch (const NotUniformError& err) {
      ev.fail(err.what());
    }
  }
}

}  // namespace detail

/// Random sample `index`: every point kept with probability 1/2, redrawn
/// until it clears the density filter.
inline PointSet sample_point_set(int r, std::uint64_t seed, std::uint64_t index,
                                 const std::optional<Rational>& density_filter, std::uint64_t* rejected = nullptr) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  const Rational cutoff = density_filter ? *density_filter * Rational(pow2(r)) : Rational(-1);
  for (int attempt = 0; attempt < 1'000'000; ++attempt) {
    PointSet e(r);
    for (Word p = 1; p < e.vector_count(); ++p) {
      if (rng() >> 63) e.insert(p);
    }
    if (Rational(static_cast<Int128>(e.size())) > cutoff) return e;
    if (rejected) ++*rejected;
  }
  throw ResourceCapError("density filter rejected 10^6 consecutive samples");
}

inline constexpr std::uint64_t kChunkSize = 64;

inline ExtremalRecord describe(const std::string& check, const std::string& label, const Extremum& x,
                               const SweepConfig& cfg) {
  ExtremalRecord rec;
  rec.check = check;
  rec.label = label;
  rec.index = x.index;
  rec.set = x.set;
  rec.matroid_rank = matroid_rank(x.set);
  rec.chi = critical_number_bounded(x.set, cfg.chi_work_budget);
  rec.triangle_count = triangle_count_spectral(x.set);
  rec.epsilon_min = uniformity(x.set).epsilon_min;
  if (cfg.level <= x.set.rank()) {
    const StructureResult res = find_triangle_free_flat(x.set, cfg.level, FlatStrategy::descent).result;
    rec.flat_found = res.found;
    rec.flat_size = res.intersection_size;
  }
  return rec;
}

inline SweepOutcome run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const std::uint64_t total = cfg.mode == SweepMode::exhaustive
                                  ? (std::uint64_t{1} << AmbientGeometry(cfg.rank).point_count())
                                  : cfg.sample_count;
  const std::uint64_t chunks = (total + kChunkSize - 1) / kChunkSize;
  std::vector<SweepStats> partial(chunks);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    while (true) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        const std::uint64_t end = std::min(total, (c + 1) * kChunkSize);
        for (std::uint64_t i = c * kChunkSize; i < end; ++i) {
          const PointSet e = cfg.mode == SweepMode::exhaustive
                                 ? PointSet::from_mask(cfg.rank, i)
                                 : sample_point_set(cfg.rank, cfg.rng_seed, i, cfg.density_filter,
                                                    &partial[c].rejected);
          detail::evaluate(cfg, e, i, partial[c]);
        }
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(chunks);
        return;
      }
    }
  };
  const int workers = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(cfg.workers), chunks));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  SweepOutcome out;
  out.config = cfg;
  for (const auto& s : partial) out.stats.merge(s);
  for (CheckKind kind : cfg.checks) out.stats.checks[kind];  // present even if empty
  for (const auto& [kind, stats] : out.stats.checks) {
    const std::string token(check_token(kind));
    for (const auto& [label, x] : stats.maxima) out.records.push_back(describe(token, "max " + label, x, cfg));
    for (const auto& [label, x] : stats.minima) out.records.push_back(describe(token, "min " + label, x, cfg));
  }
  return out;
}

// ------------------------------------------------------------ serialization

inline Json to_json(const SweepConfig& cfg) {
  Json checks = Json::array();
  for (CheckKind k : cfg.checks) checks.push_back(std::string(check_token(k)));
  Json j{{"rank", cfg.rank},
         {"level", cfg.level},
         {"mode", cfg.mode == SweepMode::exhaustive ? "exhaustive" : "random"},
         {"sample_count", cfg.sample_count},
         {"seed", cfg.rng_seed}};
  j["density_filter"] = cfg.density_filter ? to_json(*cfg.density_filter) : Json(nullptr);
  j["checks"] = checks;
  j["chi_work_budget"] = cfg.chi_work_budget;
  return j;
}

inline Json to_json(const CheckStats& s) {
  Json j{{"checked", s.checked},   {"skipped", s.skipped},   {"passed", s.passed()},
         {"failed", s.failed},     {"instances", s.instances}, {"violations", s.violations}};
  if (s.first_violation) {
    j["first_violation"] = Json{{"index", s.first_violation->index},
                                {"set", to_compact(s.first_violation->set)},
                                {"message", s.first_violation->message}};
  } else {
    j["first_violation"] = nullptr;
  }
  auto extrema = [](const std::map<std::string, Extremum>& m) {
    Json out = Json::object();
    for (const auto& [k, x] : m) out[k] = Json{{"value", to_json(x.value)}, {"index", x.index}, {"set", to_compact(x.set)}};
    return out;
  };
  j["maxima"] = extrema(s.maxima);
  j["minima"] = extrema(s.minima);
  Json hist = Json::object();
  for (const auto& [k, h] : s.histograms) {
    Json buckets = Json::object();
    for (const auto& [bucket, count] : h) buckets[std::to_string(bucket)] = count;
    hist[k] = buckets;
  }
  j["histograms"] = hist;
  Json tallies = Json::object();
  for (const auto& [k, v] : s.tallies) tallies[k] = v;
  j["tallies"] = tallies;
  return j;
}

inline std::string chi_text(const CriticalNumber& c) {
  return c.exact() ? std::to_string(c.lower) : std::to_string(c.lower) + ".." + std::to_string(c.upper);
}

inline Json to_json(const ExtremalRecord& r) {
  return Json{{"check", r.check},
              {"label", r.label},
              {"index", r.index},
              {"set", to_compact(r.set)},
              {"size", r.set.size()},
              {"rank", r.matroid_rank},
              {"chi", chi_text(r.chi)},
              {"T_E", r.triangle_count},
              {"epsilon_min", to_json(r.epsilon_min)},
              {"flat_found", r.flat_found},
              {"flat_size", r.flat_size}};
}

inline Json to_json(const SweepOutcome& o) {
  Json checks = Json::object();
  for (const auto& [kind, stats] : o.stats.checks) checks[std::string(check_token(kind))] = to_json(stats);
  Json records = Json::array();
  for (const auto& r : o.records) records.push_back(to_json(r));
  return Json{{"format_version", kFormatVersion},
              {"library_version", kLibraryVersion},
              {"config", to_json(o.config)},
              {"population", Json{{"visited", o.stats.visited}, {"rejected_by_filter", o.stats.rejected}}},
              {"checks", checks},
              {"total_violations", o.total_violations()},
              {"extremal_records", records}};
}

/// Extremal records as CSV: size,rank,chi,T_E,epsilon_min,flat_found,flat_size
inline std::string extremal_csv(const SweepOutcome& o) {
  std::ostringstream os;
  os << "size,rank,chi,T_E,epsilon_min,flat_found,flat_size\n";
  for (const auto& r : o.records) {
    os << r.set.size() << ',' << r.matroid_rank << ',' << chi_text(r.chi) << ',' << r.triangle_count << ','
       << r.epsilon_min.str() << ',' << (r.flat_found ? "true" : "false") << ',' << r.flat_size << '\n';
  }
  return os.str();
}

}  // namespace pgfree
