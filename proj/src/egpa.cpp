#include "jacobsthal/egpa.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "jacobsthal/primes.hpp"

namespace jac {

std::uint32_t count_max_possible(const FrequencyTable& ftab,
                                 unsigned levels_remaining) {
  std::vector<FrequencyTable::Entry> sorted = ftab.entries;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.count > b.count; });
  std::uint32_t total = 0;
  unsigned taken = 0;
  std::vector<std::uint32_t> primes_taken;
  for (const auto& e : sorted) {
    if (taken == levels_remaining) break;
    if (std::find(primes_taken.begin(), primes_taken.end(), e.prime) !=
        primes_taken.end())
      continue;
    primes_taken.push_back(e.prime);
    total += e.count;
    ++taken;
  }
  return total;
}

bool select_candidate(const FrequencyTable& ftab, std::uint32_t& prime,
                      std::uint32_t& residue) {
  const FrequencyTable::Entry* best = nullptr;
  for (const auto& e : ftab.entries) {
    if (!best || e.count > best->count ||
        (e.count == best->count &&
         (e.prime < best->prime ||
          (e.prime == best->prime && e.residue < best->residue))))
      best = &e;
  }
  if (!best) return false;
  prime = best->prime;
  residue = best->residue;
  return true;
}

namespace {

constexpr std::uint32_t kMaxLength = 384;
constexpr std::size_t kMaskWords = kMaxLength / 64;

struct Mask {
  std::uint64_t w[kMaskWords] = {};

  void set(std::uint32_t pos) { w[(pos - 1) >> 6] |= 1ULL << ((pos - 1) & 63); }
  std::uint32_t popcount() const {
    std::uint32_t n = 0;
    for (std::uint64_t word : w) n += std::popcount(word);
    return n;
  }
  std::uint32_t popcount_and(const Mask& other) const {
    std::uint32_t n = 0;
    for (std::size_t i = 0; i < kMaskWords; ++i)
      n += std::popcount(w[i] & other.w[i]);
    return n;
  }
  void clear_bits_of(const Mask& other) {
    for (std::size_t i = 0; i < kMaskWords; ++i) w[i] &= ~other.w[i];
  }
};

// One residue class of one pool prime, with its coverage mask at the
// current tentative length.
struct ClassInfo {
  std::uint32_t prime;
  std::uint32_t residue;
  std::uint16_t prime_index;
  Mask mask;
};

struct Candidate {
  std::uint32_t count;
  std::uint16_t cls;
};

enum class Mode { FindOne, EnumerateAll };

struct Engine {
  const SearchConfig& cfg;
  std::uint32_t ref_prime;  // p_k, for the balance check
  std::uint32_t m = 0;
  Mode mode = Mode::FindOne;

  std::vector<ClassInfo> classes;
  std::vector<std::vector<std::uint16_t>> classes_of_prime;

  std::atomic<bool> found{false};
  bool record_witness = false;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> prunes{0};
  std::mutex sink_mutex;
  std::vector<Covering> sink;

  explicit Engine(const SearchConfig& c, std::uint32_t reference)
      : cfg(c), ref_prime(reference) {}

  void build_classes(std::uint32_t length) {
    m = length;
    classes.clear();
    classes_of_prime.assign(cfg.prime_pool.size(), {});
    for (std::size_t pi = 0; pi < cfg.prime_pool.size(); ++pi) {
      const std::uint32_t p = cfg.prime_pool[pi];
      for (std::uint32_t r = 1; r < p; ++r) {
        ClassInfo info{p, r, static_cast<std::uint16_t>(pi), {}};
        for (std::uint32_t x = r; x <= m; x += p) info.mask.set(x);
        classes_of_prime[pi].push_back(static_cast<std::uint16_t>(classes.size()));
        classes.push_back(std::move(info));
      }
    }
  }
};

struct Worker {
  Engine& eng;
  std::vector<std::uint8_t> alive;
  std::vector<std::uint8_t> prime_used;
  std::vector<std::uint16_t> committed;
  std::uint64_t nodes = 0;
  std::uint64_t prunes = 0;
  std::uint64_t next_progress = 1 << 20;

  explicit Worker(Engine& e)
      : eng(e),
        alive(e.classes.size(), 1),
        prime_used(e.cfg.prime_pool.size(), 0) {}

  unsigned levels() const { return eng.cfg.k - 1; }

  void gather_candidates(const Mask& free, std::vector<Candidate>& out) const {
    out.clear();
    for (std::size_t c = 0; c < eng.classes.size(); ++c) {
      if (!alive[c] || prime_used[eng.classes[c].prime_index]) continue;
      const std::uint32_t count = eng.classes[c].mask.popcount_and(free);
      if (count > 0) out.push_back({count, static_cast<std::uint16_t>(c)});
    }
    // Greedy order: most covered positions first, then smaller prime,
    // then smaller residue (class indices follow that order already).
    std::stable_sort(out.begin(), out.end(), [](const Candidate& a,
                                                const Candidate& b) {
      return a.count > b.count;
    });
  }

  // Sum of the top counts over cands[from..], one per prime, up to the
  // remaining level budget; stops as soon as the target is reached.
  std::uint32_t bound_from(const std::vector<Candidate>& cands,
                           std::size_t from, unsigned budget,
                           std::uint32_t target) const {
    std::uint32_t total = 0;
    unsigned taken = 0;
    std::uint64_t seen_primes[2] = {0, 0};  // pool index bitset
    for (std::size_t j = from; j < cands.size(); ++j) {
      const std::uint16_t pi = eng.classes[cands[j].cls].prime_index;
      if (seen_primes[pi >> 6] & (1ULL << (pi & 63))) continue;
      seen_primes[pi >> 6] |= 1ULL << (pi & 63);
      total += cands[j].count;
      if (total >= target) return total;
      if (++taken == budget) break;
    }
    return total;
  }

  Covering committed_covering() const {
    Covering c;
    c.length = eng.m;
    for (std::uint16_t cls : committed)
      c.entries.push_back({eng.classes[cls].prime, eng.classes[cls].residue});
    std::sort(c.entries.begin(), c.entries.end());
    return c;
  }

  void record(const Mask& /*free*/) {
    Covering c = committed_covering();
    if (!is_balanced(c, eng.ref_prime)) return;
    std::lock_guard<std::mutex> lock(eng.sink_mutex);
    eng.sink.push_back(std::move(c));
  }

  void record_witness() {
    std::lock_guard<std::mutex> lock(eng.sink_mutex);
    if (eng.sink.empty()) eng.sink.push_back(committed_covering());
  }

  void tick_progress(unsigned depth) {
    if (eng.cfg.progress && nodes >= next_progress) {
      next_progress += 1 << 20;
      eng.cfg.progress(eng.nodes.load() + nodes, eng.m, depth);
    }
  }

  void search(Mask free) {
    ++nodes;
    tick_progress(static_cast<unsigned>(committed.size()));
    if (eng.mode == Mode::FindOne && eng.found.load(std::memory_order_relaxed))
      return;

    const std::uint32_t n_empty = free.popcount();
    if (n_empty == 0) {
      if (eng.mode == Mode::FindOne) {
        if (eng.record_witness) record_witness();
        eng.found.store(true, std::memory_order_relaxed);
      } else if (committed.size() == levels()) {
        record(free);
      }
      return;
    }
    if (committed.size() == levels()) return;

    std::vector<Candidate> cands;
    gather_candidates(free, cands);
    const unsigned budget = levels() - static_cast<unsigned>(committed.size());

    for (std::size_t j = 0; j < cands.size(); ++j) {
      if (eng.cfg.prune) {
        if (bound_from(cands, j, budget, n_empty) < n_empty) {
          ++prunes;
          break;
        }
      }
      const std::uint16_t cls = cands[j].cls;
      const std::uint16_t pi = eng.classes[cls].prime_index;

      Mask child = free;
      child.clear_bits_of(eng.classes[cls].mask);
      prime_used[pi] = 1;
      committed.push_back(cls);
      search(child);
      committed.pop_back();
      prime_used[pi] = 0;

      if (eng.mode == Mode::FindOne && eng.found.load(std::memory_order_relaxed))
        return;
      alive[cls] = 0;  // dropped for the rest of this level and below
    }
    // Deletions made at this level do not outlive the invocation.
    for (const Candidate& c : cands) alive[c.cls] = 1;
  }

  void flush_stats() {
    eng.nodes += nodes;
    eng.prunes += prunes;
    nodes = prunes = 0;
  }
};

// One full pass over the tree at the engine's current length.
void run_pass(Engine& eng) {
  Mask full;
  for (std::uint32_t x = 1; x <= eng.m; ++x) full.set(x);

  // Root-level fan-out: the candidate order at the root is fixed, and
  // subtree j commits candidate j with candidates 0..j-1 deleted.
  Worker probe(eng);
  std::vector<Candidate> roots;
  probe.gather_candidates(full, roots);
  probe.nodes = 1;  // the root node itself

  const unsigned budget = eng.cfg.k - 1;
  std::size_t cutoff = roots.size();
  if (eng.cfg.prune) {
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (probe.bound_from(roots, j, budget, eng.m) < eng.m) {
        cutoff = j;
        ++probe.prunes;
        break;
      }
    }
  }
  probe.flush_stats();

  const unsigned threads =
      std::max(1u, std::min<unsigned>(eng.cfg.thread_budget,
                                      static_cast<unsigned>(cutoff)));
  std::atomic<std::size_t> next{0};

  auto body = [&]() {
    Worker w(eng);
    while (true) {
      const std::size_t j = next.fetch_add(1);
      if (j >= cutoff) break;
      if (eng.mode == Mode::FindOne && eng.found.load()) break;

      for (std::size_t d = 0; d < j; ++d) w.alive[roots[d].cls] = 0;
      const std::uint16_t cls = roots[j].cls;
      Mask child = full;
      child.clear_bits_of(eng.classes[cls].mask);
      w.prime_used[eng.classes[cls].prime_index] = 1;
      w.committed.assign(1, cls);
      w.search(child);
      w.committed.clear();
      w.prime_used[eng.classes[cls].prime_index] = 0;
      for (std::size_t d = 0; d < j; ++d) w.alive[roots[d].cls] = 1;
    }
    w.flush_stats();
  };

  if (threads == 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(body);
    for (auto& t : pool) t.join();
  }
}

void validate_config(const SearchConfig& cfg) {
  if (cfg.k < 3) throw std::invalid_argument("egpa: k must be >= 3");
  if (cfg.prime_pool.size() < cfg.k - 1)
    throw std::invalid_argument("egpa: prime pool smaller than k-1");
  std::uint32_t prev = 2;
  for (std::uint32_t p : cfg.prime_pool) {
    if (p <= prev || p % 2 == 0 || !is_prime(p))
      throw std::invalid_argument("egpa: pool must be increasing odd primes");
    prev = p;
  }
  if (cfg.start_length < 1 || cfg.start_length > kMaxLength)
    throw std::length_error("egpa: start length out of range");
}

}  // namespace

SearchOutcome egpa_search(const SearchConfig& cfg) {
  validate_config(cfg);
  const auto t0 = std::chrono::steady_clock::now();
  Engine eng(cfg, static_cast<std::uint32_t>(nth_prime(cfg.k)));

  if (cfg.fixed_length > 0) {
    // Lower-bound probe: one pass at the given length, first cover wins.
    if (cfg.fixed_length > kMaxLength)
      throw std::length_error("egpa: length limit exceeded");
    eng.build_classes(cfg.fixed_length);
    eng.mode = Mode::FindOne;
    eng.record_witness = true;
    run_pass(eng);
    SearchOutcome out;
    out.omega = eng.found.load() ? cfg.fixed_length : 0;
    out.coverings = std::move(eng.sink);
    out.stats.nodes = eng.nodes.load();
    out.stats.prunes = eng.prunes.load();
    out.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return out;
  }

  // Escalate the tentative length until no full cover exists.
  std::uint32_t m = cfg.start_length;
  while (true) {
    if (m > kMaxLength) throw std::length_error("egpa: length limit exceeded");
    eng.build_classes(m);
    eng.mode = Mode::FindOne;
    eng.found = false;
    run_pass(eng);
    if (!eng.found.load()) break;
    ++m;
  }
  if (m == cfg.start_length)
    throw std::invalid_argument("egpa: no covering at the start length");

  SearchOutcome out;
  out.omega = m - 1;

  if (cfg.enumerate_all) {
    eng.build_classes(out.omega);
    eng.mode = Mode::EnumerateAll;
    run_pass(eng);
    std::sort(eng.sink.begin(), eng.sink.end(), canonical_less);
    eng.sink.erase(std::unique(eng.sink.begin(), eng.sink.end()),
                   eng.sink.end());
    out.coverings = std::move(eng.sink);
  }

  out.stats.nodes = eng.nodes.load();
  out.stats.prunes = eng.prunes.load();
  out.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return out;
}

SearchOutcome brute_force_omega(unsigned k,
                                const std::vector<std::uint32_t>& pool) {
  if (k < 2 || k > 7)
    throw std::length_error("brute_force_omega: k out of the enumerable range");
  if (pool.size() < k - 1)
    throw std::invalid_argument("brute_force_omega: pool smaller than k-1");

  const auto t0 = std::chrono::steady_clock::now();
  SearchOutcome out;
  std::uint64_t nodes = 0;

  // Enumerate (k-1)-subsets of the pool.
  auto for_subsets = [&](auto&& emit) {
    std::vector<std::size_t> idx(k - 1);
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    while (true) {
      emit(idx);
      std::size_t i = idx.size();
      while (i > 0 && idx[i - 1] == pool.size() - (idx.size() - (i - 1))) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
    }
  };

  for_subsets([&](const std::vector<std::size_t>& idx) {
    std::vector<std::uint32_t> primes;
    for (std::size_t i : idx) primes.push_back(pool[i]);
    std::vector<std::uint32_t> residue(primes.size(), 1);
    while (true) {
      ++nodes;
      Covering c;
      for (std::size_t i = 0; i < primes.size(); ++i)
        c.entries.push_back({primes[i], residue[i]});
      c.length = 1;
      const std::uint32_t len = covered_prefix(c);
      if (len > 0) {
        c.length = len;
        if (len > out.omega) {
          out.omega = len;
          out.coverings.clear();
        }
        if (len == out.omega) out.coverings.push_back(c);
      }
      // Mixed-radix increment over non-zero residues.
      std::size_t i = 0;
      while (i < residue.size()) {
        if (++residue[i] < primes[i]) break;
        residue[i] = 1;
        ++i;
      }
      if (i == residue.size()) break;
    }
  });

  std::sort(out.coverings.begin(), out.coverings.end(), canonical_less);
  out.stats.nodes = nodes;
  out.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return out;
}

}  // namespace jac
