#ifndef JACOBSTHAL_EGPA_HPP
#define JACOBSTHAL_EGPA_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "jacobsthal/covering.hpp"

namespace jac {

// Called periodically during a search with (nodes visited, current
// tentative length, current depth).
using ProgressFn = std::function<void(std::uint64_t, std::uint32_t, unsigned)>;

struct SearchConfig {
  unsigned k = 0;                         // number of primes incl. the omitted 2
  std::vector<std::uint32_t> prime_pool;  // odd primes, strictly increasing
  std::uint32_t start_length = 1;
  bool enumerate_all = false;
  unsigned thread_budget = 1;
  bool prune = true;  // the coverable-positions gate; off only for tests
  // Nonzero: probe only this length and stop at the first full cover,
  // recording it as a witness. Establishes Omega(k) >= fixed_length
  // without the exhaustive maximality pass.
  std::uint32_t fixed_length = 0;
  ProgressFn progress;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t prunes = 0;
  double wall_seconds = 0.0;
};

struct SearchOutcome {
  std::uint32_t omega = 0;
  std::vector<Covering> coverings;  // canonical order, balanced unless noted
  SearchStats stats;
};

// Frequency table of remainders: one row per still-available (prime,
// residue) class with its count of currently free positions.
struct FrequencyTable {
  struct Entry {
    std::uint32_t prime;
    std::uint32_t residue;
    std::uint32_t count;
  };
  std::vector<Entry> entries;
};

// Upper bound on how many free positions the remaining levels can still
// cover: sum of the levels_remaining largest counts, at most one
// residue per prime.
std::uint32_t count_max_possible(const FrequencyTable& ftab,
                                 unsigned levels_remaining);

// Greedy choice: maximal count, ties broken by smaller prime then
// smaller residue. Returns false when the table is empty.
bool select_candidate(const FrequencyTable& ftab, std::uint32_t& prime,
                      std::uint32_t& residue);

// Recursive greedy residue-class search: finds omega, the maximum
// window length coverable by k-1 distinct primes from the pool, and
// (with enumerate_all) every balanced covering of that length.
SearchOutcome egpa_search(const SearchConfig& cfg);

// Independent oracle: enumerate every (k-1)-subset of the pool and
// every non-zero residue assignment. Returns ALL maximal coverings,
// unbalanced ones included. Guarded to k <= 7; test use only.
SearchOutcome brute_force_omega(unsigned k,
                                const std::vector<std::uint32_t>& pool);

}  // namespace jac

#endif  // JACOBSTHAL_EGPA_HPP
