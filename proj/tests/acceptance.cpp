// Acceptance suite: one pass/fail line per criterion.
//
// Criterion 7 is a stretch goal behind JACOBSTHAL_ACCEPT_STRETCH=1 (about
// half a minute of search) and never affects the exit status.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "jacobsthal/covering.hpp"
#include "jacobsthal/egpa.hpp"
#include "jacobsthal/files.hpp"
#include "jacobsthal/primes.hpp"
#include "jacobsthal/scheme.hpp"
#include "oracles.hpp"

using namespace jac;

namespace {

int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("%s  criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion,
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

void skip(int criterion, const std::string& detail) {
  std::printf("SKIP  criterion %d: %s\n", criterion, detail.c_str());
  std::fflush(stdout);
}

unsigned worker_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

SearchConfig max_pool_config(unsigned k, const FunctionTable& fixture) {
  SearchConfig cfg;
  cfg.k = k;
  const auto prev = fixture.get(k - 1, TableField::Omega);
  const std::uint32_t qk = compute_qk(k, static_cast<std::uint32_t>(*prev));
  for (std::uint32_t p : primes_upto(qk))
    if (p > 2) cfg.prime_pool.push_back(p);
  cfg.start_length = static_cast<std::uint32_t>(*prev) + 1;
  cfg.thread_budget = worker_threads();
  return cfg;
}

// ---- criterion 1: brute-force h(k) for k = 1..8 -------------------------

void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint32_t expected[] = {2, 4, 6, 10, 14, 22, 26, 34};
  bool ok = true;
  for (unsigned k = 1; k <= 8; ++k) {
    const std::uint32_t h =
        jacobsthal_brute(static_cast<std::uint64_t>(primorial(k)));
    if (h != expected[k - 1]) ok = false;
  }
  const double elapsed = seconds_since(t0);
  std::ostringstream detail;
  detail << "jacobsthal_brute(p_k#) matches h(k) for k=1..8 in " << elapsed
         << " s";
  report(1, ok && elapsed < 60.0, detail.str());
}

// ---- criterion 2: Omega reproduction ------------------------------------

std::map<unsigned, std::uint32_t> g_omega = {{2, 1}};

bool run_omega_tier(unsigned from, unsigned to, const FunctionTable& fixture) {
  bool ok = true;
  for (unsigned k = from; k <= to; ++k) {
    const SearchOutcome outcome = egpa_search(max_pool_config(k, fixture));
    g_omega[k] = outcome.omega;
    if (static_cast<std::int64_t>(outcome.omega) !=
        *fixture.get(k, TableField::Omega))
      ok = false;
  }
  return ok;
}

void criterion_2(const FunctionTable& fixture) {
  auto t0 = std::chrono::steady_clock::now();
  const bool base = run_omega_tier(3, 12, fixture);
  double elapsed = seconds_since(t0);
  std::ostringstream detail;
  detail << "egpa Omega(k) matches the published values for k=3..12 in "
         << elapsed << " s";
  report(2, base && elapsed < 600.0, detail.str());

  t0 = std::chrono::steady_clock::now();
  const bool extended = run_omega_tier(13, 16, fixture);
  elapsed = seconds_since(t0);
  std::ostringstream d2;
  d2 << "extended tier k=13..16 in " << elapsed << " s";
  report(2, extended && elapsed < 7200.0, d2.str());
}

// ---- criterion 3: H pipeline --------------------------------------------

void criterion_3(const FunctionTable& fixture) {
  bool ok = true;
  for (unsigned k = 2; k <= 11; ++k) {
    if (!g_omega.count(k) || !g_omega.count(k + 1)) {
      ok = false;
      break;
    }
    const HResult h = compute_H(g_omega[k], g_omega[k + 1]);
    if (static_cast<std::int64_t>(h.value) !=
        *fixture.get(k, TableField::H_big))
      ok = false;
  }
  report(3, ok, "compute_H over computed Omega matches H(k) for k=2..11");
}

// ---- criterion 4: brute-force equivalence -------------------------------

void criterion_4() {
  bool ok = true;
  for (unsigned k = 3; k <= 6; ++k) {
    SearchConfig cfg;
    cfg.k = k;
    for (unsigned i = 2; i <= k; ++i)
      cfg.prime_pool.push_back(static_cast<std::uint32_t>(nth_prime(i)));
    cfg.enumerate_all = true;
    const SearchOutcome greedy = egpa_search(cfg);
    const SearchOutcome brute = brute_force_omega(k, cfg.prime_pool);
    if (greedy.omega != brute.omega) ok = false;

    const auto ref = static_cast<std::uint32_t>(nth_prime(k));
    std::vector<Covering> balanced;
    for (const Covering& c : brute.coverings)
      if (is_balanced(c, ref)) balanced.push_back(c);
    if (greedy.coverings != balanced) ok = false;
    // Rebalancing: the unbalanced-included maximum is attained by a
    // balanced covering.
    if (balanced.empty()) ok = false;
  }
  report(4, ok,
         "egpa and exhaustive enumeration agree on omega and balanced "
         "covering sets for k=3..6");
}

// ---- criterion 5: q_k column --------------------------------------------

void criterion_5(const FunctionTable& fixture) {
  bool ok = true;
  for (unsigned k = 20; k <= 43; ++k) {
    const auto prev = fixture.get(k - 1, TableField::Omega);
    const std::uint32_t qk = compute_qk(k, static_cast<std::uint32_t>(*prev));
    if (static_cast<std::int64_t>(qk) != *fixture.get(k, TableField::Qk))
      ok = false;
  }
  report(5, ok, "compute_qk reproduces the q_k column for k=20..43");
}

// ---- criterion 6: conjecture report -------------------------------------

void criterion_6(const FunctionTable& fixture) {
  const ConjectureReport rep = check_conjectures(fixture, 3, 43);
  const std::vector<unsigned> expected = {24, 27, 30, 33, 34, 35, 36,
                                          37, 38, 39, 40, 41, 42, 43};
  bool ok = rep.equality_violations() == expected;
  for (const auto& [k, v] : rep.growth)
    if (v != Verdict::Satisfied) ok = false;
  for (const auto& [k, v] : rep.square_bound)
    if (v != Verdict::Satisfied) ok = false;
  report(6, ok,
         "conjecture 1 violations are exactly {24,27,30,33..43}; "
         "conjectures 3 and 4 hold on every row");
}

// ---- criterion 7: stretch certificate -----------------------------------

void criterion_7(const FunctionTable& fixture) {
  if (!std::getenv("JACOBSTHAL_ACCEPT_STRETCH")) {
    skip(7, "k=24 certificate probe, not required "
            "(set JACOBSTHAL_ACCEPT_STRETCH=1)");
    return;
  }
  const auto t0 = std::chrono::steady_clock::now();
  SearchConfig cfg = max_pool_config(24, fixture);
  cfg.fixed_length = 117;
  const SearchOutcome probe = egpa_search(cfg);
  bool ok = probe.omega == 117 && probe.coverings.size() == 1;
  if (ok) {
    const Covering& witness = probe.coverings[0];
    ok = witness.length == 117 && verify(witness);
  }
  std::ostringstream detail;
  detail << "covering of length 117 found and re-verified, so H(24) >= 236 > "
            "234 = h(24); "
         << seconds_since(t0) << " s, " << probe.stats.nodes << " nodes";
  std::printf("%s  criterion 7 (stretch): %s\n", ok ? "PASS" : "FAIL",
              detail.str().c_str());
}

// ---- criterion 8: property suites ---------------------------------------

bool roundtrip_properties() {
  std::mt19937 rng(97);
  const std::vector<std::uint32_t> pool = {3, 5, 7, 11, 13, 17, 19, 23};
  int done = 0;
  while (done < 10000) {
    const Covering c = oracles::random_covering(rng, pool, 2 + rng() % 5);
    if (c.length == 0) continue;
    ++done;
    const WindowRef w = offset_from_remainders(c);
    std::vector<std::uint32_t> primes;
    for (const CoveringEntry& e : c.entries) primes.push_back(e.prime);
    if (!(remainders_from_offset(w, primes) == c)) return false;
  }
  return true;
}

bool doubling_property() {
  for (unsigned k = 3; k <= 6; ++k) {
    SearchConfig cfg;
    cfg.k = k;
    for (unsigned i = 2; i <= k; ++i)
      cfg.prime_pool.push_back(static_cast<std::uint32_t>(nth_prime(i)));
    cfg.enumerate_all = true;
    for (const Covering& c : egpa_search(cfg).coverings) {
      const Covering doubled = double_with_two(c);
      if (doubled.length != 2 * c.length + 1 || !verify(doubled)) return false;
    }
  }
  return true;
}

bool file_roundtrip_property() {
  SearchConfig cfg;
  cfg.k = 6;
  cfg.prime_pool = {3, 5, 7, 11, 13};
  cfg.enumerate_all = true;
  std::vector<CoveringRecord> records;
  for (const Covering& c : egpa_search(cfg).coverings)
    records.push_back({6, c, 0});
  std::ostringstream out;
  write_remainders(records, out);
  std::istringstream in(out.str());
  std::ostringstream out2;
  write_remainders(read_remainders(in), out2);
  return out.str() == out2.str();
}

bool determinism_property() {
  SearchConfig cfg;
  cfg.k = 10;
  for (unsigned i = 2; i <= 10; ++i)
    cfg.prime_pool.push_back(static_cast<std::uint32_t>(nth_prime(i)));
  cfg.enumerate_all = true;
  const SearchOutcome serial = egpa_search(cfg);
  cfg.thread_budget = worker_threads();
  const SearchOutcome parallel = egpa_search(cfg);
  return serial.omega == parallel.omega &&
         serial.coverings == parallel.coverings;
}

void criterion_8() {
  const bool rt = roundtrip_properties();
  const bool dbl = doubling_property();
  const bool files = file_roundtrip_property();
  const bool det = determinism_property();
  std::ostringstream detail;
  detail << "10000 offset round-trips " << (rt ? "ok" : "FAILED")
         << "; doubling on all k<=6 maximal coverings "
         << (dbl ? "ok" : "FAILED") << "; file round-trip "
         << (files ? "ok" : "FAILED") << "; thread determinism at k=10 "
         << (det ? "ok" : "FAILED");
  report(8, rt && dbl && files && det, detail.str());
}

}  // namespace

int main() {
  const FunctionTable fixture = FunctionTable::fixture();
  criterion_1();
  criterion_2(fixture);
  criterion_3(fixture);
  criterion_4();
  criterion_5(fixture);
  criterion_6(fixture);
  criterion_7(fixture);
  criterion_8();
  std::printf("%s (%d failing criteria)\n",
              g_failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
              g_failures);
  return g_failures == 0 ? 0 : 1;
}
