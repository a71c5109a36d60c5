#include "jacobsthal.h"

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "jacobsthal/covering.hpp"
#include "jacobsthal/egpa.hpp"
#include "jacobsthal/files.hpp"
#include "jacobsthal/primes.hpp"
#include "jacobsthal/scheme.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(::operator new(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
jac_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return JAC_BAD_INPUT;
  } catch (const std::length_error& e) {
    g_last_error = e.what();
    return JAC_LIMIT;
  } catch (const std::overflow_error& e) {
    g_last_error = e.what();
    return JAC_LIMIT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return JAC_VERIFY_FAILED;
  }
}

// Pool and default start length for a search at k, seeded from the
// published tables.
jac::SearchConfig make_config(unsigned k, jac_pool pool) {
  if (k < 3) throw std::invalid_argument("k must be >= 3");
  if (k > 44) throw std::length_error("no prior Omega value known beyond k=44");

  const jac::FunctionTable fixture = jac::FunctionTable::fixture();
  jac::SearchConfig cfg;
  cfg.k = k;

  if (pool == JAC_POOL_PRIMORIAL) {
    for (unsigned i = 2; i <= k; ++i)
      cfg.prime_pool.push_back(static_cast<std::uint32_t>(jac::nth_prime(i)));
    const auto prev = fixture.get(k - 1, jac::TableField::OmegaPrimorial);
    cfg.start_length = prev ? static_cast<std::uint32_t>(*prev) + 1 : 1;
  } else {
    const auto prev = fixture.get(k - 1, jac::TableField::Omega);
    if (!prev) throw std::length_error("Omega(k-1) unknown; cannot bound q_k");
    const std::uint32_t qk =
        jac::compute_qk(k, static_cast<std::uint32_t>(*prev));
    for (std::uint32_t p : jac::primes_upto(qk))
      if (p > 2) cfg.prime_pool.push_back(p);
    cfg.start_length = static_cast<std::uint32_t>(*prev) + 1;
  }
  return cfg;
}

}  // namespace

struct jac_search {
  unsigned k;
  jac::SearchOutcome outcome;
};

extern "C" {

const char* jac_last_error(void) { return g_last_error.c_str(); }

void jac_string_free(char* s) { ::operator delete(s); }

uint64_t jac_nth_prime(unsigned index) {
  if (index < 1) return 0;
  return jac::nth_prime(index);
}

jac_status jac_jacobsthal(uint64_t n, uint32_t* out) {
  if (!out) return JAC_BAD_INPUT;
  return guarded([&] {
    *out = jac::jacobsthal_brute(n);
    return JAC_OK;
  });
}

jac_status jac_oracle_h(unsigned k, uint32_t* out) {
  if (!out) return JAC_BAD_INPUT;
  return guarded([&] {
    const jac::uint128 n = jac::primorial(k);
    if (n > jac::kBruteForceLimit)
      throw std::length_error("p_k# exceeds the brute-force scan limit");
    *out = jac::jacobsthal_brute(static_cast<std::uint64_t>(n));
    return JAC_OK;
  });
}

jac_status jac_h(unsigned k, unsigned threads, uint32_t* out) {
  if (!out) return JAC_BAD_INPUT;
  return guarded([&] {
    *out = jac::compute_h(k, threads == 0 ? 1 : threads);
    return JAC_OK;
  });
}

jac_status jac_big_h(unsigned k, unsigned threads, uint32_t* out) {
  if (!out) return JAC_BAD_INPUT;
  return guarded([&] {
    if (k < 2) throw std::invalid_argument("big H needs k >= 2");
    auto omega_of = [&](unsigned kk) -> std::uint32_t {
      if (kk == 2) return 1;
      jac::SearchConfig cfg = make_config(kk, JAC_POOL_MAX);
      cfg.thread_budget = threads == 0 ? 1 : threads;
      return jac::egpa_search(cfg).omega;
    };
    const std::uint32_t omega_k = omega_of(k);
    const std::uint32_t omega_next = omega_of(k + 1);
    *out = jac::compute_H(omega_k, omega_next).value;
    return JAC_OK;
  });
}

jac_status jac_omega_run(unsigned k, jac_pool pool, uint32_t start_length,
                         unsigned threads, int enumerate_all,
                         jac_progress_fn progress, void* user,
                         jac_search** out) {
  if (!out) return JAC_BAD_INPUT;
  *out = nullptr;
  return guarded([&] {
    jac::SearchConfig cfg = make_config(k, pool);
    if (start_length > 0) cfg.start_length = start_length;
    cfg.thread_budget = threads == 0 ? 1 : threads;
    cfg.enumerate_all = enumerate_all != 0;
    if (progress)
      cfg.progress = [progress, user](std::uint64_t nodes, std::uint32_t m,
                                      unsigned depth) {
        progress(nodes, m, depth, user);
      };
    auto* handle = new jac_search{k, jac::egpa_search(cfg)};
    *out = handle;
    return JAC_OK;
  });
}

uint32_t jac_search_omega(const jac_search* s) { return s ? s->outcome.omega : 0; }

size_t jac_search_covering_count(const jac_search* s) {
  return s ? s->outcome.coverings.size() : 0;
}

size_t jac_search_ncov(const jac_search* s) {
  if (!s) return 0;
  const std::uint32_t p_k = static_cast<std::uint32_t>(jac::nth_prime(s->k));
  size_t n = 0;
  for (const jac::Covering& c : s->outcome.coverings)
    if (!c.entries.empty() && c.entries.back().prime > p_k) ++n;
  return n;
}

uint64_t jac_search_nodes(const jac_search* s) {
  return s ? s->outcome.stats.nodes : 0;
}

double jac_search_seconds(const jac_search* s) {
  return s ? s->outcome.stats.wall_seconds : 0.0;
}

jac_status jac_search_write_files(const jac_search* s, const char* dir) {
  if (!s || !dir) return JAC_BAD_INPUT;
  return guarded([&] {
    std::vector<jac::CoveringRecord> records;
    records.reserve(s->outcome.coverings.size());
    for (const jac::Covering& c : s->outcome.coverings)
      records.push_back({s->k, c, 0});
    jac::write_covering_files(records, dir);
    return JAC_OK;
  });
}

void jac_search_free(jac_search* s) { delete s; }

jac_status jac_verify_file(const char* path, char** report, int* failures) {
  if (!path) return JAC_BAD_INPUT;
  return guarded([&] {
    const jac::VerifyReport result = jac::verify_file(path);
    if (report) *report = dup_string(result.render());
    if (failures) *failures = static_cast<int>(result.failures.size());
    return result.ok() ? JAC_OK : JAC_VERIFY_FAILED;
  });
}

jac_status jac_table_render(unsigned from, unsigned to, char** out) {
  if (!out || from > to) return JAC_BAD_INPUT;
  return guarded([&] {
    *out = dup_string(jac::FunctionTable::fixture().render(from, to));
    return JAC_OK;
  });
}

jac_status jac_conjectures_render(unsigned from, unsigned to, char** out) {
  if (!out || from > to) return JAC_BAD_INPUT;
  return guarded([&] {
    const jac::ConjectureReport report =
        jac::check_conjectures(jac::FunctionTable::fixture(), from, to);
    *out = dup_string(report.render());
    return JAC_OK;
  });
}

}  // extern "C"
