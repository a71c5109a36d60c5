#include "jacobsthal/covering.hpp"

#include <algorithm>
#include <stdexcept>

namespace jac {

void validate_structure(const Covering& c) {
  if (c.length < 1) throw std::invalid_argument("covering: length must be >= 1");
  if (c.entries.empty()) throw std::invalid_argument("covering: no entries");
  std::uint32_t prev = 0;
  for (const CoveringEntry& e : c.entries) {
    if (e.prime <= prev)
      throw std::invalid_argument("covering: primes must be strictly increasing");
    if (!is_prime(e.prime))
      throw std::invalid_argument("covering: modulus is not prime");
    if (e.remainder < 1 || e.remainder >= e.prime)
      throw std::invalid_argument("covering: remainder out of [1, prime)");
    prev = e.prime;
  }
}

namespace {

bool covers(const Covering& c, std::uint32_t x) {
  for (const CoveringEntry& e : c.entries)
    if (x % e.prime == e.remainder % e.prime) return true;
  return false;
}

}  // namespace

bool verify(const Covering& c) {
  for (std::uint32_t x = 1; x <= c.length; ++x)
    if (!covers(c, x)) return false;
  return true;
}

std::uint32_t covered_prefix(const Covering& c) {
  std::uint32_t x = 1;
  while (covers(c, x)) ++x;
  return x - 1;
}

WindowRef offset_from_remainders(const Covering& c) {
  std::vector<Congruence> system;
  system.reserve(c.entries.size());
  for (const CoveringEntry& e : c.entries) {
    const BigInt p = e.prime;
    system.push_back({(p - e.remainder) % p, p});
  }
  Congruence merged = crt_solve(system);
  return {merged.residue, c.length};
}

Covering remainders_from_offset(const WindowRef& w,
                                const std::vector<std::uint32_t>& primes) {
  Covering c;
  c.length = w.length;
  c.entries.reserve(primes.size());
  for (std::uint32_t p : primes) {
    BigInt r = (-w.offset) % p;
    if (r < 0) r += p;
    if (r == 0)
      throw std::invalid_argument(
          "remainders_from_offset: prime divides the offset");
    c.entries.push_back({p, static_cast<std::uint32_t>(r)});
  }
  std::sort(c.entries.begin(), c.entries.end());
  return c;
}

BalanceReport exclusive_positions(const Covering& c) {
  BalanceReport report;
  report.per_prime.resize(c.entries.size());
  for (std::size_t i = 0; i < c.entries.size(); ++i)
    report.per_prime[i].prime = c.entries[i].prime;

  for (std::uint32_t x = 1; x <= c.length; ++x) {
    std::size_t owner = c.entries.size();
    unsigned hits = 0;
    for (std::size_t i = 0; i < c.entries.size() && hits < 2; ++i) {
      const CoveringEntry& e = c.entries[i];
      if (x % e.prime == e.remainder % e.prime) {
        ++hits;
        owner = i;
      }
    }
    if (hits == 1) report.per_prime[owner].positions.push_back(x);
  }
  return report;
}

BalanceReport balance_report(const Covering& c, std::uint32_t reference_prime) {
  BalanceReport report = exclusive_positions(c);
  for (const auto& pe : report.per_prime) {
    if (pe.prime > reference_prime && pe.positions.size() < 2) {
      report.balanced = false;
      report.offending_primes.push_back(pe.prime);
    }
  }
  return report;
}

bool is_balanced(const Covering& c, std::uint32_t reference_prime) {
  return balance_report(c, reference_prime).balanced;
}

Covering double_with_two(const Covering& c) {
  for (const CoveringEntry& e : c.entries)
    if (e.prime == 2)
      throw std::invalid_argument("double_with_two: covering already uses 2");
  Covering out;
  out.length = 2 * c.length + 1;
  out.entries.push_back({2, 1});
  for (const CoveringEntry& e : c.entries)
    out.entries.push_back({e.prime, (2 * e.remainder) % e.prime});
  return out;
}

std::vector<std::uint32_t> moduli_representation(const Covering& c) {
  std::vector<std::uint32_t> out;
  out.reserve(c.length);
  for (std::uint32_t x = 1; x <= c.length; ++x) {
    std::uint32_t smallest = 0;
    for (const CoveringEntry& e : c.entries) {
      if (x % e.prime == e.remainder % e.prime) {
        smallest = e.prime;
        break;  // entries are sorted ascending
      }
    }
    if (smallest == 0)
      throw std::invalid_argument("moduli_representation: position uncovered");
    out.push_back(smallest);
  }
  return out;
}

std::vector<std::uint32_t> permutation_representation(const Covering& c) {
  std::vector<bool> covered(c.length + 1, false);
  std::vector<bool> used(c.entries.size(), false);
  std::vector<std::uint32_t> order;

  std::uint32_t next = 1;
  while (next <= c.length) {
    if (covered[next]) {
      ++next;
      continue;
    }
    // Smallest prime covering the next uncovered position.
    std::size_t pick = c.entries.size();
    for (std::size_t i = 0; i < c.entries.size(); ++i) {
      const CoveringEntry& e = c.entries[i];
      if (!used[i] && next % e.prime == e.remainder % e.prime) {
        pick = i;
        break;
      }
    }
    if (pick == c.entries.size())
      throw std::invalid_argument("permutation_representation: position uncovered");
    used[pick] = true;
    order.push_back(c.entries[pick].prime);
    const CoveringEntry& e = c.entries[pick];
    for (std::uint32_t x = e.remainder % e.prime == 0 ? e.prime : e.remainder % e.prime;
         x <= c.length; x += e.prime)
      covered[x] = true;
  }
  return order;
}

bool canonical_less(const Covering& a, const Covering& b) {
  auto rem = [](const Covering& c) {
    std::vector<std::uint32_t> v;
    v.reserve(c.entries.size());
    for (const CoveringEntry& e : c.entries) v.push_back(e.remainder);
    return v;
  };
  const auto ra = rem(a);
  const auto rb = rem(b);
  if (ra != rb) return ra < rb;
  return a.entries < b.entries;
}

}  // namespace jac
