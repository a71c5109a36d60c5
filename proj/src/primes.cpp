#include "jacobsthal/primes.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace jac {

namespace {

std::mutex g_table_mutex;
std::vector<std::uint64_t> g_primes = {2, 3, 5, 7, 11, 13};

bool trial_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

// Caller holds g_table_mutex.
void extend_table_locked(std::size_t count) {
  std::uint64_t candidate = g_primes.back();
  while (g_primes.size() < count) {
    candidate += 2;
    if (trial_prime(candidate)) g_primes.push_back(candidate);
  }
}

}  // namespace

std::uint64_t nth_prime(std::size_t index) {
  if (index < 1) throw std::invalid_argument("nth_prime: index must be >= 1");
  std::lock_guard<std::mutex> lock(g_table_mutex);
  if (index > g_primes.size()) extend_table_locked(index);
  return g_primes[index - 1];
}

std::vector<std::uint32_t> primes_upto(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) * p <= limit; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t q = static_cast<std::uint64_t>(p) * p; q <= limit; q += p)
      composite[static_cast<std::size_t>(q)] = true;
  }
  for (std::uint32_t n = 2; n <= limit; ++n)
    if (!composite[n]) out.push_back(n);
  return out;
}

bool is_prime(std::uint64_t n) { return trial_prime(n); }

uint128 primorial(unsigned k) {
  if (k < 1) throw std::invalid_argument("primorial: k must be >= 1");
  uint128 product = 1;
  for (unsigned i = 1; i <= k; ++i) {
    const uint128 p = nth_prime(i);
    const uint128 next = product * p;
    if (next / p != product)
      throw std::overflow_error("primorial: product exceeds 128 bits");
    product = next;
  }
  return product;
}

unsigned count_prime_divisors(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("count_prime_divisors: n must be >= 1");
  unsigned count = 0;
  for (std::uint64_t d = 2; d * d <= n; d == 2 ? d = 3 : d += 2) {
    if (n % d != 0) continue;
    ++count;
    while (n % d == 0) n /= d;
  }
  if (n > 1) ++count;
  return count;
}

namespace {

// g = gcd(a, b) and x, y with a*x + b*y = g.
BigInt extended_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  BigInt x1, y1;
  BigInt g = extended_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace

Congruence crt_solve(const std::vector<Congruence>& system) {
  if (system.empty()) throw std::invalid_argument("crt_solve: empty system");
  for (const Congruence& c : system) {
    if (c.modulus < 1) throw std::invalid_argument("crt_solve: modulus must be >= 1");
    if (c.residue < 0 || c.residue >= c.modulus)
      throw std::invalid_argument("crt_solve: residue out of range");
  }
  BigInt residue = system[0].residue;
  BigInt modulus = system[0].modulus;
  for (std::size_t i = 1; i < system.size(); ++i) {
    const BigInt& m2 = system[i].modulus;
    const BigInt& r2 = system[i].residue;
    BigInt x, y;
    BigInt g = extended_gcd(modulus, m2, x, y);
    if (g != 1) throw std::invalid_argument("crt_solve: moduli not pairwise coprime");
    // residue + modulus * t == r2 (mod m2)  =>  t == (r2 - residue) * x (mod m2)
    BigInt t = ((r2 - residue) % m2 * x) % m2;
    if (t < 0) t += m2;
    residue += modulus * t;
    modulus *= m2;
  }
  residue %= modulus;
  if (residue < 0) residue += modulus;
  return {residue, modulus};
}

std::uint32_t jacobsthal_brute(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("jacobsthal_brute: n must be >= 1");
  if (n > kBruteForceLimit)
    throw std::length_error("jacobsthal_brute: n exceeds the linear-scan limit");
  if (n == 1) return 1;

  std::vector<std::uint64_t> factors;
  std::uint64_t rest = n;
  for (std::uint64_t d = 2; d * d <= rest; d == 2 ? d = 3 : d += 2) {
    if (rest % d != 0) continue;
    factors.push_back(d);
    while (rest % d == 0) rest /= d;
  }
  if (rest > 1) factors.push_back(rest);

  auto coprime = [&](std::uint64_t x) {
    for (std::uint64_t p : factors)
      if (x % p == 0) return false;
    return true;
  };

  // Runs of non-coprime residues wrap around the period (0 is never
  // coprime for n > 1), so scan starting from a coprime position.
  std::uint64_t start = 1;
  while (!coprime(start)) ++start;

  std::uint64_t longest = 0;
  std::uint64_t run = 0;
  for (std::uint64_t i = 1; i <= n; ++i) {
    const std::uint64_t x = (start + i) % n;
    if (coprime(x)) {
      longest = std::max(longest, run);
      run = 0;
    } else {
      ++run;
    }
  }
  longest = std::max(longest, run);
  return static_cast<std::uint32_t>(longest + 1);
}

}  // namespace jac
