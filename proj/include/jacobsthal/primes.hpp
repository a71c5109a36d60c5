#ifndef JACOBSTHAL_PRIMES_HPP
#define JACOBSTHAL_PRIMES_HPP

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace jac {

using BigInt = boost::multiprecision::cpp_int;
using uint128 = unsigned __int128;

// p_1 = 2, p_2 = 3, ... The table grows on demand and is safe to use
// from multiple threads.
std::uint64_t nth_prime(std::size_t index);

// All primes <= limit, ascending.
std::vector<std::uint32_t> primes_upto(std::uint32_t limit);

bool is_prime(std::uint64_t n);

// Product of the first k primes. Throws std::overflow_error once the
// product no longer fits in 128 bits (around k = 26); larger values are
// never needed as literal integers.
uint128 primorial(unsigned k);

// Number of distinct prime divisors, by trial division.
unsigned count_prime_divisors(std::uint64_t n);

struct Congruence {
  BigInt residue;
  BigInt modulus;
};

// Merge a nonempty system with pairwise coprime moduli into the unique
// class modulo the product. Residue of the result is the least
// nonnegative representative. Non-coprime moduli are rejected with
// std::invalid_argument.
Congruence crt_solve(const std::vector<Congruence>& system);

// Smallest m such that every m consecutive integers contain one coprime
// to n, by scanning a full period. Refuses n > 2^31 with
// std::length_error; the linear scan is the honest feasibility limit.
std::uint32_t jacobsthal_brute(std::uint64_t n);

constexpr std::uint64_t kBruteForceLimit = std::uint64_t{1} << 31;

}  // namespace jac

#endif  // JACOBSTHAL_PRIMES_HPP
