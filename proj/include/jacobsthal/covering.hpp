#ifndef JACOBSTHAL_COVERING_HPP
#define JACOBSTHAL_COVERING_HPP

#include <cstdint>
#include <vector>

#include "jacobsthal/primes.hpp"

namespace jac {

// One residue class: positions x with x == remainder (mod prime) are
// covered by this prime.
struct CoveringEntry {
  std::uint32_t prime;
  std::uint32_t remainder;

  friend bool operator==(const CoveringEntry&, const CoveringEntry&) = default;
  friend auto operator<=>(const CoveringEntry&, const CoveringEntry&) = default;
};

// A set of residue classes claimed to cover the window 1..length.
// Entries are stored sorted by ascending prime; the remainder vector is
// the canonical identity of a covering. Whether the window is actually
// covered is checked by verify(), not enforced by the type.
struct Covering {
  std::vector<CoveringEntry> entries;
  std::uint32_t length = 0;

  friend bool operator==(const Covering&, const Covering&) = default;
};

// The window <a>_m = (a+1, ..., a+m); a itself is not a member.
struct WindowRef {
  BigInt offset;
  std::uint32_t length = 0;
};

struct BalanceReport {
  struct PrimeExclusives {
    std::uint32_t prime;
    std::vector<std::uint32_t> positions;  // covered by this prime only
  };
  std::vector<PrimeExclusives> per_prime;    // same order as the covering
  bool balanced = true;
  std::vector<std::uint32_t> offending_primes;
};

// Structural validity: primes distinct, strictly increasing, remainders
// in [1, prime). Throws std::invalid_argument on violation.
void validate_structure(const Covering& c);

// True iff every position 1..length lies in some entry's residue class.
bool verify(const Covering& c);

// Longest prefix 1..L fully covered (0 if position 1 is uncovered).
std::uint32_t covered_prefix(const Covering& c);

// Offset a with a == -a_i (mod pi_i) for every entry, least nonnegative
// CRT solution; the covering's primes then cover <a>_m.
WindowRef offset_from_remainders(const Covering& c);

// Inverse direction: a_i = (-a) mod pi_i per prime. A zero remainder
// means some prime divides the offset and is rejected.
Covering remainders_from_offset(const WindowRef& w,
                                const std::vector<std::uint32_t>& primes);

// Per-prime lists of positions covered by that prime and no other.
BalanceReport exclusive_positions(const Covering& c);

// True iff every entry with prime > reference_prime covers at least two
// positions exclusively.
bool is_balanced(const Covering& c, std::uint32_t reference_prime);

// Same check with the report filled in.
BalanceReport balance_report(const Covering& c, std::uint32_t reference_prime);

// Length-doubling transform: from a covering of 1..m by odd primes to a
// covering of 1..2m+1 by {2} plus the same primes. Prime 2 takes the
// odd positions; each odd prime's class maps a_i -> 2*a_i mod pi_i.
Covering double_with_two(const Covering& c);

// Position x -> smallest prime of the covering whose class contains x.
std::vector<std::uint32_t> moduli_representation(const Covering& c);

// Greedy order: repeatedly the prime covering the smallest still
// uncovered position, smaller prime on ties.
std::vector<std::uint32_t> permutation_representation(const Covering& c);

// Lexicographic on the remainder vector, grouping equal prime sets.
bool canonical_less(const Covering& a, const Covering& b);

}  // namespace jac

#endif  // JACOBSTHAL_COVERING_HPP
