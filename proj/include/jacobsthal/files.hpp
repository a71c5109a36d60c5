#ifndef JACOBSTHAL_FILES_HPP
#define JACOBSTHAL_FILES_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "jacobsthal/covering.hpp"

namespace jac {

struct CoveringRecord {
  unsigned k = 0;
  Covering covering;
  int line = 0;  // 1-based source line, 0 when synthesized
};

// Canonical order: ascending k, then ascending remainder vector.
void sort_records(std::vector<CoveringRecord>& records);

// remainders format: a section header `k = <k>` followed by one
// covering per line as space-separated `a/pi` tokens, primes ascending.
// Sections ascend in k; lines are sorted by ascending remainders.
// Unverified records are refused with std::runtime_error.
void write_remainders(const std::vector<CoveringRecord>& records,
                      std::ostream& out);

// Same framing; each covering as its m per-position smallest covering
// primes. Line i corresponds to line i of the remainders file.
void write_moduli(const std::vector<CoveringRecord>& records,
                  std::ostream& out);

// Same framing; each covering as its greedy prime permutation.
void write_permutations(const std::vector<CoveringRecord>& records,
                        std::ostream& out);

// Parse the remainders format. The covering length is not part of the
// syntax; it is recovered as the longest covered prefix. Parse errors
// carry the offending line number.
std::vector<CoveringRecord> read_remainders(std::istream& in);

struct VerifyFailure {
  int line;
  std::string reason;
};

struct VerifyReport {
  struct PerK {
    unsigned k;
    unsigned checked = 0;
    unsigned passed = 0;
  };
  std::vector<PerK> per_k;
  std::vector<VerifyFailure> failures;
  unsigned total = 0;

  bool ok() const { return failures.empty(); }
  std::string render() const;
};

// Certificate check over a remainders file: every record must verify,
// match the expected length for its k (when one is supplied or known
// from the published tables), and be balanced against p_k.
VerifyReport verify_records(const std::vector<CoveringRecord>& records);

VerifyReport verify_file(const std::string& path);

// Convenience wrappers writing all three views of one record set.
void write_covering_files(const std::vector<CoveringRecord>& records,
                          const std::string& directory);

}  // namespace jac

#endif  // JACOBSTHAL_FILES_HPP
