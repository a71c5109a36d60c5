#ifndef JACOBSTHAL_SCHEME_HPP
#define JACOBSTHAL_SCHEME_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace jac {

enum class Provenance { Fixture, Computed, Certificate };

// One row of the results table. Missing cells are nullopt; n_cov counts
// maximal balanced coverings containing a prime above p_k.
struct TableRow {
  unsigned k = 0;
  std::optional<std::uint32_t> p_k;
  std::optional<std::uint32_t> q_k;
  std::optional<std::uint32_t> h;
  std::optional<std::uint32_t> H;
  std::optional<std::uint32_t> omega;          // over all odd primes <= q_k
  std::optional<std::uint32_t> omega_primorial;  // restricted to p_2..p_k
  std::optional<std::int64_t> n_cov;
  std::map<std::string, Provenance> provenance;
};

enum class TableField { Pk, Qk, H_small, H_big, Omega, OmegaPrimorial, Ncov };

// Single-writer store of per-k results. Fixture cells are immutable:
// writing a conflicting computed value raises std::runtime_error so
// regressions cannot silently overwrite ground truth.
class FunctionTable {
 public:
  // Published values: full rows for k = 1..43.
  static FunctionTable fixture();

  void set(unsigned k, TableField field, std::int64_t value, Provenance prov);
  const TableRow* row(unsigned k) const;
  std::optional<std::int64_t> get(unsigned k, TableField field) const;

  unsigned min_k() const;
  unsigned max_k() const;

  std::string render(unsigned from, unsigned to) const;

 private:
  std::map<unsigned, TableRow> rows_;
};

// Largest prime p with p <= max(p_k, omega_prev + 1); the bound on
// primes that can appear in a maximal balanced covering for k.
std::uint32_t compute_qk(unsigned k, std::uint32_t omega_prev);

struct HResult {
  std::uint32_t value;
  bool doubling_branch;  // true when 2*omega_k + 2 won
};

// H(k) = max(omega_next + 1, 2*omega_k + 2); omega_next must exceed
// omega_k or the inputs are inconsistent.
HResult compute_H(std::uint32_t omega_k, std::uint32_t omega_next);

// h(k) = j(p_k#). Small k by the brute-force scan of the primorial,
// larger k via the primorial-restricted search and h = 2*omega + 2.
std::uint32_t compute_h(unsigned k, unsigned threads = 1);

enum class Verdict { Satisfied, Violated, Unknown };

struct ConjectureReport {
  // Keyed by k over the requested range.
  std::map<unsigned, Verdict> equality;        // H(k) == h(k)
  std::map<unsigned, Verdict> growth;          // H(k) < 2*H(k-1), k >= 3
  std::map<unsigned, Verdict> square_bound;    // H(k) < k^2, k >= 3
  std::map<unsigned, Verdict> omega_growth;    // Omega(k) <= 2*Omega(k-1)+1

  std::vector<unsigned> equality_violations() const;
  std::string render() const;
};

ConjectureReport check_conjectures(const FunctionTable& table, unsigned from,
                                   unsigned to);

}  // namespace jac

#endif  // JACOBSTHAL_SCHEME_HPP
