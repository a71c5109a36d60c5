#include "jacobsthal/scheme.hpp"

#include <sstream>
#include <stdexcept>

#include "jacobsthal/egpa.hpp"
#include "jacobsthal/primes.hpp"

namespace jac {

namespace {

const char* field_name(TableField f) {
  switch (f) {
    case TableField::Pk: return "p_k";
    case TableField::Qk: return "q_k";
    case TableField::H_small: return "h";
    case TableField::H_big: return "H";
    case TableField::Omega: return "Omega";
    case TableField::OmegaPrimorial: return "omega";
    case TableField::Ncov: return "n_cov";
  }
  return "?";
}

std::optional<std::int64_t> field_of(const TableRow& row, TableField f) {
  auto lift = [](const auto& opt) -> std::optional<std::int64_t> {
    if (opt) return static_cast<std::int64_t>(*opt);
    return std::nullopt;
  };
  switch (f) {
    case TableField::Pk: return lift(row.p_k);
    case TableField::Qk: return lift(row.q_k);
    case TableField::H_small: return lift(row.h);
    case TableField::H_big: return lift(row.H);
    case TableField::Omega: return lift(row.omega);
    case TableField::OmegaPrimorial: return lift(row.omega_primorial);
    case TableField::Ncov: return lift(row.n_cov);
  }
  return std::nullopt;
}

void store(TableRow& row, TableField f, std::int64_t value) {
  switch (f) {
    case TableField::Pk: row.p_k = static_cast<std::uint32_t>(value); break;
    case TableField::Qk: row.q_k = static_cast<std::uint32_t>(value); break;
    case TableField::H_small: row.h = static_cast<std::uint32_t>(value); break;
    case TableField::H_big: row.H = static_cast<std::uint32_t>(value); break;
    case TableField::Omega: row.omega = static_cast<std::uint32_t>(value); break;
    case TableField::OmegaPrimorial:
      row.omega_primorial = static_cast<std::uint32_t>(value);
      break;
    case TableField::Ncov: row.n_cov = value; break;
  }
}

struct FixtureRow {
  unsigned k;
  std::uint32_t p, q, h, H, omega;
  std::int64_t ncov;  // -1 when unpublished
};

// Rows 2..19: q_k = p_k, Omega = omega, H = h. Rows 20..43 as published,
// with omega recovered through h = 2*omega + 2.
constexpr FixtureRow kFixture[] = {
    {2, 3, 3, 4, 4, 1, -1},        {3, 5, 5, 6, 6, 2, -1},
    {4, 7, 7, 10, 10, 4, -1},      {5, 11, 11, 14, 14, 6, -1},
    {6, 13, 13, 22, 22, 10, -1},   {7, 17, 17, 26, 26, 12, -1},
    {8, 19, 19, 34, 34, 16, -1},   {9, 23, 23, 40, 40, 19, -1},
    {10, 29, 29, 46, 46, 22, -1},  {11, 31, 31, 58, 58, 28, -1},
    {12, 37, 37, 66, 66, 32, -1},  {13, 41, 41, 74, 74, 36, -1},
    {14, 43, 43, 90, 90, 44, -1},  {15, 47, 47, 100, 100, 49, -1},
    {16, 53, 53, 106, 106, 52, -1},{17, 59, 59, 118, 118, 58, -1},
    {18, 61, 61, 132, 132, 65, -1},{19, 67, 67, 152, 152, 75, -1},
    {20, 71, 73, 174, 174, 86, 0},   {21, 73, 83, 190, 190, 94, 48},
    {22, 79, 89, 200, 200, 99, 180}, {23, 83, 97, 216, 216, 107, 0},
    {24, 89, 107, 234, 236, 117, 12},{25, 97, 113, 258, 258, 128, 0},
    {26, 101, 127, 264, 264, 131, 320},
    {27, 103, 131, 282, 284, 141, 216},
    {28, 107, 139, 300, 300, 149, 0},
    {29, 109, 149, 312, 312, 155, 2074},
    {30, 113, 151, 330, 332, 165, 48},
    {31, 127, 163, 354, 354, 176, 0},
    {32, 131, 173, 378, 378, 188, 0},
    {33, 137, 181, 388, 390, 194, 14},
    {34, 139, 193, 414, 420, 209, 4},
    {35, 149, 199, 432, 438, 218, 8},
    {36, 151, 211, 450, 462, 230, 2},
    {37, 157, 229, 476, 482, 240, 4},
    {38, 163, 241, 492, 500, 249, 2},
    {39, 167, 241, 510, 520, 259, 116},
    {40, 173, 257, 538, 544, 271, 4},
    {41, 179, 271, 550, 566, 282, 4},
    {42, 181, 283, 574, 588, 293, 4},
    {43, 191, 293, 600, 610, 304, 2},
};

}  // namespace

FunctionTable FunctionTable::fixture() {
  FunctionTable table;
  // k = 1: H(1) = h(1) = 2; no odd-prime search is defined yet.
  table.set(1, TableField::Pk, 2, Provenance::Fixture);
  table.set(1, TableField::H_small, 2, Provenance::Fixture);
  table.set(1, TableField::H_big, 2, Provenance::Fixture);

  for (const FixtureRow& r : kFixture) {
    table.set(r.k, TableField::Pk, r.p, Provenance::Fixture);
    table.set(r.k, TableField::Qk, r.q, Provenance::Fixture);
    table.set(r.k, TableField::H_small, r.h, Provenance::Fixture);
    table.set(r.k, TableField::H_big, r.H, Provenance::Fixture);
    table.set(r.k, TableField::Omega, r.omega, Provenance::Fixture);
    table.set(r.k, TableField::OmegaPrimorial, (r.h - 2) / 2,
              Provenance::Fixture);
    if (r.ncov >= 0)
      table.set(r.k, TableField::Ncov, r.ncov, Provenance::Fixture);
  }
  return table;
}

void FunctionTable::set(unsigned k, TableField field, std::int64_t value,
                        Provenance prov) {
  TableRow& row = rows_[k];
  row.k = k;
  const auto existing = field_of(row, field);
  if (existing) {
    auto it = row.provenance.find(field_name(field));
    const bool was_fixture =
        it != row.provenance.end() && it->second == Provenance::Fixture;
    if (*existing != value && was_fixture)
      throw std::runtime_error("function table: computed value for k=" +
                               std::to_string(k) + " field " +
                               field_name(field) + " contradicts the fixture (" +
                               std::to_string(value) + " vs " +
                               std::to_string(*existing) + ")");
    if (was_fixture) return;  // fixture wins, agreement confirmed
  }
  store(row, field, value);
  row.provenance[field_name(field)] = prov;
}

const TableRow* FunctionTable::row(unsigned k) const {
  auto it = rows_.find(k);
  return it == rows_.end() ? nullptr : &it->second;
}

std::optional<std::int64_t> FunctionTable::get(unsigned k,
                                               TableField field) const {
  const TableRow* r = row(k);
  if (!r) return std::nullopt;
  return field_of(*r, field);
}

unsigned FunctionTable::min_k() const {
  return rows_.empty() ? 0 : rows_.begin()->first;
}

unsigned FunctionTable::max_k() const {
  return rows_.empty() ? 0 : rows_.rbegin()->first;
}

std::string FunctionTable::render(unsigned from, unsigned to) const {
  std::ostringstream os;
  auto cell = [](std::optional<std::int64_t> v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  os << "   k    p_k    q_k      h      H  Omega  n_cov\n";
  for (unsigned k = from; k <= to; ++k) {
    const TableRow* r = row(k);
    if (!r) continue;
    auto pad = [&](const std::string& s, int width) {
      std::string out = s;
      while (static_cast<int>(out.size()) < width) out.insert(out.begin(), ' ');
      return out;
    };
    os << pad(std::to_string(k), 4) << pad(cell(field_of(*r, TableField::Pk)), 7)
       << pad(cell(field_of(*r, TableField::Qk)), 7)
       << pad(cell(field_of(*r, TableField::H_small)), 7)
       << pad(cell(field_of(*r, TableField::H_big)), 7)
       << pad(cell(field_of(*r, TableField::Omega)), 7)
       << pad(cell(field_of(*r, TableField::Ncov)), 7) << "\n";
  }
  return os.str();
}

std::uint32_t compute_qk(unsigned k, std::uint32_t omega_prev) {
  if (k < 3) throw std::invalid_argument("compute_qk: k must be >= 3");
  const std::uint32_t p_k = static_cast<std::uint32_t>(nth_prime(k));
  const std::uint32_t limit = std::max(p_k, omega_prev + 1);
  return primes_upto(limit).back();
}

HResult compute_H(std::uint32_t omega_k, std::uint32_t omega_next) {
  if (omega_next <= omega_k)
    throw std::invalid_argument("compute_H: Omega must be strictly increasing");
  const std::uint32_t odd_branch = omega_next + 1;
  const std::uint32_t even_branch = 2 * omega_k + 2;
  if (even_branch >= odd_branch) return {even_branch, true};
  return {odd_branch, false};
}

std::uint32_t compute_h(unsigned k, unsigned threads) {
  if (k < 1) throw std::invalid_argument("compute_h: k must be >= 1");
  if (k <= 8)
    return jacobsthal_brute(static_cast<std::uint64_t>(primorial(k)));

  // Primorial-restricted search: exactly the first k-1 odd primes.
  SearchConfig cfg;
  cfg.k = k;
  for (unsigned i = 2; i <= k; ++i)
    cfg.prime_pool.push_back(static_cast<std::uint32_t>(nth_prime(i)));
  const auto prev = FunctionTable::fixture().get(k - 1, TableField::OmegaPrimorial);
  cfg.start_length = prev ? static_cast<std::uint32_t>(*prev) + 1 : 1;
  cfg.thread_budget = threads;
  const SearchOutcome outcome = egpa_search(cfg);
  return 2 * outcome.omega + 2;
}

std::vector<unsigned> ConjectureReport::equality_violations() const {
  std::vector<unsigned> out;
  for (const auto& [k, verdict] : equality)
    if (verdict == Verdict::Violated) out.push_back(k);
  return out;
}

namespace {

void render_one(std::ostringstream& os, const char* title,
                const std::map<unsigned, Verdict>& verdicts) {
  unsigned satisfied = 0, unknown = 0;
  std::vector<unsigned> violated;
  for (const auto& [k, v] : verdicts) {
    if (v == Verdict::Satisfied) ++satisfied;
    else if (v == Verdict::Unknown) ++unknown;
    else violated.push_back(k);
  }
  os << title << ": " << satisfied << " satisfied, " << violated.size()
     << " violated, " << unknown << " unknown";
  if (!violated.empty()) {
    os << "; violations at k =";
    for (unsigned k : violated) os << ' ' << k;
  }
  os << "\n";
}

}  // namespace

std::string ConjectureReport::render() const {
  std::ostringstream os;
  render_one(os, "H(k) = h(k)", equality);
  render_one(os, "H(k) < 2 H(k-1)", growth);
  render_one(os, "H(k) < k^2", square_bound);
  render_one(os, "Omega(k) <= 2 Omega(k-1) + 1", omega_growth);
  return os.str();
}

ConjectureReport check_conjectures(const FunctionTable& table, unsigned from,
                                   unsigned to) {
  ConjectureReport report;
  for (unsigned k = from; k <= to; ++k) {
    const auto H = table.get(k, TableField::H_big);
    const auto h = table.get(k, TableField::H_small);
    report.equality[k] = (H && h) ? (*H == *h ? Verdict::Satisfied
                                              : Verdict::Violated)
                                  : Verdict::Unknown;
    if (k >= 3) {
      const auto H_prev = table.get(k - 1, TableField::H_big);
      report.growth[k] = (H && H_prev)
                             ? (*H < 2 * *H_prev ? Verdict::Satisfied
                                                 : Verdict::Violated)
                             : Verdict::Unknown;
      report.square_bound[k] =
          H ? (*H < static_cast<std::int64_t>(k) * k ? Verdict::Satisfied
                                                     : Verdict::Violated)
            : Verdict::Unknown;
      const auto om = table.get(k, TableField::Omega);
      const auto om_prev = table.get(k - 1, TableField::Omega);
      report.omega_growth[k] =
          (om && om_prev) ? (*om <= 2 * *om_prev + 1 ? Verdict::Satisfied
                                                     : Verdict::Violated)
                          : Verdict::Unknown;
    }
  }
  return report;
}

}  // namespace jac
