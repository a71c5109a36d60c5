#include "jacobsthal/files.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "jacobsthal/primes.hpp"
#include "jacobsthal/scheme.hpp"

namespace jac {

void sort_records(std::vector<CoveringRecord>& records) {
  std::stable_sort(records.begin(), records.end(),
                   [](const CoveringRecord& a, const CoveringRecord& b) {
                     if (a.k != b.k) return a.k < b.k;
                     return canonical_less(a.covering, b.covering);
                   });
}

namespace {

template <typename LineFn>
void write_sections(const std::vector<CoveringRecord>& records,
                    std::ostream& out, LineFn&& line_of) {
  std::vector<CoveringRecord> sorted = records;
  sort_records(sorted);
  unsigned current_k = 0;
  for (const CoveringRecord& rec : sorted) {
    if (!verify(rec.covering))
      throw std::runtime_error("refusing to write an unverified covering (k=" +
                               std::to_string(rec.k) + ")");
    if (rec.k != current_k) {
      current_k = rec.k;
      out << "k = " << current_k << "\n";
    }
    out << line_of(rec) << "\n";
  }
}

}  // namespace

void write_remainders(const std::vector<CoveringRecord>& records,
                      std::ostream& out) {
  write_sections(records, out, [](const CoveringRecord& rec) {
    std::ostringstream os;
    bool first = true;
    for (const CoveringEntry& e : rec.covering.entries) {
      if (!first) os << ' ';
      os << e.remainder << '/' << e.prime;
      first = false;
    }
    return os.str();
  });
}

void write_moduli(const std::vector<CoveringRecord>& records,
                  std::ostream& out) {
  write_sections(records, out, [](const CoveringRecord& rec) {
    std::ostringstream os;
    bool first = true;
    for (std::uint32_t p : moduli_representation(rec.covering)) {
      if (!first) os << ' ';
      os << p;
      first = false;
    }
    return os.str();
  });
}

void write_permutations(const std::vector<CoveringRecord>& records,
                        std::ostream& out) {
  write_sections(records, out, [](const CoveringRecord& rec) {
    std::ostringstream os;
    bool first = true;
    for (std::uint32_t p : permutation_representation(rec.covering)) {
      if (!first) os << ' ';
      os << p;
      first = false;
    }
    return os.str();
  });
}

std::vector<CoveringRecord> read_remainders(std::istream& in) {
  std::vector<CoveringRecord> records;
  std::string line;
  unsigned current_k = 0;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string token;
    ls >> token;
    if (token == "k") {
      std::string eq;
      unsigned k = 0;
      if (!(ls >> eq >> k) || eq != "=" || k < 2)
        throw std::runtime_error("line " + std::to_string(lineno) +
                                 ": malformed section header");
      current_k = k;
      continue;
    }
    if (current_k == 0)
      throw std::runtime_error("line " + std::to_string(lineno) +
                               ": covering before any `k = ...` header");
    CoveringRecord rec;
    rec.k = current_k;
    rec.line = lineno;
    ls.clear();
    ls.str(line);
    while (ls >> token) {
      const std::size_t slash = token.find('/');
      if (slash == std::string::npos)
        throw std::runtime_error("line " + std::to_string(lineno) +
                                 ": expected a/pi token, got `" + token + "`");
      try {
        const unsigned long a = std::stoul(token.substr(0, slash));
        const unsigned long p = std::stoul(token.substr(slash + 1));
        rec.covering.entries.push_back({static_cast<std::uint32_t>(p),
                                        static_cast<std::uint32_t>(a)});
      } catch (const std::exception&) {
        throw std::runtime_error("line " + std::to_string(lineno) +
                                 ": non-numeric a/pi token `" + token + "`");
      }
    }
    // Length is not part of the syntax; recover the covered prefix.
    rec.covering.length = 1;
    try {
      validate_structure(rec.covering);
    } catch (const std::exception& e) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": " +
                               e.what());
    }
    const std::uint32_t prefix = covered_prefix(rec.covering);
    if (prefix == 0)
      throw std::runtime_error("line " + std::to_string(lineno) +
                               ": position 1 is not covered");
    rec.covering.length = prefix;
    records.push_back(std::move(rec));
  }
  return records;
}

VerifyReport verify_records(const std::vector<CoveringRecord>& records) {
  VerifyReport report;
  const FunctionTable fixture = FunctionTable::fixture();

  auto bucket = [&report](unsigned k) -> VerifyReport::PerK& {
    for (auto& b : report.per_k)
      if (b.k == k) return b;
    report.per_k.push_back({k, 0, 0});
    return report.per_k.back();
  };

  for (const CoveringRecord& rec : records) {
    ++report.total;
    VerifyReport::PerK& b = bucket(rec.k);
    ++b.checked;

    std::string reason;
    Covering c = rec.covering;
    const auto expected = fixture.get(rec.k, TableField::Omega);
    if (expected) {
      // Claimed length for a known k is Omega(k); re-verify at it.
      c.length = static_cast<std::uint32_t>(*expected);
    }
    if (c.entries.size() != rec.k - 1) {
      reason = "expected " + std::to_string(rec.k - 1) + " primes, found " +
               std::to_string(c.entries.size());
    } else if (!verify(c)) {
      reason = "window 1.." + std::to_string(c.length) + " is not covered";
    } else if (!is_balanced(c, static_cast<std::uint32_t>(nth_prime(rec.k)))) {
      reason = "covering is not balanced against p_k";
    }
    if (reason.empty()) {
      ++b.passed;
    } else {
      report.failures.push_back({rec.line, reason});
    }
  }
  return report;
}

VerifyReport verify_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return verify_records(read_remainders(in));
}

std::string VerifyReport::render() const {
  std::ostringstream os;
  for (const PerK& b : per_k)
    os << "k = " << b.k << ": " << b.passed << "/" << b.checked
       << " coverings verified\n";
  for (const VerifyFailure& f : failures)
    os << "FAIL line " << f.line << ": " << f.reason << "\n";
  os << (failures.empty() ? "OK" : "FAILED") << " (" << total << " records, "
     << failures.size() << " failures)\n";
  return os.str();
}

void write_covering_files(const std::vector<CoveringRecord>& records,
                          const std::string& directory) {
  namespace fs = std::filesystem;
  fs::create_directories(directory);
  const fs::path dir(directory);
  {
    std::ofstream out(dir / "remainders_c.txt");
    write_remainders(records, out);
  }
  {
    std::ofstream out(dir / "moduli_c.txt");
    write_moduli(records, out);
  }
  {
    std::ofstream out(dir / "permutations_c.txt");
    write_permutations(records, out);
  }
}

}  // namespace jac
