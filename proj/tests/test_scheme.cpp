#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "jacobsthal/egpa.hpp"
#include "jacobsthal/primes.hpp"
#include "jacobsthal/scheme.hpp"

using namespace jac;

TEST_CASE("fixture table basics") {
  const FunctionTable table = FunctionTable::fixture();
  CHECK(table.min_k() == 1);
  CHECK(table.max_k() == 43);
  CHECK(table.get(1, TableField::H_big) == 2);
  CHECK(table.get(2, TableField::Omega) == 1);
  CHECK(table.get(24, TableField::H_small) == 234);
  CHECK(table.get(24, TableField::H_big) == 236);
  CHECK(table.get(24, TableField::Ncov) == 12);
  CHECK(table.get(43, TableField::H_big) == 610);
  CHECK(table.get(19, TableField::Ncov) == std::nullopt);

  // h(k) = 2*omega(k) + 2 holds on every published row.
  for (unsigned k = 2; k <= 43; ++k) {
    const auto h = table.get(k, TableField::H_small);
    const auto om = table.get(k, TableField::OmegaPrimorial);
    REQUIRE(h);
    REQUIRE(om);
    CHECK(*h == 2 * *om + 2);
    CHECK(*table.get(k, TableField::H_big) >= *h);
  }

  // Omega is strictly increasing.
  for (unsigned k = 3; k <= 43; ++k)
    CHECK(*table.get(k, TableField::Omega) >
          *table.get(k - 1, TableField::Omega));
}

TEST_CASE("fixture cells cannot be silently overwritten") {
  FunctionTable table = FunctionTable::fixture();
  CHECK_NOTHROW(table.set(3, TableField::Omega, 2, Provenance::Computed));
  CHECK_THROWS_AS(table.set(3, TableField::Omega, 3, Provenance::Computed),
                  std::runtime_error);
  // New cells are writable.
  CHECK_NOTHROW(table.set(44, TableField::Omega, 320, Provenance::Computed));
  CHECK(table.get(44, TableField::Omega) == 320);
}

TEST_CASE("compute_qk") {
  CHECK(compute_qk(19, 65) == 67);
  CHECK(compute_qk(20, 75) == 73);
  CHECK(compute_qk(24, 107) == 107);
  CHECK_THROWS_AS(compute_qk(2, 1), std::invalid_argument);

  // Reproduces the whole q_k column from prior-row Omega values.
  const FunctionTable table = FunctionTable::fixture();
  for (unsigned k = 3; k <= 43; ++k) {
    const auto prev = table.get(k - 1, TableField::Omega);
    REQUIRE(prev);
    CHECK(compute_qk(k, static_cast<std::uint32_t>(*prev)) ==
          *table.get(k, TableField::Qk));
  }
}

TEST_CASE("compute_H") {
  CHECK(compute_H(117, 128).value == 236);
  CHECK(compute_H(117, 128).doubling_branch);
  CHECK(compute_H(75, 86).value == 152);
  CHECK(compute_H(1, 2).value == 4);
  CHECK_THROWS_AS(compute_H(10, 10), std::invalid_argument);
  CHECK_THROWS_AS(compute_H(10, 9), std::invalid_argument);
}

TEST_CASE("fixture rows are self-consistent under compute_H") {
  const FunctionTable table = FunctionTable::fixture();
  for (unsigned k = 2; k <= 42; ++k) {
    const auto om = table.get(k, TableField::Omega);
    const auto om_next = table.get(k + 1, TableField::Omega);
    const HResult result = compute_H(static_cast<std::uint32_t>(*om),
                                     static_cast<std::uint32_t>(*om_next));
    CHECK(result.value == *table.get(k, TableField::H_big));
  }
}

TEST_CASE("compute_h") {
  CHECK(compute_h(1) == 2);
  CHECK(compute_h(3) == 6);
  CHECK(compute_h(8) == 34);
  CHECK(compute_h(9) == 40);
  CHECK(compute_h(10) == 46);
}

TEST_CASE("compute_h paths agree for k = 2..8") {
  for (unsigned k = 2; k <= 8; ++k) {
    const std::uint32_t brute =
        jacobsthal_brute(static_cast<std::uint64_t>(primorial(k)));
    std::uint32_t searched;
    if (k == 2) {
      searched = 4;  // 2*Omega(2) + 2 with the seeded Omega(2) = 1
    } else {
      SearchConfig cfg;
      cfg.k = k;
      for (unsigned i = 2; i <= k; ++i)
        cfg.prime_pool.push_back(static_cast<std::uint32_t>(nth_prime(i)));
      searched = 2 * egpa_search(cfg).omega + 2;
    }
    CHECK(brute == searched);
  }
}

TEST_CASE("primorial-restricted and full search agree when q_k = p_k") {
  const FunctionTable table = FunctionTable::fixture();
  for (unsigned k = 3; k <= 8; ++k) {
    REQUIRE(table.get(k, TableField::Qk) ==
            static_cast<std::int64_t>(nth_prime(k)));
    SearchConfig cfg;
    cfg.k = k;
    for (unsigned i = 2; i <= k; ++i)
      cfg.prime_pool.push_back(static_cast<std::uint32_t>(nth_prime(i)));
    const std::uint32_t restricted = egpa_search(cfg).omega;
    CHECK(restricted == *table.get(k, TableField::Omega));
    CHECK(restricted == *table.get(k, TableField::OmegaPrimorial));
  }
}

TEST_CASE("conjecture report over the published range") {
  const FunctionTable table = FunctionTable::fixture();
  const ConjectureReport report = check_conjectures(table, 3, 43);

  const std::vector<unsigned> expected_violations = {24, 27, 30, 33, 34, 35,
                                                     36, 37, 38, 39, 40, 41,
                                                     42, 43};
  CHECK(report.equality_violations() == expected_violations);

  for (const auto& [k, verdict] : report.growth)
    CHECK(verdict == Verdict::Satisfied);
  for (const auto& [k, verdict] : report.square_bound)
    CHECK(verdict == Verdict::Satisfied);
  for (const auto& [k, verdict] : report.omega_growth)
    CHECK(verdict == Verdict::Satisfied);
}

TEST_CASE("conjecture report marks unpopulated rows unknown") {
  const ConjectureReport report =
      check_conjectures(FunctionTable::fixture(), 42, 45);
  CHECK(report.equality.at(44) == Verdict::Unknown);
  CHECK(report.equality.at(45) == Verdict::Unknown);
  CHECK(report.equality.at(43) == Verdict::Violated);
  CHECK(report.growth.at(44) == Verdict::Unknown);
}

TEST_CASE("table rendering") {
  const std::string text = FunctionTable::fixture().render(24, 24);
  CHECK(text.find("236") != std::string::npos);
  CHECK(text.find("117") != std::string::npos);
  CHECK(text.find("n_cov") != std::string::npos);
}
