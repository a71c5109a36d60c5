// Command-line front end; talks to the library through the C API only.

#include <cstdint>
#include <cstdio>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "jacobsthal.h"

namespace {

int fail(jac_status status) {
  std::fprintf(stderr, "error: %s\n", jac_last_error());
  return static_cast<int>(status);
}

void progress_to_stderr(uint64_t nodes, uint32_t length, unsigned depth,
                        void* /*user*/) {
  std::fprintf(stderr, "\r%llu nodes, m=%u, depth=%u   ",
               static_cast<unsigned long long>(nodes), length, depth);
}

unsigned default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum Jacobsthal function toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  bool deterministic = false;
  app.add_flag("--deterministic", deterministic,
               "Force single-threaded, scheduling-independent runs");

  unsigned k = 0;
  std::string pool = "max";
  std::uint32_t start_length = 0;
  unsigned threads = 0;
  bool quiet = false;
  std::string out_dir = ".";
  std::string file;
  unsigned from = 2, to = 43;

  auto* omega = app.add_subcommand("omega", "Compute Omega(k)");
  omega->add_option("--k", k, "Number of primes including 2")->required();
  omega->add_option("--pool", pool, "primorial | max")
      ->check(CLI::IsMember({"primorial", "max"}));
  omega->add_option("--start-length", start_length, "Initial window length");
  omega->add_option("--threads", threads, "Worker threads (0 = all cores)");
  omega->add_flag("--quiet", quiet, "Suppress progress output");

  auto* h_cmd = app.add_subcommand("h", "Compute h(k) = j(p_k#)");
  h_cmd->add_option("--k", k)->required();
  h_cmd->add_option("--threads", threads);

  auto* bigh = app.add_subcommand("bigh", "Compute H(k) from Omega(k), Omega(k+1)");
  bigh->add_option("--k", k)->required();
  bigh->add_option("--threads", threads);

  auto* enumerate = app.add_subcommand(
      "enumerate", "Exhaustively enumerate balanced coverings for k");
  enumerate->add_option("--k", k)->required();
  enumerate->add_option("--out-dir", out_dir, "Directory for the three files");
  enumerate->add_option("--threads", threads);
  enumerate->add_flag("--quiet", quiet);

  auto* verify = app.add_subcommand("verify", "Check a remainders file");
  verify->add_option("--file", file)->required()->check(CLI::ExistingFile);

  auto* oracle = app.add_subcommand("oracle", "Brute-force h(k), k <= 8");
  oracle->add_option("--k", k)->required();

  auto* table = app.add_subcommand("table", "Print the results table");
  table->add_option("--from", from);
  table->add_option("--to", to);

  auto* conjectures =
      app.add_subcommand("conjectures", "Check the conjectures over a range");
  conjectures->add_option("--from", from);
  conjectures->add_option("--to", to);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (threads == 0) threads = default_threads();
  if (deterministic) threads = 1;
  const jac_pool pool_kind =
      pool == "primorial" ? JAC_POOL_PRIMORIAL : JAC_POOL_MAX;
  const jac_progress_fn progress = quiet ? nullptr : progress_to_stderr;

  if (omega->parsed() || enumerate->parsed()) {
    const bool enumerating = enumerate->parsed();
    jac_search* search = nullptr;
    jac_status status =
        jac_omega_run(k, enumerating ? JAC_POOL_MAX : pool_kind, start_length,
                      threads, enumerating ? 1 : 0, progress, nullptr, &search);
    if (status != JAC_OK) return fail(status);
    if (!quiet) std::fprintf(stderr, "\n");
    std::printf("Omega(%u) = %u\n", k, jac_search_omega(search));
    std::printf("nodes = %llu, %.2f s\n",
                static_cast<unsigned long long>(jac_search_nodes(search)),
                jac_search_seconds(search));
    if (enumerating) {
      std::printf("balanced coverings = %zu (n_cov = %zu above p_k)\n",
                  jac_search_covering_count(search), jac_search_ncov(search));
      status = jac_search_write_files(search, out_dir.c_str());
      if (status != JAC_OK) {
        jac_search_free(search);
        return fail(status);
      }
      std::printf("wrote remainders_c.txt, moduli_c.txt, permutations_c.txt to %s\n",
                  out_dir.c_str());
    }
    jac_search_free(search);
    return 0;
  }

  if (h_cmd->parsed()) {
    uint32_t value = 0;
    const jac_status status = jac_h(k, threads, &value);
    if (status != JAC_OK) return fail(status);
    std::printf("h(%u) = %u\n", k, value);
    return 0;
  }

  if (bigh->parsed()) {
    uint32_t value = 0;
    const jac_status status = jac_big_h(k, threads, &value);
    if (status != JAC_OK) return fail(status);
    std::printf("H(%u) = %u\n", k, value);
    return 0;
  }

  if (verify->parsed()) {
    char* report = nullptr;
    int failures = 0;
    const jac_status status = jac_verify_file(file.c_str(), &report, &failures);
    if (report) {
      std::fputs(report, stdout);
      jac_string_free(report);
    }
    if (status != JAC_OK && status != JAC_VERIFY_FAILED) return fail(status);
    return status == JAC_OK ? 0 : 1;
  }

  if (oracle->parsed()) {
    uint32_t value = 0;
    const jac_status status = jac_oracle_h(k, &value);
    if (status != JAC_OK) return fail(status);
    std::printf("h(%u) = j(p_%u#) = %u\n", k, k, value);
    return 0;
  }

  if (table->parsed() || conjectures->parsed()) {
    char* text = nullptr;
    const jac_status status = table->parsed()
                                  ? jac_table_render(from, to, &text)
                                  : jac_conjectures_render(from, to, &text);
    if (status != JAC_OK) return fail(status);
    std::fputs(text, stdout);
    jac_string_free(text);
    return 0;
  }

  return 2;
}
