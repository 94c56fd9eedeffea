// aqc: tables, sequences and cross-route checks for adjacent q-cycle counts.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "aqc/counts.hpp"
#include "aqc/errors.hpp"
#include "aqc/oracle.hpp"
#include "aqc/permanent.hpp"
#include "aqc/render.hpp"
#include "aqc/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

aqc::Format format_or_throw(const std::string& name) {
  auto f = aqc::parse_format(name);
  if (!f) throw aqc::InvalidArgument("unknown format \"" + name + "\"");
  return *f;
}

void require_q(unsigned q) {
  if (q == 0) throw aqc::InvalidArgument("--q must be at least 1");
}

int run_free(unsigned q, unsigned n, const std::string& method, aqc::Format format) {
  require_q(q);
  std::vector<aqc::Nat> formula;
  if (method != "recurrence") {
    for (unsigned m = 0; m <= n; ++m) formula.push_back(aqc::count_free(m, q));
  }
  std::vector<aqc::Nat> recurrence;
  if (method != "formula") recurrence = aqc::free_sequence_recurrence(n, q);

  if (method == "both") {
    for (unsigned m = 0; m <= n; ++m) {
      if (formula[m] != recurrence[m]) {
        std::cerr << "routes disagree first at n=" << m << ": formula " << formula[m]
                  << ", recurrence " << recurrence[m] << '\n';
        return kFailed;
      }
    }
  }
  std::cout << aqc::render_free(q, method, method == "recurrence" ? recurrence : formula, format);
  return kOk;
}

int run_multi(unsigned n, const std::string& lengths_text, bool check_oracle, unsigned threads,
              aqc::Format format) {
  const aqc::MultiSpec lengths = aqc::parse_lengths(lengths_text);
  const auto terms = aqc::multi_distribution(n, lengths);
  if (check_oracle) {
    const auto oracle = aqc::oracle_multi(n, lengths, {10, threads});
    bool same = oracle.size() == terms.size();
    for (const auto& [ks, v] : terms) {
      auto it = oracle.find(ks);
      if (it == oracle.end() || it->second != v) {
        std::cerr << "formula and enumeration disagree at ks=(";
        for (std::size_t j = 0; j < ks.size(); ++j) std::cerr << (j ? "," : "") << ks[j];
        std::cerr << "): formula " << v << ", enumeration " << (it == oracle.end() ? aqc::Nat{} : it->second)
                  << '\n';
        return kFailed;
      }
    }
    if (!same) {
      std::cerr << "enumeration has keys the formula reports as zero\n";
      return kFailed;
    }
    std::cerr << "formula matches enumeration on all " << terms.size() << " terms\n";
  }
  std::cout << aqc::render_multi(n, lengths, terms, format);
  return kOk;
}

int run_verify(const std::string& scope_name, const aqc::VerifyLimits& limits) {
  auto scope = aqc::parse_scope(scope_name);
  if (!scope) throw aqc::InvalidArgument("unknown scope \"" + scope_name + "\"");
  const auto results = aqc::run_verification(*scope, limits);
  std::size_t failed = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name;
    if (!r.passed) {
      std::cout << "  [" << r.detail << ']';
      ++failed;
    }
    std::cout << '\n';
  }
  std::cout << results.size() - failed << '/' << results.size() << " checks passed\n";
  return failed == 0 ? kOk : kFailed;
}

int run_permpoly(unsigned n, unsigned q, const std::string& lengths_text, bool rencontres,
                 aqc::Format format) {
  const aqc::PermanentOptions options;
  if (rencontres) {
    std::cout << aqc::render_polynomial(aqc::rencontres_polynomial(n, options), {{"x", 1}}, format);
  } else if (!lengths_text.empty()) {
    const aqc::MultiSpec lengths = aqc::parse_lengths(lengths_text);
    const aqc::MarkedMatrix m = aqc::build_marked_matrix_multi(n, lengths);
    std::cout << aqc::render_polynomial(aqc::collapse(aqc::permanent(m, options), m.families),
                                        m.families, format);
  } else {
    require_q(q);
    std::cout << aqc::render_polynomial(aqc::generating_polynomial(n, q, options), {{"x", q}}, format);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counts of permutations by adjacent q-cycles"};
  app.require_subcommand(1);

  std::string format_name = "plain";
  unsigned threads = 0;
  app.add_option("--threads", threads, "Enumeration workers (0 = hardware concurrency)");

  unsigned q = 1;
  unsigned n = 0;

  auto* triangle = app.add_subcommand("triangle", "Rows 0..n of a(n,k) for one q");
  triangle->add_option("--q", q, "Cycle length")->required();
  triangle->add_option("--n", n, "Last row")->required();
  triangle->add_option("--format", format_name, "plain|csv|json");

  std::string method = "formula";
  auto* free = app.add_subcommand("free", "b_0..b_n, the AqC-free counts");
  free->add_option("--q", q, "Cycle length")->required();
  free->add_option("--n", n, "Last index")->required();
  free->add_option("--method", method, "formula|recurrence|both")
      ->check(CLI::IsMember({"formula", "recurrence", "both"}));
  free->add_option("--format", format_name, "plain|csv|json");

  std::string lengths;
  bool check_oracle = false;
  auto* multi = app.add_subcommand("multi", "Joint distribution over several cycle lengths");
  multi->add_option("--n", n, "Permutation size")->required();
  multi->add_option("--lengths", lengths, "Comma-separated increasing lengths")->required();
  multi->add_flag("--check-oracle", check_oracle, "Cross-check against full enumeration");
  multi->add_option("--format", format_name, "plain|csv|json");

  std::string scope = "all";
  aqc::VerifyLimits limits;
  auto* verify = app.add_subcommand("verify", "Run cross-route verification suites");
  verify->add_option("--scope", scope, "oracle|recurrences|gf|permanent|multi|all");
  verify->add_option("--n-max", limits.n_max, "Largest n (default depends on scope)");
  verify->add_option("--q-max", limits.q_max, "Largest q for recurrences and gf");
  verify->add_option("--order", limits.order, "Series truncation order for gf");

  bool rencontres = false;
  auto* permpoly = app.add_subcommand("permpoly", "Generating polynomial from a marked permanent");
  permpoly->add_option("--n", n, "Matrix order")->required();
  auto* permpoly_q = permpoly->add_option("--q", q, "Cycle length");
  auto* permpoly_lengths = permpoly->add_option("--lengths", lengths, "Several cycle lengths");
  auto* permpoly_renc = permpoly->add_flag("--rencontres", rencontres, "per(xI + (J - I))");
  permpoly_q->excludes(permpoly_lengths)->excludes(permpoly_renc);
  permpoly_lengths->excludes(permpoly_renc);
  permpoly->add_option("--format", format_name, "plain|csv|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const aqc::Format format = format_or_throw(format_name);
    limits.threads = threads;
    if (*triangle) {
      require_q(q);
      std::cout << aqc::render_triangle(aqc::count_table(q, n), format);
      return kOk;
    }
    if (*free) return run_free(q, n, method, format);
    if (*multi) return run_multi(n, lengths, check_oracle, threads, format);
    if (*verify) return run_verify(scope, limits);
    if (*permpoly) return run_permpoly(n, q, lengths, rencontres, format);
  } catch (const aqc::ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << '\n';
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
