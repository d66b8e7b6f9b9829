#pragma once

// Command-line front end. run() is kept separate from main() so the test suite
// can drive it with captured streams.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <brieskorn/brieskorn.hpp>

namespace brieskorn::cli {

constexpr int exit_ok = 0;
constexpr int exit_verification_failed = 1;
constexpr int exit_usage = 2;

namespace detail {

inline void emit_census(std::int64_t n, const std::string& format, std::ostream& out) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : census(n)) {
      arr.push_back(to_json(r));
    }
    out << arr.dump(2) << "\n";
    return;
  }
  out << census_triangle(n);
}

inline void emit_invariants(std::int64_t n, const std::string& format, std::ostream& out) {
  auto table = invariant_table(n);
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : table) {
      arr.push_back(to_json(r));
    }
    out << arr.dump(2) << "\n";
    return;
  }
  std::size_t width = 0;
  for (const auto& r : table) {
    width = std::max(width, r.descriptor.to_string().size());
  }
  for (const auto& r : table) {
    std::string label = r.descriptor.to_string();
    label.resize(width, ' ');
    out << label << "  " << r.polynomial.to_string() << "\n";
  }
}

inline void emit_slopes(std::int64_t n, std::ostream& out) {
  out << "n = " << n << "\n";
  out << "A_1 = " << attaching_map_1().to_string() << "\n";
  out << "A_2 = " << attaching_map_2().to_string() << "\n";
  out << "A_3 = " << attaching_map_3(n).to_string() << "\n";
  out << "A_3(-n) = " << v3_slope_in_complement(n, Rational(-n)).to_string() << "\n";
  out << "A_3(-n+1/6) = " << v3_slope_in_complement(n, Rational(-6 * n + 1, 6)).to_string() << "\n";
  out << "k  twisting  V_3 slope  complement slope  tight structures\n";
  auto twists = max_twisting_values(n);
  for (std::int64_t k = 1; k <= n - 1; ++k) {
    Slope v3(1, -(n - k));
    out << k << "  " << twists[static_cast<std::size_t>(k - 1)] << "  " << v3.to_string() << "  "
        << mobius_apply(attaching_map_3(n), v3).to_string() << "  " << tight_count_solid_torus(v3) << "\n";
  }
  out << "total " << upper_bound_count(n) << "\n";
}

inline void emit_homology(const PlumbingGraph& g, std::ostream& out) {
  PlumbingGraph expanded = expand_rational_framings(g);
  IntegerMatrix lm = linking_matrix(expanded);
  out << "vertices";
  for (const auto& v : expanded.vertices()) {
    out << " " << v.name << ":" << to_string(v.framing);
  }
  out << "\n";
  out << "linking " << lm.to_string() << "\n";
  out << "det " << determinant(lm) << "\n";
  out << "H_1 " << cokernel(lm).to_string() << "\n";
}

inline int emit_openbook(std::int64_t i, std::int64_t l, std::int64_t r, bool with_surgery, const std::string& what,
                         std::ostream& out, std::ostream& err) {
  auto book = figure3_book(i, l, r, with_surgery);
  if (what == "word") {
    out << to_string(book.word) << "\n";
  } else if (what == "serialize") {
    out << serialize_book(book);
  } else {
    if (with_surgery) {
      err << "error: the torus-bundle monodromy is defined for books without the L twist\n";
      return exit_usage;
    }
    auto m = torus_bundle_monodromy(book);
    out << "monodromy " << m.monodromy.to_string() << "\n";
    out << "factors " << m.factors.size() << "\n";
    if (m.conjugator) {
      out << "conjugator " << m.conjugator->to_string() << "\n";
      out << "normal form " << yinf_normal_form().to_string() << "\n";
    } else {
      out << "conjugator none\n";
    }
    out << "H_1 " << h1_torus_bundle(m.monodromy).to_string() << "\n";
  }
  return exit_ok;
}

inline int report(const std::vector<SuiteResult>& results, std::ostream& out) {
  int code = exit_ok;
  for (const auto& r : results) {
    if (r.ok()) {
      out << r.suite << ": ok (" << r.checks << " checks)\n";
    } else {
      out << r.suite << ": FAILED after " << r.checks << " checks: " << *r.failure << "\n";
      code = exit_verification_failed;
    }
  }
  return code;
}

inline int emit_verify(const std::string& suite, std::int64_t max_n, std::ostream& out) {
  return report(run_suites(suite, max_n), out);
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tight contact structures on -Sigma(2,3,6n-1) and their contact invariants", "brieskorn"};
  app.require_subcommand(1);

  std::int64_t n = 0;
  std::string format = "table";

  auto* census_cmd = app.add_subcommand("census", "index triangle P_n with Legendrian data");
  census_cmd->add_option("--n", n, "n >= 2")->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{100000}));
  census_cmd->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

  auto* inv_cmd = app.add_subcommand("invariants", "contact invariants as Laurent polynomials");
  inv_cmd->add_option("--n", n, "n >= 2")->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{100000}));
  inv_cmd->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

  auto* slopes_cmd = app.add_subcommand("slopes", "slope anchors and solid-torus counts");
  slopes_cmd->add_option("--n", n, "n >= 2")->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{100000}));

  std::string builtin;
  std::string file;
  auto* hom_cmd = app.add_subcommand("homology", "H_1 of a plumbing description");
  auto* builtin_opt = hom_cmd->add_option("--builtin", builtin)->check(CLI::IsMember({"yn", "yinf"}));
  auto* file_opt = hom_cmd->add_option("--file", file, "plumbing graph in the vertex/edge text format");
  hom_cmd->add_option("--n", n, "n >= 2 for --builtin yn")->check(CLI::Range(std::int64_t{2}, std::int64_t{100000}));
  builtin_opt->excludes(file_opt);

  std::int64_t bi = 0, bl = 0, br = 0;
  bool with_surgery = false;
  std::string emit = "monodromy";
  auto* ob_cmd = app.add_subcommand("openbook", "genus-one open books");
  ob_cmd->add_option("--i", bi)->required()->check(CLI::NonNegativeNumber);
  ob_cmd->add_option("--l", bl)->required()->check(CLI::NonNegativeNumber);
  ob_cmd->add_option("--r", br)->required()->check(CLI::NonNegativeNumber);
  ob_cmd->add_flag("--with-surgery", with_surgery, "add the positive twist along L_{l,r}");
  ob_cmd->add_option("--emit", emit)->check(CLI::IsMember({"monodromy", "word", "serialize"}));

  std::string suite = "all";
  std::int64_t max_n = 20;
  auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
  verify_cmd->add_option("--suite", suite)->check(CLI::IsMember({"all", "invariants", "slopes", "homology", "openbook", "census"}));
  verify_cmd->add_option("--max-n", max_n)->check(CLI::Range(std::int64_t{2}, std::int64_t{200}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (census_cmd->parsed()) {
      detail::emit_census(n, format, out);
    } else if (inv_cmd->parsed()) {
      detail::emit_invariants(n, format, out);
    } else if (slopes_cmd->parsed()) {
      detail::emit_slopes(n, out);
    } else if (hom_cmd->parsed()) {
      if (file_opt->count() > 0) {
        std::ifstream in(file);
        if (!in) {
          err << "error: cannot open " << file << "\n";
          return exit_usage;
        }
        detail::emit_homology(parse_plumbing(in), out);
      } else if (builtin == "yn") {
        if (n < 2) {
          err << "error: --builtin yn needs --n N with N >= 2\n";
          return exit_usage;
        }
        detail::emit_homology(yn_plumbing(n), out);
      } else if (builtin == "yinf") {
        detail::emit_homology(yinf_plumbing(), out);
      } else {
        err << "error: homology needs --builtin yn|yinf or --file PATH\n";
        return exit_usage;
      }
    } else if (ob_cmd->parsed()) {
      return detail::emit_openbook(bi, bl, br, with_surgery, emit, out, err);
    } else if (verify_cmd->parsed()) {
      return detail::emit_verify(suite, max_n, out);
    }
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_ok;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) {
    args.emplace_back(argv[k]);
  }
  return run(args, out, err);
}

}  // namespace brieskorn::cli
