#include "gbkit/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "gbkit/buchberger.hpp"
#include "gbkit/error.hpp"
#include "gbkit/f4.hpp"
#include "gbkit/fglm.hpp"
#include "gbkit/io.hpp"
#include "gbkit/solver.hpp"

namespace gbkit {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open " + path);
  buf << file.rdbuf();
  return buf.str();
}

std::vector<Polynomial> nonzero(const std::vector<Polynomial>& F) {
  std::vector<Polynomial> out;
  for (const auto& f : F) {
    if (!f.is_zero()) out.push_back(f);
  }
  return out;
}

std::vector<Polynomial> groebner(const std::vector<Polynomial>& F, const std::string& algo, SelectionStrategy s) {
  std::vector<Polynomial> gens = nonzero(F);
  if (gens.empty()) return {};
  if (algo == "buchberger") return reduced_groebner_basis(gens);
  return f4(gens, s).basis;
}

void print_basis(std::ostream& out, const std::vector<Polynomial>& basis, RenderOptions opts) {
  for (const auto& g : basis) out << render(g, opts) << '\n';
}

std::string format_point(const PrimeField& F, const std::vector<Residue>& pt, bool signed_coefficients) {
  std::string s;
  for (std::size_t i = 0; i < pt.size(); ++i) {
    if (i) s += ',';
    std::int64_t v = pt[i];
    if (signed_coefficients && 2 * pt[i] > F.modulus()) v -= static_cast<std::int64_t>(F.modulus());
    s += std::to_string(v);
  }
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groebner bases, order conversion and system solving over prime fields", "gbkit"};
  app.require_subcommand(1);

  std::string file;
  std::string algo = "f4";
  std::string strategy = "normal";
  std::string target;
  std::string dump_path;
  bool signed_coefficients = false;
  bool json = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", file, "System file, or - for standard input")->required();
    sub->add_flag("--signed", signed_coefficients, "Print coefficients in (-p/2, p/2]");
  };

  CLI::App* gb = app.add_subcommand("gb", "Print the reduced Groebner basis");
  add_common(gb);
  gb->add_option("--algo", algo, "buchberger or f4")->check(CLI::IsMember({"buchberger", "f4"}));
  gb->add_option("--strategy", strategy, "F4 selection: all, first or normal")
      ->check(CLI::IsMember({"all", "first", "normal"}));

  CLI::App* convert = app.add_subcommand("convert", "Convert the basis to another term order");
  add_common(convert);
  convert->add_option("--to", target, "lex, deglex or degrevlex")
      ->required()
      ->check(CLI::IsMember({"lex", "deglex", "degrevlex"}));

  CLI::App* solve_cmd = app.add_subcommand("solve", "Print the F_p-rational solutions");
  add_common(solve_cmd);
  solve_cmd->add_flag("--json", json, "Emit the points as a JSON array");

  CLI::App* stats = app.add_subcommand("stats", "Print F4 iteration statistics");
  add_common(stats);
  stats->add_option("--strategy", strategy, "F4 selection: all, first or normal")
      ->check(CLI::IsMember({"all", "first", "normal"}));
  stats->add_flag("--json", json, "Emit JSON lines");
  stats->add_option("--dump-matrices", dump_path, "Write every F4 matrix to this file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "gbkit: " << e.what() << '\n';
    return kExitUsage;
  }

  RenderOptions ropts{signed_coefficients};
  try {
    System sys = parse_system(read_source(file, in));

    if (*gb) {
      print_basis(out, groebner(sys.polys, algo, parse_strategy(strategy)), ropts);
    } else if (*convert) {
      TermOrder to = parse_term_order(target);
      std::vector<Polynomial> basis = groebner(sys.polys, "f4", SelectionStrategy::NormalDegree);
      if (basis.empty()) throw Error(Errc::NotZeroDimensional, "the zero ideal is not zero-dimensional");
      if (to == sys.ring->order()) {
        print_basis(out, basis, ropts);
      } else {
        print_basis(out, fglm(basis, to), ropts);
      }
    } else if (*solve_cmd) {
      SolutionSet sol = solve(sys.polys);
      const PrimeField& F = sys.ring->field();
      if (json) {
        nlohmann::json doc = nlohmann::json::array();
        for (const auto& pt : sol.points) {
          nlohmann::json row = nlohmann::json::array();
          for (Residue v : pt) {
            std::int64_t x = v;
            if (signed_coefficients && 2 * v > F.modulus()) x -= static_cast<std::int64_t>(F.modulus());
            row.push_back(x);
          }
          doc.push_back(row);
        }
        out << doc.dump() << '\n';
      } else {
        for (const auto& pt : sol.points) out << format_point(F, pt, signed_coefficients) << '\n';
      }
    } else if (*stats) {
      std::vector<Polynomial> gens = nonzero(sys.polys);
      if (gens.empty()) throw Error(Errc::EmptyInput, "no nonzero generators");
      F4Options opts;
      opts.strategy = parse_strategy(strategy);
      std::ofstream dump_file;
      if (!dump_path.empty()) {
        dump_file.open(dump_path);
        if (!dump_file) throw UsageError("cannot write " + dump_path);
        opts.on_matrix = [&](std::size_t iter, const TermMatrix& built, const TermMatrix& reduced) {
          dump_file << "## iteration " << iter << " built " << built.data.rows() << 'x' << built.data.cols() << '\n';
          dump(dump_file, built);
          dump_file << "## iteration " << iter << " reduced\n";
          dump(dump_file, reduced);
        };
      }
      F4Result r = f4(gens, opts);
      if (json) {
        for (const auto& s : r.stats) {
          nlohmann::json rec = {{"iter", s.iter},
                                {"step_degree", s.step_degree},
                                {"pairs_pending", s.pairs_pending},
                                {"pairs_selected", s.pairs_selected},
                                {"pairs_new", s.pairs_new},
                                {"rows", s.rows},
                                {"cols", s.cols}};
          out << rec.dump() << '\n';
        }
      } else {
        out << "iter step_degree pairs_pending pairs_selected pairs_new rows cols\n";
        for (const auto& s : r.stats) {
          out << s.iter << ' ' << s.step_degree << ' ' << s.pairs_pending << ' ' << s.pairs_selected << ' '
              << s.pairs_new << ' ' << s.rows << ' ' << s.cols << '\n';
        }
      }
    }
  } catch (const UsageError& e) {
    err << "gbkit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "gbkit: " << file << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "gbkit: " << e.what() << '\n';
    return kExitMath;
  }
  return kExitOk;
}

}  // namespace gbkit
