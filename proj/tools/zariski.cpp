// Command-line front end: closure / toric realize / invariants / symbolic / verify.
//
// Exit codes: 0 success, 1 I/O or parse error, 2 mathematical rejection,
// 3 verification counterexample.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "zariski/zariski.hpp"

namespace {

using namespace zariski;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitMath = 2;
constexpr int kExitVerify = 3;

struct RunConfig {
  std::string input = "-";
  std::string mode = "semigroup";
  std::string coords = "original";
  std::string order = "grevlex";
  size_t verify_k = 0;  // 0 = skip
  std::string output = "json";
};

Mode parse_mode(const std::string& m) { return m == "group" ? Mode::Group : Mode::Semigroup; }
Order parse_order(const std::string& o) { return o == "lex" ? Order::Lex : Order::GrevLex; }

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw std::ios_base::failure("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

// 2x2 reports render the ideal with the x/w/z/y letters in text mode
const std::vector<std::string>* letter_names(size_t n) {
  static const std::vector<std::string> letters{"x", "w", "z", "y"};
  return n == 2 ? &letters : nullptr;
}

void print_report_text(std::ostream& os, const ClosureReport& rep, Order order,
                       const std::string& heading) {
  os << heading << "\n";
  os << "mode: " << mode_name(rep.mode) << "\n";
  os << "nu: " << rep.nu << "\n";
  os << "rank G(M): " << rep.rank_g << "\n";
  os << "torsion |G(M)_tor|: " << rep.torsion_order.get_str() << "\n";
  os << "dimension: " << rep.dimension << "\n";
  os << "components of X1: " << rep.num_components << "\n";
  os << "isolated points: " << rep.isolated_points.size() << "\n";
  for (const auto& pt : rep.isolated_points) {
    os << "  [";
    for (size_t i = 0; i < pt.rows(); ++i) {
      os << (i ? "; " : "");
      for (size_t j = 0; j < pt.cols(); ++j) os << (j ? " " : "") << to_string(pt.at(i, j));
    }
    os << "]\n";
  }
  const std::vector<std::string>* names = letter_names(rep.n);
  os << "ideal generators (" << order_name(order) << "):\n";
  for (const auto& g : reduced_basis(rep.ideal, order))
    os << "  " << poly_to_string(g, names) << " = 0\n";
  if (rep.component_ideals) {
    for (size_t c = 0; c < rep.component_ideals->size(); ++c) {
      os << "component " << c << ":\n";
      for (const auto& g : reduced_basis((*rep.component_ideals)[c], order))
        os << "  " << poly_to_string(g, names) << " = 0\n";
    }
  }
  if (rep.toric) {
    os << "identity-component toric data: dimension " << rep.toric->dimension << ", "
       << rep.toric->points.size() << " lattice points\n";
  }
}

int run_oracle(const RatMatrix& m, const ClosureReport& rep, size_t k, Mode mode) {
  OracleVerdict v = verify_oracle(m, rep, k, mode);
  if (!v.pass) {
    std::cerr << "verification failed: " << v.message << "\n";
    return kExitVerify;
  }
  std::cerr << "verification passed (K = " << k << ")\n";
  return kExitOk;
}

int cmd_closure(const RunConfig& cfg) {
  Json input = parse_json(read_input(cfg.input));
  RatMatrix m = matrix_from_json(input);
  Mode mode = parse_mode(cfg.mode);
  Order order = parse_order(cfg.order);

  RatMatrix subject = m;
  if (cfg.coords == "jordan") subject = assemble_jordan(jordan(m).blocks);
  ClosureReport rep = closure_pipeline(subject, mode);

  if (cfg.output == "json")
    std::cout << report_to_json(rep, order).dump(2) << "\n";
  else
    print_report_text(std::cout, rep, order,
                      "Zariski closure (" + cfg.coords + " coordinates)");
  if (cfg.verify_k > 0) return run_oracle(subject, rep, cfg.verify_k, mode);
  return kExitOk;
}

int cmd_toric_realize(const RunConfig& cfg, bool roundtrip) {
  Json input = parse_json(read_input(cfg.input));
  auto points = points_from_json(input);
  Order order = parse_order(cfg.order);

  ToricData data = toric_from_points(points);
  std::vector<Rational> diag = realize_as_matrix(points);
  RatMatrix m = RatMatrix::diagonal(diag);

  if (cfg.output == "json") {
    Json out{{"matrix", matrix_to_json(m)}, {"toric", toric_to_json(data, order)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "diagonal matrix: diag(";
    for (size_t i = 0; i < diag.size(); ++i) std::cout << (i ? ", " : "") << to_string(diag[i]);
    std::cout << ")\n";
    std::cout << "toric variety: dimension " << data.dimension << "\n";
    std::cout << "ideal generators (" << order_name(order) << "):\n";
    for (const auto& g : reduced_basis(data.ideal, order))
      std::cout << "  " << poly_to_string(g) << " = 0\n";
  }
  if (roundtrip) {
    MultGroupData g = build_group(diag);
    if (!lattice_equal(g.relation_lattice, data.kernel_lattice)) {
      std::cerr << "round trip failed: relation lattice differs from ker(A)\n";
      return kExitVerify;
    }
    std::cerr << "round trip passed: relation lattice equals ker(A)\n";
  }
  return kExitOk;
}

int cmd_invariants(const RunConfig& cfg) {
  Json input = parse_json(read_input(cfg.input));
  RatMatrix m = matrix_from_json(input);
  Order order = parse_order(cfg.order);

  bool augmented = false;
  RatMatrix subject = m;
  if (input.contains("b") && !input.at("b").is_null()) {
    const Json& bj = input.at("b");
    if (!bj.is_array() || bj.size() != m.rows())
      fail(ErrorKind::ParseError, "affine part b must have one entry per row");
    std::vector<Rational> b;
    for (const auto& v : bj) b.push_back(rational_from_json(v));
    bool zero = true;
    for (const auto& x : b) zero = zero && (x == 0);
    if (!zero) {
      // homogenize the loop x <- Mx + b as an (n+1)x(n+1) linear loop
      size_t n = m.rows();
      RatMatrix aug(n + 1, n + 1);
      for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n) = b[i];
      }
      aug.at(n, n) = 1;
      subject = aug;
      augmented = true;
    }
  }

  ClosureReport rep = closure_pipeline(subject, Mode::Semigroup);
  if (cfg.output == "json")
    std::cout << report_to_json(rep, order).dump(2) << "\n";
  else
    print_report_text(std::cout, rep, order,
                      augmented ? "polynomial invariants (augmented (n+1)x(n+1) coordinates)"
                                : "polynomial invariants");
  if (cfg.verify_k > 0) return run_oracle(subject, rep, cfg.verify_k, Mode::Semigroup);
  return kExitOk;
}

int cmd_symbolic(const RunConfig& cfg) {
  Json input = parse_json(read_input(cfg.input));
  auto eigs = symbolic_from_json(input);
  Order order = parse_order(cfg.order);
  ClosureReport rep = symbolic_diagonal_pipeline(eigs, parse_mode(cfg.mode));
  if (cfg.output == "json")
    std::cout << report_to_json(rep, order).dump(2) << "\n";
  else
    print_report_text(std::cout, rep, order, "Zariski closure (symbolic diagonal)");
  return kExitOk;
}

int cmd_verify(const std::string& matrix_path, const std::string& report_path, size_t k,
               const std::string& mode_str) {
  RatMatrix m = matrix_from_json(parse_json(read_input(matrix_path)));
  Json rj = parse_json(read_input(report_path));
  if (!rj.is_object() || !rj.contains("ideal"))
    fail(ErrorKind::ParseError, "report JSON must contain an \"ideal\" field");

  ClosureReport rep;
  rep.mode = parse_mode(mode_str);
  rep.n = m.rows();
  RingPtr ring = matrix_ring(m.rows());
  rep.ideal = ideal_from_json(ring, rj.at("ideal"));
  if (rj.contains("isolated_points") && rj.at("isolated_points").is_array())
    for (const auto& pj : rj.at("isolated_points"))
      rep.isolated_points.push_back(matrix_from_json(pj));
  return run_oracle(m, rep, k, rep.mode);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Zariski closures of cyclic matrix groups and semigroups"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&](CLI::App* cmd, bool with_mode = true) {
    cmd->add_option("input", cfg.input, "input file path, or - for stdin")->required();
    if (with_mode)
      cmd->add_option("--mode", cfg.mode, "group | semigroup")
          ->check(CLI::IsMember({"group", "semigroup"}));
    cmd->add_option("--order", cfg.order, "monomial order for printed ideals")
        ->check(CLI::IsMember({"lex", "grevlex"}));
    cmd->add_option("--output", cfg.output, "json | text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* closure = app.add_subcommand("closure", "closure of the cyclic (semi)group of M");
  add_common(closure);
  closure->add_option("--coords", cfg.coords, "original | jordan coordinates")
      ->check(CLI::IsMember({"original", "jordan"}));
  closure->add_option("--verify", cfg.verify_k, "power-evaluation oracle depth (0 = skip)");

  CLI::App* toric = app.add_subcommand("toric", "toric variety commands");
  toric->require_subcommand(1);
  CLI::App* realize = toric->add_subcommand(
      "realize", "diagonal matrix whose cyclic closure is the toric variety of the points");
  bool roundtrip = false;
  add_common(realize, /*with_mode=*/false);
  realize->add_flag("--roundtrip", roundtrip, "re-check the relation lattice equals ker(A)");

  CLI::App* invariants =
      app.add_subcommand("invariants", "strongest polynomial invariants of the loop x <- Mx + b");
  add_common(invariants, /*with_mode=*/false);
  invariants->add_option("--verify", cfg.verify_k, "power-evaluation oracle depth (0 = skip)");

  CLI::App* symbolic =
      app.add_subcommand("symbolic", "closure of a symbolic diagonal matrix (values and phases)");
  add_common(symbolic);

  CLI::App* verify = app.add_subcommand("verify", "run the power oracle on a stored report");
  std::string verify_matrix, verify_report, verify_mode = "semigroup";
  size_t verify_k = 20;
  verify->add_option("matrix", verify_matrix, "matrix JSON path or -")->required();
  verify->add_option("report", verify_report, "report JSON path")->required();
  verify->add_option("--k", verify_k, "oracle depth");
  verify->add_option("--mode", verify_mode, "group | semigroup")
      ->check(CLI::IsMember({"group", "semigroup"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (closure->parsed()) return cmd_closure(cfg);
    if (toric->parsed()) return cmd_toric_realize(cfg, roundtrip);
    if (invariants->parsed()) return cmd_invariants(cfg);
    if (symbolic->parsed()) return cmd_symbolic(cfg);
    if (verify->parsed()) return cmd_verify(verify_matrix, verify_report, verify_k, verify_mode);
  } catch (const zariski::MathError& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == zariski::ErrorKind::ParseError ? kExitIo : kExitMath;
  } catch (const std::ios_base::failure& e) {
    std::cerr << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}
