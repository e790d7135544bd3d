// Command-line frontend: exact geometric-crystal / gRSK computations and
// the randomized identity-verification harness, JSON in and out.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gcryst/json_io.hpp"
#include "gcryst/verify.hpp"

namespace {

using namespace gcryst;

struct IoOptions {
  std::string input_path;
  std::string output_path;
};

Json read_input(const IoOptions& io) {
  std::string text;
  if (io.input_path.empty()) {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(io.input_path);
    if (!in) throw std::runtime_error("cannot open input file: " + io.input_path);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return Json::parse(text);
}

void write_output(const IoOptions& io, const Json& j) {
  if (io.output_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(io.output_path);
    if (!out) throw std::runtime_error("cannot open output file: " + io.output_path);
    out << j.dump(2) << "\n";
  }
}

void add_io(CLI::App* cmd, IoOptions& io) {
  cmd->add_option("--input", io.input_path, "read JSON from this file (default: stdin)");
  cmd->add_option("--output", io.output_path, "write JSON to this file (default: stdout)");
}

Partition partition_from_json(const Json& j) {
  Partition p;
  for (const auto& part : j) p.push_back(part.get<int>());
  for (std::size_t r = 0; r + 1 < p.size(); ++r)
    if (p[r] < p[r + 1]) throw std::runtime_error("not a partition (must weakly decrease)");
  if (!p.empty() && p.back() < 0) throw std::runtime_error("negative partition part");
  return p;
}

void require_index(long value, long lo, long hi, const std::string& what) {
  if (value < lo || value > hi)
    throw std::runtime_error(what + " must lie in [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "]");
}

void require_positive(int value, const std::string& what) {
  if (value < 1) throw std::runtime_error(what + " must be at least 1");
}

int run_verify(const RunConfig& cfg, const std::string& suite_name, bool list_only) {
  if (list_only) {
    for (const Suite& s : all_suites()) std::cout << s.name << "\n";
    return 0;
  }
  std::vector<const Suite*> selected;
  if (suite_name == "all") {
    for (const Suite& s : all_suites()) selected.push_back(&s);
  } else {
    const Suite* s = find_suite(suite_name);
    if (s == nullptr) {
      std::cerr << "unknown suite: " << suite_name << " (use --list)\n";
      return 2;
    }
    selected.push_back(s);
  }
  bool any_failed = false;
  for (const Suite* s : selected) {
    SuiteOutcome out = run_suite(*s, cfg);
    std::cout << (out.ok() ? "PASS" : "FAIL") << " " << out.name << ": passed=" << out.passed
              << " failed=" << out.failed << "\n";
    if (!out.ok()) {
      any_failed = true;
      std::cout << "  first failing trial: " << out.first_failure->dump() << "\n";
    }
  }
  return any_failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact geometric crystal / geometric RSK toolkit"};
  app.require_subcommand(1);

  IoOptions io;
  std::string mode = "geometric";
  long index_i = 0, index_j = 0;
  std::string c_str = "1";
  int width_m = 0, width_n = 0;

  RunConfig cfg;
  std::string suite_name = "all";
  bool list_suites = false;

  auto* grsk_cmd = app.add_subcommand("grsk", "geometric RSK of a positive matrix");
  add_io(grsk_cmd, io);
  grsk_cmd->add_option("--mode", mode, "geometric|tropical")
      ->check(CLI::IsMember({"geometric", "tropical"}));

  auto* grsk_inv_cmd = app.add_subcommand("grsk-inverse", "inverse geometric RSK");
  add_io(grsk_inv_cmd, io);
  grsk_inv_cmd->add_option("--mode", mode, "geometric|tropical")
      ->check(CLI::IsMember({"geometric", "tropical"}));

  auto* rsk_cmd = app.add_subcommand("rsk", "classical RSK of a nonnegative integer matrix");
  add_io(rsk_cmd, io);

  auto* trop_cmd = app.add_subcommand("trop-grsk", "tropical gRSK of an integer matrix");
  add_io(trop_cmd, io);

  auto* crystal_cmd = app.add_subcommand("crystal", "crystal operators e / ebar / s");
  add_io(crystal_cmd, io);
  std::string crystal_op;
  crystal_cmd->add_option("op", crystal_op, "one of: e, ebar, s")
      ->required()
      ->check(CLI::IsMember({"e", "ebar", "s"}));
  crystal_cmd->add_option("--i", index_i, "row operator index");
  crystal_cmd->add_option("--j", index_j, "column operator index");
  crystal_cmd->add_option("--c", c_str, "parameter c as a rational string (or +-1 tropically)");
  crystal_cmd->add_option("--mode", mode, "geometric|tropical")
      ->check(CLI::IsMember({"geometric", "tropical"}));

  auto* rmatrix_cmd = app.add_subcommand("rmatrix", "geometric R-matrix on adjacent rows");
  add_io(rmatrix_cmd, io);
  rmatrix_cmd->add_option("--i", index_i, "row index")->required();

  auto* gt_cmd = app.add_subcommand("gt", "Gelfand-Tsetlin crystal operations");
  add_io(gt_cmd, io);
  std::string gt_op;
  gt_cmd->add_option("op", gt_op, "one of: phi, psi, e, decoration")
      ->required()
      ->check(CLI::IsMember({"phi", "psi", "e", "decoration"}));
  gt_cmd->add_option("--m", width_m, "width bound for psi");
  gt_cmd->add_option("--j", index_j, "operator index for e");
  gt_cmd->add_option("--c", c_str, "parameter c as a rational string");

  auto* loopsym_cmd = app.add_subcommand("loopsym", "loop symmetric functions");
  add_io(loopsym_cmd, io);
  std::string loopsym_op;
  loopsym_cmd->add_option("op", loopsym_op, "one of: e, h, schur, shape")
      ->required()
      ->check(CLI::IsMember({"e", "h", "schur", "shape"}));
  loopsym_cmd->add_option("--m", width_m, "number of rows m")->required();
  loopsym_cmd->add_option("--n", width_n, "number of colors n")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "dominant-monomial reduction into the E's");
  add_io(reduce_cmd, io);
  reduce_cmd->add_option("--m", width_m, "number of rows m")->required();
  reduce_cmd->add_option("--n", width_n, "number of colors n")->required();

  auto* charge_cmd = app.add_subcommand("central-charge", "central charge Delta(x)");
  add_io(charge_cmd, io);
  charge_cmd->add_option("--mode", mode, "geometric|tropical")
      ->check(CLI::IsMember({"geometric", "tropical"}));
  charge_cmd->add_option("--m", width_m, "rows (tropical q-analogue input)");
  charge_cmd->add_option("--n", width_n, "height bound (tropical q-analogue input)");

  auto* verify_cmd = app.add_subcommand("verify", "run randomized identity suites");
  verify_cmd->add_option("--suite", suite_name, "suite name or 'all'");
  verify_cmd->add_option("--trials", cfg.trials, "trials per suite");
  verify_cmd->add_option("--seed", cfg.seed, "master seed");
  verify_cmd->add_option("--m", cfg.m_max, "max rows");
  verify_cmd->add_option("--n", cfg.n_max, "max cols");
  verify_cmd->add_flag("--list", list_suites, "list available suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (verify_cmd->parsed()) {
      if (!list_suites &&
          (cfg.trials < 1 || cfg.m_max < 1 || cfg.m_max > 6 || cfg.n_max < 1 || cfg.n_max > 6)) {
        std::cerr << "invalid config: need trials >= 1 and 1 <= m,n <= 6\n";
        return 2;
      }
      return run_verify(cfg, suite_name, list_suites);
    }

    if (grsk_cmd->parsed()) {
      Json in = read_input(io);
      if (mode == "tropical") {
        write_output(io, to_json(split(trop_grsk(int_matrix_from_json(in)))));
      } else {
        PQPair<Rat> pq = grsk_insert(grid_from_json(in));
        write_output(io, to_json(pq));
      }
      return 0;
    }
    if (grsk_inv_cmd->parsed()) {
      Json in = read_input(io);
      if (mode == "tropical") {
        write_output(io, to_json(trop_grsk_inverse(int_matrix_from_json(in))));
      } else {
        write_output(io, to_json(grsk_inverse(grid_from_json(in))));
      }
      return 0;
    }
    if (rsk_cmd->parsed()) {
      auto [p, q] = schensted_rsk(int_matrix_from_json(read_input(io)));
      write_output(io, Json{{"P", to_json(p)}, {"Q", to_json(q)}});
      return 0;
    }
    if (trop_cmd->parsed()) {
      write_output(io, to_json(trop_grsk(int_matrix_from_json(read_input(io)))));
      return 0;
    }
    if (crystal_cmd->parsed()) {
      Json in = read_input(io);
      if (mode == "tropical") {
        IntMatrix a = int_matrix_from_json(in);
        long c_int = std::stol(c_str);
        if (c_int != 1 && c_int != -1) {
          std::cerr << "tropical crystal operators take --c 1 (raise) or --c -1 (lower)\n";
          return 2;
        }
        auto dir = c_int == 1 ? CrystalDirection::raise : CrystalDirection::lower;
        auto axis = crystal_op == "ebar" ? CrystalAxis::col : CrystalAxis::row;
        long idx = crystal_op == "ebar" ? index_j : index_i;
        auto out = trop_crystal_e(a, static_cast<int>(idx), dir, axis);
        write_output(io, out ? to_json(*out) : Json{{"undefined", true}});
        return 0;
      }
      Grid<Rat> x = grid_from_json(in);
      Rat c = Rat::from_string(c_str);
      Grid<Rat> out;
      if (crystal_op == "e") {
        require_index(index_i, 1, x.rows() - 1, "--i");
        out = e_row(x, static_cast<int>(index_i), c);
      } else if (crystal_op == "ebar") {
        require_index(index_j, 1, x.cols() - 1, "--j");
        out = e_col(x, static_cast<int>(index_j), c);
      } else if (index_j > 0) {
        require_index(index_j, 1, x.cols() - 1, "--j");
        out = weyl_col(x, static_cast<int>(index_j));
      } else {
        require_index(index_i, 1, x.rows() - 1, "--i");
        out = weyl_row(x, static_cast<int>(index_i));
      }
      write_output(io, to_json(out));
      return 0;
    }
    if (rmatrix_cmd->parsed()) {
      Grid<Rat> x = grid_from_json(read_input(io));
      require_index(index_i, 1, x.rows() - 1, "--i");
      write_output(io, to_json(r_matrix_rows(x, static_cast<int>(index_i))));
      return 0;
    }
    if (gt_cmd->parsed()) {
      Json in = read_input(io);
      if (gt_op == "phi") {
        Mat<Rat> M = phi_param(pattern_from_json(in));
        Grid<Rat> as_grid(M.rows(), M.cols());
        for (int i = 1; i <= M.rows(); ++i)
          for (int j = 1; j <= M.cols(); ++j) as_grid.at(i, j) = M.at(i, j);
        write_output(io, to_json(as_grid));
      } else if (gt_op == "psi") {
        Grid<Rat> g = grid_from_json(in);
        Mat<Rat> A(g.rows(), g.cols());
        for (int i = 1; i <= g.rows(); ++i)
          for (int j = 1; j <= g.cols(); ++j) A.at(i, j) = g.at(i, j);
        int width = width_m > 0 ? width_m : g.rows();
        write_output(io, to_json(psi_param(A, width)));
      } else if (gt_op == "e") {
        Pattern<Rat> z = pattern_from_json(in);
        require_index(index_j, 1, z.height() - 1, "--j");
        write_output(io, to_json(gt_e(z, static_cast<int>(index_j), Rat::from_string(c_str))));
      } else {
        Pattern<Rat> z = pattern_from_json(in);
        write_output(io, Json{{"value", gt_decoration_sum(z).to_string()}});
      }
      return 0;
    }
    if (loopsym_cmd->parsed()) {
      require_positive(width_m, "--m");
      require_positive(width_n, "--n");
      Json in = read_input(io);
      LoopPoly out;
      if (loopsym_op == "e") {
        out = loop_e(width_m, width_n, in.at("k").get<int>(), in.at("r").get<int>());
      } else if (loopsym_op == "h") {
        out = loop_h(width_m, width_n, in.at("k").get<int>(), in.at("r").get<int>());
      } else if (loopsym_op == "schur") {
        Partition lambda = partition_from_json(in.at("lambda"));
        Partition mu;
        if (in.contains("mu")) mu = partition_from_json(in.at("mu"));
        if (!partition_contains(lambda, mu))
          throw std::runtime_error("mu must be contained in lambda");
        out = loop_schur_jt(width_m, width_n, lambda, mu, in.at("r").get<int>());
      } else {
        int k = in.at("k").get<int>();
        require_index(k, 1, std::min(width_m, width_n), "k");
        out = shape_invariant(width_m, width_n, k);
      }
      write_output(io, to_json(out));
      return 0;
    }
    if (reduce_cmd->parsed()) {
      require_positive(width_m, "--m");
      require_positive(width_n, "--n");
      LoopPoly f = poly_from_json(read_input(io));
      ReduceResult res = lsym_reduce(width_m, width_n, f);
      if (res.succeeded()) {
        Json rep = Json::array();
        for (const auto& [c, em] : res.representation) {
          Json factors = Json::array();
          for (auto [k, r] : em.factors) factors.push_back(Json::array({k, r}));
          rep.push_back(Json{{"coeff", c.to_string()}, {"factors", factors}});
        }
        write_output(io, Json{{"representation", rep}});
      } else {
        write_output(io, Json{{"remainder", to_json(res.remainder)}});
      }
      return 0;
    }
    if (charge_cmd->parsed()) {
      Json in = read_input(io);
      if (mode == "tropical") {
        if (in.is_object() && in.contains("mu")) {
          // q-analogue table for the given content.
          std::vector<long long> mu;
          for (const auto& part : in.at("mu")) mu.push_back(part.get<long long>());
          int m = width_m > 0 ? width_m : static_cast<int>(mu.size());
          int n = width_n;
          if (n <= 0) throw std::runtime_error("q-analogue needs --n (height bound)");
          write_output(io, to_json(q_analogue(m, n, mu)));
        } else {
          write_output(io, Json{{"value", trop_central_charge(int_matrix_from_json(in))}});
        }
      } else {
        write_output(io, Json{{"value", central_charge(grid_from_json(in)).to_string()}});
      }
      return 0;
    }
  } catch (const Json::exception& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
