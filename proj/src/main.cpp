// ameforge: construct, verify, and search for highly entangled multipartite
// states and the combinatorial objects equivalent to them.

#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "ameforge/catalog.hpp"
#include "ameforge/codes.hpp"
#include "ameforge/designs.hpp"
#include "ameforge/io.hpp"
#include "ameforge/multiunitary.hpp"
#include "ameforge/search.hpp"
#include "ameforge/state.hpp"
#include "ameforge/uniformity.hpp"

namespace {

using namespace ameforge;
using nlohmann::json;

double initial_tolerance() {
  if (const char* env = std::getenv("AMEFORGE_TOLERANCE")) return std::stod(env);
  return kDefaultTol;
}

void apply_jobs(int jobs) {
#ifdef _OPENMP
  omp_set_num_threads(std::max(1, jobs));
#else
  (void)jobs;
#endif
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  return read_file(path);
}

void deliver(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
}

std::string subset_str(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

int run_verify(const std::string& path, int k, bool json_out, double tol) {
  PureState state = state_from_json(read_input(path), tol);
  UniformityReport report = k > 0 ? is_k_uniform(state, k, tol) : is_ame(state, tol);
  if (json_out) {
    json out{{"num_parties", state.num_parties()},
             {"local_dim", state.local_dim()},
             {"k", report.k},
             {"is_uniform", report.is_uniform},
             {"worst_partition", report.worst_partition},
             {"max_deviation", report.max_deviation}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "parties: " << state.num_parties()
              << "  local dim: " << state.local_dim() << "\n"
              << "k tested: " << report.k << "\n"
              << "worst partition: " << subset_str(report.worst_partition) << "\n"
              << "max deviation: " << std::scientific << std::setprecision(3)
              << report.max_deviation << std::defaultfloat << "\n";
    if (report.is_uniform) {
      std::cout << "verdict: " << report.k << "-uniform";
      if (k <= 0) std::cout << " (maximal for " << state.num_parties() << " parties)";
      std::cout << "\n";
    } else {
      std::cout << "verdict: not " << report.k << "-uniform\n";
    }
  }
  return report.is_uniform ? 0 : 1;
}

int run_verify_matrix(const std::string& path, bool json_out, double tol) {
  IndexedMatrix m = matrix_from_json(read_input(path));
  MultiunitarityReport report = is_k_unitary(m, tol);
  if (json_out) {
    json failures = json::array();
    for (const auto& [subset, dev] : report.failures) {
      failures.push_back({{"subset", subset}, {"deviation", dev}});
    }
    json out{{"order", m.order()},
             {"local_dim", m.local_dim},
             {"half_order", m.half_order},
             {"k", report.k},
             {"checked_reorderings", report.checked_reorderings},
             {"is_unitary_everywhere", report.is_unitary_everywhere()},
             {"worst_subset", report.worst_subset},
             {"worst_deviation", report.worst_deviation},
             {"failures", failures}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "order: " << m.order() << "  local dim: " << m.local_dim
              << "  half order: " << m.half_order << "\n"
              << "k tested: " << report.k << "\n"
              << "checked reorderings: " << report.checked_reorderings << "\n"
              << "worst subset: " << subset_str(report.worst_subset) << "\n"
              << "worst deviation: " << std::scientific << std::setprecision(3)
              << report.worst_deviation << std::defaultfloat << "\n";
    if (report.is_unitary_everywhere()) {
      std::cout << "verdict: " << report.k << "-unitary\n";
    } else {
      std::cout << "verdict: not " << report.k << "-unitary ("
                << report.failures.size() << " reorderings fail)\n";
      for (const auto& [subset, dev] : report.failures) {
        std::cout << "  " << subset_str(subset) << "  deviation "
                  << std::scientific << std::setprecision(3) << dev
                  << std::defaultfloat << "\n";
      }
    }
  }
  return report.is_unitary_everywhere() ? 0 : 1;
}

int run_catalog_list(bool json_out) {
  if (json_out) {
    json out = json::array();
    for (const auto& name : catalog_names()) {
      CatalogEntry entry = catalog_entry(name);
      out.push_back({{"name", entry.name},
                     {"kind", entry.is_state() ? "state" : "matrix"},
                     {"description", entry.description}});
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& name : catalog_names()) {
      CatalogEntry entry = catalog_entry(name);
      std::cout << std::left << std::setw(16) << entry.name << entry.description << "\n";
    }
  }
  return 0;
}

std::string serialized(const CatalogEntry& entry) {
  return entry.is_state() ? state_to_json(entry.state()) : matrix_to_json(entry.matrix());
}

int run_catalog_emit(const std::string& name, const std::string& out_path) {
  deliver(serialized(catalog_entry(name)), out_path);
  return 0;
}

int run_search_mds(int length, int base, const std::string& out_path, bool json_out) {
  GreedyResult result = greedy_mds_search(length, base);
  const std::int64_t target = ipow(base, length / 2);
  if (json_out) {
    json out{{"length", length},
             {"base", base},
             {"target_words", target},
             {"found_words", result.code.size()},
             {"success", result.success},
             {"alphabet_bound_ok", existence_bound(length, base)},
             {"words", result.code.words}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "length: " << length << "  base: " << base << "\n"
              << "target: " << target << " words at distance >= "
              << (length / 2 + 1) << "\n"
              << "found: " << result.code.size() << " words\n";
    if (result.success) {
      std::cout << "verdict: MDS code found\n" << code_to_text(result.code);
    } else if (!existence_bound(length, base)) {
      std::cout << "verdict: greedy failed; no such code exists "
                   "(alphabet bound requires base >= "
                << (length / 2 + 1) << ")\n";
    } else {
      std::cout << "verdict: greedy failed (not a nonexistence proof)\n";
    }
  }
  if (!out_path.empty()) write_file(out_path, code_to_text(result.code));
  return result.success ? 0 : 1;
}

int run_code_verify(const std::string& path, bool json_out) {
  Code code = code_from_text(read_input(path));
  const bool mds = is_mds(code);
  const int dist = code.min_distance();
  if (json_out) {
    json out{{"length", code.length},
             {"base", code.base},
             {"words", code.size()},
             {"min_distance", dist},
             {"is_mds", mds}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "length: " << code.length << "  base: " << code.base
              << "  words: " << code.size() << "\n"
              << "min distance: " << dist << "\n"
              << "verdict: " << (mds ? "MDS" : "not MDS") << "\n";
  }
  return mds ? 0 : 1;
}

int run_code_shorten(const std::string& path, int drop, const std::string& out_path) {
  Code code = code_from_text(read_input(path));
  Code result = drop >= 0 ? drop_letter(code, drop) : shorten_code(code);
  deliver(code_to_text(result), out_path);
  return 0;
}

int run_mols(int order, const std::string& out_path, bool json_out) {
  std::vector<LatinSquare> squares = mols(order);
  if (json_out) {
    json list = json::array();
    for (const auto& sq : squares) list.push_back(sq.cells);
    json out{{"order", order}, {"count", squares.size()}, {"squares", list}};
    std::cout << out.dump(2) << "\n";
    if (!out_path.empty()) write_file(out_path, squares_to_text(squares));
  } else {
    deliver(squares_to_text(squares), out_path);
  }
  return 0;
}

int run_sudoku_verify(const std::string& path, bool json_out) {
  SudokuGrid grid = sudoku_from_text(read_input(path));
  SudokuReport report = verify_symmetric_sudoku(grid);
  if (json_out) {
    json families = json::array();
    for (int f = 0; f < SudokuReport::kFamilies; ++f) {
      json entry{{"family", SudokuReport::family_name(f)}, {"ok", report.family_ok[f]}};
      if (!report.family_ok[f]) {
        entry["first_violation"] = {report.first_violation[f].first,
                                    report.first_violation[f].second};
      }
      families.push_back(std::move(entry));
    }
    json out{{"families", families}, {"is_symmetric", report.all_ok()}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (int f = 0; f < SudokuReport::kFamilies; ++f) {
      std::cout << std::left << std::setw(16) << SudokuReport::family_name(f);
      if (report.family_ok[f]) {
        std::cout << "ok\n";
      } else {
        std::cout << "violation at (" << report.first_violation[f].first << ", "
                  << report.first_violation[f].second << ")\n";
      }
    }
    std::cout << "verdict: " << (report.all_ok() ? "symmetric sudoku" : "not symmetric")
              << "\n";
  }
  return report.all_ok() ? 0 : 1;
}

int run_sudoku_extract(const std::string& path, int digit, const std::string& out_path,
                       bool json_out, double tol) {
  SudokuGrid grid = sudoku_from_text(read_input(path));
  IndexedMatrix p = sudoku_digit_to_permutation(grid, digit);
  MultiunitarityReport report = is_k_unitary(p, tol);
  auto one_line = one_line_of(p, tol);
  if (json_out) {
    json out{{"digit", digit},
             {"one_line", one_line ? json(*one_line) : json(nullptr)},
             {"is_2_unitary", report.is_unitary_everywhere()}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "digit: " << digit << "\n";
    if (one_line) {
      std::cout << "permutation: (";
      for (std::size_t i = 0; i < one_line->size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << (*one_line)[i];
      }
      std::cout << ")\n";
    }
    std::cout << "2-unitary: " << (report.is_unitary_everywhere() ? "yes" : "no") << "\n";
  }
  if (!out_path.empty()) write_file(out_path, matrix_to_json(p));
  return 0;
}

int run_anneal(int num_parties, int local_dim, const AnnealConfig& config,
               const std::string& out_path, bool json_out) {
  SearchResult result = minimize_potential(num_parties, local_dim, config);
  const double floor = 1.0 / static_cast<double>(ipow(local_dim, num_parties / 2));
  if (json_out) {
    json history = json::array();
    for (const auto& [sweep, value] : result.history) history.push_back({sweep, value});
    json out{{"num_parties", num_parties},
             {"local_dim", local_dim},
             {"restarts", config.restarts},
             {"sweeps", config.sweeps},
             {"best_value", result.best_value},
             {"floor", floor},
             {"winning_seed", result.seed},
             {"history", history}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "parties: " << num_parties << "  local dim: " << local_dim << "\n"
              << "restarts: " << config.restarts << "  sweeps: " << config.sweeps
              << "  moves per sweep: " << config.moves_per_sweep << "\n"
              << std::setprecision(12)
              << "best mean balanced purity: " << result.best_value << "\n"
              << "theoretical floor: " << floor << "\n"
              << "winning engine seed: " << result.seed << "\n";
  }
  if (!out_path.empty()) write_file(out_path, state_to_json(result.best_state));
  return 0;
}

int run_page_entropy(int num_qubits, int samples, std::uint64_t seed, bool json_out) {
  auto [mean, stderr_] = average_page_entropy(num_qubits, samples, seed);
  const double prediction = page_prediction(num_qubits);
  if (json_out) {
    json out{{"num_qubits", num_qubits},
             {"samples", samples},
             {"mean", mean},
             {"standard_error", stderr_},
             {"prediction", prediction},
             {"abs_difference", std::abs(mean - prediction)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "qubits: " << num_qubits << "  samples: " << samples << "\n"
              << std::setprecision(6) << "mean half-chain entropy: " << mean << "\n"
              << "standard error: " << stderr_ << "\n"
              << "leading-order prediction: " << prediction << "\n"
              << "absolute difference: " << std::abs(mean - prediction) << "\n";
  }
  return 0;
}

int run_circuit(bool simulate, const std::string& out_path, bool json_out) {
  std::vector<Gate> gates = build_ame43_circuit();
  auto gate_str = [](const Gate& g) {
    if (g.kind == Gate::kFourier) return "F(" + std::to_string(g.target) + ")";
    return "ADD(" + std::to_string(g.target) + " += " + std::to_string(g.control) + ")";
  };
  double fidelity = -1.0;
  PureState output(4, 3);
  if (simulate) {
    PureState initial = PureState::from_terms(4, 3, {{{0, 0, 0, 0}, 1.0}});
    output = simulate_circuit(gates, initial);
    fidelity = std::abs(output.vector().dot(omega_43().vector()));
  }
  if (json_out) {
    json list = json::array();
    for (const auto& g : gates) list.push_back(gate_str(g));
    json out{{"gates", list}};
    if (simulate) out["fidelity"] = fidelity;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& g : gates) std::cout << gate_str(g) << "\n";
    if (simulate) {
      std::cout << "fidelity with the four-qutrit target: " << std::setprecision(15)
                << fidelity << "\n";
    }
  }
  if (simulate && !out_path.empty()) write_file(out_path, state_to_json(output));
  if (!simulate) return 0;
  return std::abs(fidelity - 1.0) <= 1e-12 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Builds, verifies, and searches for maximally multipartite "
               "entangled states and their combinatorial equivalents"};
  app.require_subcommand(1);

  bool json_out = false;
  int jobs = 1;
  double tolerance = kDefaultTol;
  app.add_flag("--json", json_out, "machine-readable JSON output");
  app.add_option("--jobs", jobs, "worker threads for parallel loops")
      ->check(CLI::PositiveNumber);
  app.add_option("--tolerance", tolerance, "numerical tolerance")
      ->check(CLI::PositiveNumber);

  int rc = 0;

  auto* verify = app.add_subcommand("verify", "check k-uniformity of a state file");
  std::string verify_path;
  int verify_k = 0;
  verify->add_option("file", verify_path, "state file ('-' for stdin)")->required();
  verify->add_option("--k", verify_k, "uniformity level (default: floor(N/2))");
  verify->callback([&] { apply_jobs(jobs); rc = run_verify(verify_path, verify_k, json_out, tolerance); });

  auto* verify_matrix =
      app.add_subcommand("verify-matrix", "check k-unitarity of a matrix file");
  std::string vm_path;
  verify_matrix->add_option("file", vm_path, "matrix file ('-' for stdin)")->required();
  verify_matrix->callback([&] { apply_jobs(jobs); rc = run_verify_matrix(vm_path, json_out, tolerance); });

  auto* catalog = app.add_subcommand("catalog", "named states and matrices");
  catalog->require_subcommand(1);
  auto* catalog_list = catalog->add_subcommand("list", "list catalog entries");
  catalog_list->callback([&] { apply_jobs(jobs); rc = run_catalog_list(json_out); });
  auto* catalog_emit = catalog->add_subcommand("emit", "serialize a catalog entry");
  std::string emit_name, emit_out;
  catalog_emit->add_option("name", emit_name, "entry name")->required();
  catalog_emit->add_option("--out", emit_out, "output file (default: stdout)");
  catalog_emit->callback([&] { apply_jobs(jobs); rc = run_catalog_emit(emit_name, emit_out); });

  auto* construct = app.add_subcommand("construct", "parametric generators");
  construct->require_subcommand(1);
  std::string construct_out;
  int phi_order = 3, displacement_d = 3, rs_d = 3, ghz_n = 3, ghz_d = 2;
  auto* c_phi = construct->add_subcommand("phi", "two-uniform state from the maximal "
                                                 "set of mutually orthogonal Latin squares");
  c_phi->add_option("order", phi_order, "prime-power local dimension")->required();
  c_phi->add_option("--out", construct_out);
  c_phi->callback([&] {
    apply_jobs(jobs);
    deliver(state_to_json(phi_state(phi_order)), construct_out);
    rc = 0;
  });
  auto* c_disp = construct->add_subcommand(
      "displacement", "order-d^2 block matrix of displacement operators");
  c_disp->add_option("dim", displacement_d, "odd prime local dimension")->required();
  c_disp->add_option("--out", construct_out);
  c_disp->callback([&] {
    apply_jobs(jobs);
    deliver(matrix_to_json(displacement_block_matrix(displacement_d)), construct_out);
    rc = 0;
  });
  auto* c_up = construct->add_subcommand("up", "order-9 2-unitary complex Hadamard matrix");
  c_up->add_option("--out", construct_out);
  c_up->callback([&] {
    apply_jobs(jobs);
    deliver(matrix_to_json(u_p_matrix()), construct_out);
    rc = 0;
  });
  auto* c_rs = construct->add_subcommand("rs", "doubly-extended Reed-Solomon code");
  c_rs->add_option("dim", rs_d, "odd prime alphabet size")->required();
  c_rs->add_option("--out", construct_out);
  c_rs->callback([&] {
    apply_jobs(jobs);
    deliver(code_to_text(rs_code(rs_d)), construct_out);
    rc = 0;
  });
  auto* c_ghz = construct->add_subcommand("ghz", "generalized GHZ state");
  c_ghz->add_option("parties", ghz_n)->required();
  c_ghz->add_option("dim", ghz_d)->required();
  c_ghz->add_option("--out", construct_out);
  c_ghz->callback([&] {
    apply_jobs(jobs);
    deliver(state_to_json(ghz_state(ghz_n, ghz_d)), construct_out);
    rc = 0;
  });

  auto* search_mds =
      app.add_subcommand("search-mds", "greedy lexicographic search for an MDS code");
  int sm_length = 4, sm_base = 3;
  std::string sm_out;
  search_mds->add_option("length", sm_length, "word length")->required();
  search_mds->add_option("base", sm_base, "alphabet size")->required();
  search_mds->add_option("--out", sm_out, "write the words to a file");
  search_mds->callback([&] { apply_jobs(jobs); rc = run_search_mds(sm_length, sm_base, sm_out, json_out); });

  auto* code = app.add_subcommand("code", "code-file operations");
  code->require_subcommand(1);
  auto* code_verify = code->add_subcommand("verify", "minimum distance and MDS verdict");
  std::string cv_path;
  code_verify->add_option("file", cv_path, "code file ('-' for stdin)")->required();
  code_verify->callback([&] { apply_jobs(jobs); rc = run_code_verify(cv_path, json_out); });
  auto* code_shorten = code->add_subcommand("shorten", "shorten or puncture a code");
  std::string cs_path, cs_out;
  int cs_drop = -1;
  code_shorten->add_option("file", cs_path, "code file ('-' for stdin)")->required();
  code_shorten->add_option("--drop", cs_drop,
                           "puncture this position instead of shortening");
  code_shorten->add_option("--out", cs_out, "output file (default: stdout)");
  code_shorten->callback([&] { apply_jobs(jobs); rc = run_code_shorten(cs_path, cs_drop, cs_out); });

  auto* mols_cmd =
      app.add_subcommand("mols", "maximal set of mutually orthogonal Latin squares");
  int mols_order = 3;
  std::string mols_out;
  mols_cmd->add_option("order", mols_order, "prime-power order")->required();
  mols_cmd->add_option("--out", mols_out, "output file (default: stdout)");
  mols_cmd->callback([&] { apply_jobs(jobs); rc = run_mols(mols_order, mols_out, json_out); });

  auto* sudoku = app.add_subcommand("sudoku", "symmetric-sudoku operations");
  sudoku->require_subcommand(1);
  auto* sudoku_verify = sudoku->add_subcommand("verify", "check all six constraint families");
  std::string sv_path;
  sudoku_verify->add_option("file", sv_path, "sudoku file ('-' for stdin)")->required();
  sudoku_verify->callback([&] { apply_jobs(jobs); rc = run_sudoku_verify(sv_path, json_out); });
  auto* sudoku_extract =
      sudoku->add_subcommand("extract", "permutation matrix of one digit");
  std::string se_path, se_out;
  int se_digit = 1;
  sudoku_extract->add_option("file", se_path, "sudoku file ('-' for stdin)")->required();
  sudoku_extract->add_option("digit", se_digit, "digit 1..9")->required();
  sudoku_extract->add_option("--out", se_out, "write the matrix file");
  sudoku_extract->callback(
      [&] { apply_jobs(jobs); rc = run_sudoku_extract(se_path, se_digit, se_out, json_out, tolerance); });

  auto* anneal = app.add_subcommand(
      "anneal", "simulated annealing of the mean balanced-bipartition purity");
  int an_parties = 4, an_dim = 2;
  AnnealConfig an_config;
  std::string an_out;
  anneal->add_option("parties", an_parties)->required();
  anneal->add_option("dim", an_dim)->required();
  anneal->add_option("--seed", an_config.seed, "master seed");
  anneal->add_option("--sweeps", an_config.sweeps)->check(CLI::PositiveNumber);
  anneal->add_option("--moves", an_config.moves_per_sweep)->check(CLI::PositiveNumber);
  anneal->add_option("--restarts", an_config.restarts)->check(CLI::PositiveNumber);
  anneal->add_option("--t0", an_config.initial_temperature)->check(CLI::PositiveNumber);
  anneal->add_option("--cooling", an_config.cooling);
  anneal->add_option("--scale", an_config.move_scale)->check(CLI::PositiveNumber);
  anneal->add_option("--out", an_out, "write the best state file");
  anneal->callback([&] { apply_jobs(jobs); rc = run_anneal(an_parties, an_dim, an_config, an_out, json_out); });

  auto* page = app.add_subcommand(
      "page-entropy", "mean half-chain entropy of Haar-random qubit states");
  int pg_qubits = 10, pg_samples = 500;
  std::uint64_t pg_seed = 0;
  page->add_option("qubits", pg_qubits, "even qubit count")->required();
  page->add_option("--samples", pg_samples)->check(CLI::PositiveNumber);
  page->add_option("--seed", pg_seed, "master seed");
  page->callback([&] { apply_jobs(jobs); rc = run_page_entropy(pg_qubits, pg_samples, pg_seed, json_out); });

  auto* circuit = app.add_subcommand("circuit", "preparation circuits");
  circuit->require_subcommand(1);
  auto* circuit_ame43 =
      circuit->add_subcommand("ame43", "Fourier/adder circuit for the four-qutrit state");
  bool simulate = false;
  std::string circuit_out;
  circuit_ame43->add_flag("--simulate", simulate, "run the circuit on |0000>");
  circuit_ame43->add_option("--out", circuit_out, "write the simulated state file");
  circuit_ame43->callback([&] { apply_jobs(jobs); rc = run_circuit(simulate, circuit_out, json_out); });

  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    for (auto* sub : a->get_subcommands({})) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    tolerance = initial_tolerance();
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
