// atomfiber: atomic fibers, fiber decompositions, and integer programs over
// an integer matrix. Thin shell around the shared library's C interface.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <atomfiber/atomfiber.h>

namespace {

struct Common {
  std::string matrix_path;
  std::string output = "";  // empty: subcommand default; "-": stdout
  int threads = 1;
  bool deterministic = true;
  long long limit = 1'000'000;
  long long cache_cap = 0;
  bool quiet = false;
};

int exit_code(int status) {
  switch (status) {
    case AF_OK:
      return 0;
    case AF_ERR_PARSE:
      return 2;
    case AF_ERR_LIMIT:
      return 3;
    case AF_ERR_INFEASIBLE:
    case AF_ERR_INFEASIBLE_SEED:
      return 4;
    case AF_ERR_INCOMPLETE_ATOMS:
      return 5;
    default:
      return 1;
  }
}

int report(int status) {
  std::cerr << "atomfiber: error: " << af_last_error() << "\n";
  return exit_code(status);
}

struct MatrixDeleter {
  void operator()(af_matrix* m) const { af_matrix_free(m); }
};
struct ListDeleter {
  void operator()(af_vector_list* l) const { af_vector_list_free(l); }
};
struct TextDeleter {
  void operator()(char* t) const { af_text_free(t); }
};
using MatrixPtr = std::unique_ptr<af_matrix, MatrixDeleter>;
using ListPtr = std::unique_ptr<af_vector_list, ListDeleter>;
using TextPtr = std::unique_ptr<char, TextDeleter>;

MatrixPtr open_matrix(const Common& c, int& status) {
  af_options opt;
  af_options_init(&opt);
  opt.threads = c.threads;
  opt.deterministic = c.deterministic ? 1 : 0;
  opt.limit = c.limit;
  opt.cache_cap = c.cache_cap;
  af_matrix* m = nullptr;
  status = af_matrix_read(c.matrix_path.c_str(), &opt, &m);
  return MatrixPtr(m);
}

// Default output path: the matrix file with its extension swapped.
std::string default_output(const Common& c, const char* ext) {
  return std::filesystem::path(c.matrix_path).replace_extension(ext).string();
}

bool write_output(const Common& c, const std::string& path, const std::string& text,
                  const char* what) {
  if (path == "-") {
    std::cout << text;
    return true;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  out.flush();
  if (!out) {
    std::cerr << "atomfiber: error: cannot write '" << path << "'\n";
    return false;
  }
  if (!c.quiet) std::cerr << "atomfiber: wrote " << what << " to " << path << "\n";
  return true;
}

std::string sibling_fib_path(const std::string& out_path) {
  return std::filesystem::path(out_path).replace_extension(".fib").string();
}

int emit_atoms(const Common& c, MatrixPtr m, ListPtr atoms, long long mode, bool elements,
               const char* default_ext) {
  TextPtr text;
  {
    char* t = nullptr;
    if (int st = af_vector_list_format(atoms.get(), &t); st != AF_OK) return report(st);
    text.reset(t);
  }
  const std::string out_path = c.output.empty() ? default_output(c, default_ext) : c.output;
  if (!write_output(c, out_path, text.get(), "atom list")) return 1;
  if (!elements) return 0;

  char* listing = nullptr;
  if (int st = af_fiber_listings(m.get(), atoms.get(), mode, &listing); st != AF_OK)
    return report(st);
  TextPtr listing_owner(listing);
  if (out_path == "-") {
    std::cout << listing;
    return 0;
  }
  return write_output(c, sibling_fib_path(out_path), listing, "fiber elements") ? 0 : 1;
}

int run_atomic(const Common& c, long long mode, bool have_mode, bool elements) {
  int status = 0;
  MatrixPtr m = open_matrix(c, status);
  if (!m) return report(status);
  if (!have_mode) mode = af_matrix_cols(m.get());
  af_vector_list* atoms = nullptr;
  status = af_atomic_fibers_mode(m.get(), mode, &atoms);
  if (status != AF_OK) return report(status);
  return emit_atoms(c, std::move(m), ListPtr(atoms), mode, elements, ".ato");
}

int run_extended(const Common& c, const std::string& sublattice, bool elements) {
  int status = 0;
  MatrixPtr m = open_matrix(c, status);
  if (!m) return report(status);
  af_vector_list* atoms = nullptr;
  if (!sublattice.empty()) {
    af_vector_list* gens = nullptr;
    status = af_vector_list_read(sublattice.c_str(), &gens);
    if (status != AF_OK) return report(status);
    ListPtr gens_owner(gens);
    status = af_sublattice_atomic_fibers(m.get(), gens, &atoms);
  } else {
    status = af_extended_atomic_fibers(m.get(), &atoms);
  }
  if (status != AF_OK) return report(status);
  return emit_atoms(c, std::move(m), ListPtr(atoms), 0, elements, ".eat");
}

int run_list(const Common& c, int (*compute)(af_matrix*, af_vector_list**), const char* what) {
  int status = 0;
  MatrixPtr m = open_matrix(c, status);
  if (!m) return report(status);
  af_vector_list* list = nullptr;
  status = compute(m.get(), &list);
  if (status != AF_OK) return report(status);
  ListPtr owner(list);
  char* text = nullptr;
  if (int st = af_vector_list_format(list, &text); st != AF_OK) return report(st);
  TextPtr text_owner(text);
  const std::string out_path = c.output.empty() ? "-" : c.output;
  return write_output(c, out_path, text, what) ? 0 : 1;
}

int run_minimal(const Common& c, const std::string& rhs, long long mode, bool have_mode) {
  int status = 0;
  MatrixPtr m = open_matrix(c, status);
  if (!m) return report(status);
  if (!have_mode) mode = af_matrix_cols(m.get());
  af_vector_list* list = nullptr;
  status = af_minimal_elements(m.get(), rhs.c_str(), mode, &list);
  if (status != AF_OK) return report(status);
  ListPtr owner(list);
  char* text = nullptr;
  if (int st = af_vector_list_format(list, &text); st != AF_OK) return report(st);
  TextPtr text_owner(text);
  const std::string out_path = c.output.empty() ? "-" : c.output;
  return write_output(c, out_path, text, "minimal elements") ? 0 : 1;
}

// Loads the atom file when given, otherwise computes the atoms at `mode`.
int load_or_compute_atoms(MatrixPtr& m, const std::string& atoms_path, long long mode,
                          ListPtr& out) {
  af_vector_list* atoms = nullptr;
  int status = atoms_path.empty() ? af_atomic_fibers_mode(m.get(), mode, &atoms)
                                  : af_vector_list_read(atoms_path.c_str(), &atoms);
  out.reset(atoms);
  return status;
}

int run_decompose(const Common& c, const std::string& rhs, const std::string& atoms_path,
                  long long mode, bool have_mode) {
  int status = 0;
  MatrixPtr m = open_matrix(c, status);
  if (!m) return report(status);
  if (!have_mode) mode = af_matrix_cols(m.get());
  ListPtr atoms;
  status = load_or_compute_atoms(m, atoms_path, mode, atoms);
  if (status != AF_OK) return report(status);
  af_decomposition* d = nullptr;
  status = af_decompose(m.get(), rhs.c_str(), atoms.get(), mode, &d);
  if (status != AF_OK) return report(status);
  std::unique_ptr<af_decomposition, decltype([](af_decomposition* p) {
                    af_decomposition_free(p);
                  })>
      owner(d);
  char* text = nullptr;
  if (int st = af_decomposition_format(d, &text); st != AF_OK) return report(st);
  TextPtr text_owner(text);
  const std::string out_path = c.output.empty() ? "-" : c.output;
  return write_output(c, out_path, text, "decomposition") ? 0 : 1;
}

int run_solve(const Common& c, const std::string& rhs, std::string cost,
              const std::string& cost_file, const std::string& atoms_path) {
  if (!cost_file.empty()) {
    std::ifstream in(cost_file, std::ios::binary);
    if (!in) {
      std::cerr << "atomfiber: error: cannot open '" << cost_file << "' for reading\n";
      return 1;
    }
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    cost = data;
  }
  int status = 0;
  MatrixPtr m = open_matrix(c, status);
  if (!m) return report(status);
  ListPtr atoms;  // stays null unless a file was given: af_solve_ip computes otherwise
  if (!atoms_path.empty()) {
    status = load_or_compute_atoms(m, atoms_path, 0, atoms);
    if (status != AF_OK) return report(status);
  }
  af_solution* s = nullptr;
  status = af_solve_ip(m.get(), rhs.c_str(), cost.c_str(), atoms.get(), &s);
  if (status != AF_OK) return report(status);
  std::unique_ptr<af_solution, decltype([](af_solution* p) { af_solution_free(p); })> owner(s);
  char* text = nullptr;
  if (int st = af_solution_format(s, &text); st != AF_OK) return report(st);
  TextPtr text_owner(text);
  const std::string out_path = c.output.empty() ? "-" : c.output;
  return write_output(c, out_path, text, "solution") ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"atomic fibers of integer matrices: generation, decomposition, optimization"};
  app.require_subcommand(1);

  Common c;
  app.add_option("--threads", c.threads, "worker threads")->capture_default_str();
  app.add_flag("--deterministic,!--no-deterministic", c.deterministic,
               "keep internal reduction order canonical")
      ->capture_default_str();
  app.add_option("--limit", c.limit, "completion element budget")->capture_default_str();
  app.add_option("--cache-cap", c.cache_cap, "max memoized fiber minimal-sets (0 = unlimited)")
      ->capture_default_str();
  app.add_flag("--quiet,-q", c.quiet, "suppress progress notes");

  long long mode = 0;
  bool elements = false;
  std::string rhs, atoms_path, cost, cost_file, sublattice;

  auto add_matrix = [&](CLI::App* sub) {
    sub->add_option("matrix", c.matrix_path, "matrix file (\"d n\" header, then d rows)")
        ->required();
    sub->add_option("-o,--output", c.output, "output file, - for stdout");
  };

  CLI::App* atomic = app.add_subcommand("atomic", "fully sign-constrained atomic fibers");
  add_matrix(atomic);
  CLI::Option* atomic_mode =
      atomic->add_option("--mode", mode, "leading coordinates constrained nonnegative");
  atomic->add_flag("--elements", elements, "also write per-fiber element listings (.fib)");

  CLI::App* extended = app.add_subcommand("extended-atomic", "sign-unconstrained atomic fibers");
  add_matrix(extended);
  extended->add_option("--sublattice", sublattice,
                       "restrict to the group generated by these vectors (file)");
  extended->add_flag("--elements", elements, "also write per-fiber element listings (.fib)");

  CLI::App* graver = app.add_subcommand("graver", "conformally minimal kernel elements");
  add_matrix(graver);

  CLI::App* hilbert = app.add_subcommand("hilbert", "minimal nonnegative kernel elements");
  add_matrix(hilbert);

  CLI::App* minimal = app.add_subcommand("minimal", "conformally minimal fiber elements");
  add_matrix(minimal);
  minimal->add_option("--rhs", rhs, "right-hand side, e.g. \"8 7\"")->required();
  CLI::Option* minimal_mode =
      minimal->add_option("--mode", mode, "leading coordinates constrained nonnegative");

  CLI::App* decompose = app.add_subcommand("decompose", "write a fiber as a sum of atomic ones");
  add_matrix(decompose);
  decompose->add_option("--rhs", rhs, "right-hand side, e.g. \"8 7\"")->required();
  decompose->add_option("--atoms", atoms_path, "atom list file (computed when omitted)");
  CLI::Option* decompose_mode =
      decompose->add_option("--mode", mode, "leading coordinates constrained nonnegative");

  CLI::App* solve =
      app.add_subcommand("solve", "min{cost.z : matrix z = rhs, z >= 0} via atomic optima");
  add_matrix(solve);
  solve->add_option("--rhs", rhs, "right-hand side, e.g. \"8 7\"")->required();
  CLI::Option* cost_opt = solve->add_option("--cost", cost, "cost entries, e.g. \"1 1 1 1\"");
  CLI::Option* cost_file_opt =
      solve->add_option("--cost-file", cost_file, "file holding the cost entries");
  cost_opt->excludes(cost_file_opt);
  solve->add_option("--atoms", atoms_path, "atom list file (computed when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (solve->parsed() && cost.empty() && cost_file.empty()) {
    std::cerr << "atomfiber: error: solve needs --cost or --cost-file\n";
    return 2;
  }

  if (atomic->parsed()) return run_atomic(c, mode, !atomic_mode->empty(), elements);
  if (extended->parsed()) return run_extended(c, sublattice, elements);
  if (graver->parsed()) return run_list(c, af_graver_basis, "kernel basis");
  if (hilbert->parsed()) return run_list(c, af_hilbert_basis, "kernel basis");
  if (minimal->parsed()) return run_minimal(c, rhs, mode, !minimal_mode->empty());
  if (decompose->parsed()) return run_decompose(c, rhs, atoms_path, mode, !decompose_mode->empty());
  if (solve->parsed()) return run_solve(c, rhs, cost, cost_file, atoms_path);
  return 2;
}
