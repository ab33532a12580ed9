#include "atomfiber/atomfiber.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "atomic.hpp"
#include "error.hpp"
#include "fiber.hpp"
#include "graver.hpp"
#include "io.hpp"
#include "ipsolve.hpp"
#include "options.hpp"

namespace af = atomfiber;

struct af_matrix {
  af::FiberOracle oracle;
  af_matrix(af::Mat m, af::Options o) : oracle(std::move(m), std::move(o)) {}
};

struct af_vector_list {
  std::vector<af::Vec> items;
};

struct af_decomposition {
  af::AtomDecomposition d;
};

struct af_solution {
  af::SolveResult r;
};

namespace {

thread_local std::string t_last_error;

template <typename Fn>
int guarded(Fn&& fn) noexcept {
  try {
    fn();
    return AF_OK;
  } catch (const af::Error& e) {
    t_last_error = e.what();
    return static_cast<int>(e.code());
  } catch (const std::bad_alloc&) {
    t_last_error = "out of memory";
    return AF_ERR_INTERNAL;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return AF_ERR_INTERNAL;
  }
}

int null_argument() {
  t_last_error = "null argument";
  return AF_ERR_INVALID;
}

char* dup_text(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

af::Options to_options(const af_options* o) {
  af::Options opt;
  if (o == nullptr) return opt;
  opt.threads = std::max(1, o->threads);
  opt.deterministic = o->deterministic != 0;
  if (o->limit > 0) opt.limit = o->limit;
  if (o->cache_cap > 0) opt.cache_cap = o->cache_cap;
  return opt;
}

af::Vec parse_rhs_checked(af_matrix* m, const char* rhs) {
  af::Vec b = af::parse_vector(rhs);
  if (b.dim() != m->oracle.matrix().rows())
    af::fail(af::ErrCode::dim, "right-hand side length does not match the matrix row count");
  return b;
}

std::size_t checked_mode(const af_matrix* m, long long mode) {
  if (mode < 0 || mode > static_cast<long long>(m->oracle.dim()))
    af::fail(af::ErrCode::invalid, "mode must lie between 0 and the matrix column count");
  return static_cast<std::size_t>(mode);
}

} // namespace

extern "C" {

void af_options_init(af_options* opt) {
  if (opt == nullptr) return;
  opt->threads = 1;
  opt->deterministic = 1;
  opt->limit = 1'000'000;
  opt->cache_cap = 0;
}

const char* af_last_error(void) { return t_last_error.c_str(); }

void af_text_free(char* text) { std::free(text); }

/* --- matrices ------------------------------------------------------- */

int af_matrix_parse(const char* text, const af_options* opt, af_matrix** out) {
  if (text == nullptr || out == nullptr) return null_argument();
  *out = nullptr;
  return guarded([&] { *out = new af_matrix(af::parse_matrix(text), to_options(opt)); });
}

int af_matrix_read(const char* path, const af_options* opt, af_matrix** out) {
  if (path == nullptr || out == nullptr) return null_argument();
  *out = nullptr;
  return guarded(
      [&] { *out = new af_matrix(af::parse_matrix(af::read_file(path)), to_options(opt)); });
}

void af_matrix_free(af_matrix* m) { delete m; }

long long af_matrix_rows(const af_matrix* m) {
  return m == nullptr ? 0 : static_cast<long long>(m->oracle.matrix().rows());
}

long long af_matrix_cols(const af_matrix* m) {
  return m == nullptr ? 0 : static_cast<long long>(m->oracle.matrix().cols());
}

int af_matrix_format(const af_matrix* m, char** out_text) {
  if (m == nullptr || out_text == nullptr) return null_argument();
  *out_text = nullptr;
  return guarded([&] { *out_text = dup_text(af::format_matrix(m->oracle.matrix())); });
}

/* --- vector lists ---------------------------------------------------- */

int af_vector_list_parse(const char* text, af_vector_list** out) {
  if (text == nullptr || out == nullptr) return null_argument();
  *out = nullptr;
  return guarded([&] { *out = new af_vector_list{af::parse_vector_list(text)}; });
}

int af_vector_list_read(const char* path, af_vector_list** out) {
  if (path == nullptr || out == nullptr) return null_argument();
  *out = nullptr;
  return guarded(
      [&] { *out = new af_vector_list{af::parse_vector_list(af::read_file(path))}; });
}

void af_vector_list_free(af_vector_list* l) { delete l; }

long long af_vector_list_size(const af_vector_list* l) {
  return l == nullptr ? 0 : static_cast<long long>(l->items.size());
}

long long af_vector_list_dim(const af_vector_list* l) {
  if (l == nullptr || l->items.empty()) return 0;
  return static_cast<long long>(l->items.front().dim());
}

int af_vector_list_row(const af_vector_list* l, long long index, char** out_text) {
  if (l == nullptr || out_text == nullptr) return null_argument();
  *out_text = nullptr;
  return guarded([&] {
    if (index < 0 || index >= static_cast<long long>(l->items.size()))
      af::fail(af::ErrCode::invalid, "vector index out of range");
    *out_text = dup_text(l->items[static_cast<std::size_t>(index)].str());
  });
}

int af_vector_list_format(const af_vector_list* l, char** out_text) {
  if (l == nullptr || out_text == nullptr) return null_argument();
  *out_text = nullptr;
  return guarded([&] { *out_text = dup_text(af::format_vector_list(l->items)); });
}

int af_vector_list_write(const af_vector_list* l, const char* path) {
  if (l == nullptr || path == nullptr) return null_argument();
  return guarded([&] { af::write_file(path, af::format_vector_list(l->items)); });
}

/* --- kernel bases ----------------------------------------------------- */

int af_graver_basis(af_matrix* m, af_vector_list** out) {
  if (m == nullptr || out == nullptr) return null_argument();
  *out = nullptr;
  return guarded([&] { *out = new af_vector_list{m->oracle.graver().elements}; });
}

int af_hilbert_basis(af_matrix* m, af_vector_list** out) {
  if (m == nullptr || out == nullptr) return null_argument();
  *out = nullptr;
  return guarded([&] { *out = new af_vector_list{m->oracle.hilbert()}; });
}

/* --- fibers ----------------------------------------------------------- */

int af_minimal_elements(af_matrix* m, const char* rhs, long long mode, af_vector_list** out) {
  if (m == nullptr || rhs == nullptr || out == nullptr) return null_argument();
  *out = nullptr;
  return guarded([&] {
    const auto set = m->oracle.minimal(parse_rhs_checked(m, rhs), checked_mode(m, mode));
    *out = new af_vector_list{set->elements};
  });
}

int af_fiber_elements(af_matrix* m, const char* rhs, long long mode, int* out_complete,
                      af_vector_list** out) {
  if (m == nullptr || rhs == nullptr || out_complete == nullptr || out == nullptr)
    return null_argument();
  *out = nullptr;
  *out_complete = 0;
  return guarded([&] {
    af::FiberElements f =
        af::fiber_elements(m->oracle, parse_rhs_checked(m, rhs), checked_mode(m, mode));
    *out_complete = f.complete ? 1 : 0;
    *out = new af_vector_list{std::move(f.elements)};
  });
}

int af_fiber_listings(af_matrix* m, const af_vector_list* rhs_list, long long mode,
                      char** out_text) {
  if (m == nullptr || rhs_list == nullptr || out_text == nullptr) return null_argument();
  *out_text = nullptr;
  return guarded([&] {
    const std::size_t k = checked_mode(m, mode);
    std::vector<af::FiberElements> fibers;
    fibers.reserve(rhs_list->items.size());
    for (const af::Vec& b : rhs_list->items) {
      if (b.dim() != m->oracle.matrix().rows())
        af::fail(af::ErrCode::dim, "right-hand side length does not match the matrix row count");
      fibers.push_back(af::fiber_elements(m->oracle, b, k));
    }
    *out_text = dup_text(af::format_fiber_listings(fibers));
  });
}

/* --- atomic fibers ----------------------------------------------------- */

int af_atomic_fibers(af_matrix* m, af_vector_list** out) {
  if (m == nullptr || out == nullptr) return null_argument();
  *out = nullptr;
  return guarded(
      [&] { *out = new af_vector_list{af::atomic_fibers(m->oracle).rhs_list}; });
}

int af_atomic_fibers_mode(af_matrix* m, long long mode, af_vector_list** out) {
  if (m == nullptr || out == nullptr) return null_argument();
  *out = nullptr;
  return guarded([&] {
    *out = new af_vector_list{af::atomic_fibers_mode(m->oracle, checked_mode(m, mode)).rhs_list};
  });
}

int af_extended_atomic_fibers(af_matrix* m, af_vector_list** out) {
  if (m == nullptr || out == nullptr) return null_argument();
  *out = nullptr;
  return guarded(
      [&] { *out = new af_vector_list{af::extended_atomic_fibers(m->oracle).rhs_list}; });
}

int af_sublattice_atomic_fibers(af_matrix* m, const af_vector_list* generators,
                                af_vector_list** out) {
  if (m == nullptr || generators == nullptr || out == nullptr) return null_argument();
  *out = nullptr;
  return guarded([&] {
    *out = new af_vector_list{
        af::sublattice_atomic_fibers(m->oracle, generators->items).rhs_list};
  });
}

/* --- decomposition ------------------------------------------------------ */

int af_decompose(af_matrix* m, const char* rhs, const af_vector_list* atoms, long long mode,
                 af_decomposition** out) {
  if (m == nullptr || rhs == nullptr || atoms == nullptr || out == nullptr)
    return null_argument();
  *out = nullptr;
  return guarded([&] {
    *out = new af_decomposition{af::decompose_fiber(m->oracle, parse_rhs_checked(m, rhs),
                                                    atoms->items, checked_mode(m, mode))};
  });
}

void af_decomposition_free(af_decomposition* d) { delete d; }

long long af_decomposition_size(const af_decomposition* d) {
  return d == nullptr ? 0 : static_cast<long long>(d->d.terms.size());
}

int af_decomposition_term(const af_decomposition* d, long long index, char** out_rhs,
                          char** out_multiplicity) {
  if (d == nullptr || out_rhs == nullptr || out_multiplicity == nullptr) return null_argument();
  *out_rhs = nullptr;
  *out_multiplicity = nullptr;
  return guarded([&] {
    if (index < 0 || index >= static_cast<long long>(d->d.terms.size()))
      af::fail(af::ErrCode::invalid, "term index out of range");
    const auto& term = d->d.terms[static_cast<std::size_t>(index)];
    *out_rhs = dup_text(term.rhs.str());
    *out_multiplicity = dup_text(term.multiplicity.str());
  });
}

int af_decomposition_format(const af_decomposition* d, char** out_text) {
  if (d == nullptr || out_text == nullptr) return null_argument();
  *out_text = nullptr;
  return guarded([&] { *out_text = dup_text(af::format_decomposition(d->d)); });
}

/* --- integer programs ---------------------------------------------------- */

int af_solve_ip(af_matrix* m, const char* rhs, const char* cost, const af_vector_list* atoms,
                af_solution** out) {
  if (m == nullptr || rhs == nullptr || cost == nullptr || out == nullptr)
    return null_argument();
  *out = nullptr;
  return guarded([&] {
    const af::Vec b = parse_rhs_checked(m, rhs);
    const std::vector<af::Vec> atom_list =
        atoms != nullptr ? atoms->items : af::atomic_fibers(m->oracle).rhs_list;
    const af::AtomicProgramTable table =
        af::solve_atomic_programs(m->oracle, atom_list, af::parse_cost(cost));
    *out = new af_solution{af::solve_ip(m->oracle, table, b)};
  });
}

void af_solution_free(af_solution* s) { delete s; }

int af_solution_unbounded(const af_solution* s) {
  return (s != nullptr && s->r.unbounded) ? 1 : 0;
}

int af_solution_value(const af_solution* s, char** out_text) {
  if (s == nullptr || out_text == nullptr) return null_argument();
  *out_text = nullptr;
  return guarded([&] {
    if (s->r.unbounded) af::fail(af::ErrCode::unbounded, "program is unbounded");
    *out_text = dup_text(s->r.value.str());
  });
}

int af_solution_point(const af_solution* s, char** out_text) {
  if (s == nullptr || out_text == nullptr) return null_argument();
  *out_text = nullptr;
  return guarded([&] {
    if (s->r.unbounded) af::fail(af::ErrCode::unbounded, "program is unbounded");
    *out_text = dup_text(s->r.point.str());
  });
}

int af_solution_format(const af_solution* s, char** out_text) {
  if (s == nullptr || out_text == nullptr) return null_argument();
  *out_text = nullptr;
  return guarded([&] { *out_text = dup_text(af::format_solve(s->r)); });
}

} /* extern "C" */
