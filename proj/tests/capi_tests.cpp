#include <doctest.h>

#include <atomfiber/atomfiber.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

namespace {

struct TextDeleter {
    void operator()(char* p) const { af_text_free(p); }
};
using Text = std::unique_ptr<char, TextDeleter>;

struct MatrixDeleter {
    void operator()(af_matrix* m) const { af_matrix_free(m); }
};
using Matrix = std::unique_ptr<af_matrix, MatrixDeleter>;

struct ListDeleter {
    void operator()(af_vector_list* l) const { af_vector_list_free(l); }
};
using List = std::unique_ptr<af_vector_list, ListDeleter>;

struct DecompDeleter {
    void operator()(af_decomposition* d) const { af_decomposition_free(d); }
};
using Decomp = std::unique_ptr<af_decomposition, DecompDeleter>;

struct SolutionDeleter {
    void operator()(af_solution* s) const { af_solution_free(s); }
};
using Solution = std::unique_ptr<af_solution, SolutionDeleter>;

Matrix parse_matrix_ok(const char* text) {
    af_matrix* raw = nullptr;
    REQUIRE(af_matrix_parse(text, nullptr, &raw) == AF_OK);
    REQUIRE(raw != nullptr);
    return Matrix(raw);
}

Matrix twisted_cubic() { return parse_matrix_ok("2 4\n3 2 1 0\n0 1 2 3\n"); }

std::string text_of(char* raw) {
    REQUIRE(raw != nullptr);
    Text guard(raw);
    return std::string(guard.get());
}

std::vector<std::string> rows_of(const af_vector_list* l) {
    std::vector<std::string> out;
    long long n = af_vector_list_size(l);
    for (long long i = 0; i < n; ++i) {
        char* row = nullptr;
        REQUIRE(af_vector_list_row(l, i, &row) == AF_OK);
        out.push_back(text_of(row));
    }
    return out;
}

std::filesystem::path temp_dir() {
    auto dir = std::filesystem::temp_directory_path() / "atomfiber_capi_test";
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("options initialize to the documented defaults") {
    af_options opt;
    af_options_init(&opt);
    CHECK(opt.threads == 1);
    CHECK(opt.deterministic == 1);
    CHECK(opt.limit == 1000000);
    CHECK(opt.cache_cap == 0);
}

TEST_CASE("last error is never null") {
    CHECK(af_last_error() != nullptr);
}

TEST_CASE("matrix lifecycle") {
    Matrix m = twisted_cubic();
    CHECK(af_matrix_rows(m.get()) == 2);
    CHECK(af_matrix_cols(m.get()) == 4);
    char* text = nullptr;
    REQUIRE(af_matrix_format(m.get(), &text) == AF_OK);
    CHECK(text_of(text) == "2 4\n3 2 1 0\n0 1 2 3\n");

    af_matrix* bad = nullptr;
    CHECK(af_matrix_parse("2 2\n1 2\n3", nullptr, &bad) == AF_ERR_PARSE);
    CHECK(bad == nullptr);
    CHECK(std::strlen(af_last_error()) > 0);

    CHECK(af_matrix_parse(nullptr, nullptr, &bad) == AF_ERR_INVALID);
    CHECK(af_matrix_parse("1 1\n1\n", nullptr, nullptr) == AF_ERR_INVALID);
    CHECK(af_matrix_rows(nullptr) == 0);
    CHECK(af_matrix_cols(nullptr) == 0);
}

TEST_CASE("matrix file io") {
    auto dir = temp_dir();
    auto path = dir / "m.mat";
    {
        std::ofstream out(path);
        out << "1 2\n5 -5\n";
    }
    af_matrix* raw = nullptr;
    REQUIRE(af_matrix_read(path.string().c_str(), nullptr, &raw) == AF_OK);
    Matrix m(raw);
    CHECK(af_matrix_rows(m.get()) == 1);
    CHECK(af_matrix_cols(m.get()) == 2);

    af_matrix* missing = nullptr;
    CHECK(af_matrix_read((dir / "nope.mat").string().c_str(), nullptr, &missing) == AF_ERR_IO);
    CHECK(missing == nullptr);
    std::filesystem::remove_all(dir);
}

TEST_CASE("vector list lifecycle") {
    af_vector_list* raw = nullptr;
    REQUIRE(af_vector_list_parse("3 2\n6 3\n0 3\n2 4\n", &raw) == AF_OK);
    List l(raw);
    CHECK(af_vector_list_size(l.get()) == 3);
    CHECK(af_vector_list_dim(l.get()) == 2);
    CHECK(rows_of(l.get()) == std::vector<std::string>{"0 3", "2 4", "6 3"});

    char* formatted = nullptr;
    REQUIRE(af_vector_list_format(l.get(), &formatted) == AF_OK);
    CHECK(text_of(formatted) == "3 2\n0 3\n2 4\n6 3\n");

    char* row = nullptr;
    CHECK(af_vector_list_row(l.get(), 3, &row) == AF_ERR_INVALID);
    CHECK(row == nullptr);
    CHECK(af_vector_list_row(l.get(), -1, &row) == AF_ERR_INVALID);

    af_vector_list* dup = nullptr;
    CHECK(af_vector_list_parse("2 2\n1 2\n1 2\n", &dup) == AF_ERR_PARSE);
    CHECK(dup == nullptr);

    auto dir = temp_dir();
    auto path = dir / "list.vec";
    REQUIRE(af_vector_list_write(l.get(), path.string().c_str()) == AF_OK);
    af_vector_list* back = nullptr;
    REQUIRE(af_vector_list_read(path.string().c_str(), &back) == AF_OK);
    List reread(back);
    CHECK(rows_of(reread.get()) == rows_of(l.get()));
    std::filesystem::remove_all(dir);
}

TEST_CASE("kernel bases through the C interface") {
    Matrix m = parse_matrix_ok("1 2\n1 1\n");
    af_vector_list* graver = nullptr;
    REQUIRE(af_graver_basis(m.get(), &graver) == AF_OK);
    List g(graver);
    CHECK(rows_of(g.get()) == std::vector<std::string>{"-1 1", "1 -1"});

    Matrix h = parse_matrix_ok("1 3\n1 1 -1\n");
    af_vector_list* hilbert = nullptr;
    REQUIRE(af_hilbert_basis(h.get(), &hilbert) == AF_OK);
    List hb(hilbert);
    CHECK(rows_of(hb.get()) == std::vector<std::string>{"0 1 1", "1 0 1"});
}

TEST_CASE("minimal elements and fiber listings") {
    Matrix m = twisted_cubic();
    af_vector_list* minimal = nullptr;
    REQUIRE(af_minimal_elements(m.get(), "6 6", 4, &minimal) == AF_OK);
    List l(minimal);
    CHECK(af_vector_list_size(l.get()) == 5);

    af_vector_list* empty = nullptr;
    REQUIRE(af_minimal_elements(m.get(), "1 1", 4, &empty) == AF_OK);
    List e(empty);
    CHECK(af_vector_list_size(e.get()) == 0);

    af_vector_list* bad = nullptr;
    CHECK(af_minimal_elements(m.get(), "1 2 3", 4, &bad) == AF_ERR_DIM);
    CHECK(af_minimal_elements(m.get(), "1 1", 5, &bad) == AF_ERR_INVALID);
    CHECK(af_minimal_elements(m.get(), "x y", 4, &bad) == AF_ERR_PARSE);

    int complete = 0;
    af_vector_list* elems = nullptr;
    REQUIRE(af_fiber_elements(m.get(), "8 7", 4, &complete, &elems) == AF_OK);
    List fe(elems);
    CHECK(complete == 1);
    CHECK(af_vector_list_size(fe.get()) == 6);

    REQUIRE(af_fiber_elements(m.get(), "8 7", 0, &complete, &elems) == AF_OK);
    List fe0(elems);
    CHECK(complete == 0);

    af_vector_list* rhs_list = nullptr;
    REQUIRE(af_vector_list_parse("2 2\n2 4\n6 3\n", &rhs_list) == AF_OK);
    List rl(rhs_list);
    char* listings = nullptr;
    REQUIRE(af_fiber_listings(m.get(), rl.get(), 4, &listings) == AF_OK);
    std::string text = text_of(listings);
    CHECK(text.find("2 2 4\n") == 0);
    CHECK(text.find("2 4 : 2 complete") != std::string::npos);
    CHECK(text.find("6 3 : 3 complete") != std::string::npos);
}

TEST_CASE("atomic fibers through the C interface") {
    Matrix m = twisted_cubic();
    af_vector_list* atoms = nullptr;
    REQUIRE(af_atomic_fibers(m.get(), &atoms) == AF_OK);
    List a(atoms);
    CHECK(af_vector_list_size(a.get()) == 18);
    CHECK(af_vector_list_dim(a.get()) == 2);

    af_vector_list* by_mode = nullptr;
    REQUIRE(af_atomic_fibers_mode(m.get(), 4, &by_mode) == AF_OK);
    List bm(by_mode);
    CHECK(rows_of(bm.get()) == rows_of(a.get()));
    CHECK(af_atomic_fibers_mode(m.get(), 9, &by_mode) == AF_ERR_INVALID);

    af_vector_list* ext = nullptr;
    REQUIRE(af_extended_atomic_fibers(m.get(), &ext) == AF_OK);
    List x(ext);
    CHECK(af_vector_list_size(x.get()) == 50);

    af_vector_list* gens = nullptr;
    REQUIRE(af_vector_list_parse("1 2\n3 3\n", &gens) == AF_OK);
    List g(gens);
    af_vector_list* sub = nullptr;
    REQUIRE(af_sublattice_atomic_fibers(m.get(), g.get(), &sub) == AF_OK);
    List s(sub);
    CHECK(rows_of(s.get()) == std::vector<std::string>{"-3 -3", "3 3", "-6 -6", "6 6"});

    af_vector_list* bad_gens = nullptr;
    REQUIRE(af_vector_list_parse("1 2\n1 1\n", &bad_gens) == AF_OK);
    List bg(bad_gens);
    af_vector_list* none = nullptr;
    CHECK(af_sublattice_atomic_fibers(m.get(), bg.get(), &none) == AF_ERR_INFEASIBLE_SEED);
    CHECK(none == nullptr);
}

TEST_CASE("decomposition through the C interface") {
    Matrix m = twisted_cubic();
    af_vector_list* atoms = nullptr;
    REQUIRE(af_atomic_fibers(m.get(), &atoms) == AF_OK);
    List a(atoms);

    af_decomposition* raw = nullptr;
    REQUIRE(af_decompose(m.get(), "8 7", a.get(), 4, &raw) == AF_OK);
    Decomp d(raw);
    REQUIRE(af_decomposition_size(d.get()) == 2);
    char* rhs = nullptr;
    char* mult = nullptr;
    REQUIRE(af_decomposition_term(d.get(), 0, &rhs, &mult) == AF_OK);
    CHECK(text_of(rhs) == "2 4");
    CHECK(text_of(mult) == "1");
    REQUIRE(af_decomposition_term(d.get(), 1, &rhs, &mult) == AF_OK);
    CHECK(text_of(rhs) == "6 3");
    CHECK(text_of(mult) == "1");
    CHECK(af_decomposition_term(d.get(), 2, &rhs, &mult) == AF_ERR_INVALID);

    char* formatted = nullptr;
    REQUIRE(af_decomposition_format(d.get(), &formatted) == AF_OK);
    CHECK(text_of(formatted) == "# fiber 8 7 mode 4\n2 4 : 1\n6 3 : 1\n");

    af_decomposition* fail = nullptr;
    CHECK(af_decompose(m.get(), "1 1", a.get(), 4, &fail) == AF_ERR_INFEASIBLE);
    CHECK(fail == nullptr);

    af_vector_list* units = nullptr;
    REQUIRE(af_vector_list_parse("1 2\n0 3\n", &units) == AF_OK);
    List u(units);
    CHECK(af_decompose(m.get(), "2 4", u.get(), 4, &fail) == AF_ERR_INCOMPLETE_ATOMS);
}

TEST_CASE("integer programs through the C interface") {
    Matrix m = twisted_cubic();
    af_solution* raw = nullptr;
    REQUIRE(af_solve_ip(m.get(), "8 7", "1 1 1 1", nullptr, &raw) == AF_OK);
    Solution s(raw);
    CHECK(af_solution_unbounded(s.get()) == 0);
    char* value = nullptr;
    REQUIRE(af_solution_value(s.get(), &value) == AF_OK);
    CHECK(text_of(value) == "5");
    char* point = nullptr;
    REQUIRE(af_solution_point(s.get(), &point) == AF_OK);
    CHECK(text_of(point) == "0 3 2 0");
    char* formatted = nullptr;
    REQUIRE(af_solution_format(s.get(), &formatted) == AF_OK);
    CHECK(text_of(formatted) == "value: 5\npoint: 0 3 2 0\n");

    // fractional costs flow through exactly
    af_solution* frac = nullptr;
    REQUIRE(af_solve_ip(m.get(), "2 4", "1/2 1/2 1/2 1/2", nullptr, &frac) == AF_OK);
    Solution f(frac);
    REQUIRE(af_solution_value(f.get(), &value) == AF_OK);
    CHECK(text_of(value) == "1");

    af_solution* infeasible = nullptr;
    CHECK(af_solve_ip(m.get(), "1 1", "1 1 1 1", nullptr, &infeasible) == AF_ERR_INFEASIBLE);
    CHECK(infeasible == nullptr);

    Matrix updown = parse_matrix_ok("1 2\n1 -1\n");
    af_solution* unb = nullptr;
    REQUIRE(af_solve_ip(updown.get(), "2", "-1 0", nullptr, &unb) == AF_OK);
    Solution ub(unb);
    CHECK(af_solution_unbounded(ub.get()) == 1);
    CHECK(af_solution_value(ub.get(), &value) == AF_ERR_UNBOUNDED);
    REQUIRE(af_solution_format(ub.get(), &formatted) == AF_OK);
    CHECK(text_of(formatted) == "unbounded\n");
}
