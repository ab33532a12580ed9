#include <doctest.h>

#include "atomic.hpp"
#include "graver.hpp"
#include "io.hpp"
#include "support/cli_runner.hpp"
#include "support/fixtures.hpp"
#include "support/testutil.hpp"

#include <filesystem>
#include <string>
#include <vector>

using testsupport::CliResult;
using testsupport::data_file;
using testsupport::fresh_dir;
using testsupport::run_cli;
using testsupport::slurp;
using testsupport::spit;

namespace fs = std::filesystem;

namespace {

std::string q(const fs::path& p) { return "'" + p.string() + "'"; }

std::string frozen_atom_text() {
    std::vector<af::Vec> rhs;
    for (const auto& c : fixtures::twisted_cubic_atoms()) rhs.push_back(c.rhs);
    return af::format_vector_list(testsupport::sorted(std::move(rhs)));
}

}  // namespace

TEST_CASE("cli: atomic fibers to an explicit output file") {
    auto dir = fresh_dir("atomic");
    auto out = dir / "atoms.txt";
    CliResult r = run_cli("atomic " + q(data_file("twisted_cubic.mat")) + " -o " + q(out), dir);
    CHECK(r.code == 0);
    CHECK(r.err.find("wrote atom list") != std::string::npos);
    CHECK(slurp(out) == frozen_atom_text());
    fs::remove_all(dir);
}

TEST_CASE("cli: default output naming and element listings") {
    auto dir = fresh_dir("naming");
    fs::copy_file(data_file("twisted_cubic.mat"), dir / "tc.mat");
    CliResult r = run_cli("atomic " + q(dir / "tc.mat") + " --elements", dir);
    CHECK(r.code == 0);
    CHECK(fs::exists(dir / "tc.ato"));
    CHECK(fs::exists(dir / "tc.fib"));
    CHECK(slurp(dir / "tc.ato") == frozen_atom_text());

    // the listings file matches what the library renders
    af::FiberOracle oracle(fixtures::twisted_cubic());
    std::vector<af::FiberElements> expected;
    for (const auto& c : fixtures::twisted_cubic_atoms())
        expected.push_back(af::fiber_elements(oracle, c.rhs, 4));
    CHECK(slurp(dir / "tc.fib") == af::format_fiber_listings(expected));
    fs::remove_all(dir);
}

TEST_CASE("cli: atomic fibers to stdout") {
    auto dir = fresh_dir("stdout");
    CliResult r = run_cli("atomic " + q(data_file("twisted_cubic.mat")) + " -o -", dir);
    CHECK(r.code == 0);
    CHECK(r.out.rfind("18 2\n", 0) == 0);
    CHECK(r.out == frozen_atom_text());
    fs::remove_all(dir);
}

TEST_CASE("cli: extended atomic fibers of a small matrix") {
    auto dir = fresh_dir("extended");
    spit(dir / "two.mat", "1 1\n2\n");
    CliResult r = run_cli("extended-atomic " + q(dir / "two.mat") + " -o -", dir);
    CHECK(r.code == 0);
    CHECK(r.out == "2 1\n-2\n2\n");
    fs::remove_all(dir);
}

TEST_CASE("cli: sublattice restriction") {
    auto dir = fresh_dir("sublattice");
    CliResult r = run_cli("extended-atomic " + q(data_file("twisted_cubic.mat")) +
                              " --sublattice " + q(data_file("diag_sublattice.gen")) + " -o -",
                          dir);
    CHECK(r.code == 0);
    CHECK(r.out == "4 2\n-3 -3\n3 3\n-6 -6\n6 6\n");

    // a generator outside the image lattice is refused
    spit(dir / "bad.gen", "1 2\n1 1\n");
    CliResult bad = run_cli("extended-atomic " + q(data_file("twisted_cubic.mat")) +
                                " --sublattice " + q(dir / "bad.gen") + " -o -",
                            dir);
    CHECK(bad.code == 4);
    CHECK(bad.err.find("atomfiber: error:") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("cli: graver and hilbert listings") {
    auto dir = fresh_dir("kernels");
    spit(dir / "sum.mat", "1 2\n1 1\n");
    CliResult g = run_cli("graver " + q(dir / "sum.mat"), dir);
    CHECK(g.code == 0);
    CHECK(g.out == "2 2\n-1 1\n1 -1\n");

    spit(dir / "flow.mat", "1 3\n1 1 -1\n");
    CliResult h = run_cli("hilbert " + q(dir / "flow.mat"), dir);
    CHECK(h.code == 0);
    CHECK(h.out == "2 3\n0 1 1\n1 0 1\n");
    fs::remove_all(dir);
}

TEST_CASE("cli: minimal fiber elements") {
    auto dir = fresh_dir("minimal");
    CliResult r =
        run_cli("minimal " + q(data_file("twisted_cubic.mat")) + " --rhs '6 6'", dir);
    CHECK(r.code == 0);
    af::FiberOracle oracle(fixtures::twisted_cubic());
    CHECK(r.out == af::format_vector_list(oracle.minimal(af::Vec{6, 6}, 4)->elements));

    CliResult empty =
        run_cli("minimal " + q(data_file("twisted_cubic.mat")) + " --rhs '1 1'", dir);
    CHECK(empty.code == 0);
    CHECK(empty.out == "0 0\n");

    CliResult ext = run_cli(
        "minimal " + q(data_file("twisted_cubic.mat")) + " --rhs '-3 0' --mode 0", dir);
    CHECK(ext.code == 0);
    CHECK(ext.out == af::format_vector_list(oracle.minimal(af::Vec{-3, 0}, 0)->elements));
    fs::remove_all(dir);
}

TEST_CASE("cli: decompose with computed and loaded atoms") {
    auto dir = fresh_dir("decompose");
    CliResult r =
        run_cli("decompose " + q(data_file("twisted_cubic.mat")) + " --rhs '8 7'", dir);
    CHECK(r.code == 0);
    CHECK(r.out ==
          "# fiber 8 7 mode 4\n"
          "2 4 : 1\n"
          "6 3 : 1\n");

    spit(dir / "atoms.txt", frozen_atom_text());
    CliResult via_file = run_cli("decompose " + q(data_file("twisted_cubic.mat")) +
                                     " --rhs '8 7' --atoms " + q(dir / "atoms.txt"),
                                 dir);
    CHECK(via_file.code == 0);
    CHECK(via_file.out == r.out);
    fs::remove_all(dir);
}

TEST_CASE("cli: decompose failure exit codes") {
    auto dir = fresh_dir("decompose_fail");
    CliResult infeasible =
        run_cli("decompose " + q(data_file("twisted_cubic.mat")) + " --rhs '1 1'", dir);
    CHECK(infeasible.code == 4);
    CHECK(infeasible.err.find("atomfiber: error:") != std::string::npos);

    spit(dir / "units.txt", "4 2\n0 3\n1 2\n2 1\n3 0\n");
    CliResult incomplete = run_cli("decompose " + q(data_file("twisted_cubic.mat")) +
                                       " --rhs '2 4' --atoms " + q(dir / "units.txt"),
                                   dir);
    CHECK(incomplete.code == 5);
    fs::remove_all(dir);
}

TEST_CASE("cli: solve") {
    auto dir = fresh_dir("solve");
    CliResult r = run_cli("solve " + q(data_file("twisted_cubic.mat")) +
                              " --rhs '8 7' --cost '1 1 1 1'",
                          dir);
    CHECK(r.code == 0);
    CHECK(r.out == "value: 5\npoint: 0 3 2 0\n");

    spit(dir / "cost.txt", "1 1 1 1\n");
    CliResult via_file = run_cli("solve " + q(data_file("twisted_cubic.mat")) +
                                     " --rhs '8 7' --cost-file " + q(dir / "cost.txt"),
                                 dir);
    CHECK(via_file.code == 0);
    CHECK(via_file.out == r.out);

    spit(dir / "updown.mat", "1 2\n1 -1\n");
    CliResult unbounded =
        run_cli("solve " + q(dir / "updown.mat") + " --rhs '2' --cost '-1 0'", dir);
    CHECK(unbounded.code == 0);
    CHECK(unbounded.out == "unbounded\n");

    CliResult infeasible = run_cli(
        "solve " + q(data_file("twisted_cubic.mat")) + " --rhs '1 1' --cost '1 1 1 1'", dir);
    CHECK(infeasible.code == 4);
    fs::remove_all(dir);
}

TEST_CASE("cli: usage errors exit with 2") {
    auto dir = fresh_dir("usage");
    CHECK(run_cli("solve " + q(data_file("twisted_cubic.mat")) + " --rhs '8 7'", dir).code == 2);
    CliResult both = run_cli("solve " + q(data_file("twisted_cubic.mat")) +
                                 " --rhs '8 7' --cost '1 1 1 1' --cost-file x.txt",
                             dir);
    CHECK(both.code == 2);
    CHECK(run_cli("no-such-command", dir).code == 2);
    CHECK(run_cli("", dir).code == 2);
    CHECK(run_cli("minimal " + q(data_file("twisted_cubic.mat")), dir).code == 2);

    CliResult help = run_cli("--help", dir);
    CHECK(help.code == 0);
    CHECK(help.out.find("Usage") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("cli: io and limit failures") {
    auto dir = fresh_dir("io_fail");
    CHECK(run_cli("atomic " + q(dir / "missing.mat"), dir).code == 1);

    spit(dir / "broken.mat", "2 2\n1 2\n");
    CHECK(run_cli("atomic " + q(dir / "broken.mat"), dir).code == 2);

    CliResult limited = run_cli(
        "--limit 2 atomic " + q(data_file("twisted_cubic.mat")) + " -o -", dir);
    CHECK(limited.code == 3);
    fs::remove_all(dir);
}

TEST_CASE("cli: quiet suppresses the write note") {
    auto dir = fresh_dir("quiet");
    auto out = dir / "atoms.txt";
    CliResult loud =
        run_cli("atomic " + q(data_file("twisted_cubic.mat")) + " -o " + q(out), dir);
    CHECK(loud.err.find("wrote") != std::string::npos);
    CliResult quiet = run_cli(
        "-q atomic " + q(data_file("twisted_cubic.mat")) + " -o " + q(out), dir);
    CHECK(quiet.code == 0);
    CHECK(quiet.err.empty());
    fs::remove_all(dir);
}

TEST_CASE("cli: thread count leaves every output byte unchanged") {
    auto dir = fresh_dir("threads");
    fs::copy_file(data_file("twisted_cubic.mat"), dir / "one.mat");
    fs::copy_file(data_file("twisted_cubic.mat"), dir / "two.mat");
    CliResult one = run_cli("--threads 1 atomic " + q(dir / "one.mat") + " --elements", dir);
    CliResult two = run_cli("--threads 2 atomic " + q(dir / "two.mat") + " --elements", dir);
    CHECK(one.code == 0);
    CHECK(two.code == 0);
    CHECK(slurp(dir / "one.ato") == slurp(dir / "two.ato"));
    CHECK(slurp(dir / "one.fib") == slurp(dir / "two.fib"));

    CliResult ext1 = run_cli("--threads 1 extended-atomic " + q(dir / "one.mat") + " -o -", dir);
    std::string ext1_out = ext1.out;
    CliResult ext2 = run_cli("--threads 2 extended-atomic " + q(dir / "two.mat") + " -o -", dir);
    CHECK(ext1.code == 0);
    CHECK(ext2.code == 0);
    CHECK(ext1_out == ext2.out);
    fs::remove_all(dir);
}
