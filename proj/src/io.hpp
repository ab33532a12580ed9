#pragma once

#include <string>
#include <vector>

#include "atomic.hpp"
#include "ipsolve.hpp"

namespace atomfiber {

// Text formats. '#' starts a comment that runs to end of line everywhere.
//
//   matrix:       "d n" header, then d rows of n integers
//   vector list:  "m n" header, then m distinct rows of n integers
//   fiber lists:  "f d n" header, then f blocks, each "b_1 .. b_d : m
//                 complete|minimal" followed by m rows of n integers
//   decomposition: per atom one row "b_1 .. b_d : multiplicity"
//
// Vector lists are kept graded-lex sorted; a duplicate row is a parse error.

Mat parse_matrix(const std::string& text);
std::vector<Vec> parse_vector_list(const std::string& text);
Vec parse_vector(const std::string& text);
std::vector<Rat> parse_cost(const std::string& text);  // integers or fractions like 3/2

std::string format_matrix(const Mat& a);
std::string format_vector_list(const std::vector<Vec>& items);
std::string format_fiber_listings(const std::vector<FiberElements>& fibers);
std::string format_decomposition(const AtomDecomposition& d);
std::string format_solve(const SolveResult& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace atomfiber
