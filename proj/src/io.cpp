#include "io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>

#include "error.hpp"

namespace atomfiber {

namespace {

struct Tokens {
  std::vector<std::string> toks;
  std::size_t next = 0;

  bool done() const { return next >= toks.size(); }

  const std::string& take(const char* what) {
    if (done()) fail(ErrCode::parse, std::string("unexpected end of input, expected ") + what);
    return toks[next++];
  }

  void expect_done() const {
    if (!done()) fail(ErrCode::parse, "trailing input starting at '" + toks[next] + "'");
  }
};

Tokens tokenize(const std::string& text) {
  Tokens t;
  std::string cur;
  bool comment = false;
  for (char ch : text) {
    if (ch == '\n') comment = false;
    if (comment) continue;
    if (ch == '#') {
      comment = true;
      ch = ' ';
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) {
        t.toks.push_back(std::move(cur));
        cur.clear();
      }
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) t.toks.push_back(std::move(cur));
  return t;
}

bool looks_like_integer(const std::string& s) {
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Int take_int(Tokens& t, const char* what) {
  const std::string& s = t.take(what);
  if (!looks_like_integer(s))
    fail(ErrCode::parse, std::string("expected ") + what + ", got '" + s + "'");
  return Int(s);
}

std::size_t take_count(Tokens& t, const char* what, std::size_t min_value) {
  const Int v = take_int(t, what);
  if (v < static_cast<long long>(min_value) || v > 1'000'000'000)
    fail(ErrCode::parse, std::string("unreasonable ") + what + " '" + v.str() + "'");
  return v.convert_to<std::size_t>();
}

Vec take_row(Tokens& t, std::size_t n) {
  std::vector<Int> entries;
  entries.reserve(n);
  for (std::size_t i = 0; i < n; ++i) entries.push_back(take_int(t, "vector entry"));
  return Vec(std::move(entries));
}

} // namespace

Mat parse_matrix(const std::string& text) {
  Tokens t = tokenize(text);
  const std::size_t d = take_count(t, "row count", 1);
  const std::size_t n = take_count(t, "column count", 1);
  std::vector<Int> entries;
  entries.reserve(d * n);
  for (std::size_t i = 0; i < d * n; ++i) entries.push_back(take_int(t, "matrix entry"));
  t.expect_done();
  return Mat(d, n, std::move(entries));
}

std::vector<Vec> parse_vector_list(const std::string& text) {
  Tokens t = tokenize(text);
  const std::size_t m = take_count(t, "vector count", 0);
  const std::size_t n = take_count(t, "vector length", 1);
  std::vector<Vec> items;
  items.reserve(m);
  for (std::size_t i = 0; i < m; ++i) items.push_back(take_row(t, n));
  t.expect_done();
  std::sort(items.begin(), items.end(), GradedLexLess{});
  const auto dup = std::adjacent_find(items.begin(), items.end());
  if (dup != items.end()) fail(ErrCode::parse, "duplicate vector in list: " + dup->str());
  return items;
}

Vec parse_vector(const std::string& text) {
  Tokens t = tokenize(text);
  std::vector<Int> entries;
  while (!t.done()) entries.push_back(take_int(t, "vector entry"));
  if (entries.empty()) fail(ErrCode::parse, "empty vector");
  return Vec(std::move(entries));
}

std::vector<Rat> parse_cost(const std::string& text) {
  Tokens t = tokenize(text);
  std::vector<Rat> cost;
  while (!t.done()) {
    const std::string& s = t.take("cost entry");
    const auto slash = s.find('/');
    const std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!looks_like_integer(num) || !looks_like_integer(den) || Int(den) == 0)
      fail(ErrCode::parse, "expected cost entry, got '" + s + "'");
    cost.push_back(Rat(Int(num), Int(den)));
  }
  if (cost.empty()) fail(ErrCode::parse, "empty cost vector");
  return cost;
}

std::string format_matrix(const Mat& a) {
  std::ostringstream out;
  out << a.rows() << ' ' << a.cols() << '\n';
  for (std::size_t r = 0; r < a.rows(); ++r) out << a.row(r).str() << '\n';
  return out.str();
}

std::string format_vector_list(const std::vector<Vec>& items) {
  std::ostringstream out;
  out << items.size() << ' ' << (items.empty() ? 0 : items.front().dim()) << '\n';
  for (const Vec& v : items) out << v.str() << '\n';
  return out.str();
}

std::string format_fiber_listings(const std::vector<FiberElements>& fibers) {
  std::ostringstream out;
  std::size_t d = 0;
  std::size_t n = 0;
  for (const FiberElements& f : fibers) {
    d = f.rhs.dim();
    if (!f.elements.empty()) n = f.elements.front().dim();
  }
  out << fibers.size() << ' ' << d << ' ' << n << '\n';
  for (const FiberElements& f : fibers) {
    out << f.rhs.str() << " : " << f.elements.size() << ' '
        << (f.complete ? "complete" : "minimal") << '\n';
    for (const Vec& z : f.elements) out << z.str() << '\n';
  }
  return out.str();
}

std::string format_decomposition(const AtomDecomposition& d) {
  std::ostringstream out;
  out << "# fiber " << d.rhs.str() << " mode " << d.mode << '\n';
  for (const auto& term : d.terms) out << term.rhs.str() << " : " << term.multiplicity << '\n';
  return out.str();
}

std::string format_solve(const SolveResult& r) {
  if (r.unbounded) return "unbounded\n";
  std::ostringstream out;
  out << "value: " << r.value << '\n';
  out << "point: " << r.point.str() << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrCode::io, "cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) fail(ErrCode::io, "error while reading '" + path + "'");
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrCode::io, "cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) fail(ErrCode::io, "error while writing '" + path + "'");
}

} // namespace atomfiber
