#include "x3sat/dimacs.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace x3sat {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool to_int(std::string_view tok, long long& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

} // namespace

Formula parse_dimacs(std::istream& in, HeaderFormat format) {
  Formula f;
  bool have_header = false;
  long long declared_m = 0;
  std::size_t clauses_read = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty() || toks[0][0] == 'c') continue;
    if (toks[0] == "p") {
      if (have_header) throw ParseError(lineno, "duplicate header");
      long long n = 0;
      bool kind_ok = toks.size() == 4 && (toks[1] == "x3sat" || (format == HeaderFormat::AcceptCnf && toks[1] == "cnf"));
      if (!kind_ok || !to_int(toks[2], n) || !to_int(toks[3], declared_m) || n < 0 || declared_m < 0)
        throw ParseError(lineno, "malformed header '" + line + "'");
      f.set_declared_vars(static_cast<int>(n));
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(lineno, "clause before header");
    std::vector<Literal> lits;
    bool terminated = false;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      long long code = 0;
      if (!to_int(toks[i], code)) throw ParseError(lineno, "bad literal '" + std::string(toks[i]) + "'");
      if (code == 0) {
        if (i + 1 != toks.size()) throw ParseError(lineno, "tokens after clause terminator");
        terminated = true;
        break;
      }
      if (std::llabs(code) > f.declared_vars()) throw ParseError(lineno, "variable " + std::to_string(std::llabs(code)) + " out of declared range");
      lits.push_back(Literal::from_dimacs(static_cast<int>(code)));
    }
    if (!terminated) throw ParseError(lineno, "clause not terminated by 0");
    if (lits.empty()) throw ParseError(lineno, "empty clause");
    if (lits.size() > 3) throw ParseError(lineno, "clause width " + std::to_string(lits.size()) + " exceeds 3");
    f.add_clause(std::move(lits));
    ++clauses_read;
  }
  if (!have_header) throw ParseError(lineno, "missing header");
  if (static_cast<long long>(clauses_read) != declared_m)
    throw ParseError(lineno, "header declares " + std::to_string(declared_m) + " clauses, found " + std::to_string(clauses_read));
  return f;
}

Formula parse_dimacs(std::string_view text, HeaderFormat format) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in, format);
}

std::string serialize_dimacs(const Formula& f) {
  std::ostringstream os;
  os << "p x3sat " << f.declared_vars() << ' ' << f.num_clauses() << '\n';
  for (const auto& [id, c] : f.clauses()) {
    std::vector<Literal> lits = c.literals;
    std::sort(lits.begin(), lits.end());
    for (Literal l : lits) os << l.dimacs() << ' ';
    os << "0\n";
  }
  return os.str();
}

std::string format_model(const Assignment& a, int n) {
  std::ostringstream os;
  os << 'v';
  for (Var v = 1; v <= n; ++v) {
    auto it = a.find(v);
    bool value = it != a.end() && it->second;
    os << ' ' << (value ? v : -v);
  }
  os << " 0";
  return os.str();
}

} // namespace x3sat
