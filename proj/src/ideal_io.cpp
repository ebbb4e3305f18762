#include "qdepth/ideal_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

namespace qdepth {

namespace {

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

int parse_nonneg_int(const std::string& s, int line, const char* what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError(line, std::string("expected a nonnegative integer ") + what + ", got '" + s + "'");
  try {
    return std::stoi(s);
  } catch (const std::exception&) {
    throw ParseError(line, std::string("integer out of range ") + what + ": '" + s + "'");
  }
}

Monomial parse_monomial_text(const std::string& text, int nvars, int line) {
  std::vector<int> e(static_cast<size_t>(nvars), 0);
  std::stringstream ss(text);
  std::string factor;
  while (std::getline(ss, factor, '*')) {
    factor = strip(factor);
    if (factor == "1") continue;
    if (factor.empty() || factor[0] != 'x')
      throw ParseError(line, "bad factor '" + factor + "' (expected x<i>, x<i>^<e> or 1)");
    std::string body = factor.substr(1);
    size_t caret = body.find('^');
    int exp = 1;
    if (caret != std::string::npos) {
      exp = parse_nonneg_int(strip(body.substr(caret + 1)), line, "as exponent");
      body = body.substr(0, caret);
    }
    int idx = parse_nonneg_int(strip(body), line, "as variable index");
    if (idx < 1 || idx > nvars)
      throw ParseError(line, "variable index " + std::to_string(idx) + " out of range 1.." +
                                 std::to_string(nvars));
    e[static_cast<size_t>(idx - 1)] += exp;
  }
  return Monomial(std::move(e));
}

}  // namespace

MonomialIdeal parse_ideal(std::istream& in) {
  int lineno = 0;
  bool have_vars = false;
  int nvars = 0;
  std::vector<Monomial> gens;
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string text = strip(raw);
    if (text.empty()) continue;
    if (!have_vars) {
      if (text.rfind("vars:", 0) != 0)
        throw ParseError(lineno, "expected header 'vars: <n>' before any monomial");
      nvars = parse_nonneg_int(strip(text.substr(5)), lineno, "as variable count");
      if (nvars < 1) throw ParseError(lineno, "variable count must be >= 1");
      have_vars = true;
      continue;
    }
    gens.push_back(parse_monomial_text(text, nvars, lineno));
  }
  if (!have_vars) throw ParseError(lineno, "missing 'vars: <n>' header");
  return MonomialIdeal::from_generators(nvars, std::move(gens));
}

MonomialIdeal parse_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open ideal file '" + path + "'");
  return parse_ideal(in);
}

std::string format_ideal(const MonomialIdeal& ideal) {
  std::string out = "vars: " + std::to_string(ideal.nvars()) + "\n";
  for (const Monomial& g : ideal.generators()) out += g.str() + "\n";
  return out;
}

}  // namespace qdepth
