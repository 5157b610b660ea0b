#include "hermlie/parse.hpp"

#include <cctype>
#include <sstream>

#include "json.hpp"

namespace hermlie {

namespace {

struct Cursor {
  const std::string* text;
  size_t pos = 0;
  int line = 1;
  int col = 1;

  bool done() const { return pos >= text->size(); }
  char peek() const { return done() ? '\0' : (*text)[pos]; }
  char get() {
    char c = peek();
    ++pos;
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }
  void skip_blanks() {
    while (!done() && (peek() == ' ' || peek() == '\t')) get();
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }
};

Rational parse_rational_literal(Cursor& cur) {
  std::string tok;
  if (cur.peek() == '+' || cur.peek() == '-') tok += cur.get();
  while (std::isdigit(static_cast<unsigned char>(cur.peek()))) tok += cur.get();
  if (cur.peek() == '/') {
    tok += cur.get();
    while (std::isdigit(static_cast<unsigned char>(cur.peek()))) tok += cur.get();
  }
  try {
    return Rational(tok);
  } catch (const std::exception&) {
    cur.fail("invalid rational literal '" + tok + "'");
  }
}

int parse_frame_index(Cursor& cur) {
  char c = cur.peek();
  if (c < '1' || c > '6') cur.fail("frame index must be a digit 1..6");
  cur.get();
  return c - '0';
}

// A signed sum of <coeff> <index pair> terms; `expect_e` selects the "e13"
// spelling used in equation lists over the bare "13" of tuples.
Form<Rational> parse_term_sum(Cursor& cur, bool expect_e, char terminator) {
  Form<Rational> out(2);
  bool any = false;
  cur.skip_blanks();
  if (cur.peek() == '0') {
    Cursor probe = cur;
    probe.get();
    probe.skip_blanks();
    if (probe.done() || probe.peek() == terminator || probe.peek() == '\n') {
      cur = probe;
      return out;
    }
  }
  while (true) {
    cur.skip_blanks();
    Rational sign(1);
    if (cur.peek() == '+' || cur.peek() == '-') {
      if (cur.get() == '-') sign = -1;
      cur.skip_blanks();
    } else if (any) {
      break;
    }
    Rational coeff(1);
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      // Could be a bare index pair ("13") or a multiplier ("3/2 13", "2*13").
      Cursor probe = cur;
      Rational value = parse_rational_literal(probe);
      probe.skip_blanks();
      bool multiplier = false;
      if (probe.peek() == '*') {
        probe.get();
        probe.skip_blanks();
        multiplier = true;
      } else if (expect_e) {
        multiplier = probe.peek() == 'e';
      } else {
        // tuple form: a two-digit run is an index pair, anything else a multiplier
        size_t digits = 0;
        Cursor scan = cur;
        while (std::isdigit(static_cast<unsigned char>(scan.peek()))) {
          scan.get();
          ++digits;
        }
        multiplier = !(digits == 2 && scan.peek() != '/');
      }
      if (multiplier) {
        coeff = value;
        cur = probe;
        cur.skip_blanks();
      }
    }
    if (expect_e) {
      if (cur.peek() != 'e') cur.fail("expected monomial like e13");
      cur.get();
    }
    int i = parse_frame_index(cur);
    int j = parse_frame_index(cur);
    if (i == j) cur.fail("repeated index in 2-form monomial");
    Rational c = sign * coeff;
    if (j < i) {
      std::swap(i, j);
      c = -c;
    }
    out += c * Form<Rational>::monomial({i, j});
    any = true;
    cur.skip_blanks();
    if (cur.done() || cur.peek() == terminator || cur.peek() == '\n') break;
    if (cur.peek() != '+' && cur.peek() != '-') cur.fail("expected '+', '-' or end of entry");
  }
  return out;
}

LieAlgebra<Rational> parse_tuple(Cursor& cur) {
  LieAlgebra<Rational> g;
  cur.skip_blanks();
  if (cur.get() != '(') cur.fail("expected '('");
  for (int k = 1; k <= kFrameDim; ++k) {
    g.d_coframe[size_t(k - 1)] = parse_term_sum(cur, false, k < kFrameDim ? ',' : ')');
    cur.skip_blanks();
    char want = k < kFrameDim ? ',' : ')';
    if (cur.peek() != want) cur.fail(std::string("expected '") + want + "'");
    cur.get();
  }
  cur.skip_blanks();
  while (!cur.done()) {
    if (cur.peek() != '\n' && cur.peek() != ' ') cur.fail("trailing characters after tuple");
    cur.get();
  }
  return g;
}

LieAlgebra<Rational> parse_equations(Cursor& cur) {
  LieAlgebra<Rational> g;
  std::array<bool, kFrameDim> seen{};
  while (!cur.done()) {
    cur.skip_blanks();
    if (cur.peek() == '\n') {
      cur.get();
      continue;
    }
    if (cur.done()) break;
    if (cur.peek() != 'd') cur.fail("expected 'deK = ...'");
    cur.get();
    if (cur.peek() != 'e') cur.fail("expected 'deK = ...'");
    cur.get();
    int k = parse_frame_index(cur);
    if (seen[size_t(k - 1)]) cur.fail("duplicate equation for de" + std::to_string(k));
    seen[size_t(k - 1)] = true;
    cur.skip_blanks();
    if (cur.peek() != '=') cur.fail("expected '='");
    cur.get();
    g.d_coframe[size_t(k - 1)] = parse_term_sum(cur, true, '\n');
    cur.skip_blanks();
    if (!cur.done() && cur.peek() != '\n') cur.fail("trailing characters after equation");
  }
  return g;
}

}  // namespace

LieAlgebra<Rational> parse_structure_equations(const std::string& text) {
  Cursor cur{&text};
  cur.skip_blanks();
  while (!cur.done() && cur.peek() == '\n') cur.get();
  cur.skip_blanks();
  if (cur.done()) cur.fail("empty input");
  if (cur.peek() == '(') return parse_tuple(cur);
  return parse_equations(cur);
}

std::string serialize_structure_equations(const LieAlgebra<Rational>& g) {
  std::ostringstream os;
  for (int k = 1; k <= kFrameDim; ++k) {
    os << "de" << k << " = ";
    const auto& f = g.d_coframe[size_t(k - 1)];
    if (f.is_zero()) {
      os << "0\n";
      continue;
    }
    bool first = true;
    for (auto& [m, c] : f.terms()) {
      Rational v = c.re;
      bool neg = v < 0;
      Rational a = neg ? Rational(-v) : v;
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      if (a != 1) os << a.str() << " ";
      os << "e";
      for (int i : mask_indices(m)) os << i;
    }
    os << "\n";
  }
  return os.str();
}

LieAlgebra<Rational> lie_algebra_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 1, 1);
  }
  if (!j.contains("de") || !j["de"].is_array() || j["de"].size() != kFrameDim)
    throw ParseError("expected {\"de\": [six coefficient lists]}", 1, 1);
  LieAlgebra<Rational> g;
  for (int k = 0; k < kFrameDim; ++k) {
    for (const auto& triple : j["de"][size_t(k)]) {
      if (!triple.is_array() || triple.size() != 3)
        throw ParseError("each term must be [i, j, \"p/q\"]", 1, 1);
      int i = triple[0].get<int>(), jj = triple[1].get<int>();
      if (i < 1 || i > kFrameDim || jj < 1 || jj > kFrameDim || i == jj)
        throw ParseError("index out of range in JSON term", 1, 1);
      Rational c;
      try {
        c = Rational(triple[2].get<std::string>());
      } catch (const std::exception&) {
        throw ParseError("invalid rational in JSON term", 1, 1);
      }
      if (jj < i) {
        std::swap(i, jj);
        c = -c;
      }
      g.d_coframe[size_t(k)] += c * Form<Rational>::monomial({i, jj});
    }
  }
  return g;
}

std::string lie_algebra_to_json(const LieAlgebra<Rational>& g) {
  nlohmann::json j;
  j["de"] = nlohmann::json::array();
  for (int k = 0; k < kFrameDim; ++k) {
    nlohmann::json row = nlohmann::json::array();
    for (auto& [m, c] : g.d_coframe[size_t(k)].terms()) {
      auto idx = mask_indices(m);
      row.push_back({idx[0], idx[1], c.re.str()});
    }
    j["de"].push_back(row);
  }
  return j.dump();
}

}  // namespace hermlie
