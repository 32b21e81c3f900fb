// Copyright 2026 The arcgon Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "arcgon/document.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

#include "arcgon/errors.hpp"

namespace arcgon {
namespace {

struct Token {
  enum class Kind { word, number, symbol, end } kind = Kind::end;
  std::string text;
  std::size_t column = 0;
};

std::vector<Token> tokenize(const std::string& line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char ch = line[i];
    if (ch == '#') break;
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
      out.push_back({Token::Kind::number, line.substr(start, i - start), start + 1});
    } else if (std::isalpha(static_cast<unsigned char>(ch))) {
      while (i < line.size() && std::isalnum(static_cast<unsigned char>(line[i]))) ++i;
      out.push_back({Token::Kind::word, line.substr(start, i - start), start + 1});
    } else if (std::string("(){}[],+-").find(ch) != std::string::npos) {
      out.push_back({Token::Kind::symbol, std::string(1, ch), start + 1});
      ++i;
    } else {
      throw ParseError(line_no, start + 1, std::string("unexpected character '") + ch + "'");
    }
  }
  out.push_back({Token::Kind::end, "", line.size() + 1});
  return out;
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, std::size_t line_no)
      : tokens_(std::move(tokens)), line_(line_no) {}

  const Token& peek() const { return tokens_[pos_]; }
  bool at(const std::string& text) const { return peek().kind != Token::Kind::end && peek().text == text; }

  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    const std::string found = t.kind == Token::Kind::end ? "end of line" : "'" + t.text + "'";
    throw ParseError(line_, t.column, "expected " + what + ", found " + found);
  }

  void expect(const std::string& text) {
    if (!at(text)) fail("'" + text + "'");
    ++pos_;
  }

  bool accept(const std::string& text) {
    if (!at(text)) return false;
    ++pos_;
    return true;
  }

  void expect_end() {
    if (peek().kind != Token::Kind::end) fail("end of line");
  }

  std::int64_t integer() {
    const bool negative = accept("-");
    if (peek().kind != Token::Kind::number) fail("an integer");
    const Token& t = peek();
    // Parse with the sign attached so the most negative value fits.
    const std::string digits = (negative ? "-" : "") + t.text;
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw ParseError(line_, t.column, "integer out of range");
    }
    ++pos_;
    return value;
  }

  // E ::= INT | [-]n [(+|-) INT]
  AffinePointMap expression(std::int32_t thread) {
    const std::size_t save = pos_;
    const bool negative = accept("-");
    if (accept("n")) {
      AffinePointMap m{thread, negative ? -1 : 1, 0};
      if (accept("+")) {
        m.offset = integer();
      } else if (at("-")) {
        ++pos_;
        const std::int64_t v = integer();
        if (v == std::numeric_limits<std::int64_t>::min()) fail("a smaller offset");
        m.offset = -v;
      }
      return m;
    }
    pos_ = save;
    return {thread, 0, integer()};
  }

  std::int32_t thread_index() {
    const Token& t = peek();
    const std::int64_t v = integer();
    if (v < 0 || v > std::numeric_limits<std::int32_t>::max()) {
      throw ParseError(line_, t.column, "thread index out of range");
    }
    return static_cast<std::int32_t>(v);
  }

  AffinePointMap point(bool finite, bool allow_n) {
    if (finite) {
      if (!allow_n) return {0, 0, integer()};
      fail("a threaded point");
    }
    expect("(");
    const std::int32_t t = thread_index();
    expect(",");
    const std::size_t col = peek().column;
    AffinePointMap m = expression(t);
    if (!allow_n && m.slope != 0) throw ParseError(line_, col, "arcs take constant points");
    expect(")");
    return m;
  }

  std::optional<std::int64_t> bound(const std::string& infinite) {
    if (at("+") || at("-")) {
      const std::size_t save = pos_;
      const std::string sign = peek().text;
      ++pos_;
      if (accept("inf")) {
        if (sign != infinite) throw ParseError(line_, tokens_[save].column, "misplaced " + sign + "inf");
        return std::nullopt;
      }
      pos_ = save;
    }
    return integer();
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

std::string expression_text(const AffinePointMap& m) {
  if (m.slope == 0) return std::to_string(m.offset);
  std::string s = m.slope < 0 ? "-n" : "n";
  if (m.offset > 0) s += " + " + std::to_string(m.offset);
  if (m.offset < 0) s += " - " + std::to_string(m.offset).substr(1);
  return s;
}

std::string map_text(const AffinePointMap& m) {
  return "(" + std::to_string(m.thread) + ", " + expression_text(m) + ")";
}

}  // namespace

SymbolicArcSet parse_document(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::optional<SymbolicArcSet> set;
  while (std::getline(in, line)) {
    ++line_no;
    LineParser p(tokenize(line, line_no), line_no);
    if (p.peek().kind == Token::Kind::end) continue;
    if (!set) {
      p.expect("order");
      const bool finite = p.accept("finite");
      if (!finite && !p.accept("threads")) p.fail("'finite' or 'threads'");
      const std::int64_t size = p.integer();
      p.expect_end();
      try {
        if (finite) {
          set.emplace(CyclicOrder::finite_gon(size));
        } else {
          if (size > std::numeric_limits<std::int32_t>::max()) throw DomainError("too many threads");
          set.emplace(CyclicOrder::thread_gon(static_cast<std::int32_t>(size)));
        }
      } catch (const DomainError& e) {
        throw SemanticError(line_no, e.what());
      }
      continue;
    }
    const bool finite = set->order().is_finite();
    if (p.accept("arc")) {
      const AffinePointMap a = p.point(finite, false);
      const AffinePointMap b = p.point(finite, false);
      p.expect_end();
      try {
        const Point pa = finite ? set->order().finite_point(a.offset) : Point{a.thread, a.offset};
        if (finite && (a.offset < 0 || a.offset >= set->order().size() || b.offset < 0 ||
                       b.offset >= set->order().size())) {
          throw DomainError("point index outside the polygon");
        }
        const Point pb = finite ? set->order().finite_point(b.offset) : Point{b.thread, b.offset};
        set->add_arc(make_arc(set->order(), pa, pb));
      } catch (const DomainError& e) {
        throw SemanticError(line_no, e.what());
      }
    } else if (p.accept("family")) {
      if (finite) throw SemanticError(line_no, "families need a thread order");
      ArcFamily f;
      p.expect("{");
      f.first = p.point(false, true);
      p.expect(",");
      f.second = p.point(false, true);
      p.expect("}");
      p.expect("for");
      p.expect("n");
      p.expect("in");
      if (!p.accept("[")) p.expect("(");
      f.range.lo = p.bound("-");
      p.expect(",");
      f.range.hi = p.bound("+");
      if (!p.accept("]")) p.expect(")");
      if (p.accept("exclude")) {
        p.expect("{");
        if (!p.at("}")) {
          f.excluded.insert(p.integer());
          while (p.accept(",")) f.excluded.insert(p.integer());
        }
        p.expect("}");
      }
      p.expect_end();
      try {
        set->add_family(std::move(f));
      } catch (const DomainError& e) {
        throw SemanticError(line_no, e.what());
      }
    } else {
      p.fail("'arc' or 'family'");
    }
  }
  if (!set) throw ParseError(line_no + 1, 1, "missing order declaration");
  return *set;
}

std::string print_document(const SymbolicArcSet& s) {
  const CyclicOrder& c = s.order();
  std::string out = c.is_finite() ? "order finite " : "order threads ";
  out += std::to_string(c.size()) + "\n";
  for (const Arc& p : s.explicit_arcs()) {
    out += "arc " + c.format(p.a) + " " + c.format(p.b) + "\n";
  }
  for (const auto& f : s.families()) {
    out += "family {" + map_text(f.first) + ", " + map_text(f.second) + "} for n in " +
           to_string(f.range);
    if (!f.excluded.empty()) {
      out += " exclude {";
      bool first = true;
      for (std::int64_t v : f.excluded) {
        if (!first) out += ", ";
        out += std::to_string(v);
        first = false;
      }
      out += "}";
    }
    out += "\n";
  }
  return out;
}

}  // namespace arcgon
