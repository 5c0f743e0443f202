#include "slnrect/textio.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "slnrect/errors.hpp"

namespace slnrect {

namespace {

constexpr std::size_t kMaxSize = 64;
constexpr unsigned long kMaxExponent = 4096;
constexpr int kMaxNesting = 256;

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool space(char c) { return c == ' ' || c == '\t'; }

class ExprParser {
public:
  ExprParser(std::string_view s, const VarNames& names, std::size_t line, std::size_t col0)
      : s_(s), names_(names), line_(line), col0_(col0) {}

  MPoly parse() {
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    MPoly r = expr();
    skip();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return r;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col0_ + pos_, msg); }

  void skip() {
    while (pos_ < s_.size() && space(s_[pos_])) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  // Summands are merged once at the end; adding them one by one is
  // quadratic in the number of terms.
  MPoly expr() {
    std::vector<Term> terms;
    auto take = [&](const MPoly& p, bool negate) {
      for (const auto& t : p.terms()) terms.push_back(Term{t.exps, negate ? -t.coeff : t.coeff});
    };
    take(term(), false);
    for (;;) {
      if (peek('+')) {
        ++pos_;
        take(term(), false);
      } else if (peek('-')) {
        ++pos_;
        take(term(), true);
      } else {
        return MPoly::from_terms(names_.size(), std::move(terms));
      }
    }
  }

  MPoly term() {
    MPoly acc = unary();
    while (peek('*')) {
      ++pos_;
      acc = acc * unary();
    }
    return acc;
  }

  MPoly unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  MPoly power() {
    MPoly base = atom();
    if (!peek('^')) return base;
    ++pos_;
    skip();
    std::string digits = read_digits();
    if (digits.empty()) fail("expected an exponent");
    if (digits.size() > 6 || std::stoul(digits) > kMaxExponent) fail("exponent too large");
    return base.pow(static_cast<unsigned>(std::stoul(digits)));
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  MPoly constant(const Scalar& c) const { return MPoly::constant(names_.size(), c); }

  MPoly atom() {
    skip();
    if (pos_ == s_.size()) fail("expected a term");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class value{mpz_class(read_digits())};
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        const std::size_t den_at = pos_;
        std::string den = read_digits();
        if (den.empty()) fail("expected a denominator");
        mpz_class d(den);
        if (d == 0) {
          pos_ = den_at;
          fail("zero denominator");
        }
        value = mpq_class(value.get_num(), d);
        value.canonicalize();
      }
      if (pos_ < s_.size() && s_[pos_] == 'i' && (pos_ + 1 == s_.size() || !ident_char(s_[pos_ + 1]))) {
        ++pos_;
        return constant(Scalar(0, value));
      }
      return constant(Scalar(value));
    }
    if (c == '(') {
      if (++depth_ > kMaxNesting) fail("nesting too deep");
      ++pos_;
      MPoly e = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      --depth_;
      return e;
    }
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (name == "i") return constant(Scalar::imaginary_unit());
      for (std::size_t k = 0; k < names_.size(); ++k)
        if (names_[k] == name) return MPoly::variable(names_.size(), k);
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  const VarNames& names_;
  std::size_t line_;
  std::size_t col0_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

// A nonblank line with its indentation removed.
struct Line {
  std::string_view text;
  std::size_t number;
  std::size_t indent;
};

class Lines {
public:
  explicit Lines(std::string_view text) {
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      if (start == text.size()) break;
      std::string_view l = text.substr(start, end - start);
      ++number;
      if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
      while (!l.empty() && space(l.back())) l.remove_suffix(1);
      std::size_t first = 0;
      while (first < l.size() && space(l[first])) ++first;
      if (first < l.size() && l[first] != '#') lines_.push_back({l.substr(first), number, first});
      last_ = number;
      if (end == text.size()) break;
      start = end + 1;
    }
  }

  bool done() const { return pos_ == lines_.size(); }
  const Line& peek() const {
    if (done()) throw ParseError(last_ + 1, 1, "unexpected end of input");
    return lines_[pos_];
  }
  Line next() {
    const Line& l = peek();
    ++pos_;
    return l;
  }
  void expect_end() const {
    if (!done()) throw ParseError(lines_[pos_].number, 1, "unexpected trailing content");
  }

private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::size_t last_ = 0;
};

// `col` is relative to the trimmed text.
[[noreturn]] void fail(const Line& l, std::size_t col, const std::string& msg) {
  throw ParseError(l.number, col + l.indent, msg);
}

// Whitespace-separated words with their 1-based columns.
std::vector<std::pair<std::string_view, std::size_t>> words(std::string_view s, std::size_t col0 = 1) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::size_t k = 0;
  while (k < s.size()) {
    while (k < s.size() && space(s[k])) ++k;
    std::size_t start = k;
    while (k < s.size() && !space(s[k])) ++k;
    if (k > start) out.emplace_back(s.substr(start, k - start), col0 + start);
  }
  return out;
}

struct Split {
  std::vector<std::pair<std::string_view, std::size_t>> head;
  std::string_view payload;
  std::size_t payload_col;
};

// "<head words> : <payload>"
Split split_colon(const Line& l) {
  std::size_t c = l.text.find(':');
  if (c == std::string_view::npos) fail(l, l.text.size() + 1, "expected ':'");
  return {words(l.text.substr(0, c)), l.text.substr(c + 1), c + 2 + l.indent};
}

void expect_line(Lines& in, std::string_view want) {
  Line l = in.next();
  auto w = words(l.text);
  std::string joined;
  for (const auto& [s, _] : w) joined += (joined.empty() ? "" : " ") + std::string(s);
  if (joined != want) fail(l, w.empty() ? 1 : w[0].second, "expected '" + std::string(want) + "'");
}

std::size_t parse_index(const std::pair<std::string_view, std::size_t>& w, const Line& l, std::size_t n) {
  std::size_t v = 0;
  if (w.first.empty() || w.first.size() > 3) fail(l, w.second, "expected an index");
  for (char c : w.first) {
    if (!std::isdigit(static_cast<unsigned char>(c))) fail(l, w.second, "expected an index");
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  if (v < 1 || v > n) fail(l, w.second, "index out of range 1.." + std::to_string(n));
  return v - 1;
}

// "<kind> n=<n>"
std::size_t parse_kind(Lines& in, std::string_view kind) {
  Line l = in.next();
  auto w = words(l.text);
  if (w.empty() || w[0].first != kind) fail(l, 1, "expected '" + std::string(kind) + " n=<n>'");
  if (w.size() != 2 || !w[1].first.starts_with("n=")) fail(l, w.size() > 1 ? w[1].second : l.text.size() + 1, "expected 'n=<n>'");
  std::string_view num = w[1].first.substr(2);
  std::size_t n = 0;
  if (num.empty() || num.size() > 3) fail(l, w[1].second + 2, "expected a size");
  for (char c : num) {
    if (!std::isdigit(static_cast<unsigned char>(c))) fail(l, w[1].second + 2, "expected a size");
    n = n * 10 + static_cast<std::size_t>(c - '0');
  }
  if (n < 1 || n > kMaxSize) fail(l, w[1].second + 2, "size must be in 1.." + std::to_string(kMaxSize));
  return n;
}

void parse_header(Lines& in) {
  Line l = in.next();
  if (l.text != kFormatHeader) fail(l, 1, "expected format header '" + std::string(kFormatHeader) + "'");
}

// Semantic failures inside a standalone file are malformed input; inside a
// certificate they are evidence of tampering.
enum class Strictness { parse, replay };

template <class F>
auto checked(Strictness mode, const Line& l, F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    if (mode == Strictness::parse) throw ParseError(l.number, 1, e.what());
    throw Error(ErrorKind::replay_mismatch, "line " + std::to_string(l.number) + ": " + e.what(), e.detail());
  }
}

// Entry lines until something else (or the end) is reached.
PolyMatrix parse_entries(Lines& in, std::size_t n, const Line& block) {
  PolyMatrix m(n, n);
  std::vector<bool> seen(n * n, false);
  std::size_t count = 0;
  while (!in.done() && in.peek().text.starts_with("entry")) {
    Line l = in.next();
    Split sp = split_colon(l);
    if (sp.head.size() != 3 || sp.head[0].first != "entry") fail(l, 1, "expected 'entry <i> <j> : <poly>'");
    std::size_t i = parse_index(sp.head[1], l, n);
    std::size_t j = parse_index(sp.head[2], l, n);
    if (seen[i * n + j]) fail(l, sp.head[1].second, "duplicate entry");
    seen[i * n + j] = true;
    ++count;
    m(i, j) = parse_unipoly(sp.payload, "t", l.number, sp.payload_col);
  }
  if (count != n * n) fail(block, 1, "expected " + std::to_string(n * n) + " entries, found " + std::to_string(count));
  return m;
}

SlCurve curve_from(PolyMatrix m, Strictness mode, const Line& block) {
  return checked(mode, block, [&] { return SlCurve::validate(std::move(m)); });
}

std::string format_entries(const SlCurve& c) {
  std::string out;
  for (std::size_t i = 0; i < c.n(); ++i)
    for (std::size_t j = 0; j < c.n(); ++j)
      out += "entry " + std::to_string(i + 1) + " " + std::to_string(j + 1) + " : " + c(i, j).to_string() + "\n";
  return out;
}

template <class T, class Cell>
std::string format_matrix(const Matrix<T>& m, Cell&& cell) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i > 0) out += " ; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ", ";
      out += cell(m(i, j));
    }
  }
  return out;
}

// Square matrix "a, b ; c, d" with cells parsed over `names`.
std::vector<std::vector<MPoly>> parse_matrix_cells(std::string_view s, std::size_t col0, const Line& l,
                                                   const VarNames& names) {
  std::vector<std::vector<MPoly>> rows(1);
  std::size_t start = 0;
  for (std::size_t k = 0; k <= s.size(); ++k) {
    if (k < s.size() && s[k] != ',' && s[k] != ';') continue;
    rows.back().push_back(parse_mpoly(s.substr(start, k - start), names, l.number, col0 + start));
    if (k < s.size() && s[k] == ';') rows.emplace_back();
    start = k + 1;
  }
  for (const auto& r : rows)
    if (r.size() != rows.size()) throw ParseError(l.number, col0, "matrix must be square");
  return rows;
}

ScalarMatrix parse_scalar_matrix(std::string_view s, std::size_t col0, const Line& l) {
  auto cells = parse_matrix_cells(s, col0, l, {});
  ScalarMatrix m(cells.size(), cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = 0; j < cells.size(); ++j) m(i, j) = cells[i][j].constant_term();
  return m;
}

PolyMatrix parse_poly_matrix(std::string_view s, std::size_t col0, const Line& l, const std::string& var) {
  auto cells = parse_matrix_cells(s, col0, l, {var});
  PolyMatrix m(cells.size(), cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = 0; j < cells.size(); ++j) m(i, j) = cells[i][j].to_uni(0);
  return m;
}

std::string scalar_cell(const Scalar& c) { return c.to_string(); }

std::string format_generator(const Generator& g, const EntryContext& ctx) {
  const VarNames names = ctx.names();
  auto idx = [](std::size_t i, std::size_t j) { return std::to_string(i + 1) + " " + std::to_string(j + 1); };
  return std::visit(
      [&](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, LeftElem>) return "left " + idx(v.i, v.j) + " : " + v.p.to_string(names);
        else if constexpr (std::is_same_v<V, RightElem>) return "right " + idx(v.i, v.j) + " : " + v.q.to_string(names);
        else if constexpr (std::is_same_v<V, ConstLeft>) return "const_left : " + format_matrix(v.b, scalar_cell);
        else if constexpr (std::is_same_v<V, ConstRight>) return "const_right : " + format_matrix(v.b, scalar_cell);
        else if constexpr (std::is_same_v<V, GlPair>) return "gl_pair : " + format_matrix(v.a, scalar_cell);
        else return "curve_right_mul : " + format_matrix(v.m, [](const UniPoly& p) { return p.to_string("s"); });
      },
      g);
}

Generator parse_generator(const Line& l, const EntryContext& ctx, Strictness mode) {
  Split sp = split_colon(l);
  if (sp.head.empty()) fail(l, 1, "expected a generator kind");
  const std::string_view kind = sp.head[0].first;
  const std::size_t n = ctx.n;
  Generator g;
  if (kind == "left" || kind == "right") {
    if (sp.head.size() != 3) fail(l, sp.head[0].second, "expected '" + std::string(kind) + " <i> <j> : <poly>'");
    std::size_t i = parse_index(sp.head[1], l, n);
    std::size_t j = parse_index(sp.head[2], l, n);
    MPoly p = parse_mpoly(sp.payload, ctx.names(), l.number, sp.payload_col);
    if (kind == "left") g = LeftElem{i, j, std::move(p)};
    else g = RightElem{i, j, std::move(p)};
  } else if (kind != "const_left" && kind != "const_right" && kind != "gl_pair" && kind != "curve_right_mul") {
    fail(l, sp.head[0].second, "unknown generator '" + std::string(kind) + "'");
  } else if (sp.head.size() != 1) {
    fail(l, sp.head[1].second, "unexpected indices");
  } else if (kind == "const_left") {
    g = ConstLeft{parse_scalar_matrix(sp.payload, sp.payload_col, l)};
  } else if (kind == "const_right") {
    g = ConstRight{parse_scalar_matrix(sp.payload, sp.payload_col, l)};
  } else if (kind == "gl_pair") {
    g = GlPair{parse_scalar_matrix(sp.payload, sp.payload_col, l)};
  } else {
    g = CurveRightMul{parse_poly_matrix(sp.payload, sp.payload_col, l, "s")};
  }
  return checked(mode, l, [&] { return check_generator(g, n); });
}

// Generator lines until a line that is not one (or the end).
AutWord parse_generators(Lines& in, std::size_t n, Strictness mode, std::string_view stop) {
  const EntryContext ctx{n};
  AutWord w(n);
  while (!in.done() && in.peek().text != stop) w.push_back(parse_generator(in.next(), ctx, mode));
  return w;
}

std::string format_generators(const AutWord& w) {
  const EntryContext ctx{w.n()};
  std::string out;
  for (const auto& g : w.generators()) out += format_generator(g, ctx) + "\n";
  return out;
}

std::string header() { return std::string(kFormatHeader) + "\n"; }

}  // namespace

MPoly parse_mpoly(std::string_view text, const VarNames& names, std::size_t line, std::size_t column) {
  return ExprParser(text, names, line, column).parse();
}

UniPoly parse_unipoly(std::string_view text, const std::string& var, std::size_t line, std::size_t column) {
  return parse_mpoly(text, {var}, line, column).to_uni(0);
}

std::string format_curve(const SlCurve& c) {
  return header() + "curve n=" + std::to_string(c.n()) + "\n" + format_entries(c);
}

SlCurve parse_curve(std::string_view text) {
  Lines in(text);
  parse_header(in);
  Line kind = in.peek();
  std::size_t n = parse_kind(in, "curve");
  PolyMatrix m = parse_entries(in, n, kind);
  in.expect_end();
  return curve_from(std::move(m), Strictness::parse, kind);
}

std::string format_word(const AutWord& w) {
  return header() + "word n=" + std::to_string(w.n()) + "\n" + format_generators(w);
}

AutWord parse_word(std::string_view text) {
  Lines in(text);
  parse_header(in);
  std::size_t n = parse_kind(in, "word");
  AutWord w = parse_generators(in, n, Strictness::parse, {});
  in.expect_end();
  return w;
}

std::string format_triple(const C3Triple& tr) {
  return header() + "triple\n" + "g1 : " + tr.g1.to_string() + "\n" + "g2 : " + tr.g2.to_string() + "\n" +
         "g3 : " + tr.g3.to_string() + "\n";
}

C3Triple parse_triple(std::string_view text) {
  Lines in(text);
  parse_header(in);
  expect_line(in, "triple");
  C3Triple tr;
  UniPoly* slots[] = {&tr.g1, &tr.g2, &tr.g3};
  for (int k = 0; k < 3; ++k) {
    Line l = in.next();
    Split sp = split_colon(l);
    const std::string want = "g" + std::to_string(k + 1);
    if (sp.head.size() != 1 || sp.head[0].first != want) fail(l, 1, "expected '" + want + " : <poly>'");
    *slots[k] = parse_unipoly(sp.payload, "t", l.number, sp.payload_col);
  }
  in.expect_end();
  return tr;
}

std::string format_c3_word(const C3Word& w) {
  static const VarNames names{"x", "y", "z"};
  std::string out = header() + "tame n=3\n";
  for (const auto& mv : w.moves) {
    if (const auto* e = std::get_if<C3Elementary>(&mv)) {
      out += "shift " + names[static_cast<std::size_t>(e->axis)] + " : " + e->h.to_string(names) + "\n";
    } else {
      out += "linear : " + format_matrix(std::get<C3Linear>(mv).a, scalar_cell) + "\n";
    }
  }
  return out;
}

C3Word parse_c3_word(std::string_view text) {
  static const VarNames names{"x", "y", "z"};
  Lines in(text);
  parse_header(in);
  Line kind = in.peek();
  if (parse_kind(in, "tame") != 3) fail(kind, 1, "expected 'tame n=3'");
  C3Word w;
  while (!in.done()) {
    Line l = in.next();
    Split sp = split_colon(l);
    if (sp.head.size() == 2 && sp.head[0].first == "shift") {
      std::size_t axis = 3;
      for (std::size_t k = 0; k < 3; ++k)
        if (sp.head[1].first == names[k]) axis = k;
      if (axis == 3) fail(l, sp.head[1].second, "expected axis x, y or z");
      MPoly h = parse_mpoly(sp.payload, names, l.number, sp.payload_col);
      if (h.degree_in(axis) > 0) throw ParseError(l.number, sp.payload_col, "shift payload involves its own coordinate");
      w.moves.push_back(C3Elementary{static_cast<C3Axis>(axis), std::move(h)});
    } else if (sp.head.size() == 1 && sp.head[0].first == "linear") {
      ScalarMatrix a = parse_scalar_matrix(sp.payload, sp.payload_col, l);
      if (a.rows() != 3) throw ParseError(l.number, sp.payload_col, "expected a 3x3 matrix");
      if (determinant(a).is_zero()) throw ParseError(l.number, sp.payload_col, "singular linear move");
      w.moves.push_back(C3Linear{std::move(a)});
    } else {
      fail(l, 1, "expected 'shift <axis> : <poly>' or 'linear : <matrix>'");
    }
  }
  return w;
}

std::string format_plane_word(const PlaneTameWord& w) {
  std::string out = header() + "tame n=2\n";
  for (const auto& mv : w.moves) {
    if (const auto* e = std::get_if<PlaneElementary>(&mv)) {
      const bool x = e->axis == PlaneAxis::x;
      out += std::string("shift ") + (x ? "x" : "z") + " : " + e->h.to_string(x ? "z" : "x") + "\n";
    } else {
      out += "linear : " + format_matrix(std::get<PlaneLinear>(mv).a, scalar_cell) + "\n";
    }
  }
  return out;
}

PlaneTameWord parse_plane_word(std::string_view text) {
  Lines in(text);
  parse_header(in);
  Line kind = in.peek();
  if (parse_kind(in, "tame") != 2) fail(kind, 1, "expected 'tame n=2'");
  PlaneTameWord w;
  while (!in.done()) {
    Line l = in.next();
    Split sp = split_colon(l);
    if (sp.head.size() == 2 && sp.head[0].first == "shift") {
      const std::string_view ax = sp.head[1].first;
      if (ax != "x" && ax != "z") fail(l, sp.head[1].second, "expected axis x or z");
      const bool x = ax == "x";
      UniPoly h = parse_unipoly(sp.payload, x ? "z" : "x", l.number, sp.payload_col);
      if (!h.coeff(0).is_zero()) throw ParseError(l.number, sp.payload_col, "shift must fix the origin");
      w.moves.push_back(PlaneElementary{x ? PlaneAxis::x : PlaneAxis::z, std::move(h)});
    } else if (sp.head.size() == 1 && sp.head[0].first == "linear") {
      ScalarMatrix a = parse_scalar_matrix(sp.payload, sp.payload_col, l);
      if (a.rows() != 2) throw ParseError(l.number, sp.payload_col, "expected a 2x2 matrix");
      if (determinant(a).is_zero()) throw ParseError(l.number, sp.payload_col, "singular linear move");
      w.moves.push_back(PlaneLinear{std::move(a)});
    } else {
      fail(l, 1, "expected 'shift <axis> : <poly>' or 'linear : <matrix>'");
    }
  }
  return w;
}

std::string format_certificate(const Certificate& cert) {
  const std::size_t n = cert.input.n();
  const EntryContext ctx{n};
  const VarNames names = ctx.names();
  std::ostringstream out;
  out << header() << "certificate n=" << n << "\n";
  out << "begin input\n" << format_entries(cert.input) << "end input\n";
  for (const auto& f : cert.input_facts) out << "fact input " << f << "\n";
  for (const auto& st : cert.stages) {
    out << "begin stage " << st.name << "\n";
    out << "begin word\n" << format_generators(st.word) << "end word\n";
    out << "begin curve\n" << format_entries(st.curve) << "end curve\n";
    for (const auto& f : st.facts) out << "fact " << f << "\n";
    if (st.bezout) {
      const BezoutSolution& bz = *st.bezout;
      out << "begin bezout\n";
      out << "begin base\n" << format_entries(bz.base) << "end base\n";
      for (std::size_t k = 0; k < bz.tildes.size(); ++k) out << "tilde " << k + 2 << " : " << bz.tildes[k].to_string() << "\n";
      out << "section : " << bz.section.to_string(names) << "\n";
      for (std::size_t k = 0; k < bz.lifted.size(); ++k)
        out << "lifted " << k + 2 << " : " << bz.lifted[k].to_string(names) << "\n";
      out << "end bezout\n";
    }
    out << "end stage\n";
  }
  out << "begin final\n" << format_entries(cert.final) << "end final\n";
  return out.str();
}

Certificate parse_certificate(std::string_view text) {
  Lines in(text);
  parse_header(in);
  const std::size_t n = parse_kind(in, "certificate");
  const EntryContext ctx{n};
  const VarNames names = ctx.names();
  constexpr auto replay = Strictness::replay;

  auto block_curve = [&](std::string_view name) {
    Line open = in.peek();
    expect_line(in, "begin " + std::string(name));
    PolyMatrix m = parse_entries(in, n, open);
    expect_line(in, "end " + std::string(name));
    return curve_from(std::move(m), replay, open);
  };
  auto fact_name = [&](const Line& l, std::size_t skip) {
    auto w = words(l.text);
    if (w.size() != skip + 1) fail(l, 1, "expected a fact name");
    return std::string(w[skip].first);
  };

  SlCurve input = block_curve("input");
  Certificate cert{input, {}, {}, input};
  while (in.peek().text.starts_with("fact input")) cert.input_facts.push_back(fact_name(in.next(), 2));

  while (in.peek().text.starts_with("begin stage")) {
    Line open = in.next();
    Stage st{fact_name(open, 2), AutWord(n), input, {}, std::nullopt};
    expect_line(in, "begin word");
    st.word = parse_generators(in, n, replay, "end word");
    expect_line(in, "end word");
    st.curve = block_curve("curve");
    while (in.peek().text.starts_with("fact ")) st.facts.push_back(fact_name(in.next(), 1));
    if (in.peek().text == "begin bezout") {
      in.next();
      SlCurve base = block_curve("base");
      BezoutSolution bz{base, {}, MPoly(ctx.nvars()), {}};
      auto indexed = [&](std::string_view key, std::size_t expect, const Line& l) {
        Split sp = split_colon(l);
        if (sp.head.size() != 2 || sp.head[0].first != key) fail(l, 1, "expected '" + std::string(key) + " <k> : <poly>'");
        if (sp.head[1].first != std::to_string(expect)) fail(l, sp.head[1].second, "expected index " + std::to_string(expect));
        return sp;
      };
      while (in.peek().text.starts_with("tilde")) {
        Line l = in.next();
        Split sp = indexed("tilde", bz.tildes.size() + 2, l);
        bz.tildes.push_back(parse_unipoly(sp.payload, "t", l.number, sp.payload_col));
      }
      Line sl = in.next();
      Split sp = split_colon(sl);
      if (sp.head.size() != 1 || sp.head[0].first != "section") fail(sl, 1, "expected 'section : <poly>'");
      bz.section = parse_mpoly(sp.payload, names, sl.number, sp.payload_col);
      while (in.peek().text.starts_with("lifted")) {
        Line l = in.next();
        Split lp = indexed("lifted", bz.lifted.size() + 2, l);
        bz.lifted.push_back(parse_mpoly(lp.payload, names, l.number, lp.payload_col));
      }
      expect_line(in, "end bezout");
      st.bezout = std::move(bz);
    }
    expect_line(in, "end stage");
    cert.stages.push_back(std::move(st));
  }
  cert.final = block_curve("final");
  in.expect_end();
  return cert;
}

}  // namespace slnrect
