#include "nary/algebra_file.hpp"

#include "nary/errors.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

namespace nary {

namespace {

/// Cursor over one line; columns are 1-based.
class LineReader {
public:
  LineReader(std::string_view text, int line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  int column() const { return static_cast<int>(pos_) + 1; }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string_view word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }
  long integer(const char* what) {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    long v = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (start == pos_ || ec != std::errc()) {
      pos_ = start;
      fail(std::string("expected ") + what);
    }
    (void)ptr;
    return v;
  }
  /// Unsigned rational `a` or `a/b`.
  Rational magnitude() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) ++pos_;
    std::string_view tok = text_.substr(start, pos_ - start);
    try {
      if (tok.empty() || tok.front() == '/') throw std::invalid_argument("empty");
      return Rational::parse(tok);
    } catch (const std::exception&) {
      pos_ = start;
      fail("malformed number");
    }
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, column(), what); }

private:
  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

struct Line {
  int number;
  std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    line = line.substr(0, line.find('#'));
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) out.push_back({number, line});
    if (text.empty()) break;
  }
  return out;
}

long header_value(const Line& line, std::string_view key) {
  LineReader r(line.text, line.number);
  if (r.word() != key) throw ParseError(line.number, 1, "expected '" + std::string(key) + " <value>'");
  const long v = r.integer("a positive integer");
  if (!r.at_end()) r.fail("trailing characters");
  if (v < 1) throw ParseError(line.number, 0, std::string(key) + " must be positive");
  return v;
}

Relation parse_relation(const Line& line, int arity, int dim, Symmetry sym) {
  LineReader r(line.text, line.number);
  Relation rel{{}, zero_vector(dim)};
  r.expect('[');
  while (!r.accept(']')) {
    if (r.at_end()) r.fail("unterminated index list");
    const int col = r.column();
    const long i = r.integer("an index");
    if (i < 1 || i > dim) throw ParseError(line.number, col, "index " + std::to_string(i) + " out of range 1.." + std::to_string(dim));
    rel.indices.push_back(static_cast<int>(i - 1));
  }
  if (static_cast<int>(rel.indices.size()) != arity)
    throw ParseError(line.number, 1, "expected " + std::to_string(arity) + " indices, got " + std::to_string(rel.indices.size()));
  r.expect('=');

  if (r.peek() == '0') {
    // A lone `0` is the zero vector; anything else starting with 0 is a term.
    LineReader probe = r;
    probe.magnitude();
    if (probe.at_end()) {
      r.magnitude();
      return rel;
    }
  }
  bool first = true;
  while (true) {
    bool negative = false;
    if (!first) {
      if (r.accept('-')) negative = true;
      else r.expect('+');
    }
    if (r.accept('-')) negative = !negative;
    Rational c = r.magnitude();
    int col = r.column();
    long j = 0;
    if (r.accept('*')) {
      col = r.column();
      j = r.integer("a basis index");
    } else {
      // bare index
      if (!c.is_integer()) throw ParseError(line.number, col, "expected '*'");
      j = static_cast<long>(c.numerator().get_si());
      c = 1;
      col = 0;
    }
    if (j < 1 || j > dim) throw ParseError(line.number, col, "basis index " + std::to_string(j) + " out of range 1.." + std::to_string(dim));
    rel.value[static_cast<std::size_t>(j - 1)] += negative ? -c : c;
    first = false;
    if (r.at_end()) break;
  }

  if (sym == Symmetry::skew && !is_zero(rel.value)) {
    for (std::size_t a = 0; a < rel.indices.size(); ++a)
      for (std::size_t b = a + 1; b < rel.indices.size(); ++b)
        if (rel.indices[a] == rel.indices[b])
          throw RepeatedIndexNonzero("line " + std::to_string(line.number) + ": skew relation with repeated index " +
                                     std::to_string(rel.indices[a] + 1) + " has a nonzero value");
  }
  return rel;
}

}  // namespace

NAryProduct parse_algebra(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  const int last = lines.empty() ? 1 : lines.back().number;
  if (lines.size() < 4) throw ParseError(last, 0, "incomplete header");

  {
    LineReader r(lines[0].text, lines[0].number);
    if (r.word() != "nary") throw ParseError(lines[0].number, 1, "expected 'nary v1'");
    if (r.word() != "v1") throw ParseError(lines[0].number, 0, "unsupported format version");
    if (!r.at_end()) r.fail("trailing characters");
  }
  const long arity = header_value(lines[1], "arity");
  const long dim = header_value(lines[2], "dim");
  Symmetry sym;
  {
    LineReader r(lines[3].text, lines[3].number);
    if (r.word() != "symmetry") throw ParseError(lines[3].number, 1, "expected 'symmetry <kind>'");
    const int col = r.column();
    const auto parsed = parse_symmetry(r.word());
    if (!parsed) throw ParseError(lines[3].number, col, "unknown symmetry kind");
    if (!r.at_end()) r.fail("trailing characters");
    sym = *parsed;
  }
  if (sym == Symmetry::cyclic && arity != 3) throw ParseError(lines[3].number, 0, "cyclic symmetry needs arity 3");

  std::vector<Relation> rels;
  for (std::size_t i = 4; i < lines.size(); ++i)
    rels.push_back(parse_relation(lines[i], static_cast<int>(arity), static_cast<int>(dim), sym));
  return make_product(static_cast<int>(arity), static_cast<int>(dim), sym, rels);
}

std::string format_combination(std::span<const Rational> v) {
  std::string s;
  for (std::size_t j = 0; j < v.size(); ++j) {
    const Rational& c = v[j];
    if (c.is_zero()) continue;
    if (s.empty()) s += c.str();
    else s += c.sign() < 0 ? " - " + (-c).str() : " + " + c.str();
    s += "*" + std::to_string(j + 1);
  }
  return s.empty() ? "0" : s;
}

std::string serialize_algebra(const NAryProduct& prod) {
  std::ostringstream out;
  out << "nary v1\n"
      << "arity " << prod.arity() << "\n"
      << "dim " << prod.dim() << "\n"
      << "symmetry " << to_string(prod.symmetry()) << "\n";
  for (const auto& [key, value] : prod.constants()) {
    Vector dense = zero_vector(prod.dim());
    for (const auto& [j, c] : value) dense[static_cast<std::size_t>(j)] = c;
    out << "[" << format_tuple(key) << "] = " << format_combination(dense) << "\n";
  }
  return out.str();
}

}  // namespace nary
