#include "asreg/parse.hpp"

#include <cctype>

#include "json.hpp"

namespace asreg {

namespace {

class Parser {
 public:
  Parser(std::string_view text, AlphabetPtr alpha, std::optional<FieldSpec> field)
      : s_(text), alpha_(std::move(alpha)), field_(std::move(field)) {}

  NcPoly parse_all() {
    NcPoly v = expr();
    skip();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }

  [[noreturn]] void fail_at(const std::string& msg, size_t at) const {
    int line = 1, col = 1;
    for (size_t k = 0; k < at && k < s_.size(); ++k) {
      if (s_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool starts_atom() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
  }

  NcPoly expr() {
    NcPoly v = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        v += term();
      } else if (peek('-')) {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }

  NcPoly term() {
    NcPoly v = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        v = v * unary();
      } else if (peek('/')) {
        size_t at = ++pos_;
        NcPoly d = power();
        v = scalar_of(d, at, "division by a non-scalar").inverse() * v;
      } else if (starts_atom()) {
        v = v * power();
      } else {
        return v;
      }
    }
  }

  NcPoly unary() {
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

  Scalar scalar_of(const NcPoly& p, size_t at, const std::string& what) {
    if (p.degree() > 0) fail_at(what, at);
    Scalar c = p.coeff(Word());
    if (c.is_zero() && what == "division by a non-scalar") fail_at("division by zero", at);
    return c;
  }

  NcPoly power() {
    size_t at = pos_;
    NcPoly base = atom();
    if (!peek('^')) return base;
    ++pos_;
    skip();
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an exponent");
    long e = std::stol(std::string(s_.substr(start, pos_ - start)));
    if (neg) {
      Scalar c = scalar_of(base, at, "negative power of a non-scalar");
      if (c.is_zero()) fail_at("division by zero", at);
      return NcPoly::constant(alpha_, c.pow(-e));
    }
    NcPoly r = NcPoly::constant(alpha_, Scalar(1));
    for (long k = 0; k < e; ++k) r = r * base;
    return r;
  }

  NcPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      NcPoly v = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Rational r(std::string(s_.substr(start, pos_ - start)));
      return NcPoly::constant(alpha_, Scalar(r));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (alpha_) {
        int idx = alpha_->index(name);
        if (idx >= 0) return NcPoly::gen(alpha_, idx);
      }
      if (name == "i") {
        if (field_ && !field_->has_i()) fail_at("'i' is not available over " + field_->name(), start);
        return NcPoly::constant(alpha_, Scalar::i());
      }
      bool tvar = name == "t" || name == "q" || (field_ && field_->has_t() && name == field_->var);
      if (tvar) {
        if (field_ && !field_->has_t()) fail_at("'" + name + "' is only available over Qt", start);
        return NcPoly::constant(alpha_, Scalar::t());
      }
      fail_at("unknown symbol '" + name + "'", start);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  size_t pos_ = 0;

 private:
  std::string_view s_;
  AlphabetPtr alpha_;
  std::optional<FieldSpec> field_;
};

void check_field(const Scalar& s, const std::optional<FieldSpec>& field) {
  if (field && !s.belongs_to(*field))
    throw Error(ErrorKind::FieldMismatch, "value " + s.str() + " is not in " + field->name());
}

// Bracket matrix parser on top of the expression parser's location handling.
class MatrixParser {
 public:
  MatrixParser(std::string_view text, std::optional<FieldSpec> field) : s_(text), field_(std::move(field)) {}

  std::vector<std::vector<Scalar>> parse() {
    expect('[');
    std::vector<std::vector<Scalar>> rows;
    if (peek(']')) {
      ++pos_;
    } else {
      for (;;) {
        rows.push_back(row());
        if (peek(',')) {
          ++pos_;
          continue;
        }
        expect(']');
        break;
      }
    }
    skip();
    if (pos_ < s_.size()) error("trailing input");
    return rows;
  }

 private:
  std::vector<Scalar> row() {
    expect('[');
    std::vector<Scalar> r;
    for (;;) {
      r.push_back(entry());
      if (peek(',')) {
        ++pos_;
        continue;
      }
      expect(']');
      return r;
    }
  }

  Scalar entry() {
    skip();
    size_t start = pos_;
    bool quoted = pos_ < s_.size() && s_[pos_] == '"';
    size_t end;
    if (quoted) {
      end = s_.find('"', pos_ + 1);
      if (end == std::string_view::npos) error("unterminated string");
      ++start;
      pos_ = end + 1;
    } else {
      int depth = 0;
      end = pos_;
      while (end < s_.size()) {
        char c = s_[end];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && (c == ',' || c == ']')) break;
        ++end;
      }
      pos_ = end;
    }
    std::string_view body = s_.substr(start, end - start);
    if (body.find_first_not_of(" \t\r\n") == std::string_view::npos) error_at("empty matrix entry", start);
    try {
      Parser p(body, nullptr, field_);
      NcPoly v = p.parse_all();
      Scalar s = v.coeff(Word());
      check_field(s, field_);
      return s;
    } catch (const ParseError& e) {
      // Re-anchor the location in the whole text.
      size_t at = start;
      for (int l = 1, c = 1; at < end && (l < e.line() || c < e.column()); ++at) {
        if (s_[at] == '\n') {
          ++l;
          c = 1;
        } else {
          ++c;
        }
      }
      std::string msg = e.what();
      msg = msg.substr(0, msg.rfind(" at line "));
      error_at(msg, at);
    }
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) error(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void error(const std::string& msg) { error_at(msg, pos_); }
  [[noreturn]] void error_at(const std::string& msg, size_t at) {
    int line = 1, col = 1;
    for (size_t k = 0; k < at && k < s_.size(); ++k) {
      if (s_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  std::string_view s_;
  std::optional<FieldSpec> field_;
  size_t pos_ = 0;
};

Matrix build(const std::vector<std::vector<Scalar>>& rows, const std::optional<FieldSpec>& field) {
  for (const auto& r : rows)
    if (r.size() != rows[0].size()) throw Error(ErrorKind::SizeMismatch, "matrix rows have different lengths");
  if (rows.empty()) return Matrix(0, 0, field.value_or(FieldSpec{}));
  return field ? Matrix::from_rows(rows, *field) : Matrix::of(rows);
}

}  // namespace

Scalar parse_scalar(std::string_view text, const std::optional<FieldSpec>& field) {
  Parser p(text, nullptr, field);
  Scalar s = p.parse_all().coeff(Word());
  check_field(s, field);
  return s;
}

NcPoly parse_ncpoly(std::string_view text, const AlphabetPtr& alphabet, const std::optional<FieldSpec>& field) {
  Parser p(text, alphabet, field);
  NcPoly v = p.parse_all();
  for (const auto& [w, c] : v.terms()) check_field(c, field);
  return NcPoly(alphabet) + v;
}

Matrix parse_matrix(std::string_view text, const std::optional<FieldSpec>& field) {
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      // byte offset to line/column
      size_t at = e.byte > 0 ? e.byte - 1 : 0;
      int line = 1, col = 1;
      for (size_t k = 0; k < at && k < text.size(); ++k) {
        if (text[k] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      throw ParseError("malformed JSON", line, col);
    }
    std::optional<FieldSpec> f = field;
    if (j.contains("field")) {
      FieldSpec declared = FieldSpec::parse(j["field"].get<std::string>());
      if (f && *f != declared)
        throw Error(ErrorKind::FieldMismatch, "matrix declares field " + declared.name() + " but " + f->name() + " was requested");
      f = declared;
    }
    const char* key = j.contains("entries") ? "entries" : "matrix";
    if (!j.contains(key) || !j[key].is_array()) throw ParseError("JSON matrix needs an \"entries\" array", 1, 1);
    std::vector<std::vector<Scalar>> rows;
    for (const auto& r : j[key]) {
      if (!r.is_array()) throw ParseError("matrix rows must be arrays", 1, 1);
      std::vector<Scalar> row;
      for (const auto& e : r) {
        if (e.is_string())
          row.push_back(parse_scalar(e.get<std::string>(), f));
        else if (e.is_number_integer())
          row.push_back(parse_scalar(e.dump(), f));
        else
          throw ParseError("matrix entries must be integers or strings", 1, 1);
      }
      rows.push_back(std::move(row));
    }
    if ((j.contains("rows") && j["rows"] != rows.size()) || (j.contains("cols") && !rows.empty() && j["cols"] != rows[0].size()))
      throw Error(ErrorKind::SizeMismatch, "declared rows/cols disagree with entries");
    return build(rows, f);
  }
  MatrixParser mp(text, field);
  return build(mp.parse(), field);
}

std::string matrix_str(const Matrix& m) {
  std::string out = "[";
  for (int i = 0; i < m.rows(); ++i) {
    if (i) out += ",";
    out += "[";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out += ",";
      out += m(i, j).str(m.field().var);
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace asreg
