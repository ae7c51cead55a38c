#include "exalg/text.hpp"

#include <cctype>
#include <sstream>

namespace exalg {

namespace {

[[noreturn]] void malformed(std::string_view text, const std::string& why) {
  fail(ErrorCode::MalformedInput, why + " in '" + std::string(text) + "'");
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }
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
    if (!accept(c)) malformed(text_, std::string("expected '") + c + "'");
  }
  bool accept_word(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }
  // Characters allowed in a scalar literal.
  std::string_view take_scalar_token() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      const bool signed_denominator = c == '-' && pos_ > start && text_[pos_ - 1] == '/';
      if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && !signed_denominator) break;
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }
  std::size_t take_natural() {
    skip_space();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > 1000000) malformed(text_, "index too large");
      ++pos_;
    }
    if (pos_ == start) malformed(text_, "expected an index");
    return value;
  }
  std::string_view text() const { return text_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Scalar parse_scalar_token(std::string_view token, const FieldSpec& field) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  return parse_scalar(token, field);
}

std::string rational_text(const Scalar& c, bool& negative) {
  negative = c.is_negative();
  return negative ? (-c).to_string() : c.to_string();
}

Vector parse_vector_at(Cursor& cur, const FieldSpec& field) {
  cur.expect('[');
  std::vector<Scalar> coords;
  if (!cur.accept(']')) {
    do {
      coords.push_back(parse_scalar_token(cur.take_scalar_token(), field));
    } while (cur.accept(','));
    cur.expect(']');
  }
  if (coords.empty()) malformed(cur.text(), "empty vector");
  return Vector(field, std::move(coords));
}

}  // namespace

std::string to_string(const Multivector& m) {
  if (m.is_zero()) return "0";
  const char letter = m.is_dual() ? 'E' : 'e';
  std::ostringstream out;
  bool first = true;
  for (const auto& [index, c] : m.terms()) {
    bool negative = false;
    const std::string magnitude = rational_text(c, negative);
    if (negative) {
      out << '-';
    } else if (!first) {
      out << '+';
    }
    out << magnitude << '*' << letter << '{';
    bool first_index = true;
    for (std::size_t i : index_list(index)) {
      if (!first_index) out << ',';
      out << i;
      first_index = false;
    }
    out << '}';
    first = false;
  }
  return out.str();
}

Multivector parse_multivector(std::string_view text, const FieldSpec& field, std::size_t dim) {
  Cursor cur(text);
  if (cur.done()) malformed(text, "empty expression");
  std::optional<bool> dual;
  Multivector out(field, dim);
  bool first = true;
  while (!cur.done()) {
    bool negate = false;
    if (!first) {
      if (cur.accept('-')) {
        negate = true;
      } else if (!cur.accept('+')) {
        malformed(text, "expected '+' or '-' between terms");
      }
    }
    first = false;
    Scalar coefficient = Scalar::one(field);
    const char next = cur.peek();
    if (next != 'e' && next != 'E') {
      const std::string_view token = cur.take_scalar_token();
      if (token.empty()) malformed(text, "expected a term");
      if (token == "-" || token == "+") {
        if (token == "-") negate = !negate;
      } else {
        coefficient = parse_scalar_token(token, field);
      }
      const char after = cur.peek();
      if (after == '\0' || after == '+' || after == '-') {
        if (token == "-" || token == "+") malformed(text, "dangling sign");
        // A bare scalar is a multiple of e{}.
        out.add_term(0, negate ? -coefficient : coefficient);
        continue;
      }
      if (after != 'e' && after != 'E') cur.expect('*');
    }
    const char letter = cur.peek();
    if (letter != 'e' && letter != 'E') malformed(text, "expected e{...} or E{...}");
    cur.accept(letter);
    const bool term_dual = letter == 'E';
    if (dual && *dual != term_dual) fail(ErrorCode::DualMismatch, "mixed e{} and E{} terms in '" + std::string(text) + "'");
    dual = term_dual;
    cur.expect('{');
    std::vector<std::size_t> indices;
    if (!cur.accept('}')) {
      do {
        indices.push_back(cur.take_natural());
      } while (cur.accept(','));
      cur.expect('}');
    }
    if (negate) coefficient = -coefficient;
    auto normalized = normalize_indices(indices, dim);
    if (!normalized) continue;
    out.add_term(normalized->first, normalized->second > 0 ? coefficient : -coefficient);
  }
  return out.with_dual(dual.value_or(false));
}

std::size_t max_index(std::string_view text) {
  std::size_t best = 0;
  bool inside = false;
  std::size_t value = 0;
  for (char c : text) {
    if (c == '{') {
      inside = true;
      value = 0;
    } else if (!inside) {
      continue;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      value = value * 10 + static_cast<std::size_t>(c - '0');
    } else {
      best = std::max(best, value);
      value = 0;
      if (c == '}') inside = false;
    }
  }
  return best;
}

std::string to_string(const Vector& v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out << ',';
    out << v[i];
  }
  out << ']';
  return out.str();
}

Vector parse_vector(std::string_view text, const FieldSpec& field) {
  Cursor cur(text);
  Vector v = parse_vector_at(cur, field);
  if (!cur.done()) malformed(text, "trailing characters");
  return v;
}

std::string to_string(const std::vector<Vector>& vs) {
  std::string out = "span{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ',';
    out += to_string(vs[i]);
  }
  return out + "}";
}

std::vector<Vector> parse_vector_list(std::string_view text, const FieldSpec& field) {
  Cursor cur(text);
  if (!cur.accept_word("span")) malformed(text, "expected 'span{'");
  cur.expect('{');
  std::vector<Vector> vs;
  if (!cur.accept('}')) {
    do {
      vs.push_back(parse_vector_at(cur, field));
    } while (cur.accept(','));
    cur.expect('}');
  }
  if (!cur.done()) malformed(text, "trailing characters");
  for (const Vector& v : vs) {
    if (v.dim() != vs.front().dim()) fail(ErrorCode::DimMismatch, "vectors of different length in '" + std::string(text) + "'");
  }
  return vs;
}

std::string to_string(const Matrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += ',';
    out += to_string(m.row(i));
  }
  return out + "]";
}

Matrix parse_matrix(std::string_view text, const FieldSpec& field) {
  Cursor cur(text);
  cur.expect('[');
  std::vector<Vector> rows;
  do {
    rows.push_back(parse_vector_at(cur, field));
  } while (cur.accept(','));
  cur.expect(']');
  if (!cur.done()) malformed(text, "trailing characters");
  for (const Vector& r : rows) {
    if (r.dim() != rows.front().dim()) fail(ErrorCode::DimMismatch, "ragged matrix '" + std::string(text) + "'");
  }
  return Matrix::from_rows(rows);
}

GramForm parse_gram(std::string_view text, const FieldSpec& field) {
  constexpr std::string_view diag = "diag:";
  constexpr std::string_view full = "matrix:";
  if (text.substr(0, diag.size()) == diag) {
    std::vector<int> signs;
    Cursor cur(text.substr(diag.size()));
    do {
      const std::string_view token = cur.take_scalar_token();
      if (token == "+1" || token == "1") {
        signs.push_back(1);
      } else if (token == "-1") {
        signs.push_back(-1);
      } else {
        fail(ErrorCode::BadSign, "'" + std::string(token) + "' in '" + std::string(text) + "'");
      }
    } while (cur.accept(','));
    if (!cur.done()) malformed(text, "trailing characters");
    return standard_form(field, signs);
  }
  if (text.substr(0, full.size()) == full) return GramForm::validate(parse_matrix(text.substr(full.size()), field));
  malformed(text, "expected 'diag:' or 'matrix:'");
}

}  // namespace exalg
