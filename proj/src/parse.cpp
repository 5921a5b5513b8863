#include "groupcodes/parse.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "groupcodes/error.hpp"

namespace groupcodes {

namespace {

[[noreturn]] void parse_error(std::string_view what, std::string_view text) {
  throw Error(ErrorKind::kParseError, std::string(what) + " in \"" + std::string(text) + "\"");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_uint(std::string_view s, std::string_view context) {
  s = trim(s);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) parse_error("expected an integer", context);
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

GroupPtr read_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParseError, "cannot open group table " + path);
  std::vector<std::vector<std::size_t>> table;
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    std::istringstream row(line);
    std::vector<std::size_t> entries;
    long long v = 0;
    while (row >> v) {
      if (v < 0) throw Error(ErrorKind::kParseError, "negative entry in group table " + path);
      entries.push_back(static_cast<std::size_t>(v));
    }
    if (!row.eof()) throw Error(ErrorKind::kParseError, "non-integer entry in group table " + path);
    if (!entries.empty()) table.push_back(std::move(entries));
  }
  return Group::from_table(std::move(table), {}, "table:" + path);
}

class ElementParser {
 public:
  ElementParser(const GroupAlgebraPtr& algebra, std::string_view text) : kg_(algebra), text_(text) {}

  AlgebraElement run() {
    AlgebraElement x = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return x;
  }

 private:
  [[noreturn]] void fail(std::string_view what) const {
    parse_error(std::string(what) + " at position " + std::to_string(pos_), text_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_primary() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'a' || c == 'g' || c == '(';
  }

  std::uint64_t number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc()) fail("number out of range");
    return v;
  }

  AlgebraElement expression() {
    AlgebraElement acc = kg_->zero();
    bool negate = false;
    if (peek() == '-') {
      ++pos_;
      negate = true;
    } else if (peek() == '+') {
      ++pos_;
    }
    for (;;) {
      AlgebraElement t = term();
      acc = negate ? acc - t : acc + t;
      const char c = peek();
      if (c != '+' && c != '-') return acc;
      negate = c == '-';
      ++pos_;
    }
  }

  AlgebraElement term() {
    AlgebraElement acc = factor();
    for (;;) {
      if (peek() == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (starts_primary()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  AlgebraElement factor() {
    AlgebraElement base = primary();
    if (peek() != '^') return base;
    ++pos_;
    std::uint64_t e = number();
    AlgebraElement result = kg_->one();
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

  AlgebraElement primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      AlgebraElement inner = expression();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint64_t v = number() % kg_->p();
      return kg_->scalar(kg_->field().from_int(static_cast<std::int64_t>(v)));
    }
    if (c == 'a') {
      ++pos_;
      return kg_->scalar(kg_->field().generator());
    }
    if (c == 'g') {
      ++pos_;
      std::size_t index = 1;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) index = number();
      if (index >= kg_->n()) fail("group index out of range");
      return kg_->group_element(index);
    }
    fail("expected a term");
  }

  const GroupAlgebraPtr& kg_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldTowerPtr parse_field(std::string_view text) {
  std::string normalized(text);
  for (char& c : normalized)
    if (c == ',' || c == ';') c = ' ';
  std::istringstream in(normalized);
  std::optional<std::uint64_t> q;
  std::optional<std::uint64_t> m;
  std::optional<std::vector<Scalar>> modulus;
  std::string token;
  bool in_modulus = false;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) {
      if (!in_modulus) parse_error("expected key=value", text);
      modulus->push_back(static_cast<Scalar>(parse_uint(token, text)));
      continue;
    }
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    in_modulus = false;
    if (key == "q") {
      q = parse_uint(value, text);
    } else if (key == "m") {
      m = parse_uint(value, text);
    } else if (key == "modulus") {
      modulus.emplace();
      if (!value.empty()) modulus->push_back(static_cast<Scalar>(parse_uint(value, text)));
      in_modulus = true;
    } else {
      parse_error("unknown field key '" + key + "'", text);
    }
  }
  if (!q) parse_error("missing q", text);
  if (!m) m = 1;
  if (*m == 0 || *m > 64) parse_error("m out of range", text);
  try {
    return FieldTower::create(*q, static_cast<unsigned>(*m), modulus);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kInvalidArgument) throw Error(ErrorKind::kParseError, e.what());
    throw;
  }
}

GroupPtr parse_group(std::string_view text) {
  text = trim(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) parse_error("expected kind:argument", text);
  const std::string_view kind = text.substr(0, colon);
  const std::string_view arg = text.substr(colon + 1);
  if (kind == "table") return read_table(std::string(trim(arg)));
  if (kind == "product") {
    const auto parts = split(arg, 'x');
    if (parts.size() < 2) parse_error("product needs at least two factors", text);
    GroupPtr g = parse_group(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) g = Group::direct_product(*g, *parse_group(parts[i]));
    return g;
  }
  const std::uint64_t k = parse_uint(arg, text);
  if (k == 0 || k > Group::kMaxOrder) parse_error("group parameter out of range", text);
  if (kind == "cyclic") return Group::cyclic(k);
  if (kind == "dihedral") return Group::dihedral(k);
  if (kind == "symmetric") return Group::symmetric(k);
  parse_error("unknown group kind '" + std::string(kind) + "'", text);
}

AlgebraElement parse_element(const GroupAlgebraPtr& algebra, std::string_view text) {
  if (trim(text).empty()) parse_error("empty element", text);
  return ElementParser(algebra, text).run();
}

std::vector<std::size_t> parse_index_list(std::string_view text) {
  std::vector<std::size_t> out;
  if (trim(text).empty()) return out;
  for (auto part : split(text, ',')) out.push_back(parse_uint(part, text));
  return out;
}

std::vector<FormKind> parse_form_list(std::string_view text) {
  std::vector<FormKind> out;
  for (auto part : split(text, ',')) out.push_back(parse_form_kind(part));
  return out;
}

namespace {

unsigned entry_bits(Scalar p) {
  unsigned b = 0;
  for (Scalar v = p - 1; v > 0; v >>= 1) ++b;
  return b;
}

}  // namespace

std::string pack_row(std::span<const Scalar> row, Scalar p) {
  static constexpr char kHex[] = "0123456789abcdef";
  const unsigned b = entry_bits(p);
  std::string out;
  unsigned acc = 0;
  unsigned filled = 0;
  for (Scalar v : row) {
    for (unsigned i = b; i-- > 0;) {
      acc = (acc << 1) | ((v >> i) & 1u);
      if (++filled == 4) {
        out.push_back(kHex[acc]);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(kHex[acc << (4 - filled)]);
  return out;
}

FpVector unpack_row(std::string_view hex, Scalar p, std::size_t length) {
  const unsigned b = entry_bits(p);
  if (hex.size() != (length * b + 3) / 4) parse_error("hex row has the wrong length", hex);
  std::vector<bool> bits;
  bits.reserve(hex.size() * 4);
  for (char c : hex) {
    unsigned v = 0;
    if (c >= '0' && c <= '9') {
      v = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      v = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      v = c - 'A' + 10;
    } else {
      parse_error("invalid hex digit", hex);
    }
    for (unsigned i = 4; i-- > 0;) bits.push_back((v >> i) & 1u);
  }
  FpVector row(length, 0);
  for (std::size_t j = 0; j < length; ++j) {
    Scalar v = 0;
    for (unsigned i = 0; i < b; ++i) v = (v << 1) | bits[j * b + i];
    if (v >= p) parse_error("entry out of range for F_" + std::to_string(p), hex);
    row[j] = v;
  }
  return row;
}

}  // namespace groupcodes
