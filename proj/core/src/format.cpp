#include "coxa/format.hpp"

#include <cctype>
#include <charconv>

#include "coxa/error.hpp"

namespace coxa {

std::string format_block(const AffineBlock& b) {
  std::string out;
  for (const auto& p : b.pairs()) {
    if (!out.empty()) out += ' ';
    out += "h(" + std::to_string(p.j) + "," + std::to_string(p.i) + ") a";
  }
  return out;
}

std::string format_finite(const FiniteElement& x) {
  if (x.is_identity()) return "1";
  std::string out;
  for (const auto& b : x.bricks()) {
    if (!out.empty()) out += ' ';
    out += "[" + std::to_string(b.lo) + "," + std::to_string(b.hi) + "]";
  }
  return out;
}

std::string format_element(const Element& e) {
  if (e.is_identity()) return "1";
  std::string out = format_block(e.block());
  if (!out.empty()) out += ' ';
  out += "|";
  if (!e.finite().is_identity()) out += " " + format_finite(e.finite());
  return out;
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  bool peek(std::string_view s) {
    skip_ws();
    return text_.substr(pos_, s.size()) == s;
  }
  void expect(std::string_view s) {
    if (!peek(s)) fail("expected '" + std::string(s) + "'");
    pos_ += s.size();
  }
  int integer() {
    skip_ws();
    int v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc()) fail("expected an integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("canonical form parse error at offset " + std::to_string(pos_) + ": " +
                      what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(std::string_view text, Rank rank) {
  Scanner sc(text);
  std::vector<BlockPair> pairs;
  std::vector<Brick> bricks;
  if (sc.peek("1")) {
    sc.expect("1");
    if (!sc.done() && !sc.peek("|")) sc.fail("unexpected text after '1'");
  }
  while (sc.peek("h(")) {
    sc.expect("h(");
    const int j = sc.integer();
    sc.expect(",");
    const int i = sc.integer();
    sc.expect(")");
    sc.expect("a");
    pairs.push_back({j, i});
  }
  if (sc.peek("|")) {
    sc.expect("|");
    if (sc.peek("1")) sc.expect("1");
  }
  while (sc.peek("[")) {
    sc.expect("[");
    const int lo = sc.integer();
    sc.expect(",");
    const int hi = sc.integer();
    sc.expect("]");
    bricks.push_back({lo, hi});
  }
  if (!sc.done()) sc.fail("unexpected trailing text");
  return Element(AffineBlock(rank, std::move(pairs)), FiniteElement::from_bricks(rank, bricks));
}

Element parse_element_or_word(std::string_view text, Rank rank) {
  const bool canonical_syntax = text.find("h(") != std::string_view::npos ||
                                text.find('|') != std::string_view::npos ||
                                text.find('[') != std::string_view::npos;
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  if (canonical_syntax || text.substr(b, e - b) == "1") return parse_element(text, rank);
  return canonicalize(parse_word(text, rank));
}

}  // namespace coxa
