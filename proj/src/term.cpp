#include "meetless/term.hpp"

#include <cctype>
#include <charconv>

#include "meetless/chain.hpp"
#include "meetless/error.hpp"

namespace meetless {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  FreeElement parse() {
    auto x = term();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return x;
  }

 private:
  [[noreturn]] void fail(std::string const& what) const {
    throw Error(ErrorKind::parse_error,
                what + " at offset " + std::to_string(pos_),
                {std::string(s_)});
  }

  void skip() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(std::string_view(&c, 1))) {
      fail(std::string("expected '") + c + "'");
    }
  }

  std::uint64_t nat() {
    skip();
    std::uint64_t v = 0;
    auto const* first = s_.data() + pos_;
    auto const* last = s_.data() + s_.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr == first) fail("expected a natural number");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  FreeElement term() {
    FreeExtension const& ext = chain_extension();
    if (accept("join")) {
      expect('(');
      FreeElement acc = term();
      while (accept(",")) acc = ext.join(acc, term());
      expect(')');
      return acc;
    }
    if (accept("bowtie")) {
      std::optional<std::uint64_t> level;
      if (accept("@")) level = nat();
      expect('(');
      auto u = term();
      expect(',');
      auto v = term();
      expect(',');
      auto w = term();
      expect(')');
      if (!level) return ext.bowtie(u, v, w);
      if (*level > UINT32_MAX) fail("level out of range");
      return ext.bowtie_at(static_cast<std::uint32_t>(*level), u, v, w);
    }
    if (accept("c")) {
      expect('(');
      auto i = nat();
      if (i > (UINT64_MAX >> 3)) fail("index out of range");
      expect(')');
      return ext.element(chain::c(i));
    }
    if (accept("0")) return ext.zero();
    if (accept("a")) return ext.element(chain::a());
    if (accept("b")) return ext.element(chain::b());
    fail("expected a term");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::uint32_t natural_level(Triple const& t) {
  return std::max({t.u.rank(), t.v.rank(), t.w.rank()}) + 1;
}

void print(Base const& base, FreeElement const& x, std::string& out);

void print_bowtie(Base const& base, std::uint32_t level, Triple const& t,
                  std::string& out) {
  out += "bowtie";
  if (level != natural_level(t)) out += "@" + std::to_string(level);
  out += "(";
  print(base, t.u, out);
  out += ",";
  print(base, t.v, out);
  out += ",";
  print(base, t.w, out);
  out += ")";
}

bool is_zero(Base const& base, FreeElement const& x) {
  return x.is_base() && x.code() == base.zero();
}

void print(Base const& base, FreeElement const& x, std::string& out) {
  if (x.is_base()) {
    out += base.name(x.code());
    return;
  }
  // x = pi(x) v the generators of its triples, all at the level of x.
  bool const bare = is_zero(base, x.diagonal()) && x.triples().size() == 1;
  if (bare) {
    print_bowtie(base, x.rank(), x.triples().front(), out);
    return;
  }
  out += "join(";
  bool first = true;
  if (!is_zero(base, x.diagonal())) {
    print(base, x.diagonal(), out);
    first = false;
  }
  for (auto const& t : x.triples()) {
    if (!first) out += ",";
    first = false;
    print_bowtie(base, x.rank(), t, out);
  }
  out += ")";
}

}  // namespace

FreeElement parse_term(std::string_view text) { return Parser(text).parse(); }

std::string print_term(FreeElement const& x) {
  return print_term(x, chain_extension().base());
}

std::string print_term(FreeElement const& x, Base const& base) {
  std::string out;
  print(base, x, out);
  return out;
}

}  // namespace meetless
