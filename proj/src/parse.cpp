#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "scord/term.hpp"

namespace scord {
namespace {

struct Parser {
  const std::string& src;
  std::size_t pos = 0;

  void skip() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }

  bool eat(char c) {
    skip();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip();
    return pos < src.size() ? src[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos); }

  std::uint64_t nat() {
    skip();
    if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
      fail("expected a number");
    std::uint64_t v = 0;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(src[pos] - '0');
      if (v > (1ull << 20)) fail("number too large");
      ++pos;
    }
    return v;
  }

  std::vector<HTerm> list() {
    std::vector<HTerm> out;
    hsum_into(out);
    while (eat(',')) hsum_into(out);
    return out;
  }

  void hsum_into(std::vector<HTerm>& out) {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t n = nat();
      if (n == 0) fail("a summand count must be positive");
      for (std::uint64_t i = 0; i < n; ++i) out.push_back(HTerm::singleton());
      return;
    }
    if (!eat('w')) fail("expected a summand");
    bool star = eat('*');
    if (eat('^')) {
      if (star) fail("'^' applies to plain w only");
      std::uint64_t k = nat();
      HTerm cur = HTerm::singleton();
      for (std::uint64_t i = 0; i < k; ++i) cur = HTerm::omega_sum({}, {cur});
      out.push_back(cur);
      return;
    }
    if (eat('[')) {
      std::vector<HTerm> first = list();
      std::vector<HTerm> second;
      bool two = eat(';');
      if (two) second = list();
      if (!eat(']')) fail("expected ']'");
      if (star) {
        // The head list is written in the left-to-right order of the denoted
        // order; storage indexes it from the right end.
        std::vector<HTerm> head(second.rbegin(), second.rend());
        out.push_back(HTerm::omega_star_sum(std::move(first), std::move(head)));
      } else if (two) {
        out.push_back(HTerm::omega_sum(std::move(first), std::move(second)));
      } else {
        out.push_back(HTerm::omega_sum({}, std::move(first)));
      }
      return;
    }
    if (star)
      out.push_back(HTerm::omega_star_sum({HTerm::singleton()}, {}));
    else
      out.push_back(HTerm::omega_sum({}, {HTerm::singleton()}));
  }
};

}  // namespace

Term parse_term(const std::string& text) {
  Parser p{text};
  std::vector<HTerm> parts;
  p.hsum_into(parts);
  while (p.eat('+')) p.hsum_into(parts);
  p.skip();
  if (p.pos != text.size()) p.fail("unexpected trailing input");
  Term t(std::move(parts));
  require_valid(t);
  return t;
}

}  // namespace scord
