#include <string>
#include <vector>

#include "doctest.h"
#include "scord/term.hpp"

using namespace scord;

TEST_CASE("parse and print round-trip") {
  for (const std::string s : {"1", "w", "w*", "w+1", "1+1+1", "w[w]", "w[1,1]",
                              "w[1,w]", "w*[w*]", "w*[w*,1]", "w[w*]",
                              "w[1;w]", "w*[w;1]", "w*[w,1;1,w]", "w+w*+1",
                              "w[w[w]]", "w[w*;w*,1]"}) {
    CAPTURE(s);
    Term t = parse_term(s);
    CHECK(print_term(t) == s);
    CHECK(parse_term(print_term(t)).repr() == t.repr());
  }
}

TEST_CASE("numeric abbreviations expand to singletons") {
  CHECK(print_term(parse_term("3")) == "1+1+1");
  CHECK(print_term(parse_term("w[2;w]")) == "w[1,1;w]");
  CHECK(print_term(parse_term("w^1")) == "w");
  CHECK(print_term(parse_term("w^2")) == "w[w]");
  CHECK(print_term(parse_term("w^3")) == "w[w[w]]");
  CHECK(print_term(parse_term("w ^ 2 + w [ 1 , 1 ]")) == "w[w]+w[1,1]");
}

TEST_CASE("star head lists are written left to right") {
  // The rightmost summand of w*[w,1;1,w] is w, preceded by 1; storage indexes
  // from the right end, so head()[0] is that w.
  Term t = parse_term("w*[w,1;1,w]");
  const HTerm& h = t.parts()[0];
  REQUIRE(h.is_omega_star_sum());
  REQUIRE(h.head().size() == 2);
  CHECK(h.head()[0].is_omega_sum());
  CHECK(h.head()[1].is_singleton());
  CHECK(h.pattern().size() == 2);
}

TEST_CASE("summand indexing runs head first then cycles the pattern") {
  Term t = parse_term("w[w*;w*,1]");
  const HTerm& h = t.parts()[0];
  CHECK(h.summand(0).is_omega_star_sum());  // head
  CHECK(h.summand(1).is_omega_star_sum());  // pattern[0]
  CHECK(h.summand(2).is_singleton());       // pattern[1]
  CHECK(h.summand(3).is_omega_star_sum());
  CHECK(h.summand(102).is_singleton());
}

TEST_CASE("mirror is an elementwise involution") {
  for (const std::string s : {"w", "w*", "w+1", "w[w]", "w[w*]", "w*[w*,1]",
                              "w[w*;w*,1]", "w+w*+1"}) {
    CAPTURE(s);
    Term t = parse_term(s);
    CHECK(mirror(mirror(t)).repr() == t.repr());
  }
  CHECK(print_term(mirror(parse_term("w"))) == "w*");
  CHECK(print_term(mirror(parse_term("w+1"))) == "1+w*");
  CHECK(print_term(mirror(parse_term("w[w*;w*,1]"))) == "w*[w,1;w]");
}

TEST_CASE("validity requires heads to embed into the pattern") {
  CHECK_THROWS_AS(parse_term("w[w;1]"), precondition_error);
  CHECK_THROWS_AS(parse_term("w*[1;w*]"), precondition_error);
  CHECK(term_valid(parse_term("w[1;w]")));
  CHECK_FALSE(hterm_valid(HTerm::omega_sum({HTerm::omega_sum({}, {HTerm::singleton()})},
                                           {HTerm::singleton()})));
}

TEST_CASE("parser rejects malformed terms") {
  CHECK_THROWS_AS(parse_term(""), parse_error);
  CHECK_THROWS_AS(parse_term("w["), parse_error);
  CHECK_THROWS_AS(parse_term("w[]"), parse_error);
  CHECK_THROWS_AS(parse_term("0"), parse_error);
  CHECK_THROWS_AS(parse_term("w+"), parse_error);
  CHECK_THROWS_AS(parse_term("w*^2"), parse_error);
  CHECK_THROWS_AS(parse_term("w)"), parse_error);
  CHECK_THROWS_AS(parse_term("w[1,]"), parse_error);
}

TEST_CASE("truncation enumerates points in order") {
  auto addrs = truncate(parse_term("w"), 3);
  REQUIRE(addrs.size() == 3);
  CHECK(addrs[0] == Address{0, 0});
  CHECK(addrs[2] == Address{0, 2});

  // w* keeps the last summands; right-end index 1 lies left of index 0.
  addrs = truncate(parse_term("w*"), 2);
  REQUIRE(addrs.size() == 2);
  CHECK(addrs[0] == Address{0, 1});
  CHECK(addrs[1] == Address{0, 0});

  addrs = truncate(parse_term("w[w]"), 2);
  REQUIRE(addrs.size() == 4);
  CHECK(addrs[0] == Address{0, 0, 0});
  CHECK(addrs[3] == Address{0, 1, 1});

  addrs = truncate(parse_term("1+w"), 1);
  REQUIRE(addrs.size() == 2);
  CHECK(addrs[0] == Address{0});
  CHECK(addrs[1] == Address{1, 0});
}

TEST_CASE("address comparison follows the denoted order") {
  Term t = parse_term("w*+w");
  CHECK(address_compare(t, {0, 1}, {0, 0}) < 0);
  CHECK(address_compare(t, {0, 0}, {1, 0}) < 0);
  CHECK(address_compare(t, {1, 0}, {1, 7}) < 0);
  CHECK(address_compare(t, {0, 5}, {0, 5}) == 0);
  CHECK(address_valid(t, {0, 3}));
  CHECK_FALSE(address_valid(t, {2, 0}));
  CHECK_FALSE(address_valid(t, {0}));

  // Truncation output is sorted.
  for (const std::string s : {"w[w*]", "w*[w,1;1,w]", "w+w*+1"}) {
    Term u = parse_term(s);
    auto addrs = truncate(u, 3);
    for (std::size_t i = 1; i < addrs.size(); ++i)
      CHECK(address_compare(u, addrs[i - 1], addrs[i]) < 0);
  }
}
