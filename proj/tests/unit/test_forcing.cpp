#include "scord/forcing.hpp"

#include <string>
#include <vector>

#include "doctest.h"
#include "scord/cnf.hpp"
#include "scord/term.hpp"

using namespace scord;

namespace {

PosetExpr pf() { return PosetExpr::pfin(); }
PosetExpr ftf() { return PosetExpr::fin_times_fin(); }

bool has_annotation(const std::vector<std::string>& notes, const std::string& needle) {
  for (const std::string& n : notes)
    if (n.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("poset constructors and structural equality") {
  CHECK(PosetExpr() == pf());
  CHECK(pf() != ftf());
  CHECK(PosetExpr::product({pf(), ftf()}) == PosetExpr::product({pf(), ftf()}));
  CHECK(PosetExpr::product({pf(), ftf()}) != PosetExpr::product({ftf(), pf()}));
  CHECK(PosetExpr::power(pf(), 2) != PosetExpr::power(pf(), 3));
  CHECK(PosetExpr::reduced_power(pf(), 1) != PosetExpr::power(pf(), 1));
  CHECK(PosetExpr::opaque("x") == PosetExpr::opaque("x"));
  CHECK(PosetExpr::opaque("x") != PosetExpr::opaque("y"));
  CHECK_THROWS_AS(PosetExpr::power(pf(), 0), precondition_error);

  PosetExpr e = PosetExpr::reduced_power(ftf(), 4);
  CHECK(e.props().sigma_closed);
  CHECK(e.props().atomless);
  CHECK(e.props().size == "c");
}

TEST_CASE("printed forms") {
  CHECK(to_string(pf()) == "(P(w)/Fin)+");
  CHECK(to_string(ftf()) == "(P(wxw)/(FinxFin))+");
  CHECK(to_string(PosetExpr::reduced_power(pf(), 2)) == "(rp^2(P(w)/Fin))+");
  CHECK(to_string(PosetExpr::power(pf(), 3)) == "((P(w)/Fin)+)^3");
  CHECK(to_string(PosetExpr::product({pf(), ftf()})) ==
        "(P(w)/Fin)+ x (P(wxw)/(FinxFin))+");
  CHECK(to_string(PosetExpr::product({})) == "trivial");
  CHECK(to_string(PosetExpr::opaque("D-block w*w")) == "Opaque(D-block w*w)");
}

TEST_CASE("normalization identifies the named quotients") {
  CHECK(normalize(PosetExpr::reduced_power(pf(), 0)) == pf());
  CHECK(normalize(PosetExpr::reduced_power(pf(), 1)) == ftf());
  CHECK(normalize(PosetExpr::reduced_power(pf(), 2)) == PosetExpr::reduced_power(pf(), 2));
  CHECK(normalize(PosetExpr::power(pf(), 1)) == pf());
  CHECK(normalize(PosetExpr::power(pf(), 3)) == PosetExpr::product({pf(), pf(), pf()}));
  CHECK(normalize(PosetExpr::product({pf()})) == pf());
  CHECK(normalize(PosetExpr::product({PosetExpr::product({pf(), pf()}), ftf()})) ==
        PosetExpr::product({pf(), pf(), ftf()}));
  // Nested: Power over an RP that itself simplifies.
  CHECK(normalize(PosetExpr::power(PosetExpr::reduced_power(pf(), 1), 2)) ==
        PosetExpr::product({ftf(), ftf()}));
}

TEST_CASE("normalization is idempotent") {
  const std::vector<PosetExpr> samples = {
      pf(),
      ftf(),
      PosetExpr::product({}),
      PosetExpr::product({pf(), PosetExpr::product({ftf(), pf()})}),
      PosetExpr::power(PosetExpr::reduced_power(pf(), 3), 2),
      PosetExpr::reduced_power(PosetExpr::power(pf(), 1), 1),
      PosetExpr::opaque("D-block w*w"),
  };
  for (const PosetExpr& e : samples) {
    PosetExpr n = normalize(e);
    CHECK(normalize(n) == n);
  }
}

TEST_CASE("ordinal quotients below w^w") {
  // w: one tower, zero reduced-power iterations.
  OrdinalSq a = sq_of_ordinal(parse_cnf("w"));
  REQUIRE(a.expr.kind() == PosetExpr::Kind::Product);
  REQUIRE(a.expr.factors().size() == 1);
  CHECK(a.expr.factors()[0] == PosetExpr::power(PosetExpr::reduced_power(pf(), 0), 1));
  CHECK(normalize(a.expr) == pf());
  CHECK(a.annotations.empty());

  // w^2 * 3: the coefficient becomes the power.
  OrdinalSq b = sq_of_ordinal(parse_cnf("w^2.3"));
  REQUIRE(b.expr.factors().size() == 1);
  CHECK(b.expr.factors()[0] == PosetExpr::power(PosetExpr::reduced_power(pf(), 1), 3));
  CHECK(normalize(b.expr) == PosetExpr::product({ftf(), ftf(), ftf()}));

  // w^3 + w * 2: one factor per CNF term, exponents decreasing.
  OrdinalSq c = sq_of_ordinal(parse_cnf("w^3+w.2"));
  REQUIRE(c.expr.factors().size() == 2);
  CHECK(c.expr.factors()[0] == PosetExpr::power(PosetExpr::reduced_power(pf(), 2), 1));
  CHECK(c.expr.factors()[1] == PosetExpr::power(PosetExpr::reduced_power(pf(), 0), 2));
  CHECK(normalize(c.expr) ==
        PosetExpr::product({PosetExpr::reduced_power(pf(), 2), pf(), pf()}));

  // A finite remainder is elided but recorded.
  OrdinalSq d = sq_of_ordinal(parse_cnf("w+3"));
  REQUIRE(d.expr.factors().size() == 1);
  CHECK(has_annotation(d.annotations, "remainder 3"));

  // Finite ordinals force trivially.
  OrdinalSq e = sq_of_ordinal(parse_cnf("5"));
  CHECK(e.expr.factors().empty());
  CHECK(normalize(e.expr) == PosetExpr::product({}));
  CHECK(has_annotation(e.annotations, "trivial"));
}

TEST_CASE("flagship quotients") {
  CHECK(sq_of(parse_term("w")) == pf());
  CHECK(sq_of(parse_term("w+w")) == PosetExpr::product({pf(), pf()}));
  CHECK(sq_of(parse_term("w[w]")) == ftf());
  CHECK(to_string(sq_of(parse_term("w[w]"))) == "(P(wxw)/(FinxFin))+");
}

TEST_CASE("block route agrees with the ordinal route") {
  for (const char* s : {"w", "w+w", "w[w]", "w[w]+w", "1+w", "w+1", "w[w[w]]",
                        "w[w,w[w]]", "w^4+w[w]"}) {
    const Term t = parse_term(s);
    const auto v = ord_value(t);
    REQUIRE_MESSAGE(v.has_value(), s);
    CHECK_MESSAGE(sq_of(t) == normalize(sq_of_ordinal(*v).expr), s);
  }
}

TEST_CASE("mirror blocks reach the named quotients") {
  const Term ws = parse_term("w*");
  CHECK(sq_of(ws) == pf());
  SqReport r = sq_report(ws);
  REQUIRE(r.blocks.size() == 1);
  CHECK(has_annotation(r.blocks[0].annotations, "mirror"));

  CHECK(sq_of(parse_term("w*+w*")) == PosetExpr::product({pf(), pf()}));
  CHECK(sq_of(mirror(parse_term("w[w]"))) == ftf());
  for (const char* s : {"w", "w+w", "w[w]", "w[w]+w"}) {
    const Term t = parse_term(s);
    CHECK_MESSAGE(sq_of(mirror(t)) == sq_of(t), s);
  }
}

TEST_CASE("finite blocks are elided") {
  SqReport r = sq_report(parse_term("1+w*"));
  REQUIRE(r.blocks.size() == 2);
  CHECK(r.blocks[0].elided);
  CHECK(r.blocks[0].block.kind == BlockKind::A);
  CHECK_FALSE(r.blocks[1].elided);
  CHECK(r.overall == pf());

  SqReport fin = sq_report(parse_term("3"));
  for (const BlockSq& b : fin.blocks) CHECK(b.elided);
  CHECK(fin.overall == PosetExpr::product({}));
  CHECK(to_string(fin.overall) == "trivial");
}

TEST_CASE("mixed-orientation blocks stay opaque") {
  SqReport r = sq_report(parse_term("w*+w"));
  REQUIRE(r.blocks.size() == 1);
  CHECK(r.blocks[0].block.kind == BlockKind::D);
  REQUIRE(r.overall.kind() == PosetExpr::Kind::Opaque);
  CHECK(r.overall.label().find("D-block") == 0);
  CHECK(r.overall.props().sigma_closed);
  CHECK(r.overall.props().atomless);
  CHECK(r.overall.props().size == "c");
  CHECK(has_annotation(r.blocks[0].annotations, "CH"));

  // An opaque factor next to a named one survives normalization.
  SqReport two = sq_report(parse_term("w*+w+w"));
  REQUIRE(two.overall.kind() == PosetExpr::Kind::Product);
}

TEST_CASE("poset json roundtrip") {
  const std::vector<PosetExpr> samples = {
      pf(),
      ftf(),
      PosetExpr::product({}),
      PosetExpr::product({pf(), ftf()}),
      PosetExpr::power(PosetExpr::reduced_power(pf(), 2), 3),
      PosetExpr::opaque("D-block w*w"),
  };
  for (const PosetExpr& e : samples) {
    nlohmann::json j = poset_to_json(e);
    CHECK(poset_from_json(j) == e);
    CHECK(j.contains("props"));
    CHECK(j["props"]["sigma_closed"].get<bool>());
    CHECK(j["props"]["size"].get<std::string>() == "c");
  }
  CHECK_THROWS_AS(poset_from_json(nlohmann::json{{"kind", "Mystery"}}), parse_error);
  CHECK_THROWS_AS(poset_from_json(nlohmann::json::array()), parse_error);
}

TEST_CASE("report json carries blocks and the overall form") {
  nlohmann::json j = sq_report_to_json(sq_report(parse_term("1+w*+w+w[w]")));
  REQUIRE(j.contains("blocks"));
  REQUIRE(j.contains("overall"));
  CHECK(j.contains("overall_text"));
  for (const nlohmann::json& b : j["blocks"]) {
    CHECK(b.contains("kind"));
    CHECK(b.contains("parts"));
    CHECK(b.contains("factor"));
  }
}
