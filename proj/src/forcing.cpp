#include "scord/forcing.hpp"

#include <utility>

#include "scord/hclass.hpp"

namespace scord {

namespace {
const std::vector<PosetExpr> kNoChildren;
}

PosetExpr PosetExpr::pfin() { return PosetExpr(); }

PosetExpr PosetExpr::fin_times_fin() {
  PosetExpr e;
  e.kind_ = Kind::FinTimesFinPlus;
  return e;
}

PosetExpr PosetExpr::product(std::vector<PosetExpr> factors) {
  PosetExpr e;
  e.kind_ = Kind::Product;
  e.children_ = std::make_shared<const std::vector<PosetExpr>>(std::move(factors));
  return e;
}

PosetExpr PosetExpr::power(PosetExpr base, std::uint64_t exponent) {
  if (exponent == 0) throw precondition_error("Power exponent must be positive");
  PosetExpr e;
  e.kind_ = Kind::Power;
  e.children_ = std::make_shared<const std::vector<PosetExpr>>(
      std::vector<PosetExpr>{std::move(base)});
  e.arg_ = exponent;
  return e;
}

PosetExpr PosetExpr::reduced_power(PosetExpr base, std::uint64_t iterations) {
  PosetExpr e;
  e.kind_ = Kind::ReducedPower;
  e.children_ = std::make_shared<const std::vector<PosetExpr>>(
      std::vector<PosetExpr>{std::move(base)});
  e.arg_ = iterations;
  return e;
}

PosetExpr PosetExpr::opaque(std::string label) {
  PosetExpr e;
  e.kind_ = Kind::Opaque;
  e.label_ = std::move(label);
  return e;
}

const std::vector<PosetExpr>& PosetExpr::factors() const {
  if (kind_ != Kind::Product) throw error("factors() on a non-product");
  return children_ ? *children_ : kNoChildren;
}

const PosetExpr& PosetExpr::base() const {
  if (kind_ != Kind::Power && kind_ != Kind::ReducedPower)
    throw error("base() on a non-power");
  return (*children_)[0];
}

const std::string& PosetExpr::label() const {
  if (kind_ != Kind::Opaque) throw error("label() on a non-opaque");
  return label_;
}

bool PosetExpr::operator==(const PosetExpr& o) const {
  if (kind_ != o.kind_ || arg_ != o.arg_ || label_ != o.label_ || !(props_ == o.props_))
    return false;
  const std::vector<PosetExpr>& a = children_ ? *children_ : kNoChildren;
  const std::vector<PosetExpr>& b = o.children_ ? *o.children_ : kNoChildren;
  return a == b;
}

PosetExpr normalize(const PosetExpr& e) {
  switch (e.kind()) {
    case PosetExpr::Kind::PFinPlus:
    case PosetExpr::Kind::FinTimesFinPlus:
    case PosetExpr::Kind::Opaque:
      return e;
    case PosetExpr::Kind::ReducedPower: {
      PosetExpr b = normalize(e.base());
      if (e.arg() == 0) return b;
      if (e.arg() == 1 && b == PosetExpr::pfin()) return PosetExpr::fin_times_fin();
      return PosetExpr::reduced_power(std::move(b), e.arg());
    }
    case PosetExpr::Kind::Power: {
      PosetExpr b = normalize(e.base());
      if (e.arg() == 1) return b;
      std::vector<PosetExpr> copies(e.arg(), b);
      return normalize(PosetExpr::product(std::move(copies)));
    }
    case PosetExpr::Kind::Product: {
      std::vector<PosetExpr> flat;
      for (const PosetExpr& f : e.factors()) {
        PosetExpr n = normalize(f);
        if (n.kind() == PosetExpr::Kind::Product)
          for (const PosetExpr& g : n.factors()) flat.push_back(g);
        else
          flat.push_back(std::move(n));
      }
      if (flat.size() == 1) return flat[0];
      return PosetExpr::product(std::move(flat));
    }
  }
  throw error("internal: bad poset kind");
}

std::string to_string(const PosetExpr& e) {
  switch (e.kind()) {
    case PosetExpr::Kind::PFinPlus:
      return "(P(w)/Fin)+";
    case PosetExpr::Kind::FinTimesFinPlus:
      return "(P(wxw)/(FinxFin))+";
    case PosetExpr::Kind::Product: {
      if (e.factors().empty()) return "trivial";
      std::string out;
      for (std::size_t i = 0; i < e.factors().size(); ++i) {
        if (i) out += " x ";
        out += to_string(e.factors()[i]);
      }
      return out;
    }
    case PosetExpr::Kind::Power:
      return "(" + to_string(e.base()) + ")^" + std::to_string(e.arg());
    case PosetExpr::Kind::ReducedPower:
      if (e.base() == PosetExpr::pfin())
        return "(rp^" + std::to_string(e.arg()) + "(P(w)/Fin))+";
      return "rp^" + std::to_string(e.arg()) + "(" + to_string(e.base()) + ")";
    case PosetExpr::Kind::Opaque:
      return "Opaque(" + e.label() + ")";
  }
  throw error("internal: bad poset kind");
}

nlohmann::json poset_to_json(const PosetExpr& e) {
  nlohmann::json j;
  j["props"] = {{"sigma_closed", e.props().sigma_closed},
                {"atomless", e.props().atomless},
                {"size", e.props().size}};
  switch (e.kind()) {
    case PosetExpr::Kind::PFinPlus:
      j["kind"] = "PFinPlus";
      return j;
    case PosetExpr::Kind::FinTimesFinPlus:
      j["kind"] = "FinTimesFinPlus";
      return j;
    case PosetExpr::Kind::Product: {
      j["kind"] = "Product";
      nlohmann::json fs = nlohmann::json::array();
      for (const PosetExpr& f : e.factors()) fs.push_back(poset_to_json(f));
      j["factors"] = std::move(fs);
      return j;
    }
    case PosetExpr::Kind::Power:
      j["kind"] = "Power";
      j["base"] = poset_to_json(e.base());
      j["exponent"] = e.arg();
      return j;
    case PosetExpr::Kind::ReducedPower:
      j["kind"] = "ReducedPower";
      j["base"] = poset_to_json(e.base());
      j["iterations"] = e.arg();
      return j;
    case PosetExpr::Kind::Opaque:
      j["kind"] = "Opaque";
      j["label"] = e.label();
      return j;
  }
  throw error("internal: bad poset kind");
}

PosetExpr poset_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw parse_error("poset expression needs a kind", 0);
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "PFinPlus") return PosetExpr::pfin();
  if (kind == "FinTimesFinPlus") return PosetExpr::fin_times_fin();
  if (kind == "Product") {
    std::vector<PosetExpr> fs;
    for (const nlohmann::json& f : j.at("factors")) fs.push_back(poset_from_json(f));
    return PosetExpr::product(std::move(fs));
  }
  if (kind == "Power")
    return PosetExpr::power(poset_from_json(j.at("base")), j.at("exponent").get<std::uint64_t>());
  if (kind == "ReducedPower")
    return PosetExpr::reduced_power(poset_from_json(j.at("base")),
                                    j.at("iterations").get<std::uint64_t>());
  if (kind == "Opaque") return PosetExpr::opaque(j.at("label").get<std::string>());
  throw parse_error("unknown poset kind " + kind, 0);
}

OrdinalSq sq_of_ordinal(const Cnf& a) {
  OrdinalSq out;
  std::vector<PosetExpr> factors;
  for (const auto& [exp, coeff] : a.terms)
    factors.push_back(PosetExpr::power(PosetExpr::reduced_power(PosetExpr::pfin(), exp - 1),
                                       coeff));
  out.expr = PosetExpr::product(std::move(factors));
  if (a.remainder > 0)
    out.annotations.push_back("finite remainder " + std::to_string(a.remainder) +
                              " contributes no factor");
  if (a.terms.empty())
    out.annotations.push_back("finite order; the quotient is trivial");
  return out;
}

namespace {

std::string block_label(const Block& b) {
  std::string out(1, to_char(b.kind));
  out += "-block ";
  for (const HTerm& p : b.parts) out += p.repr();
  return out;
}

}  // namespace

SqReport sq_report(const Term& t) {
  require_valid(t);
  const Decomposition d = min_decomposition(t);
  SqReport report;
  std::vector<PosetExpr> factors;

  for (const Block& b : block_partition(d.parts)) {
    BlockSq bs;
    bs.block = b;
    if (b.kind == BlockKind::A) {
      bs.elided = true;
      bs.factor = PosetExpr::product({});
      bs.annotations.push_back("finite block forces trivially");
      report.blocks.push_back(std::move(bs));
      continue;
    }
    const Term bt(b.parts);
    std::optional<Cnf> value = ord_value(bt);
    bool mirrored = false;
    if (!value) {
      value = ord_value(mirror(bt));
      mirrored = value.has_value();
    }
    if (value) {
      OrdinalSq os = sq_of_ordinal(*value);
      bs.factor = std::move(os.expr);
      bs.annotations = std::move(os.annotations);
      if (mirrored)
        bs.annotations.push_back(
            "computed through the mirror image; mirroring preserves the "
            "subset lattice and the copy family");
    } else {
      bs.factor = PosetExpr::opaque(block_label(b));
      bs.annotations.push_back(
          "not identified in this fragment; sigma-closed, atomless, of size "
          "continuum, and under CH forcing-equivalent to (P(w)/Fin)+");
    }
    factors.push_back(bs.factor);
    report.blocks.push_back(std::move(bs));
  }

  report.overall = normalize(PosetExpr::product(std::move(factors)));
  report.annotations.push_back(
      "every factor is a sigma-closed atomless poset of size continuum");
  return report;
}

PosetExpr sq_of(const Term& t) { return sq_report(t).overall; }

nlohmann::json sq_report_to_json(const SqReport& r) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const BlockSq& bs : r.blocks) {
    nlohmann::json parts = nlohmann::json::array();
    for (const HTerm& p : bs.block.parts) parts.push_back(p.repr());
    blocks.push_back({{"kind", std::string(1, to_char(bs.block.kind))},
                      {"first", bs.block.first},
                      {"last", bs.block.last},
                      {"parts", std::move(parts)},
                      {"elided", bs.elided},
                      {"factor", poset_to_json(bs.factor)},
                      {"annotations", bs.annotations}});
  }
  return {{"blocks", std::move(blocks)},
          {"overall", poset_to_json(r.overall)},
          {"overall_text", to_string(r.overall)},
          {"annotations", r.annotations}};
}

}  // namespace scord
