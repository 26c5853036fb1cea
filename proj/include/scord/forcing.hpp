#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "scord/blocks.hpp"
#include "scord/cnf.hpp"
#include "scord/term.hpp"

namespace scord {

struct PosetProps {
  bool sigma_closed = true;
  bool atomless = true;
  std::string size = "c";

  bool operator==(const PosetProps& o) const = default;
};

// Symbolic shape of a forcing poset. PFinPlus is (P(w)/Fin)+ and
// FinTimesFinPlus is (P(wxw)/(FinxFin))+; ReducedPower(b, r) is the r-fold
// reduced power of b modulo eventual equality; Opaque names a factor the
// fragment does not identify beyond its properties.
class PosetExpr {
 public:
  enum class Kind { PFinPlus, FinTimesFinPlus, Product, Power, ReducedPower, Opaque };

  PosetExpr() = default;  // PFinPlus

  static PosetExpr pfin();
  static PosetExpr fin_times_fin();
  static PosetExpr product(std::vector<PosetExpr> factors);
  static PosetExpr power(PosetExpr base, std::uint64_t exponent);  // exponent >= 1
  static PosetExpr reduced_power(PosetExpr base, std::uint64_t iterations);
  static PosetExpr opaque(std::string label);

  Kind kind() const { return kind_; }
  const std::vector<PosetExpr>& factors() const;   // Product
  const PosetExpr& base() const;                   // Power / ReducedPower
  std::uint64_t arg() const { return arg_; }       // exponent / iterations
  const std::string& label() const;                // Opaque
  const PosetProps& props() const { return props_; }

  bool operator==(const PosetExpr& o) const;
  bool operator!=(const PosetExpr& o) const { return !(*this == o); }

 private:
  Kind kind_ = Kind::PFinPlus;
  std::shared_ptr<const std::vector<PosetExpr>> children_;
  std::uint64_t arg_ = 0;
  std::string label_;
  PosetProps props_;
};

// Canonical form for symbolic equality: products flatten, a one-factor
// product is its factor, Power expands into repeated factors, a zero-fold
// reduced power is its base, and the one-fold reduced power of (P(w)/Fin)+
// is the named (P(wxw)/(FinxFin))+.
PosetExpr normalize(const PosetExpr& e);

std::string to_string(const PosetExpr& e);
nlohmann::json poset_to_json(const PosetExpr& e);
PosetExpr poset_from_json(const nlohmann::json& j);

struct OrdinalSq {
  PosetExpr expr;  // product over the infinite CNF terms, unnormalized
  std::vector<std::string> annotations;
};

// Separative quotient of the copies of an ordinal below w^w: the product
// over its CNF terms w^e * c of Power(ReducedPower((P(w)/Fin)+, e-1), c),
// exponents decreasing. A finite remainder contributes no factor; the
// elision is recorded as an annotation.
OrdinalSq sq_of_ordinal(const Cnf& a);

struct BlockSq {
  Block block;
  bool elided = false;  // finite blocks force trivially
  PosetExpr factor;     // unnormalized; meaningful when not elided
  std::vector<std::string> annotations;
};

struct SqReport {
  std::vector<BlockSq> blocks;
  PosetExpr overall;  // normalized product of the non-elided factors
  std::vector<std::string> annotations;
};

// Per-block symbolic quotient: finite blocks are elided, blocks with an
// ordinal value (or whose mirror has one) go through sq_of_ordinal, and
// everything else is an Opaque factor carrying its known properties.
SqReport sq_report(const Term& t);
PosetExpr sq_of(const Term& t);

nlohmann::json sq_report_to_json(const SqReport& r);

}  // namespace scord
