#include "scord/embedding.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>

#include "scord/embed.hpp"

namespace scord {

namespace {

constexpr std::uint64_t kWindowCap = std::uint64_t{1} << 22;

std::uint64_t checked_lcm(std::uint64_t x, std::uint64_t y) {
  if (x == 0 || y == 0) throw error("internal: lcm of zero");
  const std::uint64_t q = x / std::gcd(x, y);
  if (q > (std::uint64_t{1} << 40) / y) throw error("periodic window too large");
  return q * y;
}

}  // namespace

std::uint64_t AffMap::operator()(std::uint64_t i) const {
  if (i < graph.size()) return graph[i];
  if (a != 0 && i > std::uint64_t{std::numeric_limits<std::int64_t>::max()} / a)
    throw error("summand map overflow");
  const std::int64_t v = static_cast<std::int64_t>(a * i) + b;
  if (v < 0) throw error("summand map reaches a negative index");
  return static_cast<std::uint64_t>(v);
}

std::uint64_t AffMap::lower_bound(std::uint64_t v) const {
  auto it = std::lower_bound(graph.begin(), graph.end(), v);
  if (it != graph.end()) return static_cast<std::uint64_t>(it - graph.begin());
  std::uint64_t i = graph.size();
  if (a == 0) throw error("internal: constant summand map");
  // Least i >= |graph| with a*i + b >= v.
  const std::int64_t need = static_cast<std::int64_t>(v) - b;
  if (need > 0) {
    const std::uint64_t n = static_cast<std::uint64_t>(need);
    i = std::max(i, (n + a - 1) / a);
  }
  return i;
}

std::optional<std::uint64_t> AffMap::invert(std::uint64_t t) const {
  auto it = std::lower_bound(graph.begin(), graph.end(), t);
  if (it != graph.end() && *it == t) return static_cast<std::uint64_t>(it - graph.begin());
  const std::int64_t d = static_cast<std::int64_t>(t) - b;
  if (d < 0 || static_cast<std::uint64_t>(d) % a != 0) return std::nullopt;
  const std::uint64_t i = static_cast<std::uint64_t>(d) / a;
  if (i < graph.size()) return std::nullopt;
  return i;
}

EmbeddingRep EmbeddingRep::ident() { return EmbeddingRep{}; }

EmbeddingRep EmbeddingRep::into_point(Address a) {
  EmbeddingRep r;
  r.kind_ = Kind::IntoPoint;
  r.point_ = std::make_shared<const Address>(std::move(a));
  return r;
}

EmbeddingRep EmbeddingRep::sum(SumRep sr) {
  EmbeddingRep r;
  r.kind_ = Kind::Sum;
  r.sum_ = std::make_shared<const SumRep>(std::move(sr));
  return r;
}

EmbeddingRep EmbeddingRep::parts(std::vector<EmbeddingRep> ps) {
  EmbeddingRep r;
  r.kind_ = Kind::Parts;
  r.parts_ = std::make_shared<const std::vector<EmbeddingRep>>(std::move(ps));
  return r;
}

const Address& EmbeddingRep::point() const {
  if (kind_ != Kind::IntoPoint) throw error("internal: point on a non-IntoPoint rep");
  return *point_;
}

const SumRep& EmbeddingRep::sum_rep() const {
  if (kind_ != Kind::Sum) throw error("internal: sum_rep on a non-Sum rep");
  return *sum_;
}

const std::vector<EmbeddingRep>& EmbeddingRep::parts_list() const {
  if (kind_ != Kind::Parts) throw error("internal: parts_list on a non-Parts rep");
  return *parts_;
}

bool EmbeddingRep::operator==(const EmbeddingRep& o) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case Kind::Ident:
      return true;
    case Kind::IntoPoint:
      return *point_ == *o.point_;
    case Kind::Sum: {
      const SumRep& x = *sum_;
      const SumRep& y = *o.sum_;
      return x.sigma.graph == y.sigma.graph && x.sigma.a == y.sigma.a && x.sigma.b == y.sigma.b &&
             x.sub_explicit == y.sub_explicit && x.sub_periodic == y.sub_periodic;
    }
    case Kind::Parts:
      return *parts_ == *o.parts_;
  }
  return false;
}

const EmbeddingRep& SumRep::sub_at(std::uint64_t i) const {
  if (i < sub_explicit.size()) return sub_explicit[i];
  if (sub_periodic.empty()) throw error("sum rep without periodic sub-reps");
  return sub_periodic[(i - sub_explicit.size()) % sub_periodic.size()];
}

namespace {

Address first_point(const HTerm& node) {
  Address a;
  const HTerm* cur = &node;
  while (!cur->is_singleton()) {
    a.push_back(0);
    cur = &cur->summand(0);
  }
  return a;
}

bool address_valid_in(const HTerm& node, const Address& a) {
  Address full;
  full.reserve(a.size() + 1);
  full.push_back(0);
  full.insert(full.end(), a.begin(), a.end());
  return address_valid(Term::of(node), full);
}

void validate_h(const EmbeddingRep& rep, const HTerm& src, const HTerm& dst) {
  switch (rep.kind()) {
    case EmbeddingRep::Kind::Ident:
      if (!(src == dst))
        throw shape_error("identity rep between different terms", src.repr());
      return;
    case EmbeddingRep::Kind::IntoPoint:
      if (!src.is_singleton())
        throw shape_error("point rep needs a singleton source", src.repr());
      if (!address_valid_in(dst, rep.point()))
        throw shape_error("point rep address outside the target", dst.repr());
      return;
    case EmbeddingRep::Kind::Parts:
      throw shape_error("Parts rep applied to a single summand", src.repr());
    case EmbeddingRep::Kind::Sum:
      break;
  }
  if (src.is_singleton() || dst.is_singleton() || src.kind() != dst.kind())
    throw shape_error("sum rep needs same-kind sums", src.repr());
  const SumRep& sr = rep.sum_rep();
  if (sr.sub_periodic.empty())
    throw shape_error("sum rep needs a nonempty periodic sub list", src.repr());
  if (sr.sigma.a == 0) throw shape_error("summand map must eventually grow", src.repr());
  for (std::size_t i = 1; i < sr.sigma.graph.size(); ++i)
    if (sr.sigma.graph[i - 1] >= sr.sigma.graph[i])
      throw shape_error("summand map graph not strictly increasing", src.repr());
  const std::uint64_t n = sr.sigma.graph.size();
  const std::uint64_t affine_start = sr.sigma(n);  // throws if negative
  if (n > 0 && sr.sigma.graph.back() >= affine_start)
    throw shape_error("summand map drops at the affine boundary", src.repr());

  const std::uint64_t ps = src.pattern().size();
  const std::uint64_t pd = dst.pattern().size();
  std::uint64_t start = std::max({n, std::uint64_t{sr.sub_explicit.size()},
                                  std::uint64_t{src.head().size()}});
  while (sr.sigma(start) < dst.head().size()) ++start;
  const std::uint64_t lam = checked_lcm(checked_lcm(sr.sub_periodic.size(), ps), pd);
  if (start > kWindowCap || lam > kWindowCap)
    throw error("rep validation window too large");
  for (std::uint64_t i = 0; i < start + lam; ++i)
    validate_h(sr.sub_at(i), src.summand(i), dst.summand(sr.sigma(i)));
}

// Per-part view of a term-level rep.
const EmbeddingRep& term_part_rep(const EmbeddingRep& rep, const Term& t, std::size_t i,
                                  EmbeddingRep& scratch) {
  static const EmbeddingRep kIdent = EmbeddingRep::ident();
  switch (rep.kind()) {
    case EmbeddingRep::Kind::Ident:
      return kIdent;
    case EmbeddingRep::Kind::Parts:
      return rep.parts_list().at(i);
    case EmbeddingRep::Kind::Sum:
      if (t.arity() != 1) throw shape_error("bare sum rep needs a one-part term", t.repr());
      return rep;
    case EmbeddingRep::Kind::IntoPoint: {
      if (t.arity() != 1 || rep.point().empty())
        throw shape_error("bare point rep needs one-part terms", t.repr());
      Address sub(rep.point().begin() + 1, rep.point().end());
      scratch = EmbeddingRep::into_point(std::move(sub));
      return scratch;
    }
  }
  throw error("internal: bad rep kind");
}

}  // namespace

void validate_rep(const EmbeddingRep& rep, const HTerm& src, const HTerm& dst) {
  validate_h(rep, src, dst);
}

void validate_rep(const EmbeddingRep& rep, const Term& src, const Term& dst) {
  if (rep.kind() == EmbeddingRep::Kind::Ident) {
    if (!(src == dst)) throw shape_error("identity rep between different terms", src.repr());
    return;
  }
  if (rep.kind() == EmbeddingRep::Kind::IntoPoint) {
    if (src.arity() != 1 || !src.parts()[0].is_singleton())
      throw shape_error("point rep needs a singleton source", src.repr());
    if (!address_valid(dst, rep.point()))
      throw shape_error("point rep address outside the target", dst.repr());
    return;
  }
  if (rep.kind() == EmbeddingRep::Kind::Sum) {
    if (src.arity() != 1 || dst.arity() != 1)
      throw shape_error("bare sum rep needs one-part terms", src.repr());
    validate_h(rep, src.parts()[0], dst.parts()[0]);
    return;
  }
  const auto& ps = rep.parts_list();
  if (ps.size() != src.arity() || src.arity() != dst.arity())
    throw shape_error("Parts rep arity mismatch", src.repr());
  for (std::size_t i = 0; i < ps.size(); ++i)
    validate_h(ps[i], src.parts()[i], dst.parts()[i]);
}

namespace {

Address apply_h(const EmbeddingRep& rep, const HTerm& src, const HTerm& dst,
                std::span<const std::uint64_t> rest) {
  switch (rep.kind()) {
    case EmbeddingRep::Kind::Ident:
      return Address(rest.begin(), rest.end());
    case EmbeddingRep::Kind::IntoPoint:
      if (!rest.empty()) throw error("internal: point rep applied to a non-point");
      return rep.point();
    case EmbeddingRep::Kind::Parts:
      throw error("internal: Parts rep at a summand");
    case EmbeddingRep::Kind::Sum:
      break;
  }
  if (rest.empty()) throw error("internal: address too short");
  const SumRep& sr = rep.sum_rep();
  const std::uint64_t i = rest[0];
  const std::uint64_t t = sr.sigma(i);
  Address out;
  out.push_back(t);
  Address sub = apply_h(sr.sub_at(i), src.summand(i), dst.summand(t), rest.subspan(1));
  out.insert(out.end(), sub.begin(), sub.end());
  return out;
}

std::optional<Address> preimage_h(const EmbeddingRep& rep, const HTerm& src, const HTerm& dst,
                                  std::span<const std::uint64_t> rest) {
  switch (rep.kind()) {
    case EmbeddingRep::Kind::Ident:
      return Address(rest.begin(), rest.end());
    case EmbeddingRep::Kind::IntoPoint: {
      const Address& p = rep.point();
      if (p.size() == rest.size() && std::equal(p.begin(), p.end(), rest.begin()))
        return Address{};
      return std::nullopt;
    }
    case EmbeddingRep::Kind::Parts:
      throw error("internal: Parts rep at a summand");
    case EmbeddingRep::Kind::Sum:
      break;
  }
  if (rest.empty()) throw error("internal: address too short");
  const SumRep& sr = rep.sum_rep();
  const std::uint64_t t = rest[0];
  std::optional<std::uint64_t> i = sr.sigma.invert(t);
  if (!i) return std::nullopt;
  std::optional<Address> sub =
      preimage_h(sr.sub_at(*i), src.summand(*i), dst.summand(t), rest.subspan(1));
  if (!sub) return std::nullopt;
  Address out;
  out.push_back(*i);
  out.insert(out.end(), sub->begin(), sub->end());
  return out;
}

}  // namespace

Address apply_rep(const EmbeddingRep& rep, const Term& src, const Term& dst, const Address& a) {
  if (!address_valid(src, a)) throw precondition_error("address does not lie in the source");
  if (rep.kind() == EmbeddingRep::Kind::IntoPoint) {
    if (src.arity() != 1 || !src.parts()[0].is_singleton())
      throw shape_error("point rep needs a singleton source", src.repr());
    return rep.point();
  }
  const std::size_t i = a[0];
  EmbeddingRep scratch = EmbeddingRep::ident();
  const EmbeddingRep& pr = term_part_rep(rep, src, i, scratch);
  Address out;
  out.push_back(i);
  Address sub = apply_h(pr, src.parts()[i], dst.parts()[i],
                        std::span<const std::uint64_t>(a).subspan(1));
  out.insert(out.end(), sub.begin(), sub.end());
  return out;
}

std::optional<Address> rep_preimage(const EmbeddingRep& rep, const Term& src, const Term& dst,
                                    const Address& target) {
  if (!address_valid(dst, target)) throw precondition_error("address does not lie in the target");
  if (rep.kind() == EmbeddingRep::Kind::IntoPoint) {
    if (target == rep.point()) return Address{0};
    return std::nullopt;
  }
  const std::size_t i = target[0];
  EmbeddingRep scratch = EmbeddingRep::ident();
  const EmbeddingRep& pr = term_part_rep(rep, src, i, scratch);
  std::optional<Address> sub = preimage_h(pr, src.parts()[i], dst.parts()[i],
                                          std::span<const std::uint64_t>(target).subspan(1));
  if (!sub) return std::nullopt;
  Address out;
  out.push_back(i);
  out.insert(out.end(), sub->begin(), sub->end());
  return out;
}

namespace {

EmbeddingRep compose_h(const EmbeddingRep& first, const EmbeddingRep& second, const HTerm& src,
                       const HTerm& mid, const HTerm& dst) {
  if (second.is_ident()) return first;
  if (first.is_ident()) return second;
  if (second.kind() == EmbeddingRep::Kind::IntoPoint)
    return EmbeddingRep::into_point(apply_h(first, mid, dst, second.point()));
  if (first.kind() != EmbeddingRep::Kind::Sum || second.kind() != EmbeddingRep::Kind::Sum)
    throw error("internal: unsupported rep composition");

  const SumRep& s1 = first.sum_rep();
  const SumRep& s2 = second.sum_rep();
  SumRep out;
  const std::uint64_t in =
      std::max<std::uint64_t>(s2.sigma.graph.size(), s2.sigma.lower_bound(s1.sigma.graph.size()));
  out.sigma.graph.reserve(in);
  for (std::uint64_t i = 0; i < in; ++i) out.sigma.graph.push_back(s1.sigma(s2.sigma(i)));
  out.sigma.a = s1.sigma.a * s2.sigma.a;
  out.sigma.b = static_cast<std::int64_t>(s1.sigma.a) * s2.sigma.b + s1.sigma.b;

  const std::uint64_t l1 = s1.sub_periodic.size();
  const std::uint64_t l2 = s2.sub_periodic.size();
  if (l1 == 0 || l2 == 0) throw error("sum rep without periodic sub-reps");
  const std::uint64_t estar = std::max(
      {in, std::uint64_t{s2.sub_explicit.size()}, s2.sigma.lower_bound(s1.sub_explicit.size())});
  const std::uint64_t lam = checked_lcm(l2, l1 / std::gcd(s2.sigma.a, l1));
  if (estar > kWindowCap || lam > kWindowCap) throw error("rep composition window too large");

  auto piece = [&](std::uint64_t i) {
    const std::uint64_t m = s2.sigma(i);
    return compose_h(s1.sub_at(m), s2.sub_at(i), src.summand(i), mid.summand(m),
                     dst.summand(s1.sigma(m)));
  };
  out.sub_explicit.reserve(estar);
  for (std::uint64_t i = 0; i < estar; ++i) out.sub_explicit.push_back(piece(i));
  out.sub_periodic.reserve(lam);
  for (std::uint64_t j = 0; j < lam; ++j) out.sub_periodic.push_back(piece(estar + j));
  return EmbeddingRep::sum(std::move(out));
}

}  // namespace

EmbeddingRep compose_rep(const EmbeddingRep& first, const EmbeddingRep& second, const HTerm& src,
                         const HTerm& mid, const HTerm& dst) {
  return compose_h(first, second, src, mid, dst);
}

EmbeddingRep compose_rep(const EmbeddingRep& first, const EmbeddingRep& second, const Term& src,
                         const Term& mid, const Term& dst) {
  if (second.is_ident()) return first;
  if (first.is_ident()) return second;
  if (src.arity() != mid.arity() || mid.arity() != dst.arity())
    throw shape_error("rep composition arity mismatch", src.repr());
  std::vector<EmbeddingRep> out;
  out.reserve(src.arity());
  for (std::size_t i = 0; i < src.arity(); ++i) {
    EmbeddingRep sc1 = EmbeddingRep::ident(), sc2 = EmbeddingRep::ident();
    const EmbeddingRep& p1 = term_part_rep(first, mid, i, sc1);
    const EmbeddingRep& p2 = term_part_rep(second, src, i, sc2);
    out.push_back(compose_h(p1, p2, src.parts()[i], mid.parts()[i], dst.parts()[i]));
  }
  return EmbeddingRep::parts(std::move(out));
}

namespace {

SubsetSpec point_spec(const HTerm& node, std::span<const std::uint64_t> rest) {
  if (node.is_singleton()) {
    if (!rest.empty()) throw error("internal: long address at a singleton");
    return SubsetSpec::full();
  }
  if (rest.empty()) throw error("internal: address too short");
  SumSpec ss;
  ss.tail = TailMode::Empty;
  ss.entries.emplace(rest[0], point_spec(node.summand(rest[0]), rest.subspan(1)));
  return SubsetSpec::sum(std::move(ss));
}

SubsetSpec image_h(const EmbeddingRep& rep, const HTerm& src, const HTerm& dst) {
  switch (rep.kind()) {
    case EmbeddingRep::Kind::Ident:
      return SubsetSpec::full();
    case EmbeddingRep::Kind::IntoPoint:
      return point_spec(dst, rep.point());
    case EmbeddingRep::Kind::Parts:
      throw error("internal: Parts rep at a summand");
    case EmbeddingRep::Kind::Sum:
      break;
  }
  const SumRep& sr = rep.sum_rep();
  const std::uint64_t ps = std::max<std::uint64_t>(src.pattern().size(), 1);
  const std::uint64_t pd = std::max<std::uint64_t>(dst.pattern().size(), 1);
  const std::uint64_t hd = dst.head().size();
  std::uint64_t i0 = std::max({std::uint64_t{sr.sigma.graph.size()},
                               std::uint64_t{sr.sub_explicit.size()},
                               std::uint64_t{src.head().size()}});
  while (sr.sigma(i0) < hd) ++i0;
  const std::uint64_t cutoff = sr.sigma(i0);
  const std::uint64_t lam =
      checked_lcm(sr.sigma.a * checked_lcm(sr.sub_periodic.size(), ps), pd);
  if (i0 > kWindowCap || lam > kWindowCap) throw error("image period too large");

  SumSpec out;
  for (std::uint64_t i = 0; i < i0; ++i) {
    const std::uint64_t t = sr.sigma(i);
    out.entries.emplace(t, image_h(sr.sub_at(i), src.summand(i), dst.summand(t)));
  }
  bool all_full = true, all_empty = true;
  std::vector<SubsetSpec> tail;
  tail.reserve(lam);
  for (std::uint64_t j = 0; j < lam; ++j) {
    // Least t >= cutoff in phase class j.
    const std::uint64_t ph = ((cutoff % lam) + lam - (hd % lam)) % lam;
    const std::uint64_t t = cutoff + ((j + lam - ph) % lam);
    SubsetSpec e = SubsetSpec::empty();
    if (std::optional<std::uint64_t> i = sr.sigma.invert(t))
      e = image_h(sr.sub_at(*i), src.summand(*i), dst.summand(t));
    all_full = all_full && e.is_full_kind();
    all_empty = all_empty && e.is_empty_kind();
    tail.push_back(std::move(e));
  }
  if (all_full) {
    out.tail = TailMode::Full;
  } else if (all_empty) {
    out.tail = TailMode::Empty;
  } else {
    out.tail = TailMode::Periodic;
    out.periodic = std::move(tail);
  }
  if (out.tail != TailMode::Empty && cutoff > 0 && !out.entries.count(cutoff - 1))
    out.entries.emplace(cutoff - 1, SubsetSpec::empty());
  if (out.entries.empty() && out.tail == TailMode::Full) return SubsetSpec::full();
  if (out.entries.empty() && out.tail == TailMode::Empty) return SubsetSpec::empty();
  return SubsetSpec::sum(std::move(out));
}

}  // namespace

SubsetSpec image_spec(const EmbeddingRep& rep, const HTerm& src, const HTerm& dst) {
  return image_h(rep, src, dst);
}

SubsetSpec image_spec(const EmbeddingRep& rep, const Term& src, const Term& dst) {
  if (rep.is_ident()) return SubsetSpec::full();
  if (rep.kind() == EmbeddingRep::Kind::IntoPoint) {
    const Address& p = rep.point();
    if (p.empty()) throw error("internal: empty point address");
    std::vector<SubsetSpec> out(dst.arity(), SubsetSpec::empty());
    out.at(p[0]) = point_spec(dst.parts()[p[0]], std::span<const std::uint64_t>(p).subspan(1));
    return SubsetSpec::parts(std::move(out));
  }
  std::vector<SubsetSpec> out;
  out.reserve(dst.arity());
  bool all_full = true;
  for (std::size_t i = 0; i < dst.arity(); ++i) {
    EmbeddingRep scratch = EmbeddingRep::ident();
    const EmbeddingRep& pr = term_part_rep(rep, src, i, scratch);
    SubsetSpec e = image_h(pr, src.parts()[i], dst.parts()[i]);
    all_full = all_full && e.is_full_kind();
    out.push_back(std::move(e));
  }
  if (all_full) return SubsetSpec::full();
  if (out.size() == 1) return std::move(out[0]);
  return SubsetSpec::parts(std::move(out));
}

std::optional<EmbeddingRep> rep_embed(const HTerm& src, const HTerm& dst) {
  if (src == dst) return EmbeddingRep::ident();
  if (src.is_singleton()) return EmbeddingRep::into_point(first_point(dst));
  if (dst.is_singleton() || src.kind() != dst.kind()) return std::nullopt;

  const std::uint64_t hs = src.head().size(), hd = dst.head().size();
  const std::uint64_t pdsz = dst.pattern().size();

  // One target pattern element must absorb every source pattern element.
  std::optional<std::uint64_t> psi;
  for (std::uint64_t q = 0; q < pdsz && !psi; ++q) {
    bool all = true;
    for (const HTerm& pe : src.pattern()) all = all && embeds(pe, dst.pattern()[q]);
    if (all) psi = q;
  }
  if (!psi) return std::nullopt;
  std::vector<EmbeddingRep> periodic;
  for (const HTerm& pe : src.pattern()) {
    std::optional<EmbeddingRep> r = rep_embed(pe, dst.pattern()[*psi]);
    if (!r) return std::nullopt;
    periodic.push_back(std::move(*r));
  }

  SumRep out;
  std::int64_t prev = -1;
  const std::uint64_t limit = hd + (hs + 2) * pdsz;
  for (std::uint64_t i = 0; i < hs; ++i) {
    bool placed = false;
    for (std::uint64_t t = static_cast<std::uint64_t>(prev + 1); t < limit && !placed; ++t) {
      if (std::optional<EmbeddingRep> r = rep_embed(src.head()[i], dst.summand(t))) {
        out.sigma.graph.push_back(t);
        out.sub_explicit.push_back(std::move(*r));
        prev = static_cast<std::int64_t>(t);
        placed = true;
      }
    }
    if (!placed) return std::nullopt;
  }
  // First target index of phase psi beyond the head placements.
  std::uint64_t t0 = hd + *psi;
  while (static_cast<std::int64_t>(t0) <= prev) t0 += pdsz;
  out.sigma.a = pdsz;
  out.sigma.b = static_cast<std::int64_t>(t0) - static_cast<std::int64_t>(pdsz * hs);
  out.sub_periodic = std::move(periodic);
  return EmbeddingRep::sum(std::move(out));
}

nlohmann::json rep_to_json(const EmbeddingRep& rep) {
  switch (rep.kind()) {
    case EmbeddingRep::Kind::Ident:
      return "identity";
    case EmbeddingRep::Kind::IntoPoint:
      return nlohmann::json{{"point", rep.point()}};
    case EmbeddingRep::Kind::Parts: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : rep.parts_list()) arr.push_back(rep_to_json(r));
      return nlohmann::json{{"parts", std::move(arr)}};
    }
    case EmbeddingRep::Kind::Sum: {
      const SumRep& sr = rep.sum_rep();
      nlohmann::json subs_ex = nlohmann::json::array();
      for (const auto& r : sr.sub_explicit) subs_ex.push_back(rep_to_json(r));
      nlohmann::json subs_per = nlohmann::json::array();
      for (const auto& r : sr.sub_periodic) subs_per.push_back(rep_to_json(r));
      return nlohmann::json{
          {"sigma",
           {{"graph", sr.sigma.graph}, {"a", sr.sigma.a}, {"b", sr.sigma.b}}},
          {"subs", {{"explicit", std::move(subs_ex)}, {"periodic", std::move(subs_per)}}}};
    }
  }
  throw error("internal: bad rep kind");
}

EmbeddingRep rep_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "identity") return EmbeddingRep::ident();
    throw parse_error("rep json: unknown rep literal '" + j.get<std::string>() + "'", 0);
  }
  if (!j.is_object()) throw parse_error("rep json: expected a string or object", 0);
  if (j.contains("point")) {
    if (!j["point"].is_array()) throw parse_error("rep json: 'point' must be an array", 0);
    return EmbeddingRep::into_point(j["point"].get<Address>());
  }
  if (j.contains("parts")) {
    if (!j["parts"].is_array()) throw parse_error("rep json: 'parts' must be an array", 0);
    std::vector<EmbeddingRep> ps;
    for (const auto& e : j["parts"]) ps.push_back(rep_from_json(e));
    return EmbeddingRep::parts(std::move(ps));
  }
  if (!j.contains("sigma") || !j.contains("subs"))
    throw parse_error("rep json: object needs 'sigma' and 'subs'", 0);
  SumRep sr;
  const auto& sg = j["sigma"];
  if (!sg.is_object() || !sg.contains("a") || !sg.contains("b"))
    throw parse_error("rep json: sigma needs 'a' and 'b'", 0);
  if (sg.contains("graph")) sr.sigma.graph = sg["graph"].get<std::vector<std::uint64_t>>();
  sr.sigma.a = sg["a"].get<std::uint64_t>();
  sr.sigma.b = sg["b"].get<std::int64_t>();
  const auto& subs = j["subs"];
  if (!subs.is_object() || !subs.contains("periodic"))
    throw parse_error("rep json: subs needs a 'periodic' array", 0);
  if (subs.contains("explicit"))
    for (const auto& e : subs["explicit"]) sr.sub_explicit.push_back(rep_from_json(e));
  for (const auto& e : subs["periodic"]) sr.sub_periodic.push_back(rep_from_json(e));
  return EmbeddingRep::sum(std::move(sr));
}

}  // namespace scord
