#include "scord/copies.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "scord/embed.hpp"
#include "scord/hclass.hpp"

namespace scord {

namespace {

// Copy criterion for an omega-sum part: a copy lies in the subset iff every
// distinct pattern element is realized inside some phase class of the tail
// (head elements embed into pattern elements, so the tail carries them too).
bool osum_contains(const HTerm& part, const SubsetSpec& spec) {
  if (spec.is_full_kind()) return true;
  if (spec.is_empty_kind()) return false;
  const SumSpec& ss = spec.sum_spec();
  switch (ss.tail) {
    case TailMode::Full:
      return true;
    case TailMode::Empty:
      return false;
    case TailMode::Periodic:
      break;
  }
  const auto& pat = part.pattern();
  const std::uint64_t p = pat.size();
  const std::uint64_t len = ss.periodic.size();
  std::set<std::string> seen;
  for (const HTerm& q : pat) {
    if (!seen.insert(q.repr()).second) continue;
    bool realized = false;
    for (std::uint64_t j = 0; j < len && !realized; ++j) {
      std::vector<HTerm> rest = restrict_h(pat[j % p], ss.periodic[j]);
      if (rest.empty()) continue;
      realized = embeds(Term::of(q), Term(std::move(rest)));
    }
    if (!realized) return false;
  }
  return true;
}

bool part_contains(const HTerm& part, const SubsetSpec& spec) {
  if (part.is_singleton()) return spec_is_full(spec, part);
  if (part.is_omega_star_sum()) return osum_contains(mirror(part), mirror_spec(spec));
  return osum_contains(part, spec);
}

// Parts whose pattern elements are pairwise embeddability-comparable, all
// the way down. For these the copy-free subsets form an ideal, so
// almost-inclusion is exactly "the difference holds no copy".
bool chain_patterned(const HTerm& part) {
  if (part.is_singleton()) return true;
  const auto& pat = part.pattern();
  for (const HTerm& q : pat)
    if (!chain_patterned(q)) return false;
  for (std::size_t i = 0; i < pat.size(); ++i)
    for (std::size_t j = i + 1; j < pat.size(); ++j)
      if (!embeds(pat[i], pat[j]) && !embeds(pat[j], pat[i])) return false;
  return true;
}

std::vector<SubsetSpec> per_part(const SubsetSpec& s, const Term& t) {
  std::vector<SubsetSpec> ps;
  ps.reserve(t.arity());
  for (std::size_t i = 0; i < t.arity(); ++i) ps.push_back(part_spec(s, t, i));
  return ps;
}

}  // namespace

bool contains_copy(const Term& t, const SubsetSpec& s) {
  shape_check(s, t);
  const Decomposition d = min_decomposition(t);
  const std::vector<SubsetSpec> ps = per_part(s, t);
  for (std::size_t j = 0; j < d.m; ++j) {
    SubsetSpec tr = transport_spec(ps, *d.trees[j]);
    if (!part_contains(d.parts[j], tr)) return false;
  }
  return true;
}

int tower_height(const HTerm& part) {
  if (part.is_singleton()) return 0;
  if (!part.head().empty() || part.pattern().size() != 1) return -1;
  const int h = tower_height(part.pattern()[0]);
  return h < 0 ? -1 : h + 1;
}

Verdict le_star(const Term& t, const SubsetSpec& a, const SubsetSpec& b) {
  shape_check(a, t);
  shape_check(b, t);
  if (!contains_copy(t, a) || !contains_copy(t, b))
    throw precondition_error("le_star needs copy-containing arguments");
  const Decomposition d = min_decomposition(t);
  const std::vector<SubsetSpec> pa = per_part(a, t);
  const std::vector<SubsetSpec> pb = per_part(b, t);
  bool unknown = false;
  for (std::size_t j = 0; j < d.m; ++j) {
    const HTerm& part = d.parts[j];
    SubsetSpec diff =
        spec_diff(transport_spec(pa, *d.trees[j]), transport_spec(pb, *d.trees[j]), part);
    if (spec_is_empty(diff, part)) continue;
    if (part_contains(part, diff)) return Verdict::False;
    if (!chain_patterned(part)) unknown = true;
  }
  return unknown ? Verdict::Unknown : Verdict::True;
}

namespace {

// Membership in the iterated finite-support ideal of a height-k tower,
// computed structurally: finitely many explicit columns never matter, and a
// periodic tail is small iff every phase entry is small one level down.
bool tower_small(const SubsetSpec& s, const HTerm& node, int k) {
  if (k == 0) return spec_is_empty(s, node);
  if (s.is_full_kind()) return false;
  if (s.is_empty_kind()) return true;
  const SumSpec& ss = s.sum_spec();
  switch (ss.tail) {
    case TailMode::Full:
      return false;
    case TailMode::Empty:
      return true;
    case TailMode::Periodic: {
      const HTerm& q = node.pattern()[0];
      for (const auto& e : ss.periodic)
        if (!tower_small(e, q, k - 1)) return false;
      return true;
    }
  }
  throw error("internal: bad tail mode");
}

}  // namespace

bool ideal_member(Ideal which, const SubsetSpec& s) {
  static const Term w = parse_term("w");
  static const Term ww = parse_term("w[w]");
  const Term& t = which == Ideal::Fin ? w : ww;
  shape_check(s, t);
  const SubsetSpec& ps = part_spec(s, t, 0);
  return tower_small(ps, t.parts()[0], which == Ideal::Fin ? 1 : 2);
}

namespace {

EmbeddingRep ident_sum(std::uint64_t head, std::uint64_t stride, std::int64_t off) {
  SumRep sr;
  sr.sigma.a = stride;
  sr.sigma.b = off;
  for (std::uint64_t i = 0; i < head; ++i) sr.sigma.graph.push_back(i);
  sr.sub_explicit.assign(head, EmbeddingRep::ident());
  sr.sub_periodic.assign(1, EmbeddingRep::ident());
  return EmbeddingRep::sum(std::move(sr));
}

}  // namespace

DisjointCopies disjoint_copies(const Term& t) {
  bool infinite = false;
  for (const HTerm& part : t.parts()) infinite = infinite || !part.is_singleton();
  if (!infinite)
    throw precondition_error("disjoint copies need a term with an infinite part");

  std::vector<EmbeddingRep> xs, ys;
  for (const HTerm& part : t.parts()) {
    if (part.is_singleton()) {
      xs.push_back(EmbeddingRep::ident());
      ys.push_back(EmbeddingRep::ident());
      continue;
    }
    const std::uint64_t h = part.head().size();
    const std::uint64_t p = part.pattern().size();

    // First copy: the head stays put, the tail spreads out with stride p+1
    // keeping phase, so its pattern-zone offsets are 0 mod p+1.
    xs.push_back(ident_sum(h, p + 1, -static_cast<std::int64_t>(p * h)));

    // Second copy: tail offsets are p mod p+1 (after a gap of c summands
    // reserved for relocated head elements), phase preserved.
    const std::uint64_t c = p + p * (p + 1) * h;
    SumRep y;
    y.sigma.a = p + 1;
    y.sigma.b = static_cast<std::int64_t>(h + c) - static_cast<std::int64_t>((p + 1) * h);
    std::uint64_t prev_off = 0;
    for (std::uint64_t i = 0; i < h; ++i) {
      bool placed = false;
      for (std::uint64_t o = prev_off + 1; o < c && !placed; ++o) {
        if (o % (p + 1) == 0) continue;
        if (std::optional<EmbeddingRep> r = rep_embed(part.head()[i], part.summand(h + o))) {
          y.sigma.graph.push_back(h + o);
          y.sub_explicit.push_back(std::move(*r));
          prev_off = o;
          placed = true;
        }
      }
      if (!placed)
        throw error("disjoint copies: cannot relocate head element " +
                    part.head()[i].repr() + " of " + part.repr());
    }
    y.sub_periodic.assign(1, EmbeddingRep::ident());
    ys.push_back(EmbeddingRep::sum(std::move(y)));
  }

  DisjointCopies out{EmbeddingRep::parts(std::move(xs)), EmbeddingRep::parts(std::move(ys)),
                     SubsetSpec::full(), SubsetSpec::full()};
  validate_rep(out.first, t, t);
  validate_rep(out.second, t, t);
  out.first_image = image_spec(out.first, t, t);
  out.second_image = image_spec(out.second, t, t);
  return out;
}

SubsetSpec lower_bound_finite(const Term& t, std::span<const SubsetSpec> chain) {
  if (chain.empty()) throw precondition_error("lower bound needs a nonempty chain");
  for (const SubsetSpec& s : chain) shape_check(s, t);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (le_star(t, chain[i + 1], chain[i]) != Verdict::True)
      throw precondition_error("chain is not verifiably le_star-descending");
  SubsetSpec out = chain[0];
  for (std::size_t i = 1; i < chain.size(); ++i) out = spec_intersect(out, chain[i], t);
  if (!contains_copy(t, out))
    throw error("internal: intersection of the chain lost the copy");
  return out;
}

namespace {

SumRep to_sum_rep(const EmbeddingRep& rep) {
  if (rep.kind() == EmbeddingRep::Kind::Sum) return rep.sum_rep();
  if (rep.is_ident()) {
    SumRep sr;
    sr.sub_periodic.assign(1, EmbeddingRep::ident());
    return sr;
  }
  throw shape_error("fusion chain element is not a sum rep", "");
}

}  // namespace

FusionResult fuse(const Term& t, std::span<const EmbeddingRep> chain) {
  if (t.arity() != 1 || t.parts()[0].is_singleton())
    throw precondition_error("fusion needs a one-part sum term");
  if (chain.empty()) throw precondition_error("fusion needs a nonempty chain");
  const HTerm& node = t.parts()[0];
  const std::uint64_t h = node.head().size();
  const std::uint64_t p = node.pattern().size();

  std::vector<SumRep> g;
  g.reserve(chain.size());
  for (const EmbeddingRep& e : chain) {
    validate_rep(e, t, t);
    g.push_back(to_sum_rep(e.kind() == EmbeddingRep::Kind::Parts ? e.parts_list()[0] : e));
  }

  // Stage composites G_k = g_0 after ... after g_k.
  std::vector<SumRep> gs;
  gs.reserve(g.size());
  gs.push_back(g[0]);
  for (std::size_t k = 1; k < g.size(); ++k)
    gs.push_back(compose_rep(EmbeddingRep::sum(gs[k - 1]), EmbeddingRep::sum(g[k]), node, node,
                             node)
                     .sum_rep());

  const std::size_t n = gs.size();
  FusionResult out;
  out.stages.reserve(n);
  for (const SumRep& sr : gs) out.stages.push_back(EmbeddingRep::sum(sr));

  SumRep f;
  std::int64_t prev = -1;
  std::uint64_t i = 0;
  std::uint64_t last_anchor = 0;
  for (;; ++i) {
    if (i > (std::uint64_t{1} << 20))
      throw error("fusion did not stabilize");
    const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(i), n - 1);
    const SumRep& G = gs[k];
    std::uint64_t ti;
    if (i < h) {
      ti = i;
      if (static_cast<std::int64_t>(G.sigma(ti)) <= prev)
        throw error("internal: fusion head anchor not admissible");
    } else {
      std::uint64_t start =
          std::max<std::uint64_t>(G.sigma.lower_bound(static_cast<std::uint64_t>(prev + 1)), h);
      ti = start + ((i % p) + p - (start % p)) % p;
    }
    const std::uint64_t target = G.sigma(ti);
    f.sigma.graph.push_back(target);
    f.sub_explicit.push_back(G.sub_at(ti));
    out.anchors.push_back(ti);
    prev = static_cast<std::int64_t>(target);

    // Once the last stage is reached and anchors sit past its explicit
    // region, every later anchor is just the next summand of equal phase.
    if (k == n - 1 && i >= h &&
        ti >= std::max<std::uint64_t>({G.sigma.graph.size(), G.sub_explicit.size(), h})) {
      last_anchor = ti;
      break;
    }
  }

  // Past the explicit region every next anchor is the next summand, so the
  // fused rep closes off as an affine tail copied from the last stage. The
  // periodic block length must be a common period of that stage's cycle and
  // the source pattern for the stored pieces to keep matching phases.
  const SumRep& G = gs[n - 1];
  f.sigma.a = G.sigma.a;
  f.sigma.b = prev - static_cast<std::int64_t>(G.sigma.a) * static_cast<std::int64_t>(i);
  const std::uint64_t lf = std::lcm<std::uint64_t>(G.sub_periodic.size(), p);
  f.sub_periodic.reserve(lf);
  for (std::uint64_t j = 0; j < lf; ++j) f.sub_periodic.push_back(G.sub_at(last_anchor + 1 + j));

  out.fused = EmbeddingRep::sum(std::move(f));
  validate_rep(out.fused, t, t);
  return out;
}

}  // namespace scord
