#include "scord/embed.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>

namespace scord {
namespace {

// Memo keyed on (source repr, target repr). Terms are small and shared, so
// string keys are cheap and dodge pointer-identity traps across copies.
struct Ctx {
  std::unordered_map<std::string, bool> memo;
};

bool embeds_ha(const HTerm& s, const HTerm& t, Ctx& cx);

bool fits_some_pattern(const HTerm& s, const std::vector<HTerm>& pattern, Ctx& cx) {
  for (const auto& q : pattern)
    if (embeds_ha(s, q, cx)) return true;
  return false;
}

// Core rules. A singleton embeds anywhere; nothing else embeds into a
// singleton. For matching orientations only the patterns matter: the head of
// a valid term embeds into its own pattern region, and any image of an
// infinite sum meets cofinally many summands, each of which realizes a
// pattern element. Opposite orientations compress: an omega-indexed sum
// inside an omega*-indexed one (or vice versa) is trapped inside a single
// summand, because its image is bounded on the side where the target runs
// the other way, hence bounded inside one summand there, and the summand on
// the far side contains a full copy already.
bool embeds_ha(const HTerm& s, const HTerm& t, Ctx& cx) {
  if (s.is_singleton()) return true;
  if (t.is_singleton()) return false;
  std::string key = s.repr();
  key += '\x1f';
  key += t.repr();
  if (auto it = cx.memo.find(key); it != cx.memo.end()) return it->second;
  bool r = true;
  if (s.kind() == t.kind()) {
    for (const auto& p : s.pattern())
      if (!fits_some_pattern(p, t.pattern(), cx)) {
        r = false;
        break;
      }
  } else {
    r = fits_some_pattern(s, t.pattern(), cx);
  }
  cx.memo.emplace(std::move(key), r);
  return r;
}

// Consecutive group into one ha target. For an OmegaSum target the group's
// non-final elements each occupy finitely many summands, so each must fit a
// single pattern element; the final element may stretch into the whole tail.
// OmegaStarSum mirrors this with the first element as the boundary.
bool group_into_ha(std::span<const HTerm> g, const HTerm& b, Ctx& cx) {
  if (g.size() == 1) return embeds_ha(g[0], b, cx);
  if (b.is_singleton()) return false;
  if (b.is_omega_sum()) {
    for (std::size_t i = 0; i + 1 < g.size(); ++i)
      if (!fits_some_pattern(g[i], b.pattern(), cx)) return false;
    return embeds_ha(g.back(), b, cx);
  }
  for (std::size_t i = 1; i < g.size(); ++i)
    if (!fits_some_pattern(g[i], b.pattern(), cx)) return false;
  return embeds_ha(g.front(), b, cx);
}

// Finite-sum embedding: split the source parts into consecutive nonempty
// groups and send them to strictly increasing target parts. Plain DP over
// (source index, target index).
struct TermDp {
  const std::vector<HTerm>& sp;
  const std::vector<HTerm>& tp;
  Ctx& cx;
  std::vector<std::vector<std::int8_t>> memo;

  TermDp(const Term& s, const Term& t, Ctx& c)
      : sp(s.parts()), tp(t.parts()), cx(c),
        memo(sp.size() + 1, std::vector<std::int8_t>(tp.size() + 1, -1)) {}

  bool rec(std::size_t i, std::size_t j) {
    if (i == sp.size()) return true;
    if (j == tp.size()) return false;
    std::int8_t& mv = memo[i][j];
    if (mv != -1) return mv != 0;
    bool ok = rec(i, j + 1);
    for (std::size_t k = 0; !ok && i + k < sp.size(); ++k) {
      if (group_into_ha(std::span(sp).subspan(i, k + 1), tp[j], cx) &&
          rec(i + k + 1, j + 1))
        ok = true;
    }
    mv = ok ? 1 : 0;
    return ok;
  }
};

// ---------------------------------------------------------------------------
// Witness construction.

Address first_point(const HTerm& b) {
  Address a;
  const HTerm* cur = &b;
  while (!cur->is_singleton()) {
    a.push_back(0);
    cur = &cur->summand(0);
  }
  return a;
}

struct Placer {
  Ctx& cx;
  int depth;

  // Least summand index >= lo, and inside the pattern region, whose summand
  // accepts s. Bounded by one full period past the start; embeds() has
  // already certified a hit exists.
  std::uint64_t find_slot(const HTerm& b, const HTerm& s, std::uint64_t lo) {
    std::uint64_t start = std::max<std::uint64_t>(lo, b.head().size());
    std::uint64_t limit = start + b.pattern().size();
    for (std::uint64_t i = start; i <= limit; ++i)
      if (embeds_ha(s, b.summand(i), cx)) return i;
    throw error("internal: witness slot search failed");
  }

  std::vector<Address> place_ha(const HTerm& s, const HTerm& b) {
    if (b.is_singleton()) return {Address{}};
    if (b.is_omega_sum()) return place_in_osum(s, b, 0);
    auto res = place_ha(mirror(s), mirror(b));
    std::reverse(res.begin(), res.end());
    return res;
  }

  // Place truncate_h(s, depth) into OmegaSum b using summand indices >= floor,
  // pattern region only. Addresses are relative to b.
  std::vector<Address> place_in_osum(const HTerm& s, const HTerm& b,
                                     std::uint64_t floor) {
    std::vector<Address> out;
    if (s.is_singleton()) {
      std::uint64_t idx = find_slot(b, s, floor);
      Address a{idx};
      Address tail = first_point(b.summand(idx));
      a.insert(a.end(), tail.begin(), tail.end());
      out.push_back(std::move(a));
      return out;
    }
    if (s.is_omega_sum()) {
      std::uint64_t count =
          s.head().size() +
          static_cast<std::uint64_t>(depth) * s.pattern().size();
      std::uint64_t next = floor;
      for (std::uint64_t m = 0; m < count; ++m) {
        const HTerm& e = s.summand(m);
        std::uint64_t idx = find_slot(b, e, next);
        for (auto& rel : place_ha(e, b.summand(idx))) {
          Address a{idx};
          a.insert(a.end(), rel.begin(), rel.end());
          out.push_back(std::move(a));
        }
        next = idx + 1;
      }
      return out;
    }
    // OmegaStarSum source compresses into one summand.
    std::uint64_t idx = find_slot(b, s, floor);
    for (auto& rel : place_ha(s, b.summand(idx))) {
      Address a{idx};
      a.insert(a.end(), rel.begin(), rel.end());
      out.push_back(std::move(a));
    }
    return out;
  }

  std::vector<Address> place_group(std::span<const HTerm> g, const HTerm& b) {
    if (b.is_singleton()) return {Address{}};
    if (b.is_omega_star_sum()) {
      std::vector<HTerm> mg;
      mg.reserve(g.size());
      for (std::size_t i = g.size(); i-- > 0;) mg.push_back(mirror(g[i]));
      auto res = place_group(std::span<const HTerm>(mg), mirror(b));
      std::reverse(res.begin(), res.end());
      return res;
    }
    std::vector<Address> out;
    std::uint64_t next = 0;
    for (std::size_t a = 0; a + 1 < g.size(); ++a) {
      std::uint64_t idx = find_slot(b, g[a], next);
      for (auto& rel : place_ha(g[a], b.summand(idx))) {
        Address addr{idx};
        addr.insert(addr.end(), rel.begin(), rel.end());
        out.push_back(std::move(addr));
      }
      next = idx + 1;
    }
    for (auto& addr : place_in_osum(g.back(), b, next)) out.push_back(std::move(addr));
    return out;
  }
};

bool valid_ha(const HTerm& t, Ctx& cx) {
  if (t.is_singleton()) return true;
  for (const auto& p : t.pattern())
    if (!valid_ha(p, cx)) return false;
  for (const auto& h : t.head()) {
    if (!valid_ha(h, cx)) return false;
    if (!fits_some_pattern(h, t.pattern(), cx)) return false;
  }
  return true;
}

}  // namespace

bool hterm_valid(const HTerm& t) {
  Ctx cx;
  return valid_ha(t, cx);
}

bool term_valid(const Term& t) {
  Ctx cx;
  for (const auto& p : t.parts())
    if (!valid_ha(p, cx)) return false;
  return true;
}

void require_valid(const HTerm& t) {
  if (!hterm_valid(t))
    throw precondition_error("invalid term: head element outside its pattern: " + t.repr());
}

void require_valid(const Term& t) {
  for (const auto& p : t.parts()) require_valid(p);
}

bool embeds(const HTerm& s, const HTerm& t) {
  require_valid(s);
  require_valid(t);
  Ctx cx;
  return embeds_ha(s, t, cx);
}

bool embeds(const Term& s, const Term& t) {
  require_valid(s);
  require_valid(t);
  Ctx cx;
  TermDp dp(s, t, cx);
  return dp.rec(0, 0);
}

bool embeds_group_into_ha(std::span<const HTerm> group, const HTerm& target) {
  if (group.empty()) throw precondition_error("embeds_group_into_ha: empty group");
  for (const auto& g : group) require_valid(g);
  require_valid(target);
  Ctx cx;
  return group_into_ha(group, target, cx);
}

std::optional<WitnessMap> embed_witness(const Term& s, const Term& t, int depth) {
  require_valid(s);
  require_valid(t);
  if (depth < 0) throw precondition_error("embed_witness: negative depth");
  Ctx cx;
  TermDp dp(s, t, cx);
  if (!dp.rec(0, 0)) return std::nullopt;

  const auto& sp = s.parts();
  const auto& tp = t.parts();
  Placer pl{cx, depth};
  std::vector<Address> images;
  std::size_t i = 0, j = 0;
  while (i < sp.size()) {
    bool used = false;
    for (std::size_t k = 0; i + k < sp.size(); ++k) {
      if (group_into_ha(std::span(sp).subspan(i, k + 1), tp[j], cx) &&
          dp.rec(i + k + 1, j + 1)) {
        for (auto& rel : pl.place_group(std::span(sp).subspan(i, k + 1), tp[j])) {
          Address a{static_cast<std::uint64_t>(j)};
          a.insert(a.end(), rel.begin(), rel.end());
          images.push_back(std::move(a));
        }
        i += k + 1;
        ++j;
        used = true;
        break;
      }
    }
    if (!used) ++j;
  }

  WitnessMap w;
  w.depth = depth;
  auto pts = truncate(s, depth);
  if (pts.size() != images.size())
    throw error("internal: witness size mismatch");
  for (std::size_t p = 0; p < pts.size(); ++p) {
    if (p > 0 && address_compare(t, images[p - 1], images[p]) >= 0)
      throw error("internal: witness addresses not increasing");
    if (!address_valid(t, images[p]))
      throw error("internal: witness address invalid");
  }
  w.pairs.reserve(pts.size());
  for (std::size_t p = 0; p < pts.size(); ++p)
    w.pairs.emplace_back(std::move(pts[p]), std::move(images[p]));
  return w;
}

}  // namespace scord
