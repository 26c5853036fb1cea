#include "scord/spec.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "scord/embed.hpp"

namespace scord {

namespace {

const SubsetSpec kFullSpec = SubsetSpec::full();
const SubsetSpec kEmptySpec = SubsetSpec::empty();

std::uint64_t phase_of(std::uint64_t i, std::uint64_t head, std::uint64_t len) {
  return ((i % len) + len - (head % len)) % len;
}

SumSpec as_sum(const SubsetSpec& s) {
  switch (s.kind()) {
    case SubsetSpec::Kind::Full:
      return SumSpec{{}, TailMode::Full, {}};
    case SubsetSpec::Kind::Empty:
      return SumSpec{{}, TailMode::Empty, {}};
    case SubsetSpec::Kind::Sum:
      return s.sum_spec();
    default:
      throw error("internal: Parts spec where a summand spec was expected");
  }
}

void require_sum_node(const HTerm& node) {
  if (node.is_singleton())
    throw error("internal: sum spec operation on a singleton node");
}

}  // namespace

SubsetSpec SubsetSpec::full() { return SubsetSpec{}; }

SubsetSpec SubsetSpec::empty() {
  SubsetSpec s;
  s.kind_ = Kind::Empty;
  return s;
}

SubsetSpec SubsetSpec::sum(SumSpec ss) {
  SubsetSpec s;
  s.kind_ = Kind::Sum;
  s.sum_ = std::make_shared<const SumSpec>(std::move(ss));
  return s;
}

SubsetSpec SubsetSpec::parts(std::vector<SubsetSpec> ps) {
  SubsetSpec s;
  s.kind_ = Kind::Parts;
  s.parts_ = std::make_shared<const std::vector<SubsetSpec>>(std::move(ps));
  return s;
}

const SumSpec& SubsetSpec::sum_spec() const {
  if (kind_ != Kind::Sum) throw error("internal: sum_spec on a non-Sum spec");
  return *sum_;
}

const std::vector<SubsetSpec>& SubsetSpec::parts_list() const {
  if (kind_ != Kind::Parts) throw error("internal: parts_list on a non-Parts spec");
  return *parts_;
}

void shape_check(const SubsetSpec& s, const HTerm& t) {
  switch (s.kind()) {
    case SubsetSpec::Kind::Full:
    case SubsetSpec::Kind::Empty:
      return;
    case SubsetSpec::Kind::Parts:
      throw shape_error("Parts spec applied to a single summand", t.repr());
    case SubsetSpec::Kind::Sum:
      break;
  }
  if (t.is_singleton())
    throw shape_error("Sum spec applied to a singleton", t.repr());
  const SumSpec& ss = s.sum_spec();
  for (const auto& [i, v] : ss.entries) shape_check(v, t.summand(i));
  if (ss.tail == TailMode::Periodic) {
    const std::uint64_t p = t.pattern().size();
    const std::uint64_t len = ss.periodic.size();
    if (len == 0 || len % p != 0)
      throw shape_error("periodic tail length must be a positive multiple of the pattern length",
                        t.repr());
    const std::uint64_t ts = ss.tail_start();
    if (ts < t.head().size())
      throw shape_error("periodic tail must start at or beyond the head", t.repr());
    for (std::uint64_t i = ts; i < ts + len; ++i)
      shape_check(ss.periodic[phase_of(i, t.head().size(), len)], t.summand(i));
  } else if (!ss.periodic.empty()) {
    throw shape_error("periodic entries given without a periodic tail", t.repr());
  }
}

void shape_check(const SubsetSpec& s, const Term& t) {
  if (s.kind() == SubsetSpec::Kind::Parts) {
    const auto& ps = s.parts_list();
    if (ps.size() != t.arity())
      throw shape_error("Parts spec arity mismatch", t.repr());
    for (std::size_t i = 0; i < ps.size(); ++i) shape_check(ps[i], t.parts()[i]);
    return;
  }
  if (s.kind() == SubsetSpec::Kind::Sum && t.arity() != 1)
    throw shape_error("a bare Sum spec needs a one-part term", t.repr());
  if (s.kind() == SubsetSpec::Kind::Sum) shape_check(s, t.parts()[0]);
}

const SubsetSpec& part_spec(const SubsetSpec& s, const Term& t, std::size_t i) {
  if (i >= t.arity()) throw error("internal: part index out of range");
  switch (s.kind()) {
    case SubsetSpec::Kind::Full:
      return kFullSpec;
    case SubsetSpec::Kind::Empty:
      return kEmptySpec;
    case SubsetSpec::Kind::Sum:
      return s;  // one-part term, checked by shape_check
    case SubsetSpec::Kind::Parts:
      return s.parts_list().at(i);
  }
  throw error("internal: bad spec kind");
}

SubsetSpec spec_at(const SubsetSpec& s, const HTerm& node, std::uint64_t i) {
  require_sum_node(node);
  switch (s.kind()) {
    case SubsetSpec::Kind::Full:
      return SubsetSpec::full();
    case SubsetSpec::Kind::Empty:
      return SubsetSpec::empty();
    case SubsetSpec::Kind::Parts:
      throw error("internal: Parts spec at a summand");
    case SubsetSpec::Kind::Sum:
      break;
  }
  const SumSpec& ss = s.sum_spec();
  auto it = ss.entries.find(i);
  if (it != ss.entries.end()) return it->second;
  if (i < ss.tail_start()) return SubsetSpec::empty();
  switch (ss.tail) {
    case TailMode::Full:
      return SubsetSpec::full();
    case TailMode::Empty:
      return SubsetSpec::empty();
    case TailMode::Periodic:
      return ss.periodic[phase_of(i, node.head().size(), ss.periodic.size())];
  }
  throw error("internal: bad tail mode");
}

bool spec_is_empty(const SubsetSpec& s, const HTerm& node) {
  switch (s.kind()) {
    case SubsetSpec::Kind::Full:
      return false;
    case SubsetSpec::Kind::Empty:
      return true;
    case SubsetSpec::Kind::Parts:
      throw error("internal: Parts spec at a summand");
    case SubsetSpec::Kind::Sum:
      break;
  }
  const SumSpec& ss = s.sum_spec();
  for (const auto& [i, v] : ss.entries)
    if (!spec_is_empty(v, node.summand(i))) return false;
  switch (ss.tail) {
    case TailMode::Full:
      return false;
    case TailMode::Empty:
      return true;
    case TailMode::Periodic: {
      const std::uint64_t p = node.pattern().size();
      for (std::uint64_t j = 0; j < ss.periodic.size(); ++j)
        if (!spec_is_empty(ss.periodic[j], node.pattern()[j % p])) return false;
      return true;
    }
  }
  throw error("internal: bad tail mode");
}

bool spec_is_full(const SubsetSpec& s, const HTerm& node) {
  switch (s.kind()) {
    case SubsetSpec::Kind::Full:
      return true;
    case SubsetSpec::Kind::Empty:
      return false;
    case SubsetSpec::Kind::Parts:
      throw error("internal: Parts spec at a summand");
    case SubsetSpec::Kind::Sum:
      break;
  }
  const SumSpec& ss = s.sum_spec();
  const std::uint64_t ts = ss.tail_start();
  // Any gap below the tail start is an empty summand.
  if (ss.entries.size() != ts) return false;
  for (const auto& [i, v] : ss.entries)
    if (!spec_is_full(v, node.summand(i))) return false;
  switch (ss.tail) {
    case TailMode::Full:
      return true;
    case TailMode::Empty:
      return false;
    case TailMode::Periodic: {
      const std::uint64_t p = node.pattern().size();
      for (std::uint64_t j = 0; j < ss.periodic.size(); ++j)
        if (!spec_is_full(ss.periodic[j], node.pattern()[j % p])) return false;
      return true;
    }
  }
  throw error("internal: bad tail mode");
}

bool spec_is_empty(const SubsetSpec& s, const Term& t) {
  for (std::size_t i = 0; i < t.arity(); ++i)
    if (!spec_is_empty(part_spec(s, t, i), t.parts()[i])) return false;
  return true;
}

bool spec_is_full(const SubsetSpec& s, const Term& t) {
  for (std::size_t i = 0; i < t.arity(); ++i)
    if (!spec_is_full(part_spec(s, t, i), t.parts()[i])) return false;
  return true;
}

namespace {

enum class SetOp { Intersect, Diff };

SubsetSpec combine(SetOp op, const SubsetSpec& a, const SubsetSpec& b, const HTerm& node);

SubsetSpec tail_entry(const SumSpec& ss, std::uint64_t j) {
  switch (ss.tail) {
    case TailMode::Full:
      return SubsetSpec::full();
    case TailMode::Empty:
      return SubsetSpec::empty();
    case TailMode::Periodic:
      return ss.periodic[j % ss.periodic.size()];
  }
  throw error("internal: bad tail mode");
}

SubsetSpec combine_sums(SetOp op, const SubsetSpec& a, const SubsetSpec& b, const HTerm& node) {
  require_sum_node(node);
  const SumSpec sa = as_sum(a);
  const SumSpec sb = as_sum(b);
  const std::uint64_t h = node.head().size();
  const std::uint64_t p = node.pattern().size();
  const std::uint64_t la = sa.tail == TailMode::Periodic ? sa.periodic.size() : 1;
  const std::uint64_t lb = sb.tail == TailMode::Periodic ? sb.periodic.size() : 1;
  const std::uint64_t lam = std::lcm(std::lcm(la, lb), p);

  // Combined tail: one entry per common phase class.
  std::vector<SubsetSpec> tout;
  tout.reserve(lam);
  bool all_full = true, all_empty = true;
  for (std::uint64_t j = 0; j < lam; ++j) {
    SubsetSpec e = combine(op, tail_entry(sa, j), tail_entry(sb, j), node.pattern()[j % p]);
    all_full = all_full && e.is_full_kind();
    all_empty = all_empty && e.is_empty_kind();
    tout.push_back(std::move(e));
  }

  SumSpec out;
  if (all_full) {
    out.tail = TailMode::Full;
  } else if (all_empty) {
    out.tail = TailMode::Empty;
  } else {
    out.tail = TailMode::Periodic;
    out.periodic = std::move(tout);
  }

  const std::uint64_t tsa = sa.tail_start(), tsb = sb.tail_start();
  std::uint64_t ts = std::max(tsa, tsb);
  if (out.tail == TailMode::Periodic) ts = std::max(ts, h);

  std::set<std::uint64_t> idx;
  for (const auto& kv : sa.entries) idx.insert(kv.first);
  for (const auto& kv : sb.entries) idx.insert(kv.first);
  for (std::uint64_t i = std::min(tsa, tsb); i < ts; ++i) idx.insert(i);
  for (std::uint64_t i : idx) {
    SubsetSpec e = combine(op, spec_at(a, node, i), spec_at(b, node, i), node.summand(i));
    if (!e.is_empty_kind()) out.entries.emplace(i, std::move(e));
  }
  // Pin the tail start when the tail is not empty, so absent indices below
  // it stay empty.
  if (out.tail != TailMode::Empty && ts > 0 && !out.entries.count(ts - 1))
    out.entries.emplace(ts - 1, SubsetSpec::empty());

  if (out.entries.empty()) {
    if (out.tail == TailMode::Full) return SubsetSpec::full();
    if (out.tail == TailMode::Empty) return SubsetSpec::empty();
  }
  return SubsetSpec::sum(std::move(out));
}

SubsetSpec combine(SetOp op, const SubsetSpec& a, const SubsetSpec& b, const HTerm& node) {
  if (op == SetOp::Intersect) {
    if (a.is_full_kind()) return b;
    if (b.is_full_kind()) return a;
    if (a.is_empty_kind() || b.is_empty_kind()) return SubsetSpec::empty();
  } else {
    if (a.is_empty_kind() || b.is_full_kind()) return SubsetSpec::empty();
    if (b.is_empty_kind()) return a;
  }
  return combine_sums(op, a, b, node);
}

SubsetSpec combine(SetOp op, const SubsetSpec& a, const SubsetSpec& b, const Term& t) {
  std::vector<SubsetSpec> out;
  out.reserve(t.arity());
  bool all_full = true, all_empty = true;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    SubsetSpec e = combine(op, part_spec(a, t, i), part_spec(b, t, i), t.parts()[i]);
    all_full = all_full && e.is_full_kind();
    all_empty = all_empty && e.is_empty_kind();
    out.push_back(std::move(e));
  }
  if (all_full) return SubsetSpec::full();
  if (all_empty) return SubsetSpec::empty();
  return SubsetSpec::parts(std::move(out));
}

}  // namespace

SubsetSpec spec_intersect(const SubsetSpec& a, const SubsetSpec& b, const HTerm& node) {
  return combine(SetOp::Intersect, a, b, node);
}

SubsetSpec spec_intersect(const SubsetSpec& a, const SubsetSpec& b, const Term& t) {
  return combine(SetOp::Intersect, a, b, t);
}

SubsetSpec spec_diff(const SubsetSpec& a, const SubsetSpec& b, const HTerm& node) {
  return combine(SetOp::Diff, a, b, node);
}

SubsetSpec spec_diff(const SubsetSpec& a, const SubsetSpec& b, const Term& t) {
  return combine(SetOp::Diff, a, b, t);
}

bool spec_subset(const SubsetSpec& a, const SubsetSpec& b, const Term& t) {
  return spec_is_empty(spec_diff(a, b, t), t);
}

namespace {

bool contains_point_h(const SubsetSpec& s, const HTerm& node, std::span<const std::uint64_t> rest) {
  if (s.is_full_kind()) return true;
  if (s.is_empty_kind()) return false;
  if (node.is_singleton())
    throw error("internal: Sum spec at a singleton during point lookup");
  if (rest.empty()) throw error("internal: address too short for the term");
  SubsetSpec e = spec_at(s, node, rest[0]);
  return contains_point_h(e, node.summand(rest[0]), rest.subspan(1));
}

}  // namespace

bool spec_contains_point(const SubsetSpec& s, const Term& t, const Address& a) {
  if (!address_valid(t, a)) throw precondition_error("address does not lie in the term");
  const std::size_t i = a[0];
  return contains_point_h(part_spec(s, t, i), t.parts()[i],
                          std::span<const std::uint64_t>(a).subspan(1));
}

SubsetSpec mirror_spec(const SubsetSpec& s) {
  switch (s.kind()) {
    case SubsetSpec::Kind::Full:
    case SubsetSpec::Kind::Empty:
      return s;
    case SubsetSpec::Kind::Sum: {
      const SumSpec& ss = s.sum_spec();
      SumSpec out;
      out.tail = ss.tail;
      for (const auto& [i, v] : ss.entries) out.entries.emplace(i, mirror_spec(v));
      out.periodic.reserve(ss.periodic.size());
      for (const auto& v : ss.periodic) out.periodic.push_back(mirror_spec(v));
      return SubsetSpec::sum(std::move(out));
    }
    case SubsetSpec::Kind::Parts: {
      const auto& ps = s.parts_list();
      std::vector<SubsetSpec> out(ps.rbegin(), ps.rend());
      for (auto& v : out) v = mirror_spec(v);
      return SubsetSpec::parts(std::move(out));
    }
  }
  throw error("internal: bad spec kind");
}

namespace {

// Finitely many points plus an omega-sum of singletons is plain omega.
HTerm canon_osum(std::vector<HTerm> head, std::vector<HTerm> pattern) {
  bool plain = true;
  for (const auto& x : head) plain = plain && x.is_singleton();
  for (const auto& x : pattern) plain = plain && x.is_singleton();
  if (plain) return HTerm::omega_sum({}, {HTerm::singleton()});
  return HTerm::omega_sum(std::move(head), std::move(pattern));
}

}  // namespace

std::vector<HTerm> restrict_h(const HTerm& node, const SubsetSpec& s) {
  if (s.is_full_kind()) return {node};
  if (s.is_empty_kind()) return {};
  if (node.is_singleton()) throw error("internal: Sum spec at a singleton during restrict");
  if (node.is_omega_star_sum()) {
    std::vector<HTerm> m = restrict_h(mirror(node), mirror_spec(s));
    std::reverse(m.begin(), m.end());
    for (auto& x : m) x = mirror(x);
    return m;
  }

  const SumSpec& ss = s.sum_spec();
  const std::uint64_t h = node.head().size();
  const std::uint64_t p = node.pattern().size();
  const std::uint64_t ts = ss.tail_start();
  std::vector<HTerm> out;
  for (const auto& [i, v] : ss.entries) {
    std::vector<HTerm> sub = restrict_h(node.summand(i), v);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  switch (ss.tail) {
    case TailMode::Empty:
      break;
    case TailMode::Full: {
      std::vector<HTerm> head2;
      if (ts <= h) {
        for (std::uint64_t i = ts; i < h; ++i) head2.push_back(node.head()[i]);
      } else {
        for (std::uint64_t j = (ts - h) % p; j < p; ++j) head2.push_back(node.pattern()[j]);
      }
      out.push_back(canon_osum(std::move(head2), node.pattern()));
      break;
    }
    case TailMode::Periodic: {
      const std::uint64_t len = ss.periodic.size();
      std::vector<std::vector<HTerm>> chunks(len);
      for (std::uint64_t j = 0; j < len; ++j)
        chunks[j] = restrict_h(node.pattern()[j % p], ss.periodic[j]);
      std::vector<HTerm> pat2;
      for (std::uint64_t j = 0; j < len; ++j)
        pat2.insert(pat2.end(), chunks[j].begin(), chunks[j].end());
      std::vector<HTerm> head2;
      for (std::uint64_t j = (ts - h) % len; j < len; ++j)
        head2.insert(head2.end(), chunks[j].begin(), chunks[j].end());
      if (pat2.empty()) {
        out.insert(out.end(), head2.begin(), head2.end());
        break;
      }
      // Leading restricted pieces that no longer fit a pattern element
      // become standalone parts; the rest stays in the head.
      std::size_t r = head2.size();
      while (r > 0) {
        bool fits = false;
        for (const auto& q : pat2)
          if (embeds(head2[r - 1], q)) {
            fits = true;
            break;
          }
        if (!fits) break;
        --r;
      }
      for (std::size_t i = 0; i < r; ++i) out.push_back(head2[i]);
      out.push_back(canon_osum({head2.begin() + static_cast<std::ptrdiff_t>(r), head2.end()},
                               std::move(pat2)));
      break;
    }
  }
  return out;
}

std::optional<Term> restrict_term(const Term& t, const SubsetSpec& s) {
  shape_check(s, t);
  std::vector<HTerm> parts;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    std::vector<HTerm> sub = restrict_h(t.parts()[i], part_spec(s, t, i));
    parts.insert(parts.end(), sub.begin(), sub.end());
  }
  if (parts.empty()) return std::nullopt;
  return Term(std::move(parts));
}

SubsetSpec transport_spec(std::span<const SubsetSpec> part_specs, const FoldTree& tree) {
  if (tree.is_leaf()) {
    if (tree.leaf_index >= part_specs.size())
      throw error("internal: fold leaf outside the spec range");
    return part_specs[tree.leaf_index];
  }
  SubsetSpec l = transport_spec(part_specs, *tree.left);
  SubsetSpec r = transport_spec(part_specs, *tree.right);
  if (l.is_full_kind() && r.is_full_kind()) return SubsetSpec::full();
  if (l.is_empty_kind() && r.is_empty_kind()) return SubsetSpec::empty();

  // The merged part gained one head element at index 0 (left end for
  // omega sums, right end for omega* sums); everything else shifts by one.
  const bool prepend = tree.rule == MergeRule::PrependHead;
  const SumSpec inner = as_sum(prepend ? r : l);
  SumSpec out;
  out.entries.emplace(0, prepend ? l : r);
  for (const auto& [i, v] : inner.entries) out.entries.emplace(i + 1, v);
  out.tail = inner.tail;
  out.periodic = inner.periodic;
  if (out.tail != TailMode::Empty && !out.entries.count(inner.tail_start()))
    out.entries.emplace(inner.tail_start(), SubsetSpec::empty());
  return SubsetSpec::sum(std::move(out));
}

nlohmann::json spec_to_json(const SubsetSpec& s) {
  switch (s.kind()) {
    case SubsetSpec::Kind::Full:
      return "full";
    case SubsetSpec::Kind::Empty:
      return "empty";
    case SubsetSpec::Kind::Parts: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& v : s.parts_list()) arr.push_back(spec_to_json(v));
      return nlohmann::json{{"parts", std::move(arr)}};
    }
    case SubsetSpec::Kind::Sum: {
      const SumSpec& ss = s.sum_spec();
      nlohmann::json ex = nlohmann::json::object();
      for (const auto& [i, v] : ss.entries) ex[std::to_string(i)] = spec_to_json(v);
      nlohmann::json tail;
      switch (ss.tail) {
        case TailMode::Full:
          tail = "full";
          break;
        case TailMode::Empty:
          tail = "empty";
          break;
        case TailMode::Periodic: {
          nlohmann::json arr = nlohmann::json::array();
          for (const auto& v : ss.periodic) arr.push_back(spec_to_json(v));
          tail = nlohmann::json{{"periodic", std::move(arr)}};
          break;
        }
      }
      return nlohmann::json{{"explicit", std::move(ex)}, {"tail", std::move(tail)}};
    }
  }
  throw error("internal: bad spec kind");
}

SubsetSpec spec_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    const std::string v = j.get<std::string>();
    if (v == "full") return SubsetSpec::full();
    if (v == "empty") return SubsetSpec::empty();
    throw parse_error("spec json: unknown spec literal '" + v + "'", 0);
  }
  if (!j.is_object()) throw parse_error("spec json: expected a string or object", 0);
  if (j.contains("parts")) {
    if (!j["parts"].is_array()) throw parse_error("spec json: 'parts' must be an array", 0);
    std::vector<SubsetSpec> ps;
    for (const auto& e : j["parts"]) ps.push_back(spec_from_json(e));
    return SubsetSpec::parts(std::move(ps));
  }
  if (!j.contains("tail")) throw parse_error("spec json: object needs 'tail' or 'parts'", 0);
  SumSpec ss;
  if (j.contains("explicit")) {
    if (!j["explicit"].is_object())
      throw parse_error("spec json: 'explicit' must be an object", 0);
    for (const auto& [k, v] : j["explicit"].items()) {
      if (k.empty() || k.find_first_not_of("0123456789") != std::string::npos)
        throw parse_error("spec json: explicit key '" + k + "' is not an index", 0);
      ss.entries.emplace(std::stoull(k), spec_from_json(v));
    }
  }
  const auto& tail = j["tail"];
  if (tail.is_string() && tail.get<std::string>() == "full") {
    ss.tail = TailMode::Full;
  } else if (tail.is_string() && tail.get<std::string>() == "empty") {
    ss.tail = TailMode::Empty;
  } else if (tail.is_object() && tail.contains("periodic") && tail["periodic"].is_array()) {
    ss.tail = TailMode::Periodic;
    for (const auto& e : tail["periodic"]) ss.periodic.push_back(spec_from_json(e));
  } else {
    throw parse_error("spec json: tail must be 'full', 'empty', or {\"periodic\": [...]}", 0);
  }
  return SubsetSpec::sum(std::move(ss));
}

}  // namespace scord
