#include "scord/term.hpp"

#include <algorithm>

namespace scord {
namespace detail {

struct HTermNode {
  HKind kind;
  std::vector<HTerm> head;
  std::vector<HTerm> pattern;
  std::string repr;
  std::uint32_t size = 1;
  bool star_free = true;
};

}  // namespace detail

namespace {

std::string join_list(const std::vector<HTerm>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += xs[i].repr();
  }
  return out;
}

}  // namespace

HTerm HTerm::singleton() {
  static const auto node = [] {
    auto n = std::make_shared<detail::HTermNode>();
    n->kind = HKind::Singleton;
    n->repr = "1";
    return n;
  }();
  return HTerm(node);
}

HTerm HTerm::omega_sum(std::vector<HTerm> head, std::vector<HTerm> pattern) {
  if (pattern.empty()) throw precondition_error("OmegaSum pattern must be nonempty");
  auto n = std::make_shared<detail::HTermNode>();
  n->kind = HKind::OmegaSum;
  n->head = std::move(head);
  n->pattern = std::move(pattern);
  n->size = 1;
  for (const auto& x : n->head) n->size += x.size();
  for (const auto& x : n->pattern) n->size += x.size();
  n->star_free = true;
  for (const auto& x : n->head) n->star_free = n->star_free && x.omega_star_free();
  for (const auto& x : n->pattern) n->star_free = n->star_free && x.omega_star_free();
  if (n->head.empty() && n->pattern.size() == 1 && n->pattern[0].is_singleton()) {
    n->repr = "w";
  } else if (n->head.empty()) {
    n->repr = "w[" + join_list(n->pattern) + "]";
  } else {
    n->repr = "w[" + join_list(n->head) + ";" + join_list(n->pattern) + "]";
  }
  return HTerm(std::move(n));
}

HTerm HTerm::omega_star_sum(std::vector<HTerm> pattern, std::vector<HTerm> head) {
  if (pattern.empty()) throw precondition_error("OmegaStarSum pattern must be nonempty");
  auto n = std::make_shared<detail::HTermNode>();
  n->kind = HKind::OmegaStarSum;
  n->head = std::move(head);
  n->pattern = std::move(pattern);
  n->size = 1;
  for (const auto& x : n->head) n->size += x.size();
  for (const auto& x : n->pattern) n->size += x.size();
  n->star_free = false;
  if (n->head.empty() && n->pattern.size() == 1 && n->pattern[0].is_singleton()) {
    n->repr = "w*";
  } else if (n->head.empty()) {
    n->repr = "w*[" + join_list(n->pattern) + "]";
  } else {
    // Head elements are written in the left-to-right order of the denoted
    // order; internally head[0] is the rightmost summand.
    std::vector<HTerm> shown(n->head.rbegin(), n->head.rend());
    n->repr = "w*[" + join_list(n->pattern) + ";" + join_list(shown) + "]";
  }
  return HTerm(std::move(n));
}

HKind HTerm::kind() const { return node_->kind; }
const std::vector<HTerm>& HTerm::head() const { return node_->head; }
const std::vector<HTerm>& HTerm::pattern() const { return node_->pattern; }
const std::string& HTerm::repr() const { return node_->repr; }
std::uint32_t HTerm::size() const { return node_->size; }
bool HTerm::omega_star_free() const { return node_->star_free; }

const HTerm& HTerm::summand(std::uint64_t i) const {
  if (is_singleton()) throw precondition_error("Singleton has no summands");
  const auto& h = node_->head;
  const auto& p = node_->pattern;
  if (i < h.size()) return h[i];
  return p[(i - h.size()) % p.size()];
}

Term::Term(std::vector<HTerm> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw precondition_error("Term must have at least one part");
}

std::string Term::repr() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += "+";
    out += parts_[i].repr();
  }
  return out;
}

bool Term::omega_star_free() const {
  return std::all_of(parts_.begin(), parts_.end(),
                     [](const HTerm& h) { return h.omega_star_free(); });
}

std::string print_term(const Term& t) { return t.repr(); }
std::string print_hterm(const HTerm& t) { return t.repr(); }

std::string to_string(const Address& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ".";
    out += std::to_string(a[i]);
  }
  return out + "]";
}

HTerm mirror(const HTerm& t) {
  switch (t.kind()) {
    case HKind::Singleton:
      return t;
    case HKind::OmegaSum: {
      std::vector<HTerm> p, h;
      p.reserve(t.pattern().size());
      h.reserve(t.head().size());
      for (const auto& x : t.pattern()) p.push_back(mirror(x));
      for (const auto& x : t.head()) h.push_back(mirror(x));
      return HTerm::omega_star_sum(std::move(p), std::move(h));
    }
    case HKind::OmegaStarSum: {
      std::vector<HTerm> h, p;
      h.reserve(t.head().size());
      p.reserve(t.pattern().size());
      for (const auto& x : t.head()) h.push_back(mirror(x));
      for (const auto& x : t.pattern()) p.push_back(mirror(x));
      return HTerm::omega_sum(std::move(h), std::move(p));
    }
  }
  throw error("unreachable");
}

Term mirror(const Term& t) {
  std::vector<HTerm> parts(t.parts().rbegin(), t.parts().rend());
  for (auto& p : parts) p = mirror(p);
  return Term(std::move(parts));
}

namespace {

bool address_valid_h(const HTerm& t, const Address& a, std::size_t at) {
  if (t.is_singleton()) return at == a.size();
  if (at == a.size()) return false;
  return address_valid_h(t.summand(a[at]), a, at + 1);
}

// Compare two summand indices in the left-to-right order of the node.
int index_order(const HTerm& node, std::uint64_t i, std::uint64_t j) {
  if (i == j) return 0;
  bool lt = i < j;
  if (node.is_omega_star_sum()) lt = !lt;  // larger right-end index lies left
  return lt ? -1 : 1;
}

int address_compare_h(const HTerm& t, const Address& a, const Address& b, std::size_t at) {
  if (t.is_singleton()) return 0;
  int c = index_order(t, a[at], b[at]);
  if (c != 0) return c;
  return address_compare_h(t.summand(a[at]), a, b, at + 1);
}

void truncate_into(const HTerm& t, int depth, Address& prefix, std::vector<Address>& out) {
  if (t.is_singleton()) {
    out.push_back(prefix);
    return;
  }
  std::uint64_t n = t.head().size() + static_cast<std::uint64_t>(depth) * t.pattern().size();
  if (t.is_omega_sum()) {
    for (std::uint64_t i = 0; i < n; ++i) {
      prefix.push_back(i);
      truncate_into(t.summand(i), depth, prefix, out);
      prefix.pop_back();
    }
  } else {
    for (std::uint64_t i = n; i-- > 0;) {
      prefix.push_back(i);
      truncate_into(t.summand(i), depth, prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

bool address_valid(const Term& t, const Address& a) {
  if (a.empty()) return false;
  if (a[0] >= t.parts().size()) return false;
  return address_valid_h(t.parts()[a[0]], a, 1);
}

int address_compare(const Term& t, const Address& a, const Address& b) {
  if (a[0] != b[0]) return a[0] < b[0] ? -1 : 1;
  return address_compare_h(t.parts()[a[0]], a, b, 1);
}

std::vector<Address> truncate_h(const HTerm& t, int depth) {
  if (depth < 0) throw precondition_error("truncation depth must be >= 0");
  std::vector<Address> out;
  Address prefix;
  truncate_into(t, depth, prefix, out);
  return out;
}

std::vector<Address> truncate(const Term& t, int depth) {
  if (depth < 0) throw precondition_error("truncation depth must be >= 0");
  std::vector<Address> out;
  Address prefix;
  for (std::uint64_t i = 0; i < t.parts().size(); ++i) {
    prefix.push_back(i);
    truncate_into(t.parts()[i], depth, prefix, out);
    prefix.pop_back();
  }
  return out;
}

}  // namespace scord
