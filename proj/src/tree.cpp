#include "isomet/tree.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "isomet/error.hpp"

namespace isomet {

namespace {
constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);
}

std::string sequence_to_string(const Sequence& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + ")";
}

bool is_prefix(const Sequence& u, const Sequence& v) {
  return u.size() <= v.size() && std::equal(u.begin(), u.end(), v.begin());
}

Sequence meet(const Sequence& u, const Sequence& v) {
  auto [iu, iv] = std::mismatch(u.begin(), u.end(), v.begin(), v.end());
  return Sequence(u.begin(), iu);
}

std::optional<std::size_t> Tree::parent(std::size_t i) const {
  if (parent_[i] == kNoParent) return std::nullopt;
  return parent_[i];
}

std::optional<std::size_t> Tree::index_of(const Sequence& s) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), s);
  if (it == nodes_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

std::size_t Tree::depth() const {
  std::size_t d = 0;
  for (const auto& n : nodes_) d = std::max(d, n.size());
  return d;
}

std::size_t Tree::branching() const {
  std::size_t k = 0;
  for (const auto& n : nodes_)
    for (std::size_t s : n) k = std::max(k, s + 1);
  return k;
}

Tree validate_tree(std::vector<Sequence> sequences) {
  if (sequences.empty()) throw Error(ErrorKind::EmptyInput, "a tree needs at least the root");
  std::sort(sequences.begin(), sequences.end());
  sequences.erase(std::unique(sequences.begin(), sequences.end()), sequences.end());

  Tree t;
  t.nodes_ = std::move(sequences);
  const std::size_t n = t.nodes_.size();
  t.parent_.assign(n, kNoParent);
  t.children_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    const Sequence& u = t.nodes_[i];
    for (std::size_t len = 0; len < u.size(); ++len) {
      Sequence prefix(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(len));
      if (!std::binary_search(t.nodes_.begin(), t.nodes_.end(), prefix)) {
        throw Error(ErrorKind::MissingPrefix,
                    "node " + sequence_to_string(u) + " is missing prefix " + sequence_to_string(prefix), {i});
      }
    }
    if (!u.empty()) {
      std::size_t p = *t.index_of(Sequence(u.begin(), u.end() - 1));
      t.parent_[i] = p;
      t.children_[p].push_back(i);
    }
  }
  return t;
}

namespace {

CanonicalCode ahu(const Tree& t, std::size_t i) {
  if (t.is_terminal(i)) return CanonicalCode::leaf();
  std::vector<CanonicalCode> kids;
  kids.reserve(t.children(i).size());
  for (std::size_t c : t.children(i)) kids.push_back(ahu(t, c));
  return CanonicalCode::node(std::nullopt, std::move(kids));
}

}  // namespace

CanonicalCode tree_canonical(const Tree& t) {
  return ahu(t, 0);
}

bool trees_isomorphic(const Tree& t, const Tree& s) {
  return t.size() == s.size() && tree_canonical(t) == tree_canonical(s);
}

std::vector<std::size_t> node_ranks(const Tree& t) {
  std::vector<std::size_t> rank(t.size(), 0);
  // extensions sort after their prefixes, so a reverse sweep sees children first
  for (std::size_t i = t.size(); i-- > 0;) {
    for (std::size_t c : t.children(i)) rank[i] = std::max(rank[i], rank[c] + 1);
  }
  return rank;
}

std::size_t tree_rank(const Tree& t) {
  return node_ranks(t)[0];
}

bool is_tree_isomorphism(const Tree& t, const Tree& s, const Bijection& f) {
  if (t.size() != s.size() || !f.is_valid(t.size())) return false;
  for (std::size_t u = 0; u < t.size(); ++u) {
    if (t.length(u) != s.length(f(u))) return false;
    for (std::size_t v = 0; v < t.size(); ++v) {
      if (is_prefix(t.node(u), t.node(v)) != is_prefix(s.node(f(u)), s.node(f(v)))) return false;
    }
  }
  return true;
}

void enumerate_trees(std::size_t max_nodes, std::size_t branching, std::size_t depth,
                     const std::function<void(const Tree&)>& visit) {
  if (max_nodes == 0) return;
  std::set<std::vector<Sequence>> level{{Sequence{}}};
  for (std::size_t count = 1; count <= max_nodes && !level.empty(); ++count) {
    std::set<std::vector<Sequence>> next;
    for (const auto& nodes : level) {
      visit(validate_tree(nodes));
      if (count == max_nodes) continue;
      for (const auto& u : nodes) {
        if (u.size() >= depth) continue;
        for (std::size_t sym = 0; sym < branching; ++sym) {
          Sequence child = u;
          child.push_back(sym);
          if (std::binary_search(nodes.begin(), nodes.end(), child)) continue;
          auto grown = nodes;
          grown.insert(std::upper_bound(grown.begin(), grown.end(), child), child);
          next.insert(std::move(grown));
        }
      }
    }
    level = std::move(next);
  }
}

std::vector<Tree> enumerate_trees(std::size_t max_nodes, std::size_t branching, std::size_t depth) {
  std::vector<Tree> out;
  enumerate_trees(max_nodes, branching, depth, [&](const Tree& t) { out.push_back(t); });
  return out;
}

}  // namespace isomet
