#include "isomet/structure.hpp"

#include <algorithm>
#include <numeric>

#include "isomet/error.hpp"

namespace isomet {

Relation& RelationalStructure::declare(const std::string& name, std::size_t arity) {
  if (arity == 0) throw Error(ErrorKind::MalformedStructure, "relation '" + name + "' has arity 0");
  auto [it, inserted] = relations_.try_emplace(name, Relation{arity, {}});
  if (!inserted && it->second.arity != arity) {
    throw Error(ErrorKind::MalformedStructure, "relation '" + name + "' redeclared with arity " +
                                                   std::to_string(arity) + " (was " +
                                                   std::to_string(it->second.arity) + ")");
  }
  return it->second;
}

void RelationalStructure::add(const std::string& name, Tuple tuple) {
  Relation& rel = declare(name, tuple.size());
  for (std::size_t v : tuple) {
    if (v >= universe_) {
      throw Error(ErrorKind::MalformedStructure,
                  "relation '" + name + "' mentions element " + std::to_string(v) + " outside universe of size " +
                      std::to_string(universe_),
                  {v});
    }
  }
  rel.tuples.insert(std::move(tuple));
}

bool RelationalStructure::holds(const std::string& name, const Tuple& tuple) const {
  auto it = relations_.find(name);
  return it != relations_.end() && it->second.tuples.count(tuple) > 0;
}

bool same_signature(const RelationalStructure& a, const RelationalStructure& b) {
  if (a.relations().size() != b.relations().size()) return false;
  auto ib = b.relations().begin();
  for (const auto& [name, rel] : a.relations()) {
    if (ib->first != name || ib->second.arity != rel.arity) return false;
    ++ib;
  }
  return true;
}

bool is_structure_isomorphism(const RelationalStructure& a, const RelationalStructure& b, const Bijection& f) {
  if (a.universe() != b.universe() || !same_signature(a, b) || !f.is_valid(a.universe())) return false;
  for (const auto& [name, rel] : a.relations()) {
    const auto& target = b.relations().at(name).tuples;
    if (rel.tuples.size() != target.size()) return false;
    for (const auto& t : rel.tuples) {
      Tuple image(t.size());
      std::transform(t.begin(), t.end(), image.begin(), [&](std::size_t v) { return f(v); });
      if (!target.count(image)) return false;
    }
  }
  return true;
}

namespace {

struct FlatTuple {
  std::size_t relation;
  const Tuple* tuple;
};

// Per-element occurrence counts: for every relation and position, how many
// tuples carry the element there, plus how many tuples are constant on it.
std::vector<std::vector<std::size_t>> profiles(const RelationalStructure& s) {
  std::vector<std::vector<std::size_t>> out(s.universe());
  std::size_t width = 0;
  for (const auto& [name, rel] : s.relations()) width += rel.arity + 1;
  for (auto& p : out) p.assign(width, 0);
  std::size_t base = 0;
  for (const auto& [name, rel] : s.relations()) {
    for (const auto& t : rel.tuples) {
      for (std::size_t pos = 0; pos < t.size(); ++pos) ++out[t[pos]][base + pos];
      if (std::all_of(t.begin(), t.end(), [&](std::size_t v) { return v == t.front(); })) ++out[t.front()][base + rel.arity];
    }
    base += rel.arity + 1;
  }
  return out;
}

class StructureSearch {
 public:
  StructureSearch(const RelationalStructure& a, const RelationalStructure& b)
      : a_(a), b_(b), n_(a.universe()) {
    for (const auto& [name, rel] : a.relations()) {
      rels_a_.push_back(&rel);
      rels_b_.push_back(&b.relations().at(name));
    }
    closing_a_.resize(n_);
    containing_b_.resize(n_);
    for (std::size_t r = 0; r < rels_a_.size(); ++r) {
      for (const auto& t : rels_a_[r]->tuples) {
        closing_a_[*std::max_element(t.begin(), t.end())].push_back({r, &t});
      }
      for (const auto& t : rels_b_[r]->tuples) {
        Tuple distinct = t;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (std::size_t v : distinct) containing_b_[v].push_back({r, &t});
      }
    }
    auto pa = profiles(a);
    auto pb = profiles(b);
    candidates_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (pa[i] == pb[j]) candidates_[i].push_back(j);
    image_.assign(n_, 0);
    preimage_.assign(n_, kUnset);
  }

  std::optional<Bijection> run() {
    for (std::size_t r = 0; r < rels_a_.size(); ++r)
      if (rels_a_[r]->tuples.size() != rels_b_[r]->tuples.size()) return std::nullopt;
    for (const auto& c : candidates_)
      if (c.empty()) return std::nullopt;
    if (extend(0)) return Bijection{image_};
    return std::nullopt;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  bool consistent(std::size_t i, std::size_t j) const {
    Tuple scratch;
    for (const auto& ft : closing_a_[i]) {
      scratch.resize(ft.tuple->size());
      for (std::size_t p = 0; p < scratch.size(); ++p) scratch[p] = image_[(*ft.tuple)[p]];
      if (!rels_b_[ft.relation]->tuples.count(scratch)) return false;
    }
    for (const auto& ft : containing_b_[j]) {
      scratch.resize(ft.tuple->size());
      bool complete = true;
      for (std::size_t p = 0; p < scratch.size(); ++p) {
        std::size_t pre = preimage_[(*ft.tuple)[p]];
        if (pre == kUnset) {
          complete = false;
          break;
        }
        scratch[p] = pre;
      }
      if (complete && !rels_a_[ft.relation]->tuples.count(scratch)) return false;
    }
    return true;
  }

  bool extend(std::size_t i) {
    if (i == n_) return true;
    for (std::size_t j : candidates_[i]) {
      if (preimage_[j] != kUnset) continue;
      image_[i] = j;
      preimage_[j] = i;
      if (consistent(i, j) && extend(i + 1)) return true;
      preimage_[j] = kUnset;
    }
    return false;
  }

  const RelationalStructure& a_;
  const RelationalStructure& b_;
  std::size_t n_;
  std::vector<const Relation*> rels_a_;
  std::vector<const Relation*> rels_b_;
  std::vector<std::vector<FlatTuple>> closing_a_;
  std::vector<std::vector<FlatTuple>> containing_b_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<std::size_t> image_;
  std::vector<std::size_t> preimage_;
};

}  // namespace

std::optional<Bijection> structure_isomorphic(const RelationalStructure& a, const RelationalStructure& b,
                                              SearchMode mode) {
  if (!same_signature(a, b)) throw Error(ErrorKind::SignatureMismatch, "structures have different signatures");
  if (a.universe() != b.universe()) return std::nullopt;
  if (mode == SearchMode::pruned) return StructureSearch(a, b).run();

  Bijection f = Bijection::identity(a.universe());
  do {
    if (is_structure_isomorphism(a, b, f)) return f;
  } while (std::next_permutation(f.forward.begin(), f.forward.end()));
  return std::nullopt;
}

}  // namespace isomet
