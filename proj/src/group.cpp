#include "pichar/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "pichar/errors.hpp"

namespace pichar {

// ---------------------------------------------------------------------------
// ClassData

ClassData::ClassData(const PermGroup& group) : group_(group) {
  const int n = static_cast<int>(group.order());
  class_of_.assign(n, -1);
  // Elements are sorted, so scanning in index order makes the first element
  // seen in each class its lexicographic minimum.
  for (int start = 0; start < n; ++start) {
    if (class_of_[start] >= 0) continue;
    const int cls = count();
    representatives_.push_back(group.element(start));
    members_.emplace_back();
    std::deque<int> queue{start};
    class_of_[start] = cls;
    while (!queue.empty()) {
      const Perm x = group.element(queue.front());
      queue.pop_front();
      for (const Perm& g : group.generators()) {
        const int y = group.element_index(x.conjugated_by(g));
        if (class_of_[y] < 0) {
          class_of_[y] = cls;
          queue.push_back(y);
        }
      }
    }
    for (int i = 0; i < n; ++i)
      if (class_of_[i] == cls) members_[cls].push_back(i);
    sizes_.push_back(static_cast<int>(members_[cls].size()));
  }
}

int ClassData::power_class(long long k, int c) const {
  const Perm& rep = representatives_[c];
  const int m = rep.order();
  long long e = k % m;
  if (e < 0) e += m;
  Perm acc = Perm::identity(rep.degree());
  Perm base = rep;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return class_of_[group_.element_index(acc)];
}

// ---------------------------------------------------------------------------
// PermGroup

PermGroup::PermGroup(int degree, std::vector<Perm> generators, std::vector<Perm> elements)
    : degree_(degree), generators_(std::move(generators)), elements_(std::move(elements)) {}

GroupPtr PermGroup::from_generators(int degree, std::vector<Perm> generators, long long order_cap) {
  for (const Perm& g : generators)
    if (g.degree() != degree) throw InvalidInput("generator degree mismatch");

  std::set<Perm> closed;
  std::deque<Perm> queue;
  closed.insert(Perm::identity(degree));
  queue.push_back(Perm::identity(degree));
  while (!queue.empty()) {
    const Perm x = queue.front();
    queue.pop_front();
    for (const Perm& g : generators) {
      Perm y = x * g;
      if (closed.insert(y).second) {
        if (static_cast<long long>(closed.size()) > order_cap)
          throw ResourceLimit("group order exceeds enumeration cap " + std::to_string(order_cap));
        queue.push_back(std::move(y));
      }
    }
  }
  std::vector<Perm> elements(closed.begin(), closed.end());
  return GroupPtr(new PermGroup(degree, std::move(generators), std::move(elements)));
}

GroupPtr PermGroup::from_elements(int degree, std::vector<Perm> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || !elements.front().is_identity())
    throw InvalidInput("element set must contain the identity");
  std::vector<Perm> generators(elements.begin(), elements.end());
  generators.erase(std::remove_if(generators.begin(), generators.end(),
                                  [](const Perm& p) { return p.is_identity(); }),
                   generators.end());
  auto group = GroupPtr(new PermGroup(degree, std::move(generators), std::move(elements)));
  for (const Perm& a : group->elements())
    if (!group->contains(a.inverse())) throw InvalidInput("element set not closed under inverse");
  return group;
}

int PermGroup::element_index(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p)) return -1;
  return static_cast<int>(it - elements_.begin());
}

int PermGroup::identity_index() const {
  // The identity is the lexicographic minimum of any permutation group.
  return 0;
}

int PermGroup::exponent() const {
  if (exponent_ == 0) {
    int e = 1;
    for (const Perm& rep : classes().representatives()) e = std::lcm(e, rep.order());
    exponent_ = e;
  }
  return exponent_;
}

const ClassData& PermGroup::classes() const {
  if (!classes_) classes_ = std::make_unique<ClassData>(*this);
  return *classes_;
}

bool PermGroup::is_abelian() const {
  for (const Perm& a : generators_)
    for (const Perm& b : generators_)
      if (!(a * b == b * a)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Subgroup

bool Subgroup::contains_index(int parent_element_index) const {
  return std::binary_search(members.begin(), members.end(), parent_element_index);
}

bool Subgroup::contains_subgroup(const Subgroup& other) const {
  return std::includes(members.begin(), members.end(), other.members.begin(), other.members.end());
}

// ---------------------------------------------------------------------------
// Free operations

std::vector<int> closure_indices(const PermGroup& g, std::vector<int> seed) {
  std::vector<char> in(g.order(), 0);
  std::deque<int> queue;
  const int id = g.identity_index();
  in[id] = 1;
  queue.push_back(id);
  for (int s : seed) {
    if (!in[s]) {
      in[s] = 1;
      queue.push_back(s);
    }
  }
  std::vector<int> gens = std::move(seed);
  while (!queue.empty()) {
    const Perm x = g.element(queue.front());
    queue.pop_front();
    for (int s : gens) {
      const int y = g.element_index(x * g.element(s));
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  }
  std::vector<int> result;
  for (int i = 0; i < g.order(); ++i)
    if (in[i]) result.push_back(i);
  return result;
}

bool is_normal(const PermGroup& g, const std::vector<int>& members) {
  for (int m : members) {
    const Perm& x = g.element(m);
    for (const Perm& gen : g.generators()) {
      const int y = g.element_index(x.conjugated_by(gen));
      if (!std::binary_search(members.begin(), members.end(), y)) return false;
    }
  }
  return true;
}

std::vector<int> normalizer_indices(const PermGroup& g, const std::vector<int>& members) {
  std::vector<int> result;
  for (int i = 0; i < g.order(); ++i) {
    const Perm& cand = g.element(i);
    bool stabilizes = true;
    for (int m : members) {
      const int y = g.element_index(g.element(m).conjugated_by(cand));
      if (!std::binary_search(members.begin(), members.end(), y)) {
        stabilizes = false;
        break;
      }
    }
    if (stabilizes) result.push_back(i);
  }
  return result;
}

std::vector<int> normal_closure_indices(const PermGroup& g, const std::vector<int>& seed) {
  // Close the seed under conjugation by g's generators, then take the closure.
  std::vector<char> in(g.order(), 0);
  std::deque<int> queue;
  for (int s : seed) {
    if (!in[s]) {
      in[s] = 1;
      queue.push_back(s);
    }
  }
  std::vector<int> conj_closed;
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    conj_closed.push_back(i);
    const Perm& x = g.element(i);
    for (const Perm& gen : g.generators()) {
      for (const Perm y : {x.conjugated_by(gen), x.conjugated_by(gen.inverse())}) {
        const int yi = g.element_index(y);
        if (!in[yi]) {
          in[yi] = 1;
          queue.push_back(yi);
        }
      }
    }
  }
  return closure_indices(g, std::move(conj_closed));
}

std::vector<std::vector<int>> subnormal_chain(const PermGroup& g, const std::vector<int>& members) {
  std::vector<std::vector<int>> chain;
  std::vector<int> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  chain.push_back(std::move(all));

  // Work inside successively smaller ambient groups; record terms as g-indices.
  GroupPtr ambient = g.shared_from_this();
  std::vector<int> target = members;  // indices into `ambient`
  while (true) {
    const std::vector<int> next = normal_closure_indices(*ambient, target);
    std::vector<int> next_in_g;
    next_in_g.reserve(next.size());
    for (int i : next) next_in_g.push_back(g.element_index(ambient->element(i)));
    std::sort(next_in_g.begin(), next_in_g.end());
    if (next_in_g == chain.back()) break;  // stabilized above the target
    chain.push_back(next_in_g);
    if (next.size() == target.size()) break;  // stabilized at the target
    std::vector<Perm> elems;
    elems.reserve(next.size());
    for (int i : next) elems.push_back(ambient->element(i));
    GroupPtr smaller = PermGroup::from_elements(ambient->degree(), std::move(elems));
    for (int& i : target) i = smaller->element_index(ambient->element(i));
    ambient = smaller;
  }
  return chain;
}

bool is_subnormal(const PermGroup& g, const std::vector<int>& members) {
  return subnormal_chain(g, members).back() == members;
}

std::vector<std::vector<int>> derived_series(const PermGroup& g) {
  std::vector<std::vector<int>> series;
  std::vector<int> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  series.push_back(std::move(all));

  GroupPtr current = g.shared_from_this();
  while (true) {
    std::vector<int> commutators;
    for (const Perm& a : current->elements()) {
      for (const Perm& b : current->generators()) {
        const Perm c = a.inverse() * b.inverse() * a * b;
        commutators.push_back(current->element_index(c));
      }
    }
    std::sort(commutators.begin(), commutators.end());
    commutators.erase(std::unique(commutators.begin(), commutators.end()), commutators.end());
    std::vector<int> derived = closure_indices(*current, std::move(commutators));
    std::vector<int> derived_in_g;
    derived_in_g.reserve(derived.size());
    for (int i : derived) derived_in_g.push_back(g.element_index(current->element(i)));
    std::sort(derived_in_g.begin(), derived_in_g.end());
    if (derived_in_g == series.back()) break;
    const bool done = derived.size() == 1;
    std::vector<Perm> elems;
    elems.reserve(derived.size());
    for (int i : derived) elems.push_back(current->element(i));
    series.push_back(std::move(derived_in_g));
    if (done) break;
    current = PermGroup::from_elements(current->degree(), std::move(elems));
  }
  return series;
}

bool is_solvable(const PermGroup& g) { return derived_series(g).back().size() == 1; }

}  // namespace pichar
