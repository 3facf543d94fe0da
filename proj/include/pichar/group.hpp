#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "pichar/perm.hpp"

namespace pichar {

class PermGroup;
using GroupPtr = std::shared_ptr<const PermGroup>;

/// Conjugacy class data of a group: class of every element, canonical
/// representatives (lexicographically least element of each class, so the
/// identity class is always class 0), sizes, and power maps.
class ClassData {
public:
  ClassData(const PermGroup& group);

  int count() const { return static_cast<int>(representatives_.size()); }
  const std::vector<Perm>& representatives() const { return representatives_; }
  const std::vector<int>& sizes() const { return sizes_; }
  /// Class index of the element with the given element index.
  int class_of(int element_index) const { return class_of_[element_index]; }
  /// Class containing rep(c)^k; k may be any integer (reduced mod element order).
  int power_class(long long k, int c) const;
  /// Class of the inverses of class c.
  int inverse_class(int c) const { return power_class(-1, c); }
  /// Element indices belonging to class c.
  const std::vector<int>& members(int c) const { return members_[c]; }

private:
  const PermGroup& group_;
  std::vector<Perm> representatives_;
  std::vector<int> sizes_;
  std::vector<int> class_of_;
  std::vector<std::vector<int>> members_;
};

/// A finite permutation group given by generators, with its element set
/// fully enumerated. Immutable; class data is computed once on first use.
class PermGroup : public std::enable_shared_from_this<PermGroup> {
public:
  static constexpr long long kDefaultOrderCap = 20000;

  static GroupPtr from_generators(int degree, std::vector<Perm> generators,
                                  long long order_cap = kDefaultOrderCap);
  /// Wraps an already-closed element set (validated).
  static GroupPtr from_elements(int degree, std::vector<Perm> elements);

  int degree() const { return degree_; }
  long long order() const { return static_cast<long long>(elements_.size()); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }

  /// Index into elements(), or -1 if absent.
  int element_index(const Perm& p) const;
  bool contains(const Perm& p) const { return element_index(p) >= 0; }
  const Perm& element(int index) const { return elements_[index]; }
  int identity_index() const;

  int exponent() const;
  const ClassData& classes() const;
  bool is_abelian() const;

private:
  PermGroup(int degree, std::vector<Perm> generators, std::vector<Perm> elements);

  int degree_;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;  // sorted lexicographically
  mutable std::unique_ptr<ClassData> classes_;
  mutable int exponent_ = 0;
};

/// A subgroup given as a sorted list of element indices into its parent,
/// together with its own standalone PermGroup on the same points.
struct Subgroup {
  GroupPtr parent;
  std::vector<int> members;  // sorted indices into parent->elements()
  GroupPtr group;            // same degree, element set = the members

  long long order() const { return static_cast<long long>(members.size()); }
  bool contains_index(int parent_element_index) const;
  bool contains_subgroup(const Subgroup& other) const;  // same parent assumed
  bool same_members(const Subgroup& other) const { return members == other.members; }
};

/// G -> G/N realized as a faithful action on the right cosets of N.
struct QuotientMap {
  GroupPtr source;
  Subgroup kernel;
  GroupPtr target;
  std::vector<int> projection;        // source element index -> target element index
  std::vector<int> section;           // target element index -> one source preimage
};

// Free operations on groups (no cross-group caching; see Engine for that).

/// Closure of the given element indices under product, as sorted indices.
std::vector<int> closure_indices(const PermGroup& g, std::vector<int> seed);

bool is_normal(const PermGroup& g, const std::vector<int>& members);

std::vector<int> normalizer_indices(const PermGroup& g, const std::vector<int>& members);

/// Smallest subgroup of g containing the seed and normal in g.
std::vector<int> normal_closure_indices(const PermGroup& g, const std::vector<int>& seed);

/// Descending chain G = N_0 >= N_1 >= ... of iterated normal closures of the
/// member set, ending when it stabilizes. Each term is normal in its
/// predecessor; the set is subnormal iff the last term equals it.
std::vector<std::vector<int>> subnormal_chain(const PermGroup& g, const std::vector<int>& members);

bool is_subnormal(const PermGroup& g, const std::vector<int>& members);

/// Derived series G >= G' >= G'' >= ... down to stabilization.
std::vector<std::vector<int>> derived_series(const PermGroup& g);

bool is_solvable(const PermGroup& g);

}  // namespace pichar
