#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pichar/cyclotomic.hpp"
#include "pichar/group.hpp"

namespace pichar {

/// A class function on a group's conjugacy classes with cyclotomic values.
/// Genuine characters have a positive integer value at the identity class.
class Character {
public:
  Character(GroupPtr group, std::vector<Cyclotomic> values,
            std::optional<int> irreducible_index = std::nullopt);

  const GroupPtr& group() const { return group_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  const Cyclotomic& value(int class_index) const { return values_[class_index]; }
  /// Value at the identity class.
  const Cyclotomic& degree() const { return values_[0]; }
  /// Degree as an integer; throws if the identity value is not one.
  long long degree_int() const;
  std::optional<int> irreducible_index() const { return irreducible_index_; }

  bool same_values(const Character& other) const;

  Character operator*(const Character& rhs) const;  // value-wise product
  Character operator+(const Character& rhs) const;
  Character conjugate() const;
  Character scaled(const BigRational& factor) const;

  /// True when every value is the degree (constant class function chi(1)*1).
  bool is_multiple_of_trivial() const;

private:
  GroupPtr group_;
  std::vector<Cyclotomic> values_;
  std::optional<int> irreducible_index_;
};

/// (1/|G|) sum over classes of size * a(c) * conj(b(c)). Exact; the result of
/// pairing genuine characters is a rational (integer when b is irreducible).
BigRational inner_product(const Character& a, const Character& b);

/// Complete list of irreducible characters ordered by (degree, canonical
/// value-sequence order), so indices are stable across runs.
class CharacterTable {
public:
  CharacterTable(GroupPtr group, std::vector<Character> irreducibles);

  const GroupPtr& group() const { return group_; }
  int count() const { return static_cast<int>(irreducibles_.size()); }
  const Character& irreducible(int index) const { return irreducibles_[index]; }
  const std::vector<Character>& irreducibles() const { return irreducibles_; }

  /// Index of the irreducible with exactly these values, or -1.
  int index_of(const Character& chi) const;
  int trivial_index() const { return trivial_index_; }
  std::vector<int> linear_indices() const;

  /// Exact row orthogonality, column orthogonality and degree checks; throws
  /// InternalError on any failure.
  void validate() const;

private:
  GroupPtr group_;
  std::vector<Character> irreducibles_;
  int trivial_index_ = -1;
};

}  // namespace pichar
