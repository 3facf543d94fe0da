#include "pichar/character.hpp"

#include <algorithm>

#include "pichar/errors.hpp"

namespace pichar {

Character::Character(GroupPtr group, std::vector<Cyclotomic> values,
                     std::optional<int> irreducible_index)
    : group_(std::move(group)), values_(std::move(values)), irreducible_index_(irreducible_index) {
  if (static_cast<int>(values_.size()) != group_->classes().count())
    throw InvalidInput("class function value count does not match class count");
}

long long Character::degree_int() const {
  const auto d = degree().as_integer();
  if (!d || *d <= 0) throw InternalError("character degree is not a positive integer");
  return static_cast<long long>(*d);
}

bool Character::same_values(const Character& other) const { return values_ == other.values_; }

Character Character::operator*(const Character& rhs) const {
  if (group_ != rhs.group_) throw InvalidInput("class function product across distinct groups");
  std::vector<Cyclotomic> values(values_.size());
  for (size_t i = 0; i < values_.size(); ++i) values[i] = values_[i] * rhs.values_[i];
  return Character(group_, std::move(values));
}

Character Character::operator+(const Character& rhs) const {
  if (group_ != rhs.group_) throw InvalidInput("class function sum across distinct groups");
  std::vector<Cyclotomic> values(values_.size());
  for (size_t i = 0; i < values_.size(); ++i) values[i] = values_[i] + rhs.values_[i];
  return Character(group_, std::move(values));
}

Character Character::conjugate() const {
  std::vector<Cyclotomic> values(values_.size());
  for (size_t i = 0; i < values_.size(); ++i) values[i] = values_[i].conjugate();
  return Character(group_, std::move(values));
}

Character Character::scaled(const BigRational& factor) const {
  std::vector<Cyclotomic> values(values_.size());
  for (size_t i = 0; i < values_.size(); ++i) values[i] = values_[i].scaled(factor);
  return Character(group_, std::move(values));
}

bool Character::is_multiple_of_trivial() const {
  for (const Cyclotomic& v : values_)
    if (v != values_[0]) return false;
  return true;
}

BigRational inner_product(const Character& a, const Character& b) {
  if (a.group() != b.group()) throw InvalidInput("inner product across distinct groups");
  const ClassData& classes = a.group()->classes();
  Cyclotomic sum(0);
  for (int c = 0; c < classes.count(); ++c)
    sum += (a.value(c) * b.value(c).conjugate()).scaled(classes.sizes()[c]);
  const Cyclotomic result = sum.scaled(BigRational(1, a.group()->order()));
  const auto rational = result.as_rational();
  if (!rational) throw InternalError("inner product of characters is not rational");
  return *rational;
}

CharacterTable::CharacterTable(GroupPtr group, std::vector<Character> irreducibles)
    : group_(std::move(group)), irreducibles_(std::move(irreducibles)) {
  for (int i = 0; i < count(); ++i) {
    bool trivial = true;
    for (const Cyclotomic& v : irreducibles_[i].values())
      if (v != Cyclotomic(1)) trivial = false;
    if (trivial) {
      trivial_index_ = i;
      break;
    }
  }
  if (trivial_index_ < 0) throw InternalError("character table lacks the trivial character");
}

int CharacterTable::index_of(const Character& chi) const {
  for (int i = 0; i < count(); ++i)
    if (irreducibles_[i].same_values(chi)) return i;
  return -1;
}

std::vector<int> CharacterTable::linear_indices() const {
  std::vector<int> result;
  for (int i = 0; i < count(); ++i)
    if (irreducibles_[i].degree() == Cyclotomic(1)) result.push_back(i);
  return result;
}

void CharacterTable::validate() const {
  const ClassData& classes = group_->classes();
  const int r = classes.count();
  if (count() != r) throw InternalError("irreducible count differs from class count");

  BigInt degree_square_sum = 0;
  for (int i = 0; i < r; ++i) degree_square_sum += BigInt(irreducibles_[i].degree_int()) * irreducibles_[i].degree_int();
  if (degree_square_sum != group_->order())
    throw InternalError("sum of squared degrees does not equal the group order");

  for (int i = 0; i < r; ++i) {
    for (int j = i; j < r; ++j) {
      const BigRational ip = inner_product(irreducibles_[i], irreducibles_[j]);
      if (ip != BigRational(i == j ? 1 : 0))
        throw InternalError("row orthogonality failed at rows " + std::to_string(i) + "," +
                            std::to_string(j));
    }
  }

  // Column orthogonality: sum_t chi_t(c) conj(chi_t(d)) = delta |G| / |class c|.
  for (int c = 0; c < r; ++c) {
    for (int d = c; d < r; ++d) {
      Cyclotomic sum(0);
      for (int t = 0; t < r; ++t)
        sum += irreducibles_[t].value(c) * irreducibles_[t].value(d).conjugate();
      const Cyclotomic expected =
          c == d ? Cyclotomic(BigRational(group_->order(), classes.sizes()[c])) : Cyclotomic(0);
      if (sum != expected)
        throw InternalError("column orthogonality failed at classes " + std::to_string(c) + "," +
                            std::to_string(d));
    }
  }
}

}  // namespace pichar
