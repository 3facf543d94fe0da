#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace pichar {

/// A permutation of {0, ..., degree-1}, stored as its image array.
/// Immutable after construction. Products compose left-to-right:
/// (p * q) maps x to q[p[x]].
class Perm {
public:
  explicit Perm(std::vector<int> images);
  static Perm identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  /// g^{-1} * (*this) * g.
  Perm conjugated_by(const Perm& g) const;
  int order() const;

  auto operator<=>(const Perm& rhs) const = default;

private:
  std::vector<int> images_;
};

/// One-line disjoint-cycle form with 1-based points, identity prints "()".
std::string cycle_string(const Perm& p);

/// Parses disjoint-cycle notation with 1-based points, e.g. "(1 2 3)(4 5)".
/// Commas between points are accepted. "()" is the identity.
Perm parse_cycles(const std::string& text, int degree);

}  // namespace pichar
