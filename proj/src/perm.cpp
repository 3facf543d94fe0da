#include "pichar/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "pichar/errors.hpp"

namespace pichar {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int img : images_) {
    if (img < 0 || img >= degree() || seen[img])
      throw InvalidInput("permutation image array is not a bijection");
    seen[img] = 1;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  return Perm(std::move(images));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::operator*(const Perm& rhs) const {
  std::vector<int> images(degree());
  for (int i = 0; i < degree(); ++i) images[i] = rhs.images_[images_[i]];
  return Perm(std::move(images));
}

Perm Perm::inverse() const {
  std::vector<int> images(degree());
  for (int i = 0; i < degree(); ++i) images[images_[i]] = i;
  return Perm(std::move(images));
}

Perm Perm::conjugated_by(const Perm& g) const {
  const Perm ginv = g.inverse();
  std::vector<int> images(degree());
  for (int i = 0; i < degree(); ++i) images[i] = g.images_[images_[ginv.images_[i]]];
  return Perm(std::move(images));
}

int Perm::order() const {
  int result = 1;
  std::vector<char> seen(degree(), 0);
  for (int start = 0; start < degree(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (int x = start; !seen[x]; x = images_[x]) {
      seen[x] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string cycle_string(const Perm& p) {
  std::ostringstream out;
  std::vector<char> seen(p.degree(), 0);
  bool any = false;
  for (int start = 0; start < p.degree(); ++start) {
    if (seen[start] || p[start] == start) continue;
    any = true;
    out << '(';
    bool first = true;
    for (int x = start; !seen[x]; x = p[x]) {
      seen[x] = 1;
      if (!first) out << ' ';
      out << (x + 1);
      first = false;
    }
    out << ')';
  }
  return any ? out.str() : "()";
}

Perm parse_cycles(const std::string& text, int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);

  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
  };
  skip_ws();
  bool saw_cycle = false;
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw InvalidInput("expected '(' in cycle notation: " + text);
    ++pos;
    std::vector<int> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw InvalidInput("expected point number in cycle notation: " + text);
      int value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        ++pos;
      }
      if (value < 1 || value > degree)
        throw InvalidInput("point " + std::to_string(value) + " out of range 1.." + std::to_string(degree));
      cycle.push_back(value - 1);
      skip_ws();
    }
    if (pos >= text.size())
      throw InvalidInput("unterminated cycle in: " + text);
    ++pos;  // ')'
    saw_cycle = true;
    for (size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i];
      int to = cycle[(i + 1) % cycle.size()];
      if (images[from] != from)
        throw InvalidInput("point " + std::to_string(from + 1) + " repeated in: " + text);
      images[from] = to;
    }
    skip_ws();
  }
  if (!saw_cycle) throw InvalidInput("no cycles found in: " + text);
  return Perm(std::move(images));  // bijection check catches overlapping cycles
}

}  // namespace pichar
