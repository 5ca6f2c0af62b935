#ifndef PGI_PERM_HPP
#define PGI_PERM_HPP

#include <string>
#include <vector>

#include "pgi/errors.hpp"

namespace pgi {

// Permutation of {0,...,d-1} given by its image array.
struct Permutation {
  std::vector<int> images;

  Permutation() = default;
  explicit Permutation(std::vector<int> img) : images(std::move(img)) { validate(); }

  static Permutation identity(int degree) {
    std::vector<int> img(degree);
    for (int i = 0; i < degree; ++i) img[i] = i;
    return Permutation(std::move(img));
  }

  // one or more disjoint cycles on a given degree, e.g. {{0,1,2}} on 4 points
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    Permutation p = identity(degree);
    for (const auto& c : cycles)
      for (std::size_t i = 0; i < c.size(); ++i) {
        int from = c[i], to = c[(i + 1) % c.size()];
        if (from < 0 || from >= degree) throw SpecError("cycle point out of range");
        p.images[from] = to;
      }
    p.validate();
    return p;
  }

  int degree() const { return static_cast<int>(images.size()); }

  int operator()(int i) const { return images[i]; }

  // (a*b)(x) = b(a(x)): apply a first
  Permutation operator*(const Permutation& o) const {
    if (degree() != o.degree()) throw SpecError("permutation degree mismatch");
    std::vector<int> img(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) img[i] = o.images[images[i]];
    return Permutation(std::move(img));
  }

  bool operator==(const Permutation& o) const { return images == o.images; }
  bool operator<(const Permutation& o) const { return images < o.images; }

  std::string cycle_string() const {
    std::string s;
    std::vector<bool> seen(images.size(), false);
    for (int i = 0; i < degree(); ++i) {
      if (seen[i] || images[i] == i) continue;
      s += '(';
      int j = i;
      bool first = true;
      do {
        if (!first) s += ' ';
        s += std::to_string(j);
        seen[j] = true;
        j = images[j];
        first = false;
      } while (j != i);
      s += ')';
    }
    return s.empty() ? "()" : s;
  }

  void validate() const {
    std::vector<bool> hit(images.size(), false);
    for (int x : images) {
      if (x < 0 || x >= degree() || hit[x]) throw SpecError("permutation images are not a bijection");
      hit[x] = true;
    }
  }
};

} // namespace pgi

#endif
