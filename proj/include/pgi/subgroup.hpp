#ifndef PGI_SUBGROUP_HPP
#define PGI_SUBGROUP_HPP

#include <string>
#include <vector>

#include "pgi/bitset.hpp"
#include "pgi/group.hpp"

namespace pgi {

// Subgroup of a parent Group as a membership bitset.
struct Subgroup {
  const Group* parent = nullptr;
  Bitset members;
  int order = 0;

  Subgroup() = default;
  Subgroup(const Group& g, Bitset m) : parent(&g), members(std::move(m)), order(members.count()) {}

  bool contains(int g) const { return members.test(g); }
  bool is_trivial() const { return order == 1; }
  bool is_whole() const { return order == parent->order(); }
  std::vector<int> elements() const { return members.elements(); }

  bool abelian() const {
    auto els = elements();
    for (std::size_t i = 0; i < els.size(); ++i)
      for (std::size_t j = i + 1; j < els.size(); ++j)
        if (parent->mul(els[i], els[j]) != parent->mul(els[j], els[i])) return false;
    return true;
  }

  bool cyclic() const {
    for (int g = 0; g < parent->order(); ++g)
      if (members.test(g) && parent->order_of(g) == order) return true;
    return false;
  }

  bool elementary_abelian(long long p) const {
    if (!abelian()) return false;
    bool ok = true;
    members.for_each([&](int g) {
      if (g != 0 && parent->order_of(g) != p) ok = false;
    });
    return ok;
  }

  std::string describe(std::size_t max_elems = 6) const {
    std::string s = "{";
    std::size_t k = 0;
    for (int g : elements()) {
      if (k >= max_elems) {
        s += ",...";
        break;
      }
      if (k++) s += ",";
      s += parent->label(g);
    }
    return s + "}";
  }
};

inline Subgroup trivial_subgroup(const Group& g) {
  Bitset b(g.order());
  b.set(0);
  return Subgroup(g, std::move(b));
}

inline Subgroup whole_group(const Group& g) {
  Bitset b(g.order());
  for (int i = 0; i < g.order(); ++i) b.set(i);
  return Subgroup(g, std::move(b));
}

// Smallest subgroup containing the seed, by closure under multiplication.
inline Subgroup generated_subgroup(const Group& g, const std::vector<int>& seed) {
  Bitset b(g.order());
  b.set(0);
  std::vector<int> queue;
  for (int s : seed) {
    if (s < 0 || s >= g.order()) throw SpecError("seed element out of range");
    if (!b.test(s)) {
      b.set(s);
      queue.push_back(s);
    }
  }
  std::vector<int> gens = queue;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (int gen : gens) {
      int y = g.mul(x, gen);
      if (!b.test(y)) {
        b.set(y);
        queue.push_back(y);
      }
    }
  }
  return Subgroup(g, std::move(b));
}

inline Subgroup cyclic_subgroup(const Group& g, int x) {
  Bitset b(g.order());
  int y = 0;
  do {
    b.set(y);
    y = g.mul(y, x);
  } while (y != 0);
  return Subgroup(g, std::move(b));
}

inline bool is_normal(const Subgroup& h) {
  const Group& g = *h.parent;
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    h.members.for_each([&](int e) {
      if (ok && !h.members.test(g.conj(e, x))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

inline Subgroup normalizer(const Subgroup& h) {
  const Group& g = *h.parent;
  Bitset b(g.order());
  auto els = h.elements();
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (int e : els)
      if (!h.members.test(g.conj(e, x))) {
        ok = false;
        break;
      }
    if (ok) b.set(x);
  }
  return Subgroup(g, std::move(b));
}

inline Subgroup centralizer_of_element(const Group& g, int x) {
  Bitset b(g.order());
  for (int y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == g.mul(y, x)) b.set(y);
  return Subgroup(g, std::move(b));
}

inline Subgroup centralizer_of_subgroup(const Group& g, const Subgroup& h) {
  Bitset b(g.order());
  auto els = h.elements();
  for (int y = 0; y < g.order(); ++y) {
    bool ok = true;
    for (int e : els)
      if (g.mul(e, y) != g.mul(y, e)) {
        ok = false;
        break;
      }
    if (ok) b.set(y);
  }
  return Subgroup(g, std::move(b));
}

inline Subgroup center(const Group& g) {
  return centralizer_of_subgroup(g, whole_group(g));
}

inline Subgroup normal_closure(const Group& g, const Subgroup& h) {
  std::vector<int> seed;
  h.members.for_each([&](int e) {
    for (int x = 0; x < g.order(); ++x) seed.push_back(g.conj(e, x));
  });
  return generated_subgroup(g, seed);
}

inline Subgroup derived_subgroup(const Group& g) {
  std::vector<int> seed;
  Bitset seen(g.order());
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y) {
      int c = g.comm(x, y);
      if (!seen.test(c)) {
        seen.set(c);
        seed.push_back(c);
      }
    }
  return generated_subgroup(g, seed);
}

namespace detail {
inline long long subgroup_prime(const Subgroup& h, long long p) {
  auto pp = prime_power(h.order);
  if (h.order == 1) return p; // trivial subgroup is a p-group for every p
  if (!pp || pp->first != p) throw SpecError("subgroup is not a p-group for the given prime");
  return p;
}
} // namespace detail

// Omega_i: subgroup generated by elements of order at most p^i (trivial for i <= 0).
inline Subgroup omega(const Subgroup& h, long long p, int i) {
  detail::subgroup_prime(h, p);
  const Group& g = *h.parent;
  if (i <= 0) return trivial_subgroup(g);
  long long bound = ipow(p, i);
  std::vector<int> seed;
  h.members.for_each([&](int e) {
    if (g.order_of(e) <= bound) seed.push_back(e);
  });
  return generated_subgroup(g, seed);
}

// Agemo: subgroup generated by p^i-th powers (the whole subgroup for i < 0).
inline Subgroup agemo(const Subgroup& h, long long p, int i) {
  detail::subgroup_prime(h, p);
  const Group& g = *h.parent;
  if (i < 0) return h;
  long long e = ipow(p, i);
  std::vector<int> seed;
  h.members.for_each([&](int x) { seed.push_back(g.pow(x, e)); });
  return generated_subgroup(g, seed);
}

} // namespace pgi

#endif
