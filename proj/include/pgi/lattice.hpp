#ifndef PGI_LATTICE_HPP
#define PGI_LATTICE_HPP

#include <algorithm>
#include <map>
#include <unordered_map>
#include <vector>

#include "pgi/subgroup.hpp"

namespace pgi {

inline constexpr int kDefaultSubgroupCap = 200000;

// Complete subgroup lattice of a group, with normality flags and normalizer
// orders cached per subgroup.  Entries are sorted by (order, bitset) so the
// listing is canonical.
class SubgroupLattice {
public:
  struct Entry {
    Subgroup sub;
    std::vector<int> gens;     // generating elements found during the join closure
    int normalizer_order = 0;
    bool cyclic = false;
  };

  const Group& parent() const { return *parent_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  bool normal(const Entry& e) const { return e.normalizer_order == parent_->order(); }

  int find(const Bitset& members) const {
    auto it = index_.find(members);
    return it == index_.end() ? -1 : it->second;
  }

  friend SubgroupLattice all_subgroups(const Group& g, int subgroup_cap);

private:
  const Group* parent_ = nullptr;
  std::vector<Entry> entries_;
  std::unordered_map<Bitset, int, BitsetHash> index_;
};

// Every subgroup is a join of cyclic subgroups, so closing the set of cyclic
// subgroups under joins with cyclic subgroups reaches the full lattice.
inline SubgroupLattice all_subgroups(const Group& g, int subgroup_cap = kDefaultSubgroupCap) {
  int n = g.order();

  struct Work {
    Bitset members;
    std::vector<int> gens;
  };
  std::vector<Work> found;
  std::unordered_map<Bitset, int, BitsetHash> seen;
  auto add = [&](Bitset b, std::vector<int> gens) -> bool {
    auto [it, fresh] = seen.emplace(std::move(b), static_cast<int>(found.size()));
    if (!fresh) return false;
    if (static_cast<int>(found.size()) >= subgroup_cap)
      throw LatticeTooLargeError("subgroup count exceeds cap");
    found.push_back(Work{it->first, std::move(gens)});
    return true;
  };

  {
    Bitset triv(n);
    triv.set(0);
    add(std::move(triv), {});
  }

  // cyclic atoms, one generator of smallest id per distinct subgroup
  struct Atom {
    Bitset members;
    int gen;
  };
  std::vector<Atom> atoms;
  for (int x = 1; x < n; ++x) {
    Subgroup c = cyclic_subgroup(g, x);
    if (add(c.members, {x})) atoms.push_back(Atom{c.members, x});
  }

  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const auto& atom : atoms) {
      if (atom.members.subset_of(found[head].members)) continue;
      std::vector<int> gens = found[head].gens;
      gens.push_back(atom.gen);
      // closure of <gens> by BFS over the right Cayley graph
      Bitset b(n);
      b.set(0);
      std::vector<int> queue{0};
      for (std::size_t qi = 0; qi < queue.size(); ++qi)
        for (int gen : gens) {
          int y = g.mul(queue[qi], gen);
          if (!b.test(y)) {
            b.set(y);
            queue.push_back(y);
          }
        }
      add(std::move(b), std::move(gens));
    }
  }

  SubgroupLattice lat;
  lat.parent_ = &g;
  lat.entries_.reserve(found.size());
  for (auto& w : found) {
    SubgroupLattice::Entry e;
    e.sub = Subgroup(g, std::move(w.members));
    e.gens = std::move(w.gens);
    lat.entries_.push_back(std::move(e));
  }
  std::sort(lat.entries_.begin(), lat.entries_.end(), [](const auto& a, const auto& b) {
    if (a.sub.order != b.sub.order) return a.sub.order < b.sub.order;
    return a.sub.members.lex_less(b.sub.members);
  });
  for (std::size_t i = 0; i < lat.entries_.size(); ++i) {
    auto& e = lat.entries_[i];
    e.normalizer_order = normalizer(e.sub).order;
    e.cyclic = e.sub.cyclic();
    lat.index_.emplace(e.sub.members, static_cast<int>(i));
  }
  return lat;
}

// Dedekind test: every cyclic subgroup normal.  (Equivalent to all subgroups
// normal; the equivalence is asserted as a corpus property in the suites.)
inline bool is_dedekind(const Group& g) {
  for (int x = 1; x < g.order(); ++x) {
    Subgroup c = cyclic_subgroup(g, x);
    if (!is_normal(c)) return false;
  }
  return true;
}

// R(G): intersection of all non-normal subgroups of a non-Dedekind group.
// Also computes the intersection over non-normal cyclic subgroups only and
// insists the two agree.
inline Subgroup r_of_g(const Group& g, const SubgroupLattice& lat) {
  if (is_dedekind(g)) throw DedekindError("R(G) is undefined for Dedekind groups");
  Bitset all(g.order());
  for (int i = 0; i < g.order(); ++i) all.set(i);
  Bitset rall = all, rcyc = all;
  for (const auto& e : lat.entries()) {
    if (lat.normal(e)) continue;
    rall = rall & e.sub.members;
    if (e.cyclic) rcyc = rcyc & e.sub.members;
  }
  if (!(rall == rcyc))
    throw Error("R(G) differs from its non-normal-cyclic variant"); // cannot happen per Blackburn
  return Subgroup(g, std::move(rall));
}

inline Subgroup r_of_g(const Group& g) {
  SubgroupLattice lat = all_subgroups(g);
  return r_of_g(g, lat);
}

// Invariant factors of a finite abelian group, largest first, from element
// order statistics: per prime, #(x with x^{p^i}=1) determines the conjugate
// of the type partition.
inline std::vector<long long> abelian_invariants(const Subgroup& a) {
  if (!a.abelian()) throw SpecError("abelian_invariants requires an abelian subgroup");
  const Group& g = *a.parent;
  if (a.order == 1) return {};
  long long n = a.order;
  std::vector<long long> primes;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) primes.push_back(n);

  std::vector<std::vector<int>> parts; // per prime, type partition descending
  for (long long p : primes) {
    std::vector<int> conj; // conj[i-1] = #{j : lambda_j >= i}
    long long prev = 1;
    for (long long pi = p;; pi *= p) {
      long long c = 0;
      a.members.for_each([&](int x) {
        if (g.pow(x, pi) == 0) ++c;
      });
      if (c == prev) break;
      conj.push_back(valuation(c, p) - valuation(prev, p));
      prev = c;
    }
    std::vector<int> lambda(conj.empty() ? 0 : conj[0], 0);
    for (std::size_t i = 0; i < conj.size(); ++i)
      for (int j = 0; j < conj[i]; ++j) ++lambda[j];
    parts.push_back(std::move(lambda));
  }

  std::size_t rank = 0;
  for (const auto& l : parts) rank = std::max(rank, l.size());
  std::vector<long long> factors(rank, 1);
  for (std::size_t pi = 0; pi < primes.size(); ++pi)
    for (std::size_t j = 0; j < parts[pi].size(); ++j) factors[j] *= ipow(primes[pi], parts[pi][j]);
  return factors;
}

inline int abelian_rank(const Subgroup& a) {
  return static_cast<int>(abelian_invariants(a).size());
}

// Quotient G/N as a fresh group on coset representatives; cosets are keyed by
// their minimal element id, listed ascending, so the table is deterministic.
struct QuotientResult {
  Group group;
  std::vector<int> coset_of; // parent element id -> quotient element id
  std::vector<int> rep_of;   // quotient element id -> minimal parent rep
};

inline QuotientResult quotient_group(const Group& g, const Subgroup& n) {
  if (!is_normal(n)) throw SpecError("quotient requires a normal subgroup");
  QuotientResult r;
  r.coset_of.assign(g.order(), -1);
  auto nels = n.elements();
  for (int x = 0; x < g.order(); ++x) {
    if (r.coset_of[x] >= 0) continue;
    int id = static_cast<int>(r.rep_of.size());
    r.rep_of.push_back(x);
    for (int h : nels) r.coset_of[g.mul(x, h)] = id;
  }
  int q = static_cast<int>(r.rep_of.size());
  std::vector<std::uint16_t> table(std::size_t(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      table[std::size_t(a) * q + b] = static_cast<std::uint16_t>(r.coset_of[g.mul(r.rep_of[a], r.rep_of[b])]);
  std::vector<int> gens;
  for (int gen : g.generators()) {
    int c = r.coset_of[gen];
    if (c != 0) gens.push_back(c);
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.resize(q);
    for (int a = 0; a < q; ++a) labels[a] = g.label(r.rep_of[a]) + "N";
  }
  r.group = Group::from_table(q, std::move(table), std::move(gens), std::move(labels));
  return r;
}

} // namespace pgi

#endif
