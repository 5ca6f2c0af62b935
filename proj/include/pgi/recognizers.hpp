#ifndef PGI_RECOGNIZERS_HPP
#define PGI_RECOGNIZERS_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "pgi/family.hpp"
#include "pgi/invariants.hpp"
#include "pgi/lattice.hpp"
#include "pgi/report.hpp"

namespace pgi {

// Q_{2^e}: non-abelian 2-group with a unique involution and a cyclic subgroup
// of index 2 inverted from outside.  Returns e.
inline std::optional<int> is_generalized_quaternion(const Group& g) {
  auto pp = g.as_p_group();
  if (!pp || pp->first != 2 || pp->second < 3 || g.abelian()) return std::nullopt;
  int involutions = 0;
  for (int x = 1; x < g.order(); ++x)
    if (g.order_of(x) == 2) ++involutions;
  if (involutions != 1) return std::nullopt;
  for (int a = 0; a < g.order(); ++a) {
    if (g.order_of(a) * 2 != g.order()) continue;
    Subgroup c = cyclic_subgroup(g, a);
    for (int b = 0; b < g.order(); ++b) {
      if (c.contains(b)) continue;
      if (g.conj(a, b) == g.inv(a)) return pp->second;
    }
  }
  return std::nullopt;
}

// Q-group: G = <A,b> with A abelian not elementary abelian, b inverting A,
// and b^2 in A of order exactly 2.
struct QGroupWitness {
  Bitset a_members;
  int b = -1;
};

inline std::optional<QGroupWitness> is_q_group(const Group& g, const SubgroupLattice& lat) {
  if (g.order() % 2 != 0) return std::nullopt;
  for (const auto& e : lat.entries()) {
    if (e.sub.order * 2 != g.order()) continue;
    if (!e.sub.abelian()) continue;
    bool elementary = true;
    e.sub.members.for_each([&](int a) {
      if (g.order_of(a) > 2) elementary = false;
    });
    if (elementary) continue;
    // inversion is a property of the coset, so one representative decides it
    bool inverts = true;
    int b0 = -1;
    for (int b = 0; b < g.order() && b0 < 0; ++b)
      if (!e.sub.contains(b)) b0 = b;
    e.sub.members.for_each([&](int a) {
      if (inverts && g.conj(a, b0) != g.inv(a)) inverts = false;
    });
    if (!inverts) continue;
    for (int b = 0; b < g.order(); ++b) {
      if (e.sub.contains(b)) continue;
      if (g.order_of(g.mul(b, b)) == 2) return QGroupWitness{e.sub.members, b};
    }
  }
  return std::nullopt;
}

inline std::optional<QGroupWitness> is_q_group(const Group& g) {
  SubgroupLattice lat = all_subgroups(g);
  return is_q_group(g, lat);
}

namespace detail {

inline bool q8_fingerprint(const Subgroup& h) {
  if (h.order != 8 || h.abelian()) return false;
  int invol = 0;
  h.members.for_each([&](int x) {
    if (h.parent->order_of(x) == 2) ++invol;
  });
  return invol == 1;
}

// internal direct product test: all parts normal (callers guarantee),
// orders multiply to |G|, and each part meets the join of the others trivially
inline bool internal_direct(const Group& g, const std::vector<const Subgroup*>& parts) {
  long long prod = 1;
  for (auto* p : parts) prod *= p->order;
  if (prod != g.order()) return false;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<int> seed;
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (j != i)
        parts[j]->members.for_each([&](int x) { seed.push_back(x); });
    Subgroup rest = generated_subgroup(g, seed);
    if ((parts[i]->members & rest.members).count() != 1) return false;
  }
  return true;
}

} // namespace detail

// Match against Blackburn's list for non-Dedekind 2-groups with R(G) != 1.
struct BlackburnMatch {
  std::string type; // "R1" | "R2" | "R3"
  std::string evidence;
};

inline std::optional<BlackburnMatch> blackburn_type(const Group& g, const SubgroupLattice& lat) {
  std::vector<const Subgroup*> q8s, c4s, elems; // all normal
  for (const auto& e : lat.entries()) {
    if (!lat.normal(e)) continue;
    if (detail::q8_fingerprint(e.sub)) q8s.push_back(&e.sub);
    if (e.cyclic && e.sub.order == 4) c4s.push_back(&e.sub);
    if (e.sub.elementary_abelian(2) || e.sub.order == 1) elems.push_back(&e.sub);
  }
  for (auto* q : q8s)
    for (auto* c : c4s) {
      if ((q->members & c->members).count() != 1) continue;
      long long rest = g.order() / 32;
      for (auto* e : elems) {
        if (e->order != rest) continue;
        if (detail::internal_direct(g, {q, c, e}))
          return BlackburnMatch{"R1", "Q8=" + q->describe() + " C4=" + c->describe()};
      }
    }
  for (std::size_t i = 0; i < q8s.size(); ++i)
    for (std::size_t j = i + 1; j < q8s.size(); ++j) {
      if ((q8s[i]->members & q8s[j]->members).count() != 1) continue;
      long long rest = g.order() / 64;
      for (auto* e : elems) {
        if (e->order != rest) continue;
        if (detail::internal_direct(g, {q8s[i], q8s[j], e}))
          return BlackburnMatch{"R2", "Q8xQ8 at " + q8s[i]->describe()};
      }
    }
  if (auto qw = is_q_group(g, lat))
    return BlackburnMatch{"R3", "A=" + Subgroup(g, qw->a_members).describe() + " b=" + g.label(qw->b)};
  return std::nullopt;
}

inline VerificationReport blackburn_check(const Group& g, const SubgroupLattice& lat,
                                          const std::string& group_id = "g") {
  auto pp = g.as_p_group();
  if (!pp) throw SpecError("blackburn_check needs a p-group");
  if (is_dedekind(g)) throw DedekindError("blackburn_check needs a non-Dedekind group");
  VerificationReport rep;
  Subgroup r = r_of_g(g, lat);
  if (r.order == 1) {
    rep.check(group_id, "blackburn.r_trivial_or_listed", "ok", "ok", "R(G)=1");
    return rep;
  }
  bool head = pp->first == 2 && r.order == 2;
  rep.check(group_id, "blackburn.r_order", "p=2,|R|=2",
            head ? "p=2,|R|=2" : "p=" + std::to_string(pp->first) + ",|R|=" + std::to_string(r.order));
  auto match = blackburn_type(g, lat);
  rep.add(group_id, "blackburn.type", "R1|R2|R3", match ? match->type : "none",
          match ? RowStatus::pass : RowStatus::fail, match ? match->evidence : "");
  return rep;
}

// Family recognition.  Searches abelian normal index-2 subgroups and checks
// the defining action; first witness in lattice order.
struct F1Recognition {
  Bitset a_members;
  int b = -1;
  int b_sq = 0;
  int n = 0;
  int r = 0;
  SAction s = SAction::neg_one;
  long long s_int = -1;
  std::vector<long long> a_invariants;
};

inline std::optional<F1Recognition> is_in_f1(const Group& g, const SubgroupLattice& lat) {
  auto pp = g.as_p_group();
  if (!pp || pp->first != 2) throw SpecError("family recognition applies to 2-groups");
  for (const auto& e : lat.entries()) {
    if (e.sub.order * 2 != g.order() || !lat.normal(e) || !e.sub.abelian()) continue;
    int expa = 1;
    e.sub.members.for_each([&](int a) { expa = std::max(expa, g.order_of(a)); });
    int n = valuation(expa, 2);
    if (n < 1) continue;
    int b0 = -1;
    for (int b = 0; b < g.order() && b0 < 0; ++b)
      if (!e.sub.contains(b)) b0 = b;
    for (SAction s : {SAction::neg_one, SAction::neg_one_plus}) {
      if (s == SAction::neg_one_plus && n < 3) continue;
      long long s_int = s == SAction::neg_one ? -1 : -1 + ipow(2, n - 1);
      bool acts = true;
      e.sub.members.for_each([&](int a) {
        if (acts && g.conj(a, b0) != g.pow(a, s_int)) acts = false;
      });
      if (!acts) continue;
      for (int b = 0; b < g.order(); ++b) {
        if (e.sub.contains(b)) continue;
        if (g.order_of(g.mul(b, b)) > 2) continue; // need b^2 in Omega_1(A)
        F1Recognition rec;
        rec.a_members = e.sub.members;
        rec.b = b;
        rec.b_sq = g.mul(b, b);
        rec.n = n;
        rec.a_invariants = abelian_invariants(e.sub);
        rec.r = static_cast<int>(rec.a_invariants.size());
        rec.s = s;
        rec.s_int = s_int;
        return rec;
      }
    }
  }
  return std::nullopt;
}

struct F2Recognition {
  Bitset a_members;
  Bitset astar_members;
  int a1 = -1;
  int b = -1;
  int b_sq = 0;
  int z_elem = -1;
  int n = 0;
  int m = 0;
  SAction s = SAction::neg_one;
  long long s_int = -1;
  std::vector<long long> astar_invariants;
};

inline std::optional<F2Recognition> is_in_f2(const Group& g, const SubgroupLattice& lat) {
  auto pp = g.as_p_group();
  if (!pp || pp->first != 2) throw SpecError("family recognition applies to 2-groups");
  for (const auto& e : lat.entries()) {
    if (e.sub.order * 2 != g.order() || !lat.normal(e) || !e.sub.abelian()) continue;
    const Subgroup& a = e.sub;
    int b0 = -1;
    for (int b = 0; b < g.order() && b0 < 0; ++b)
      if (!a.contains(b)) b0 = b;
    int bw = -1; // representative with b^2 in Omega_1(A)
    for (int b = 0; b < g.order() && bw < 0; ++b)
      if (!a.contains(b) && g.order_of(g.mul(b, b)) <= 2) bw = b;
    if (bw < 0) continue;
    auto a1_candidates = a.elements();
    for (int a1 : a1_candidates) {
      int o = g.order_of(a1);
      if (o < 4) continue; // n >= 2
      int n = valuation(o, 2);
      Subgroup a1sub = cyclic_subgroup(g, a1);
      for (SAction s : {SAction::neg_one, SAction::neg_one_plus}) {
        if (s == SAction::neg_one_plus && n < 3) continue;
        long long s_int = s == SAction::neg_one ? -1 : -1 + ipow(2, n - 1);
        int z = g.mul(g.conj(a1, b0), g.inv(g.pow(a1, s_int)));
        if (z == 0 || g.order_of(z) != 2) continue;
        // complement A* with the plain power action, containing z
        for (const auto& u : lat.entries()) {
          if (static_cast<long long>(u.sub.order) * o != a.order) continue;
          if (!u.sub.members.subset_of(a.members)) continue;
          if (!u.sub.contains(z)) continue;
          if ((u.sub.members & a1sub.members).count() != 1) continue;
          bool acts = true;
          u.sub.members.for_each([&](int x) {
            if (acts && g.conj(x, b0) != g.pow(x, s_int)) acts = false;
          });
          if (!acts) continue;
          F2Recognition rec;
          rec.a_members = a.members;
          rec.astar_members = u.sub.members;
          rec.a1 = a1;
          rec.b = bw;
          rec.b_sq = g.mul(bw, bw);
          rec.z_elem = z;
          rec.n = n;
          rec.astar_invariants = abelian_invariants(u.sub);
          rec.m = valuation(u.sub.order, 2);
          rec.s = s;
          rec.s_int = s_int;
          return rec;
        }
      }
    }
  }
  return std::nullopt;
}

// Lemma "power=1": for odd p, K normal cyclic of order p^s, 1 <= t <= s and
// g^{p^t} in K^{p^t}, some h in gK has h^{p^t} = 1 and <h> meeting K trivially.
inline int find_splitting_element(const Group& g, const Subgroup& k, int gelem, int t) {
  auto pp = g.as_p_group();
  if (!pp || pp->first == 2) throw HypothesisError("lemma requires an odd-order p-group");
  long long p = pp->first;
  if (!k.cyclic() || !is_normal(k)) throw HypothesisError("K must be normal and cyclic");
  int s = valuation(k.order, p);
  if (t < 1 || t > s) throw HypothesisError("need 1 <= t <= s = log_p |K|");
  long long pt = ipow(p, t);
  Subgroup kpt = agemo(k, p, t);
  if (!kpt.contains(g.pow(gelem, pt))) throw HypothesisError("g^{p^t} must lie in K^{p^t}");
  int h = -1;
  k.members.for_each([&](int y) {
    if (h >= 0) return;
    int cand = g.mul(gelem, y);
    if (g.pow(cand, pt) != 0) return;
    if ((cyclic_subgroup(g, cand).members & k.members).count() == 1) h = cand;
  });
  if (h < 0) throw Error("no splitting element found despite hypotheses");
  if ((cyclic_subgroup(g, h).members & k.members).count() != 1)
    throw Error("splitting element re-check failed");
  return h;
}

// Aut structure of B = C_{p^n} x (C_p)^m for odd p: the p-power automorphisms
// fixing B* pointwise form Q = <phi_1> x Q* with Q* iso to B*, so
// Q iso C_{p^{n-1}} x C_{p^m}.  Verified by brute-force enumeration.
inline VerificationReport verify_aut_b_lemma(long long p, int n, int m, int aut_cap = 250) {
  if (!is_prime(p) || p == 2) throw SpecError("verify_aut_b_lemma needs an odd prime");
  if (n < 2 || m < 1) throw SpecError("verify_aut_b_lemma needs n >= 2, m >= 1");
  long long nb = ipow(p, n + m);
  if (nb > aut_cap) throw SizeLimitError("automorphism enumeration cap exceeded");
  VerificationReport rep;
  std::string id = "autb(p=" + std::to_string(p) + ",n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")";

  std::vector<long long> orders{ipow(p, n)};
  for (int i = 0; i < m; ++i) orders.push_back(p);
  AbelianGroup b(AbelianPresentation(orders), static_cast<int>(nb));
  const Group& bg = b.group();
  int nbi = bg.order();

  // pointwise stabilizer of B*: each candidate is b1 -> x, e_i -> e_i
  auto stab_map = [&](int x) {
    std::vector<int> map(nbi);
    for (int e = 0; e < nbi; ++e) {
      auto ev = b.exps(e);
      long long j = ev[0];
      ev[0] = 0;
      map[e] = bg.mul(bg.pow(x, j), b.id_of_exps(ev));
    }
    return map;
  };
  auto is_bijection = [&](const std::vector<int>& map) {
    std::vector<bool> hit(nbi, false);
    for (int y : map) {
      if (hit[y]) return false;
      hit[y] = true;
    }
    return true;
  };
  auto perm_order = [&](const std::vector<int>& map) {
    long long o = 1;
    std::vector<int> cur = map;
    auto is_id = [&](const std::vector<int>& v) {
      for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != static_cast<int>(i)) return false;
      return true;
    };
    while (!is_id(cur)) {
      std::vector<int> nxt(nbi);
      for (int i = 0; i < nbi; ++i) nxt[i] = map[cur[i]];
      cur = std::move(nxt);
      ++o;
    }
    return o;
  };

  std::vector<Permutation> q_perms;
  std::vector<int> q_images; // image of b1 per element of Q
  for (int x = 0; x < nbi; ++x) {
    auto map = stab_map(x);
    if (!is_bijection(map)) continue;
    long long o = perm_order(map);
    while (o % p == 0) o /= p;
    if (o != 1) continue; // keep p-power order only
    q_perms.emplace_back(map);
    q_images.push_back(x);
  }

  Group q = group_from_permutations(q_perms, aut_cap * aut_cap);
  rep.check(id, "aut_structure.q_subgroup", "closed", q.order() == static_cast<int>(q_perms.size()) ? "closed" : "not closed",
            "|Q|=" + std::to_string(q_perms.size()));
  rep.check(id, "aut_structure.q_abelian", "abelian", q.abelian() ? "abelian" : "non-abelian");

  auto inv = abelian_invariants(whole_group(q));
  std::vector<long long> want{ipow(p, n - 1), ipow(p, m)};
  std::sort(want.begin(), want.end(), std::greater<>());
  auto fmt = [](const std::vector<long long>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
  };
  rep.check(id, "aut_structure.q_invariants", fmt(want), fmt(inv));

  // phi_1: b1 -> b1^{1+p}; Q* = elements acting trivially on B/B*
  std::vector<long long> phi1_img(b.presentation().rank(), 0);
  phi1_img[0] = 1 + p;
  int phi1_x = b.id_of_exps(phi1_img);
  long long phi1_order = 0;
  int qstar_count = 0;
  bool phi1_found = false;
  for (std::size_t i = 0; i < q_images.size(); ++i) {
    if (q_images[i] == phi1_x) {
      phi1_found = true;
      phi1_order = perm_order(q_perms[i].images);
    }
    if (b.exps(q_images[i])[0] == 1) ++qstar_count; // b1 -> b1 * (element of B*)
  }
  bool decomposes = phi1_found && phi1_order == ipow(p, n - 1) &&
                    qstar_count == ipow(p, m) &&
                    phi1_order * qstar_count == static_cast<long long>(q_perms.size());
  rep.check(id, "aut_structure.decomposition", "Q=<phi1>xQ*, Q*~B*", decomposes ? "Q=<phi1>xQ*, Q*~B*" : "mismatch",
            "o(phi1)=" + std::to_string(phi1_order) + " |Q*|=" + std::to_string(qstar_count));
  return rep;
}

// Kummer/Legendre valuation of binom(p^m, i) with the lemma's divisibility
// bounds asserted.
inline int kummer_valuation(long long p, int m, long long i) {
  if (!is_prime(p)) throw SpecError("kummer_valuation: p must be prime");
  long long pm = ipow(p, m);
  if (i < 1 || i > pm) throw SpecError("kummer_valuation: need 1 <= i <= p^m");
  int v = binomial_valuation(pm, i, p);
  int l = valuation(i, p);
  if (v < m - l) throw Error("Kummer bound violated"); // cannot happen
  if (p > 2 && i >= 2 && i <= m + 1 && v < m - static_cast<int>(i) + 2)
    throw Error("Kummer consequence bound violated");
  return v;
}

// Structure tags for display.
struct StructureTag {
  std::string tag;
  std::string evidence;
};

inline std::vector<StructureTag> structure_tags(const Group& g, const SubgroupLattice& lat) {
  std::vector<StructureTag> tags;
  bool ded = is_dedekind(g);
  if (ded) tags.push_back({g.abelian() ? "dedekind" : "hamiltonian", ""});
  if (auto n = is_generalized_quaternion(g))
    tags.push_back({"generalized_quaternion", "2^" + std::to_string(*n)});
  auto pp = g.as_p_group();
  if (pp && pp->first == 2) {
    if (auto qw = is_q_group(g, lat)) tags.push_back({"q_group", "b=" + g.label(qw->b)});
    if (!ded) {
      Subgroup r = r_of_g(g, lat);
      if (r.order != 1)
        if (auto bm = blackburn_type(g, lat)) tags.push_back({"blackburn_" + bm->type, bm->evidence});
    }
    if (auto f1 = is_in_f1(g, lat))
      tags.push_back({"f1_member", "n=" + std::to_string(f1->n) + ",r=" + std::to_string(f1->r) +
                                       ",s=" + to_string(f1->s)});
    if (auto f2 = is_in_f2(g, lat))
      tags.push_back({"f2_member", "n=" + std::to_string(f2->n) + ",m=" + std::to_string(f2->m) +
                                       ",s=" + to_string(f2->s)});
  }
  if (tags.empty()) tags.push_back({"none", ""});
  return tags;
}

} // namespace pgi

#endif
