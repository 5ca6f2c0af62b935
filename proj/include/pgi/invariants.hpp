#ifndef PGI_INVARIANTS_HPP
#define PGI_INVARIANTS_HPP

#include <optional>
#include <string>

#include "pgi/lattice.hpp"
#include "pgi/report.hpp"

namespace pgi {

enum class InvariantKind { mni, mni_star, mci_star };

inline const char* to_string(InvariantKind k) {
  switch (k) {
    case InvariantKind::mni: return "mni";
    case InvariantKind::mni_star: return "mni*";
    default: return "mci*";
  }
}

// max |N_G(H):H| (resp. cyclic / centralizer variant) together with the
// witness attaining it; ties go to the bitset-lex smallest witness.
struct InvariantValue {
  InvariantKind kind;
  long long value = 0;
  Bitset witness;          // the non-normal subgroup attaining the max
  int witness_element = -1; // generator (mni*/mci*), -1 for mni
  std::string witness_label;
};

namespace detail {
inline void require_not_dedekind(const Group& g) {
  if (is_dedekind(g)) throw DedekindError("invariant undefined: group is Dedekind");
}
} // namespace detail

inline InvariantValue mni(const Group& g, const SubgroupLattice& lat) {
  detail::require_not_dedekind(g);
  InvariantValue best;
  best.kind = InvariantKind::mni;
  for (const auto& e : lat.entries()) {
    if (lat.normal(e)) continue;
    long long v = e.normalizer_order / e.sub.order;
    if (v > best.value || (v == best.value && best.value > 0 && e.sub.members.lex_less(best.witness))) {
      best.value = v;
      best.witness = e.sub.members;
      best.witness_label = e.sub.describe();
    }
  }
  return best;
}

inline InvariantValue mni(const Group& g) {
  SubgroupLattice lat = all_subgroups(g);
  return mni(g, lat);
}

inline InvariantValue mni_star(const Group& g) {
  detail::require_not_dedekind(g);
  InvariantValue best;
  best.kind = InvariantKind::mni_star;
  Bitset done(g.order());
  for (int x = 1; x < g.order(); ++x) {
    if (done.test(x)) continue;
    Subgroup c = cyclic_subgroup(g, x);
    c.members.for_each([&](int y) { done.set(y); });
    Subgroup n = normalizer(c);
    if (n.order == g.order()) continue; // normal
    long long v = n.order / c.order;
    if (v > best.value || (v == best.value && best.value > 0 && c.members.lex_less(best.witness))) {
      best.value = v;
      best.witness = c.members;
      best.witness_element = x;
      best.witness_label = "<" + g.label(x) + ">";
    }
  }
  return best;
}

inline InvariantValue mci_star(const Group& g) {
  detail::require_not_dedekind(g);
  InvariantValue best;
  best.kind = InvariantKind::mci_star;
  for (int x = 1; x < g.order(); ++x) {
    Subgroup c = cyclic_subgroup(g, x);
    if (is_normal(c)) continue;
    long long v = centralizer_of_element(g, x).order / c.order;
    if (v > best.value || (v == best.value && best.value > 0 && c.members.lex_less(best.witness))) {
      best.value = v;
      best.witness = c.members;
      best.witness_element = x;
      best.witness_label = g.label(x);
    }
  }
  return best;
}

// mci*(G) <= mni*(G) <= mni(G)
inline VerificationReport check_relation_chain(const Group& g, const SubgroupLattice& lat,
                                               const std::string& group_id = "g") {
  VerificationReport rep;
  long long a = mci_star(g).value, b = mni_star(g).value, c = mni(g, lat).value;
  rep.check(group_id, "chain.mci_le_mni_star", "mci*<=mni*",
            a <= b ? "mci*<=mni*" : std::to_string(a) + ">" + std::to_string(b));
  rep.check(group_id, "chain.mni_star_le_mni", "mni*<=mni",
            b <= c ? "mni*<=mni" : std::to_string(b) + ">" + std::to_string(c));
  return rep;
}

inline VerificationReport check_relation_chain(const Group& g) {
  SubgroupLattice lat = all_subgroups(g);
  return check_relation_chain(g, lat);
}

// Lemma: mci*(G/N) <= |N| mci*(G) whenever both invariants are defined.
inline VerificationReport check_quotient_lemma(const Group& g, const Subgroup& n,
                                               const std::string& group_id = "g") {
  VerificationReport rep;
  if (!is_normal(n)) throw SpecError("check_quotient_lemma requires a normal subgroup");
  if (is_dedekind(g)) {
    rep.skip(group_id, "quotient_mci.bound", "G is Dedekind");
    return rep;
  }
  QuotientResult q = quotient_group(g, n);
  if (is_dedekind(q.group)) {
    rep.skip(group_id, "quotient_mci.bound", "G/N is Dedekind (|N|=" + std::to_string(n.order) + ")");
    return rep;
  }
  long long lhs = mci_star(q.group).value;
  long long rhs = static_cast<long long>(n.order) * mci_star(g).value;
  rep.check(group_id, "quotient_mci.bound", "mci*(G/N)<=|N|mci*(G)",
            lhs <= rhs ? "mci*(G/N)<=|N|mci*(G)"
                       : std::to_string(lhs) + ">" + std::to_string(rhs),
            "|N|=" + std::to_string(n.order));
  return rep;
}

} // namespace pgi

#endif
