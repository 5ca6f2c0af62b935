// Acceptance suite: runs every acceptance criterion over the default corpus
// and prints one pass/fail line per criterion.  Exits non-zero if any fails.

#include <chrono>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "pgi/pgi.hpp"

using namespace pgi;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

void report(const std::string& id, bool ok, const std::string& detail, long long ms) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << ": " << detail << " (" << ms << " ms)\n";
  if (!ok) ++failures;
}

struct Timed {
  std::string id;
  std::string detail;
  Clock::time_point t0 = Clock::now();
  long long budget_ms;
  explicit Timed(std::string id_, long long budget_ms_ = 0) : id(std::move(id_)), budget_ms(budget_ms_) {}
  void done(bool ok, const std::string& d) {
    long long ms = ms_since(t0);
    bool in_budget = budget_ms == 0 || ms <= budget_ms;
    report(id, ok && in_budget, d + (in_budget ? "" : " [over time budget]"), ms);
  }
};

int count_fail(const VerificationReport& rep, const std::string& prefix = "") {
  int n = 0;
  for (const auto& r : rep.rows)
    if (r.status == RowStatus::fail && (prefix.empty() || r.claim_id.rfind(prefix, 0) == 0)) ++n;
  return n;
}

int count_pass(const VerificationReport& rep, const std::string& prefix) {
  int n = 0;
  for (const auto& r : rep.rows)
    if (r.status == RowStatus::pass && r.claim_id.rfind(prefix, 0) == 0) ++n;
  return n;
}

} // namespace

int main() {
  auto total0 = Clock::now();
  int workers = 2;

  std::cout << "building default corpus...\n";
  Corpus corpus = build_corpus();
  prepare_lattices(corpus, workers);
  std::cout << "corpus ready: " << corpus.entries.size() << " groups\n";

  // C1: mni(A5) = 3 and mni*(A5) = 2 by brute force, < 5 s
  {
    Timed t("C01", 5000);
    Group a5 = group_from_permutations({Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}),
                                        Permutation::from_cycles(5, {{0, 1, 2}})});
    SubgroupLattice lat = all_subgroups(a5);
    long long v1 = mni(a5, lat).value, v2 = mni_star(a5).value;
    t.done(v1 == 3 && v2 == 2, "mni(A5)=" + std::to_string(v1) + ", mni*(A5)=" + std::to_string(v2));
  }

  // C2: the A4 witness with exact indices, < 1 s
  {
    Timed t("C02", 1000);
    Group a4 = group_from_permutations({Permutation::from_cycles(4, {{0, 1, 2}}),
                                        Permutation::from_cycles(4, {{1, 2, 3}})});
    int g = -1;
    for (int x = 0; x < 12; ++x)
      if (a4.order_of(x) == 2) {
        g = x;
        break;
      }
    Subgroup h = cyclic_subgroup(a4, g);
    long long norm_index = 12 / normalizer(h).order;
    long long closure_index = normal_closure(a4, h).order / h.order;
    t.done(norm_index == 3 && closure_index == 2 && norm_index > closure_index,
           "|A4:N(<g>)|=" + std::to_string(norm_index) + " > |<g>^A4:<g>|=" + std::to_string(closure_index));
  }

  // C3: mni = mni* on every non-Dedekind p-group in the corpus (>= 80), < 5 min
  {
    Timed t("C03", 300000);
    int checked = 0, mismatches = 0;
    for (const auto& e : corpus.entries) {
      if (e.dedekind || !e.group().as_p_group() || !e.lat) continue;
      ++checked;
      if (mni(e.group(), *e.lat).value != mni_star(e.group()).value) ++mismatches;
    }
    t.done(checked >= 80 && mismatches == 0,
           "groups=" + std::to_string(checked) + " mismatches=" + std::to_string(mismatches));
  }

  // C4: sharpness: mni = mni* = mci* = p^k and |G| = p^{2k+2}
  {
    Timed t("C04");
    struct PK {
      long long p;
      int k;
    };
    int ok = 0, want = 0;
    std::string detail;
    for (PK pk : {PK{2, 1}, PK{3, 1}, PK{5, 1}, PK{2, 2}, PK{3, 2}}) {
      ++want;
      Construction c = construct(FamilySpec::make_sharpness(pk.p, pk.k));
      SubgroupLattice lat = all_subgroups(c.group);
      long long target = ipow(pk.p, pk.k);
      bool good = mni(c.group, lat).value == target && mni_star(c.group).value == target &&
                  mci_star(c.group).value == target &&
                  c.group.order() == ipow(pk.p, 2 * pk.k + 2);
      if (good) ++ok;
      else detail += " (p=" + std::to_string(pk.p) + ",k=" + std::to_string(pk.k) + ") bad;";
    }
    t.done(ok == want, "pairs=" + std::to_string(ok) + "/" + std::to_string(want) + detail);
  }

  // C5: linear order bound from mci* over all non-abelian odd corpus members
  {
    Timed t("C05");
    int checked = 0, violations = 0;
    for (const auto& e : corpus.entries) {
      auto pp = e.group().as_p_group();
      if (!pp || pp->first == 2 || e.group().abelian()) continue;
      ++checked;
      int k = valuation(mci_star(e.group()).value, pp->first);
      if (pp->second > 2 * k + 2) ++violations;
    }
    t.done(checked > 0 && violations == 0,
           "groups=" + std::to_string(checked) + " violations=" + std::to_string(violations));
  }

  // C6: F1 closed-form values over the full grid
  VerificationReport f1_rep = suite_f1_values(corpus, workers);
  {
    Timed t("C06");
    t.done(count_fail(f1_rep) == 0 && count_pass(f1_rep, "f1_values.") > 200,
           "rows=" + std::to_string(f1_rep.rows.size()) +
               " fail=" + std::to_string(count_fail(f1_rep)));
  }

  // C7: F2 closed-form values for n >= 3 plus the order-16 exception
  {
    Timed t("C07");
    VerificationReport rep = suite_f2_values(corpus, workers);
    bool exception_row = false;
    for (const auto& r : rep.rows)
      if (r.claim_id == "f2_values.n2_exception" && r.status == RowStatus::pass) exception_row = true;
    t.done(count_fail(rep) == 0 && exception_row,
           "fail=" + std::to_string(count_fail(rep)) +
               (exception_row ? ", n=2 exception asserted" : ", n=2 exception row missing"));
  }

  // C8: mci* = 1 exactly for Q16, Q32, Q64 among non-Dedekind corpus 2-groups
  {
    Timed t("C08");
    std::set<int> orders_attaining;
    bool all_quaternion = true;
    int non_dedekind_2groups = 0;
    for (const auto& e : corpus.entries) {
      auto pp = e.group().as_p_group();
      if (!pp || pp->first != 2 || e.dedekind) continue;
      ++non_dedekind_2groups;
      bool mci1 = mci_star(e.group()).value == 1;
      auto gq = is_generalized_quaternion(e.group());
      bool expects = gq && *gq >= 4;
      if (mci1 != expects) all_quaternion = false;
      if (mci1) orders_attaining.insert(e.group().order());
    }
    bool exact_set = orders_attaining == std::set<int>{16, 32, 64};
    t.done(all_quaternion && exact_set && non_dedekind_2groups > 0,
           "2-groups=" + std::to_string(non_dedekind_2groups) +
               ", attaining orders={16,32,64}: " + (exact_set ? "yes" : "no"));
  }

  // C9: Blackburn list over the corpus
  {
    Timed t("C09");
    bool ok = true;
    std::string detail;
    int listed = 0;
    std::set<std::string> seen_types;
    for (const auto& e : corpus.entries) {
      auto pp = e.group().as_p_group();
      if (!pp || e.dedekind || !e.lat) continue;
      Subgroup r = r_of_g(e.group(), *e.lat);
      if (pp->first != 2) {
        if (r.order != 1) {
          ok = false;
          detail += " odd R!=1 at " + e.name;
        }
        continue;
      }
      if (r.order == 1) continue;
      ++listed;
      if (r.order != 2) {
        ok = false;
        detail += " |R|!=2 at " + e.name;
      }
      auto bm = blackburn_type(e.group(), *e.lat);
      if (!bm) {
        ok = false;
        detail += " unmatched " + e.name;
      } else {
        seen_types.insert(bm->type);
        if (e.name == "Q8xC4" && bm->type != "R1") ok = false;
        if (e.name == "Q8xQ8" && bm->type != "R2") ok = false;
        if ((e.name == "Q16" || e.name == "Q32") && bm->type != "R3") ok = false;
      }
    }
    bool all_types = seen_types == std::set<std::string>{"R1", "R2", "R3"};
    t.done(ok && listed >= 4 && all_types,
           "R!=1 groups=" + std::to_string(listed) + ", types seen=R1,R2,R3: " +
               (all_types ? "yes" : "no") + detail);
  }

  // C10: Kummer valuations against the carry-count oracle, < 10 s
  {
    Timed t("C10", 10000);
    long long instances = 0;
    bool ok = true;
    for (long long p : {2, 3, 5})
      for (int m = 1; m <= 5; ++m) {
        long long pm = ipow(p, m);
        for (long long i = 1; i <= pm; ++i) {
          ++instances;
          if (kummer_valuation(p, m, i) != carry_count(i, pm - i, p)) ok = false;
        }
      }
    t.done(ok, "instances=" + std::to_string(instances));
  }

  // C11: splitting elements over the small odd corpus + the cyclic hypothesis error
  {
    Timed t("C11");
    VerificationReport rep = suite_splitting(corpus, workers);
    long long split_rows = count_pass(rep, "splitting.found");
    bool cyclic_row = false;
    for (const auto& r : rep.rows)
      if (r.claim_id == "splitting.cyclic_hypothesis" && r.status == RowStatus::pass) cyclic_row = true;
    t.done(count_fail(rep) == 0 && split_rows > 0 && cyclic_row,
           "groups=" + std::to_string(split_rows) +
               (cyclic_row ? ", cyclic hypothesis error raised" : ", cyclic hypothesis row missing"));
  }

  // C12: Aut(B) structure for (3,2,1) and (5,2,1), < 60 s
  {
    Timed t("C12", 60000);
    VerificationReport r1 = verify_aut_b_lemma(3, 2, 1);
    VerificationReport r2 = verify_aut_b_lemma(5, 2, 1);
    std::string inv1, inv2;
    for (const auto& r : r1.rows)
      if (r.claim_id == "aut_structure.q_invariants") inv1 = r.computed;
    for (const auto& r : r2.rows)
      if (r.claim_id == "aut_structure.q_invariants") inv2 = r.computed;
    t.done(r1.ok() && r2.ok() && inv1 == "[3,3]" && inv2 == "[5,5]",
           "Q(3,2,1)=" + inv1 + " Q(5,2,1)=" + inv2);
  }

  // C13: outside-squares and quotient-monotonicity suites with zero failures
  VerificationReport structural_rep = suite_structural(corpus, workers);
  {
    Timed t("C13");
    VerificationReport g2 = suite_lemma_g2(corpus, workers);
    int f45 = count_fail(structural_rep, "quotient_mci");
    int p45 = count_pass(structural_rep, "quotient_mci");
    t.done(count_fail(g2) == 0 && f45 == 0 && p45 > 0,
           "squares fail=" + std::to_string(count_fail(g2)) + ", quotient rows=" + std::to_string(p45) +
               " fail=" + std::to_string(f45));
  }

  // C14: constancy in n per parameter shape; k=1 members recognize into F1
  VerificationReport recog_rep = suite_recognize(corpus, workers);
  {
    Timed t("C14");
    int shapes = count_pass(recog_rep, "recognize.constancy_in_n");
    int k1 = count_pass(recog_rep, "recognize.k1_in_f1");
    t.done(count_fail(recog_rep) == 0 && shapes >= 10 && k1 >= 10,
           "shapes=" + std::to_string(shapes) + " k1_members=" + std::to_string(k1) +
               " fail=" + std::to_string(count_fail(recog_rep)));
  }

  // C15: determinism of two consecutive full runs (and the whole acceptance
  // pass itself stays within the 15-minute budget via the harness timeout)
  {
    Timed t("C15");
    VerificationReport run1 = run_suites(corpus, {"all"}, workers);
    VerificationReport run2 = run_suites(corpus, {"all"}, workers);
    bool same = run1.rows.size() == run2.rows.size();
    if (same)
      for (std::size_t i = 0; i < run1.rows.size(); ++i) {
        const auto &a = run1.rows[i], &b = run2.rows[i];
        if (a.group_id != b.group_id || a.claim_id != b.claim_id || a.expected != b.expected ||
            a.computed != b.computed || a.status != b.status || a.witness != b.witness)
          same = false;
      }
    t.done(same && run1.ok(),
           "rows=" + std::to_string(run1.rows.size()) + " identical=" + (same ? "yes" : "no") +
               " fail=" + std::to_string(count_fail(run1)));
  }

  std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
            << ms_since(total0) / 1000 << " s total)\n";
  return failures == 0 ? 0 : 1;
}
