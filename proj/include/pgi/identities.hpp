#ifndef PGI_IDENTITIES_HPP
#define PGI_IDENTITIES_HPP

#include <string>
#include <vector>

#include "pgi/numeric.hpp"
#include "pgi/report.hpp"
#include "pgi/subgroup.hpp"

namespace pgi {

// Collection identities, checked exhaustively:
//   (6) (xy)^n = x^n y^n [y,x]^C(n,2) [y,x,x]^C(n,3) ...   when <y>^G is abelian
//   (7) [x^n,y] = [x,y]^n [x,y,x]^C(n,2) ...                when <x,y>' is abelian
// for all applicable pairs and all n <= exp(G).  Binomials are taken mod
// exp(G) via an additive Pascal triangle, which is enough since element
// orders divide the exponent.
inline VerificationReport verify_collection_identities(const Group& g, const std::string& group_id = "g") {
  VerificationReport rep;
  int n = g.order();
  int expg = g.exponent();
  BinomialMod binom(expg, expg);

  // power cycle of an element: cyc[k] = e^k
  auto cycle = [&](int e) {
    std::vector<int> c{0};
    int x = e;
    while (x != 0) {
      c.push_back(x);
      x = g.mul(x, e);
    }
    return c;
  };

  long long checked6 = 0, checked7 = 0;
  std::string bad6, bad7;

  // <y>^G abelian, cached per distinct cyclic subgroup
  std::vector<int> ncl_ok(n, -1);
  auto y_qualifies = [&](int y) {
    if (ncl_ok[y] >= 0) return ncl_ok[y] == 1;
    Subgroup cy = cyclic_subgroup(g, y);
    Subgroup ncl = normal_closure(g, cy);
    int ok = ncl.abelian() ? 1 : 0;
    cy.members.for_each([&](int e) {
      if (g.order_of(e) == g.order_of(y)) ncl_ok[e] = ok; // same cyclic subgroup
    });
    ncl_ok[y] = ok;
    return ok == 1;
  };

  for (int y = 0; y < n; ++y) {
    if (!y_qualifies(y)) continue;
    for (int x = 0; x < n; ++x) {
      // chain[j] = [y, x, ..., x] with j occurrences of x
      std::vector<std::vector<int>> chains; // power cycles of chain elements
      int c = g.comm(y, x);
      while (static_cast<int>(chains.size()) < expg - 1) {
        if (c == 0 && !chains.empty()) break;
        chains.push_back(cycle(c));
        if (c == 0) break;
        c = g.comm(c, x);
      }
      int xy = g.mul(x, y);
      int lhs = 0, xn = 0, yn = 0;
      for (int m = 1; m <= expg; ++m) {
        lhs = g.mul(lhs, xy);
        xn = g.mul(xn, x);
        yn = g.mul(yn, y);
        int rhs = g.mul(xn, yn);
        for (std::size_t j = 0; j < chains.size() && static_cast<int>(j) + 2 <= m; ++j) {
          const auto& cyc = chains[j];
          if (cyc.size() == 1) break; // chain reached the identity
          auto o = static_cast<long long>(cyc.size());
          rhs = g.mul(rhs, cyc[static_cast<std::size_t>(binom(m, static_cast<int>(j) + 2) % o)]);
        }
        ++checked6;
        if (lhs != rhs && bad6.empty())
          bad6 = "x=" + g.label(x) + " y=" + g.label(y) + " n=" + std::to_string(m);
      }
    }
  }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Subgroup h = generated_subgroup(g, {x, y});
      // derived subgroup of <x,y> is the normal closure of [x,y] in it
      std::vector<int> seed;
      h.members.for_each([&](int e) { seed.push_back(g.conj(g.comm(x, y), e)); });
      Subgroup hd = generated_subgroup(g, seed);
      if (!hd.abelian()) continue;
      std::vector<std::vector<int>> chains; // chain[j] = [x, y, x, ..., x], j-1 trailing x's
      int c = g.comm(x, y);
      while (static_cast<int>(chains.size()) < expg) {
        if (c == 0 && !chains.empty()) break;
        chains.push_back(cycle(c));
        if (c == 0) break;
        c = g.comm(c, x);
      }
      int xn = 0;
      for (int m = 1; m <= expg; ++m) {
        xn = g.mul(xn, x);
        int lhs = g.comm(xn, y);
        int rhs = 0;
        for (std::size_t j = 0; j < chains.size() && static_cast<int>(j) + 1 <= m; ++j) {
          const auto& cyc = chains[j];
          if (cyc.size() == 1) break;
          auto o = static_cast<long long>(cyc.size());
          rhs = g.mul(rhs, cyc[static_cast<std::size_t>(binom(m, static_cast<int>(j) + 1) % o)]);
        }
        ++checked7;
        if (lhs != rhs && bad7.empty())
          bad7 = "x=" + g.label(x) + " y=" + g.label(y) + " n=" + std::to_string(m);
      }
    }

  rep.check(group_id, "identity.power_of_product", "no violation",
            bad6.empty() ? "no violation" : "violated at " + bad6,
            "instances=" + std::to_string(checked6));
  rep.check(group_id, "identity.commutator_with_power", "no violation",
            bad7.empty() ? "no violation" : "violated at " + bad7,
            "instances=" + std::to_string(checked7));
  return rep;
}

} // namespace pgi

#endif
