#ifndef PGI_CORPUS_HPP
#define PGI_CORPUS_HPP

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "pgi/family.hpp"
#include "pgi/lattice.hpp"

namespace pgi {

struct CorpusConfig {
  int order_cap = kDefaultOrderCap;
  int subgroup_cap = kDefaultSubgroupCap;
  std::optional<long long> only_p; // keep only p-groups for this prime
  int f1_n_max = 5;
  int f2_n_max = 5;
  bool include_f1 = true;
  bool include_f2 = true;
  bool include_products = true;
  bool include_odd = true;
  bool include_perm = true;

  static CorpusConfig empty() {
    CorpusConfig c;
    c.include_f1 = c.include_f2 = c.include_products = c.include_odd = c.include_perm = false;
    return c;
  }
};

struct CorpusEntry {
  std::string id;
  std::string name;
  FamilySpec spec;
  Construction built;
  bool dedekind = false;
  std::shared_ptr<const SubgroupLattice> lat; // filled by prepare_lattices
  std::string lat_skip;                       // reason when the lattice is unavailable

  const Group& group() const { return built.group; }
};

struct Corpus {
  CorpusConfig config;
  std::vector<CorpusEntry> entries;
  std::vector<std::pair<std::string, std::string>> skipped; // (name, reason)
};

// static striping; results only depend on the index, not the worker
template <class Fn>
inline void parallel_for(std::size_t n, int workers, Fn&& fn) {
  if (workers < 1) workers = 1;
  if (workers == 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) fn(i);
    });
  for (auto& t : pool) t.join();
}

namespace detail {

inline std::string bits_string(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

inline std::string f1_name(const FamilySpec& f) {
  bool bsq0 = true;
  for (int c : f.bsq)
    if (c) bsq0 = false;
  if (f.extra_factors.empty()) {
    long long g_order = ipow(2, f.n + 1);
    if (f.s == SAction::neg_one && bsq0) return "D" + std::to_string(g_order);
    if (f.s == SAction::neg_one && f.bsq == std::vector<int>{1}) return "Q" + std::to_string(g_order);
    if (f.s == SAction::neg_one_plus && bsq0) return "SD" + std::to_string(g_order);
  }
  if (f.extra_factors == std::vector<int>{1} && f.bsq == std::vector<int>{0, 1}) {
    if (f.s == SAction::neg_one) return "pres2(n=" + std::to_string(f.n + 2) + ")";
    return "pres3(n=" + std::to_string(f.n + 2) + ")";
  }
  return "F1(n=" + std::to_string(f.n) + ",e=" + bits_string(f.extra_factors) +
         ",s=" + to_string(f.s) + ",bsq=" + bits_string(f.bsq) + ")";
}

inline std::string f2_name(const FamilySpec& f) {
  return "F2(n=" + std::to_string(f.n) + ",A*=" + bits_string(f.extra_factors) +
         ",s=" + to_string(f.s) + ",z=" + bits_string(f.z) + ",bsq=" + bits_string(f.bsq) + ")";
}

} // namespace detail

inline Corpus build_corpus(const CorpusConfig& cfg = {}) {
  Corpus corpus;
  corpus.config = cfg;
  std::set<std::string> seen;

  auto add = [&](const FamilySpec& spec, const std::string& name) {
    std::string id = spec.id();
    if (!seen.insert(id).second) return; // grids may overlap; keep the first
    try {
      Construction c = construct(spec, cfg.order_cap);
      if (cfg.only_p) {
        auto pp = c.group.as_p_group();
        if (!pp || pp->first != *cfg.only_p) return;
      }
      CorpusEntry e;
      e.id = std::move(id);
      e.name = name;
      e.spec = spec;
      e.dedekind = is_dedekind(c.group);
      e.built = std::move(c);
      corpus.entries.push_back(std::move(e));
    } catch (const SizeLimitError& ex) {
      corpus.skipped.emplace_back(name, ex.what());
    }
  };

  const std::vector<std::vector<int>> extra_grid{{}, {1}, {2}, {1, 1}};
  if (cfg.include_f1) {
    for (int n = 1; n <= cfg.f1_n_max; ++n)
      for (const auto& extras : extra_grid) {
        bool valid = true;
        for (int f : extras)
          if (f > n) valid = false;
        if (!valid) continue;
        int r = 1 + static_cast<int>(extras.size());
        for (SAction s : {SAction::neg_one, SAction::neg_one_plus}) {
          if (s == SAction::neg_one_plus && n < 3) continue;
          for (int mask = 0; mask < (1 << r); ++mask) {
            std::vector<int> bsq(r);
            for (int i = 0; i < r; ++i) bsq[i] = (mask >> i) & 1;
            FamilySpec f = FamilySpec::make_f1(n, extras, s, bsq);
            add(f, detail::f1_name(f));
          }
        }
      }
  }

  const std::vector<std::vector<int>> astar_grid{{1}, {2}, {1, 1}};
  if (cfg.include_f2) {
    for (int n = 2; n <= cfg.f2_n_max; ++n)
      for (const auto& astar : astar_grid) {
        int rs = static_cast<int>(astar.size());
        int r = 1 + rs;
        for (SAction s : {SAction::neg_one, SAction::neg_one_plus}) {
          if (s == SAction::neg_one_plus && n < 3) continue;
          for (int zmask = 1; zmask < (1 << rs); ++zmask) {
            std::vector<int> z(rs);
            for (int i = 0; i < rs; ++i) z[i] = (zmask >> i) & 1;
            for (int mask = 0; mask < (1 << r); ++mask) {
              std::vector<int> bsq(r);
              for (int i = 0; i < r; ++i) bsq[i] = (mask >> i) & 1;
              FamilySpec f = FamilySpec::make_f2(n, astar, s, z, bsq);
              add(f, detail::f2_name(f));
            }
          }
        }
      }
  }

  if (cfg.include_products) {
    FamilySpec q8 = FamilySpec::make_f1(2, {}, SAction::neg_one, {1});
    add(FamilySpec::make_product({q8, FamilySpec::make_cyclic(4)}), "Q8xC4");
    add(FamilySpec::make_product({q8, q8}), "Q8xQ8");
    add(FamilySpec::make_product({q8, FamilySpec::make_cyclic(4), FamilySpec::make_cyclic(2)}),
        "Q8xC4xC2");
    add(FamilySpec::make_product({q8, FamilySpec::make_cyclic(2)}), "Q8xC2");
    add(FamilySpec::make_product({q8, FamilySpec::make_cyclic(2), FamilySpec::make_cyclic(2)}),
        "Q8xC2^2");
  }

  if (cfg.include_odd) {
    for (long long p : {2, 3, 5})
      for (int k : {1, 2}) {
        if (ipow(p, 2 * k + 2) > cfg.order_cap) {
          corpus.skipped.emplace_back("Sharp(p=" + std::to_string(p) + ",k=" + std::to_string(k) + ")",
                                      "order exceeds cap");
          continue;
        }
        add(FamilySpec::make_sharpness(p, k),
            "Sharp(p=" + std::to_string(p) + ",k=" + std::to_string(k) + ")");
      }
    for (long long p : {3, 5}) {
      // extraspecial of exponent p: <a,c> x b with [a,b] = c central
      add(FamilySpec::make_extension({p, p}, {{1, 1}, {0, 1}}, static_cast<int>(p), {0, 0}),
          "Heis" + std::to_string(p * p * p));
      // modular group of order p^3: C_{p^2} : C_p with a -> a^{1+p}
      add(FamilySpec::make_extension({p * p}, {{1 + p}}, static_cast<int>(p), {0}),
          "Mod" + std::to_string(p * p * p));
    }
    add(FamilySpec::make_cyclic(27), "C27");
    add(FamilySpec::make_product({FamilySpec::make_cyclic(9), FamilySpec::make_cyclic(3)}), "C9xC3");
  }

  if (cfg.include_perm) {
    add(FamilySpec::make_perm(4, {{1, 2, 0, 3}, {0, 2, 3, 1}}), "A4"); // (0 1 2), (1 2 3)
    add(FamilySpec::make_perm(5, {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}}), "A5"); // (0 1 2 3 4), (0 1 2)
  }

  return corpus;
}

inline void prepare_lattices(Corpus& corpus, int workers) {
  parallel_for(corpus.entries.size(), workers, [&](std::size_t i) {
    CorpusEntry& e = corpus.entries[i];
    if (e.lat) return;
    try {
      e.lat = std::make_shared<SubgroupLattice>(all_subgroups(e.group(), corpus.config.subgroup_cap));
    } catch (const LatticeTooLargeError& ex) {
      e.lat_skip = ex.what();
    }
  });
}

} // namespace pgi

#endif
