#ifndef PGI_ABELIAN_HPP
#define PGI_ABELIAN_HPP

#include <numeric>
#include <string>
#include <vector>

#include "pgi/group.hpp"

namespace pgi {

// Direct product of cyclic groups of the given orders, with a labeled basis.
struct AbelianPresentation {
  std::vector<long long> factor_orders;
  std::vector<std::string> basis_labels;

  explicit AbelianPresentation(std::vector<long long> orders, std::vector<std::string> labels = {})
      : factor_orders(std::move(orders)), basis_labels(std::move(labels)) {
    if (factor_orders.empty()) throw SpecError("abelian presentation needs at least one factor");
    for (long long m : factor_orders)
      if (m < 2) throw SpecError("abelian factor orders must be >= 2");
    if (basis_labels.empty())
      for (std::size_t i = 0; i < factor_orders.size(); ++i)
        basis_labels.push_back("a" + std::to_string(i + 1));
    if (basis_labels.size() != factor_orders.size()) throw SpecError("basis label count mismatch");
  }

  int rank() const { return static_cast<int>(factor_orders.size()); }

  long long order() const {
    long long n = 1;
    for (long long m : factor_orders) n *= m;
    return n;
  }

  long long exponent() const {
    long long e = 1;
    for (long long m : factor_orders) e = std::lcm(e, m);
    return e;
  }
};

// Group built from an AbelianPresentation, with element <-> exponent-vector
// conversion in both directions.
class AbelianGroup {
public:
  AbelianGroup(AbelianPresentation pres, int cap = kDefaultOrderCap) : pres_(std::move(pres)) {
    long long n = pres_.order();
    if (n > cap) throw SizeLimitError("abelian group order exceeds cap");
    int r = pres_.rank();
    ClosureSpec spec;
    spec.identity = 0;
    for (int i = 0; i < r; ++i) spec.gens.push_back(key_of_basis(i));
    spec.mul = [this](std::uint64_t a, std::uint64_t b) { return add_keys(a, b); };
    spec.label = [this](std::uint64_t k) { return key_label(k); };
    auto built = build_group(spec, cap);
    g_ = std::move(built.group);
    key_of_ = std::move(built.key_of);
    id_by_key_.assign(n, -1);
    for (int id = 0; id < g_.order(); ++id) id_by_key_[key_of_[id]] = id;
    exps_.resize(g_.order());
    for (int id = 0; id < g_.order(); ++id) exps_[id] = decode(key_of_[id]);
  }

  const Group& group() const { return g_; }
  const AbelianPresentation& presentation() const { return pres_; }

  const std::vector<long long>& exps(int id) const { return exps_[id]; }

  int id_of_exps(const std::vector<long long>& e) const {
    if (e.size() != pres_.factor_orders.size()) throw SpecError("exponent vector rank mismatch");
    std::uint64_t k = 0;
    for (std::size_t i = pres_.factor_orders.size(); i-- > 0;) {
      long long m = pres_.factor_orders[i];
      long long v = ((e[i] % m) + m) % m;
      k = k * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(v);
    }
    return id_by_key_[k];
  }

  int basis_elem(int i) const {
    std::vector<long long> e(pres_.rank(), 0);
    e[i] = 1;
    return id_of_exps(e);
  }

private:
  std::uint64_t key_of_basis(int i) const {
    std::uint64_t k = 1;
    for (int j = 0; j < i; ++j) k *= static_cast<std::uint64_t>(pres_.factor_orders[j]);
    return k;
  }

  std::vector<long long> decode(std::uint64_t k) const {
    std::vector<long long> e(pres_.rank());
    for (int i = 0; i < pres_.rank(); ++i) {
      auto m = static_cast<std::uint64_t>(pres_.factor_orders[i]);
      e[i] = static_cast<long long>(k % m);
      k /= m;
    }
    return e;
  }

  std::uint64_t add_keys(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t k = 0, mult = 1;
    for (int i = 0; i < pres_.rank(); ++i) {
      auto m = static_cast<std::uint64_t>(pres_.factor_orders[i]);
      k += ((a % m + b % m) % m) * mult;
      a /= m;
      b /= m;
      mult *= m;
    }
    return k;
  }

  std::string key_label(std::uint64_t k) const {
    auto e = decode(k);
    std::string s;
    for (int i = 0; i < pres_.rank(); ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += '*';
      s += pres_.basis_labels[i];
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
  }

  AbelianPresentation pres_;
  Group g_;
  std::vector<std::uint64_t> key_of_;
  std::vector<int> id_by_key_;
  std::vector<std::vector<long long>> exps_;
};

inline AbelianGroup abelian_group(std::vector<long long> factor_orders, int cap = kDefaultOrderCap) {
  return AbelianGroup(AbelianPresentation(std::move(factor_orders)), cap);
}

// Automorphism of an abelian group given by basis images (exponent vectors).
class AbelianAutomorphism {
public:
  AbelianAutomorphism(const AbelianGroup& a, std::vector<std::vector<long long>> images) : a_(&a) {
    const auto& pres = a.presentation();
    if (static_cast<int>(images.size()) != pres.rank()) throw SpecError("automorphism needs one image per basis element");
    // homomorphism: m_i * image_i must vanish
    for (int i = 0; i < pres.rank(); ++i) {
      if (static_cast<int>(images[i].size()) != pres.rank()) throw SpecError("automorphism image rank mismatch");
      for (int j = 0; j < pres.rank(); ++j)
        if ((images[i][j] * pres.factor_orders[i]) % pres.factor_orders[j] != 0)
          throw SpecError("basis image order incompatible with factor order");
    }
    const Group& g = a.group();
    map_.assign(g.order(), 0);
    std::vector<bool> hit(g.order(), false);
    for (int id = 0; id < g.order(); ++id) {
      const auto& e = a.exps(id);
      std::vector<long long> img(pres.rank(), 0);
      for (int i = 0; i < pres.rank(); ++i)
        for (int j = 0; j < pres.rank(); ++j) img[j] += e[i] * images[i][j];
      int to = a.id_of_exps(img);
      map_[id] = to;
      if (hit[to]) throw SpecError("automorphism images do not define a bijection");
      hit[to] = true;
    }
  }

  static AbelianAutomorphism power_map(const AbelianGroup& a, long long s) {
    std::vector<std::vector<long long>> images(a.presentation().rank(),
                                               std::vector<long long>(a.presentation().rank(), 0));
    for (int i = 0; i < a.presentation().rank(); ++i) images[i][i] = s;
    return AbelianAutomorphism(a, std::move(images));
  }

  const AbelianGroup& domain() const { return *a_; }
  int apply(int id) const { return map_[id]; }

  bool is_identity() const {
    for (int id = 0; id < static_cast<int>(map_.size()); ++id)
      if (map_[id] != id) return false;
    return true;
  }

  // map as permutation composed j times
  std::vector<int> power(int j) const {
    std::vector<int> r(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i) r[i] = static_cast<int>(i);
    for (int t = 0; t < j; ++t)
      for (auto& x : r) x = map_[x];
    return r;
  }

private:
  const AbelianGroup* a_;
  std::vector<int> map_;
};

// Extension of an abelian group A by a cyclic group of order m acting via
// alpha, with b^m identified with a0.  Elements are normal forms b^j * a;
// (i,x)(j,y) = (i+j, alpha^j(x) y), folding a0 in whenever i+j wraps past m.
// Requires alpha^m = id and alpha(a0) = a0.
inline ClosureResult cyclic_extension_result(const AbelianGroup& a, const AbelianAutomorphism& alpha,
                                             int m, int a0, int cap = kDefaultOrderCap,
                                             const std::string& b_label = "b") {
  if (m < 1) throw SpecError("extension degree must be >= 1");
  const Group& ag = a.group();
  if (a0 < 0 || a0 >= ag.order()) throw SpecError("a0 outside A");
  if (static_cast<long long>(m) * ag.order() > cap) throw SizeLimitError("extension order exceeds cap");
  std::vector<std::vector<int>> alpha_pow;
  alpha_pow.reserve(m + 1);
  for (int j = 0; j <= m; ++j) alpha_pow.push_back(alpha.power(j));
  for (std::size_t i = 0; i < alpha_pow[m].size(); ++i)
    if (alpha_pow[m][i] != static_cast<int>(i))
      throw ExtensionInvalidError("alpha^m is not the identity");
  if (alpha.apply(a0) != a0) throw ExtensionInvalidError("alpha does not fix a0");

  auto na = static_cast<std::uint64_t>(ag.order());
  ClosureSpec spec;
  spec.identity = 0;
  for (int i = 0; i < a.presentation().rank(); ++i)
    spec.gens.push_back(static_cast<std::uint64_t>(a.basis_elem(i)));
  spec.gens.push_back(na); // b = (1, identity)
  spec.mul = [&ag, &alpha_pow, m, a0, na](std::uint64_t u, std::uint64_t v) {
    int i = static_cast<int>(u / na), x = static_cast<int>(u % na);
    int j = static_cast<int>(v / na), y = static_cast<int>(v % na);
    int jj = i + j;
    int apart = ag.mul(alpha_pow[j][x], y);
    if (jj >= m) {
      jj -= m;
      apart = ag.mul(a0, apart);
    }
    return static_cast<std::uint64_t>(jj) * na + static_cast<std::uint64_t>(apart);
  };
  spec.label = [&ag, na, &b_label](std::uint64_t u) {
    int j = static_cast<int>(u / na), x = static_cast<int>(u % na);
    std::string s;
    if (j > 0) {
      s = b_label;
      if (j > 1) s += "^" + std::to_string(j);
    }
    if (x != 0) {
      if (!s.empty()) s += '*';
      s += ag.label(x);
    }
    return s.empty() ? std::string("1") : s;
  };
  return build_group(spec, cap);
}

inline Group cyclic_extension(const AbelianGroup& a, const AbelianAutomorphism& alpha, int m, int a0,
                              int cap = kDefaultOrderCap) {
  return cyclic_extension_result(a, alpha, m, a0, cap).group;
}

} // namespace pgi

#endif
