#ifndef PGI_GROUP_HPP
#define PGI_GROUP_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pgi/errors.hpp"
#include "pgi/numeric.hpp"
#include "pgi/perm.hpp"

namespace pgi {

inline constexpr int kDefaultOrderCap = 2048;

// Finite group as a full Cayley table.  Element ids are assigned by
// breadth-first closure from the generating set, so identical construction
// inputs always yield identical tables.  Immutable after construction.
class Group {
public:
  Group() = default;

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[std::size_t(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int order_of(int g) const { return elem_order_[g]; }

  // g^x = x^-1 g x
  int conj(int g, int x) const { return mul(mul(inv_[x], g), x); }
  // [x,y] = x^-1 y^-1 x y
  int comm(int x, int y) const { return mul(mul(inv_[x], inv_[y]), mul(x, y)); }

  int pow(int g, long long e) const {
    int o = elem_order_[g];
    e %= o;
    if (e < 0) e += o;
    int r = 0;
    while (e-- > 0) r = mul(r, g);
    return r;
  }

  int exponent() const { return exponent_; }
  bool abelian() const { return abelian_; }

  // (p, e) when |G| = p^e is a prime power with e >= 1
  std::optional<std::pair<long long, int>> as_p_group() const { return p_; }

  const std::vector<int>& generators() const { return gens_; }

  bool has_labels() const { return !labels_.empty(); }
  std::string label(int g) const {
    if (g == 0) return "1";
    return labels_.empty() ? "g" + std::to_string(g) : labels_[g];
  }

  nlohmann::json to_json() const {
    nlohmann::json mul_rows = nlohmann::json::array();
    for (int a = 0; a < n_; ++a) {
      nlohmann::json row = nlohmann::json::array();
      for (int b = 0; b < n_; ++b) row.push_back(mul(a, b));
      mul_rows.push_back(std::move(row));
    }
    nlohmann::json j{{"order", n_}, {"mul", std::move(mul_rows)}};
    if (!labels_.empty()) {
      nlohmann::json lab = nlohmann::json::array();
      for (int g = 0; g < n_; ++g) lab.push_back(label(g));
      j["labels"] = std::move(lab);
    }
    return j;
  }

  static Group from_table(int n, std::vector<std::uint16_t> table, std::vector<int> gens,
                          std::vector<std::string> labels = {}) {
    Group g;
    g.n_ = n;
    g.table_ = std::move(table);
    g.gens_ = std::move(gens);
    g.labels_ = std::move(labels);
    g.finish();
    return g;
  }

private:
  void finish() {
    inv_.assign(n_, 0);
    elem_order_.assign(n_, 1);
    for (int a = 0; a < n_; ++a) {
      int x = a, o = 1;
      while (x != 0) {
        x = mul(x, a);
        ++o;
      }
      elem_order_[a] = static_cast<std::uint16_t>(o);
      inv_[a] = static_cast<std::uint16_t>(pow_raw(a, o - 1));
    }
    long long e = 1;
    for (int a = 0; a < n_; ++a) e = std::lcm(e, static_cast<long long>(elem_order_[a]));
    exponent_ = static_cast<int>(e);
    abelian_ = true;
    for (int a = 0; a < n_ && abelian_; ++a)
      for (int b = a + 1; b < n_; ++b)
        if (mul(a, b) != mul(b, a)) {
          abelian_ = false;
          break;
        }
    p_ = prime_power(n_);
  }

  int pow_raw(int g, int e) const {
    int r = 0;
    while (e-- > 0) r = mul(r, g);
    return r;
  }

  int n_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint16_t> inv_;
  std::vector<std::uint16_t> elem_order_;
  std::vector<int> gens_;
  std::vector<std::string> labels_;
  int exponent_ = 1;
  bool abelian_ = true;
  std::optional<std::pair<long long, int>> p_;
};

// Closure construction over opaque u64 element keys.
struct ClosureSpec {
  std::uint64_t identity = 0;
  std::vector<std::uint64_t> gens;
  std::function<std::uint64_t(std::uint64_t, std::uint64_t)> mul;
  std::function<std::string(std::uint64_t)> label; // may be null
};

struct ClosureResult {
  Group group;
  std::vector<std::uint64_t> key_of; // element id -> key
  std::unordered_map<std::uint64_t, int> id_of;
};

inline ClosureResult build_group(const ClosureSpec& spec, int cap = kDefaultOrderCap) {
  ClosureResult r;
  auto& key_of = r.key_of;
  auto& id_of = r.id_of;
  key_of.push_back(spec.identity);
  id_of.emplace(spec.identity, 0);
  std::vector<int> gen_ids;
  for (auto gk : spec.gens) {
    auto [it, fresh] = id_of.emplace(gk, static_cast<int>(key_of.size()));
    if (fresh) key_of.push_back(gk);
    gen_ids.push_back(it->second);
  }
  for (std::size_t head = 0; head < key_of.size(); ++head) {
    for (auto gk : spec.gens) {
      std::uint64_t prod = spec.mul(key_of[head], gk);
      auto [it, fresh] = id_of.emplace(prod, static_cast<int>(key_of.size()));
      if (fresh) {
        if (static_cast<int>(key_of.size()) >= cap)
          throw SizeLimitError("group closure exceeds order cap " + std::to_string(cap));
        key_of.push_back(prod);
      }
    }
  }
  int n = static_cast<int>(key_of.size());
  std::vector<std::uint16_t> table(std::size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto it = id_of.find(spec.mul(key_of[a], key_of[b]));
      if (it == id_of.end()) throw SpecError("closure multiplication left the closed set");
      table[std::size_t(a) * n + b] = static_cast<std::uint16_t>(it->second);
    }
  std::vector<std::string> labels;
  if (spec.label) {
    labels.resize(n);
    for (int g = 0; g < n; ++g) labels[g] = spec.label(key_of[g]);
  }
  r.group = Group::from_table(n, std::move(table), std::move(gen_ids), std::move(labels));
  return r;
}

inline Group group_from_permutations(const std::vector<Permutation>& gens, int cap = kDefaultOrderCap) {
  if (gens.empty()) throw SpecError("no generators given");
  int degree = gens[0].degree();
  for (const auto& g : gens)
    if (g.degree() != degree) throw SpecError("permutation degree mismatch");

  std::vector<Permutation> elems{Permutation::identity(degree)};
  std::map<Permutation, int> ids{{elems[0], 0}};
  std::vector<int> gen_ids;
  for (const auto& g : gens) {
    auto [it, fresh] = ids.emplace(g, static_cast<int>(elems.size()));
    if (fresh) elems.push_back(g);
    gen_ids.push_back(it->second);
  }
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      Permutation prod = elems[head] * g;
      auto [it, fresh] = ids.emplace(prod, static_cast<int>(elems.size()));
      if (fresh) {
        if (static_cast<int>(elems.size()) >= cap)
          throw SizeLimitError("permutation closure exceeds order cap " + std::to_string(cap));
        elems.push_back(std::move(prod));
      }
    }
  }
  int n = static_cast<int>(elems.size());
  std::vector<std::uint16_t> table(std::size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[std::size_t(a) * n + b] = static_cast<std::uint16_t>(ids.at(elems[a] * elems[b]));
  std::vector<std::string> labels(n);
  for (int g = 0; g < n; ++g) labels[g] = elems[g].cycle_string();
  return Group::from_table(n, std::move(table), std::move(gen_ids), std::move(labels));
}

// Exhaustive associativity/identity/inverse check up to the given order;
// deterministic strided triple sample above it.
inline bool verify_group_axioms(const Group& g, int exhaustive_cap = 256) {
  int n = g.order();
  for (int a = 0; a < n; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a) return false;
    if (g.mul(a, g.inv(a)) != 0 || g.mul(g.inv(a), a) != 0) return false;
  }
  if (n <= exhaustive_cap) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
  } else {
    int stride = n / 97 + 1;
    for (int a = 0; a < n; a += 1)
      for (int b = 0; b < n; b += stride)
        for (int c = 0; c < n; c += stride)
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
  }
  return true;
}

} // namespace pgi

#endif
