#pragma once

#include <compare>
#include <vector>

#include "permmult/term.hpp"

namespace pmc {

// One-line notation, 1-indexed: images()[i-1] = σ(i).
// Composition is (στ)(i) = σ(τ(i)); with the right action ⟨c⟩σ = (c_σ(1),…,c_σ(n))
// this gives (⟨c⟩σ)τ = ⟨c⟩(στ).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_.at(i - 1); }
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const;
  bool is_identity() const;

  Term to_json() const;
  static Permutation from_json(const Term& t);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

Permutation perm_compose(const Permutation& s, const Permutation& t);

// Entry i of the result is c_σ(i).
template <class T>
std::vector<T> perm_act(const Permutation& s, const std::vector<T>& c) {
  if (static_cast<int>(c.size()) != s.degree())
    throw DegreeMismatch("perm_act: profile length " + std::to_string(c.size()) +
                         " vs degree " + std::to_string(s.degree()));
  std::vector<T> out;
  out.reserve(c.size());
  for (int i = 1; i <= s.degree(); ++i) out.push_back(c[s(i) - 1]);
  return out;
}

// All of Σ_n, lexicographic.
std::vector<Permutation> all_permutations(int n);

// Carries blocks 1..n (lengths k_1..k_n) into the order σ(1),…,σ(n).
Permutation block_perm(const Permutation& s, const std::vector<int>& k);

// τ_1 × ⋯ × τ_n acting blockwise.
Permutation block_sum(const std::vector<Permutation>& ts);

// The π with tgt[i] = src[π(i)]; keys must be pairwise distinct.
template <class K>
Permutation matching_permutation(const std::vector<K>& src, const std::vector<K>& tgt);

class FinMap {
 public:
  FinMap() = default;
  FinMap(int domain, int codomain, std::vector<int> images);

  static FinMap identity(int r);
  static FinMap terminal(int r);  // ι_r : [r] → [1]
  static FinMap from_permutation(const Permutation& p);

  int domain() const { return r_; }
  int codomain() const { return s_; }
  int operator()(int i) const { return img_.at(i - 1); }
  const std::vector<int>& images() const { return img_; }

  std::vector<int> preimage(int j) const;  // ascending
  bool is_bijection() const;
  Permutation as_permutation() const;  // requires bijection

  Term to_json() const;
  static FinMap from_json(const Term& t);

  friend bool operator==(const FinMap&, const FinMap&) = default;
  friend auto operator<=>(const FinMap&, const FinMap&) = default;

 private:
  int r_ = 0;
  int s_ = 0;
  std::vector<int> img_;
};

FinMap compose(const FinMap& g, const FinMap& f);  // g∘f
FinMap direct_sum(const FinMap& f, const FinMap& f2);
std::vector<FinMap> all_finmaps(int r, int s);

// Degree |(gf)⁻¹(k)|: carries the fiberwise concatenation ⊕_{j∈g⁻¹(k)} f⁻¹(j) to (gf)⁻¹(k).
Permutation sigma_kgf(const FinMap& f, const FinMap& g, int k);

// Grid ranking with the first index varying fastest.
int grid_rank(const std::vector<int>& j, const std::vector<int>& r);
std::vector<int> grid_unrank(int rank, const std::vector<int>& r);
int grid_size(const std::vector<int>& r);

// ∏ f^i conjugated by grid ranking.
FinMap product_map(const std::vector<FinMap>& fs);

// Π(rank(j)) = rank(σ^1(j_1),…,σ^n(j_n)).
Permutation grid_product(const std::vector<Permutation>& ss);

// ξ⊗_{m,n}: position of (i,j) in the i-fastest order ↦ its position in the j-fastest order.
Permutation xi_tensor(int m, int n);

template <class K>
Permutation matching_permutation(const std::vector<K>& src, const std::vector<K>& tgt) {
  if (src.size() != tgt.size()) throw DegreeMismatch("matching_permutation: length mismatch");
  std::vector<int> img;
  img.reserve(tgt.size());
  for (const auto& key : tgt) {
    int hit = 0;
    for (std::size_t p = 0; p < src.size(); ++p)
      if (src[p] == key) {
        if (hit) throw Malformed("matching_permutation: repeated key");
        hit = static_cast<int>(p) + 1;
      }
    if (!hit) throw Malformed("matching_permutation: key missing from source");
    img.push_back(hit);
  }
  return Permutation(std::move(img));
}

}  // namespace pmc
