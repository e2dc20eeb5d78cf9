#include "permmult/combinatorics.hpp"

#include <algorithm>
#include <numeric>

namespace pmc {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(n + 1, 0);
  for (int v : img_) {
    if (v < 1 || v > n || seen[v]) throw Malformed("not a permutation: " + Term(img_).dump());
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> v(img_.size());
  for (int i = 1; i <= degree(); ++i) v[img_[i - 1] - 1] = i;
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if (img_[i - 1] != i) return false;
  return true;
}

Term Permutation::to_json() const { return Term(img_); }

Permutation Permutation::from_json(const Term& t) {
  if (!t.is_array()) throw Malformed("permutation must be a list");
  std::vector<int> v;
  for (const auto& x : t) {
    if (!x.is_number_integer()) throw Malformed("permutation entries must be integers");
    v.push_back(x.get<int>());
  }
  return Permutation(std::move(v));
}

Permutation perm_compose(const Permutation& s, const Permutation& t) {
  if (s.degree() != t.degree())
    throw DegreeMismatch("perm_compose: degrees " + std::to_string(s.degree()) + " and " +
                         std::to_string(t.degree()));
  std::vector<int> v(s.degree());
  for (int i = 1; i <= s.degree(); ++i) v[i - 1] = s(t(i));
  return Permutation(std::move(v));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Permutation block_perm(const Permutation& s, const std::vector<int>& k) {
  const int n = s.degree();
  if (static_cast<int>(k.size()) != n) throw DegreeMismatch("block_perm: lengths vs degree");
  std::vector<int> start(n + 1, 0);
  for (int j = 0; j < n; ++j) {
    if (k[j] < 0) throw Malformed("block_perm: negative block length");
    start[j + 1] = start[j] + k[j];
  }
  std::vector<int> v;
  v.reserve(start[n]);
  for (int j = 1; j <= n; ++j) {
    int b = s(j);
    for (int q = 1; q <= k[b - 1]; ++q) v.push_back(start[b - 1] + q);
  }
  return Permutation(std::move(v));
}

Permutation block_sum(const std::vector<Permutation>& ts) {
  std::vector<int> v;
  int off = 0;
  for (const auto& t : ts) {
    for (int x : t.images()) v.push_back(off + x);
    off += t.degree();
  }
  return Permutation(std::move(v));
}

FinMap::FinMap(int domain, int codomain, std::vector<int> images)
    : r_(domain), s_(codomain), img_(std::move(images)) {
  if (r_ < 0 || s_ < 0) throw Malformed("finite map with negative size");
  if (static_cast<int>(img_.size()) != r_) throw Malformed("finite map: image list length");
  for (int v : img_)
    if (v < 1 || v > s_) throw Malformed("finite map: image out of codomain");
}

FinMap FinMap::identity(int r) {
  std::vector<int> v(r);
  std::iota(v.begin(), v.end(), 1);
  return FinMap(r, r, std::move(v));
}

FinMap FinMap::terminal(int r) { return FinMap(r, 1, std::vector<int>(r, 1)); }

FinMap FinMap::from_permutation(const Permutation& p) {
  return FinMap(p.degree(), p.degree(), p.images());
}

std::vector<int> FinMap::preimage(int j) const {
  if (j < 1 || j > s_) throw OutOfRange("preimage index out of range");
  std::vector<int> out;
  for (int i = 1; i <= r_; ++i)
    if (img_[i - 1] == j) out.push_back(i);
  return out;
}

bool FinMap::is_bijection() const {
  if (r_ != s_) return false;
  std::vector<char> seen(s_ + 1, 0);
  for (int v : img_) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Permutation FinMap::as_permutation() const {
  if (!is_bijection()) throw Malformed("finite map is not a bijection");
  return Permutation(img_);
}

Term FinMap::to_json() const { return Term{{"domain", r_}, {"codomain", s_}, {"images", img_}}; }

FinMap FinMap::from_json(const Term& t) {
  if (!t.is_object() || !t.contains("domain") || !t.contains("codomain") || !t.contains("images"))
    throw Malformed("finite map needs domain, codomain and images");
  return FinMap(t.at("domain").get<int>(), t.at("codomain").get<int>(),
                t.at("images").get<std::vector<int>>());
}

FinMap compose(const FinMap& g, const FinMap& f) {
  if (f.codomain() != g.domain()) throw DegreeMismatch("compose: finite maps not composable");
  std::vector<int> v(f.domain());
  for (int i = 1; i <= f.domain(); ++i) v[i - 1] = g(f(i));
  return FinMap(f.domain(), g.codomain(), std::move(v));
}

FinMap direct_sum(const FinMap& f, const FinMap& f2) {
  std::vector<int> v = f.images();
  for (int x : f2.images()) v.push_back(x + f.codomain());
  return FinMap(f.domain() + f2.domain(), f.codomain() + f2.codomain(), std::move(v));
}

std::vector<FinMap> all_finmaps(int r, int s) {
  std::vector<FinMap> out;
  if (s == 0 && r > 0) return out;
  std::vector<int> v(r, 1);
  for (;;) {
    out.emplace_back(r, s, v);
    int i = 0;
    while (i < r && v[i] == s) v[i++] = 1;
    if (i == r) break;
    v[i]++;
  }
  return out;
}

Permutation sigma_kgf(const FinMap& f, const FinMap& g, int k) {
  if (f.codomain() != g.domain()) throw DegreeMismatch("sigma_kgf: maps not composable");
  if (k < 1 || k > g.codomain()) throw OutOfRange("sigma_kgf: k out of range");
  std::vector<int> cat;
  for (int j : g.preimage(k))
    for (int i : f.preimage(j)) cat.push_back(i);
  std::vector<int> target;
  for (int i = 1; i <= f.domain(); ++i)
    if (g(f(i)) == k) target.push_back(i);
  return matching_permutation(cat, target);
}

int grid_size(const std::vector<int>& r) {
  int n = 1;
  for (int x : r) n *= x;
  return n;
}

int grid_rank(const std::vector<int>& j, const std::vector<int>& r) {
  if (j.size() != r.size()) throw DegreeMismatch("grid_rank: index tuple length");
  int rank = 1, stride = 1;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i] < 1 || j[i] > r[i]) throw OutOfRange("grid_rank: index out of range");
    rank += (j[i] - 1) * stride;
    stride *= r[i];
  }
  return rank;
}

std::vector<int> grid_unrank(int rank, const std::vector<int>& r) {
  if (rank < 1 || rank > grid_size(r)) throw OutOfRange("grid_unrank: rank out of range");
  std::vector<int> j(r.size());
  int q = rank - 1;
  for (std::size_t i = 0; i < r.size(); ++i) {
    j[i] = q % r[i] + 1;
    q /= r[i];
  }
  return j;
}

FinMap product_map(const std::vector<FinMap>& fs) {
  std::vector<int> rs, ss;
  for (const auto& f : fs) {
    rs.push_back(f.domain());
    ss.push_back(f.codomain());
  }
  const int total = grid_size(rs);
  std::vector<int> v(total);
  for (int q = 1; q <= total; ++q) {
    auto j = grid_unrank(q, rs);
    for (std::size_t i = 0; i < fs.size(); ++i) j[i] = fs[i](j[i]);
    v[q - 1] = grid_rank(j, ss);
  }
  return FinMap(total, grid_size(ss), std::move(v));
}

Permutation grid_product(const std::vector<Permutation>& ss) {
  std::vector<FinMap> fs;
  for (const auto& s : ss) fs.push_back(FinMap::from_permutation(s));
  return product_map(fs).as_permutation();
}

Permutation xi_tensor(int m, int n) {
  std::vector<int> v(m * n);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) v[(i - 1) + (j - 1) * m] = 1 + (j - 1) + (i - 1) * n;
  return Permutation(std::move(v));
}

}  // namespace pmc
