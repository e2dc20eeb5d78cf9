#include "permmult/tensor.hpp"

#include <algorithm>
#include <set>

namespace pmc {

namespace {

const Term& part(const Term& op, const char* key) {
  if (!op.is_object() || !op.contains(key))
    throw Malformed("tensor operation lacks \"" + std::string(key) + "\": " + show(op));
  return op.at(key);
}

std::vector<Terms> tuples_over(const std::vector<Terms>& choices) {
  std::vector<Terms> out{{}};
  for (const auto& c : choices) {
    std::vector<Terms> next;
    for (const auto& t : out)
      for (const auto& x : c) {
        auto u = t;
        u.push_back(x);
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

// Every factorisation of total into n positive parts, each ≤ cap.
void factorisations(int total, int n, int cap, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    if (total == 1) out.push_back(cur);
    return;
  }
  for (int a = 1; a <= std::min(total, cap); ++a)
    if (total % a == 0) {
      cur.push_back(a);
      factorisations(total / a, n, cap, cur, out);
      cur.pop_back();
    }
}

}  // namespace

GridTensor::GridTensor(std::vector<MulticatPtr> factors, int max_arity) : Ms_(std::move(factors)), A_(max_arity) {
  std::vector<Terms> ws;
  for (const auto& M : Ms_) ws.push_back(M->objects());
  for (const auto& t : tuples_over(ws)) objs_.push_back(to_term(t));
  std::sort(objs_.begin(), objs_.end());
}

std::string GridTensor::name() const {
  if (Ms_.empty()) return "unit-tensor";
  std::string s;
  for (std::size_t i = 0; i < Ms_.size(); ++i) s += (i ? " (x) " : "") + Ms_[i]->name();
  return "(" + s + ")";
}

bool GridTensor::has_object(const Term& x) const {
  if (!x.is_array() || x.size() != Ms_.size()) return false;
  for (std::size_t i = 0; i < Ms_.size(); ++i)
    if (!Ms_[i]->has_object(x[i])) return false;
  return true;
}

Terms GridTensor::components(const Term& op) const {
  const auto& f = part(op, "factors");
  if (!f.is_array() || f.size() != Ms_.size())
    throw Malformed("expected " + std::to_string(Ms_.size()) + " factors in " + show(op));
  return to_terms(f);
}

Permutation GridTensor::twist(const Term& op) const { return Permutation::from_json(part(op, "twist")); }

OpSig GridTensor::signature(const Term& op) const {
  auto fs = components(op);
  std::vector<Terms> ins;
  Terms out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    auto s = Ms_[i]->signature(fs[i]);
    ins.push_back(s.inputs);
    out.push_back(s.output);
  }
  auto grid = grid_profile(ins);
  auto t = twist(op);
  if (t.degree() != static_cast<int>(grid.size()))
    throw Malformed("twist of degree " + std::to_string(t.degree()) + " on " + std::to_string(grid.size()) +
                    " inputs: " + show(op));
  return OpSig{perm_act(t, grid), to_term(out)};
}

bool GridTensor::has_nullary(int i, const Term& y) const { return !Ms_[i - 1]->ops({}, y).empty(); }

const GridTensor::Orbit& GridTensor::orbit(int i, const Term& op) const {
  auto key = tuple_of(i, op);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = orbits_.find(key);
    if (it != orbits_.end()) return it->second;
  }
  const auto& M = *Ms_[i - 1];
  int a = M.signature(op).arity();
  auto perms = all_permutations(a);
  Orbit o;
  o.rep = op;
  for (const auto& s : perms) o.rep = std::min(o.rep, M.act(op, s));
  bool found = false;
  for (const auto& s : perms) {
    auto v = M.act(o.rep, s);
    if (!found && v == op) {
      o.to_op = s;
      found = true;
    }
    if (v == o.rep) o.stab.push_back(s);
  }
  if (!found) throw Malformed("action is not transitive on the orbit of " + show(op));
  std::lock_guard<std::mutex> lock(mu_);
  return orbits_.emplace(key, std::move(o)).first->second;
}

Term GridTensor::make(const Terms& comps, const Permutation& tw) const {
  int n = factor_count();
  if (static_cast<int>(comps.size()) != n)
    throw DegreeMismatch("tensor: " + std::to_string(comps.size()) + " components for " + std::to_string(n) +
                         " factors");
  std::vector<int> a;
  Terms outs;
  for (int i = 1; i <= n; ++i) {
    auto s = Ms_[i - 1]->signature(comps[i - 1]);
    a.push_back(s.arity());
    outs.push_back(s.output);
  }
  if (tw.degree() != grid_size(a)) throw DegreeMismatch("tensor: twist degree does not match the grid");

  auto zero = std::find(a.begin(), a.end(), 0);
  if (zero != a.end()) {
    int keep = static_cast<int>(zero - a.begin()) + 1;
    Term kept = comps[keep - 1];
    std::vector<int> N;
    for (int i = 1; i <= n; ++i)
      if (has_nullary(i, outs[i - 1])) N.push_back(i);
    if (N.size() >= 2) {
      keep = N.front();
      kept = Ms_[keep - 1]->ops({}, outs[keep - 1]).front();
    }
    Terms fs;
    for (int i = 1; i <= n; ++i) fs.push_back(i == keep ? kept : Ms_[i - 1]->unit(outs[i - 1]));
    return Term{{"factors", to_term(fs)}, {"twist", Term::array()}};
  }

  Terms reps;
  std::vector<Permutation> moves;
  std::vector<const std::vector<Permutation>*> stabs;
  for (int i = 1; i <= n; ++i) {
    const auto& o = orbit(i, comps[i - 1]);
    reps.push_back(o.rep);
    moves.push_back(o.to_op);
    stabs.push_back(&o.stab);
  }
  auto t = perm_compose(grid_product(moves), tw);
  Permutation best = t;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    std::vector<Permutation> ss;
    for (int i = 0; i < n; ++i) ss.push_back((*stabs[i])[pick[i]]);
    best = std::min(best, perm_compose(grid_product(ss), t));
    int i = 0;
    while (i < n && ++pick[i] == stabs[i]->size()) pick[i++] = 0;
    if (i == n) break;
  }
  return Term{{"factors", to_term(reps)}, {"twist", best.to_json()}};
}

Term GridTensor::make(const Terms& comps) const {
  if (static_cast<int>(comps.size()) != factor_count())
    throw DegreeMismatch("tensor: " + std::to_string(comps.size()) + " components for " +
                         std::to_string(factor_count()) + " factors");
  std::vector<int> a;
  for (int i = 0; i < factor_count(); ++i) a.push_back(Ms_[i]->signature(comps.at(i)).arity());
  return make(comps, Permutation::identity(grid_size(a)));
}

Term GridTensor::unit(const Term& c) const {
  if (!has_object(c)) throw Malformed("not an object of " + name() + ": " + show(c));
  Terms fs;
  for (int i = 0; i < factor_count(); ++i) fs.push_back(Ms_[i]->unit(c[i]));
  return make(fs, Permutation::identity(1));
}

Term GridTensor::act(const Term& op, const Permutation& s) const {
  auto t = twist(op);
  if (t.degree() != s.degree())
    throw DegreeMismatch("tensor action: degree " + std::to_string(s.degree()) + " on arity " +
                         std::to_string(t.degree()));
  return make(components(op), perm_compose(t, s));
}

Terms GridTensor::ops(const Terms& inputs, const Term& output) const {
  int n = factor_count();
  int len = static_cast<int>(inputs.size());
  if (len > A_ || !has_object(output)) return {};
  for (const auto& x : inputs)
    if (!has_object(x)) return {};
  std::set<Term> found;

  if (len == 0) {
    for (int i = 1; i <= n; ++i)
      for (const auto& phi : Ms_[i - 1]->ops({}, output[i - 1])) {
        Terms fs;
        for (int k = 1; k <= n; ++k) fs.push_back(k == i ? phi : Ms_[k - 1]->unit(output[k - 1]));
        found.insert(make(fs, Permutation()));
      }
    return Terms(found.begin(), found.end());
  }

  // coordinate values available to each factor
  std::vector<Terms> coords(n);
  for (int i = 0; i < n; ++i) {
    std::set<Term> vals;
    for (const auto& x : inputs) vals.insert(x[i]);
    coords[i].assign(vals.begin(), vals.end());
  }
  auto sorted_inputs = inputs;
  std::sort(sorted_inputs.begin(), sorted_inputs.end());
  auto perms = all_permutations(len);

  std::vector<std::vector<int>> shapes;
  std::vector<int> cur;
  factorisations(len, n, A_, cur, shapes);
  for (const auto& a : shapes) {
    std::vector<Terms> cands(n);
    for (int i = 0; i < n; ++i)
      for (const auto& p : profiles_of_length(coords[i], a[i]))
        for (const auto& phi : Ms_[i]->ops(p, output[i])) cands[i].push_back(phi);
    for (const auto& fs : tuples_over(cands)) {
      std::vector<Terms> ins;
      for (int i = 0; i < n; ++i) ins.push_back(Ms_[i]->signature(fs[i]).inputs);
      auto grid = grid_profile(ins);
      auto sorted_grid = grid;
      std::sort(sorted_grid.begin(), sorted_grid.end());
      if (sorted_grid != sorted_inputs) continue;
      for (const auto& t : perms)
        if (perm_act(t, grid) == inputs) found.insert(make(fs, t));
    }
  }
  return Terms(found.begin(), found.end());
}

Term GridTensor::gamma(const Term& outer, const Terms& inners) const {
  int n = factor_count();
  auto osig = signature(outer);
  int A = osig.arity();
  if (static_cast<int>(inners.size()) != A)
    throw DegreeMismatch("gamma: " + std::to_string(inners.size()) + " inner operations for arity " +
                         std::to_string(A));
  std::vector<OpSig> isig;
  for (int q = 0; q < A; ++q) {
    isig.push_back(signature(inners[q]));
    if (isig[q].output != osig.inputs[q])
      throw Malformed("gamma: inner output " + show(isig[q].output) + " does not match input " +
                      show(osig.inputs[q]));
  }
  if (A == 0) return outer;

  auto phis = components(outer);
  auto T = twist(outer);
  std::vector<int> a;
  std::vector<Terms> phi_in;
  for (int i = 0; i < n; ++i) {
    auto s = Ms_[i]->signature(phis[i]);
    a.push_back(s.arity());
    phi_in.push_back(s.inputs);
  }
  std::vector<std::vector<int>> cell(A);
  for (int q = 1; q <= A; ++q) cell[q - 1] = grid_unrank(T(q), a);

  // slot (i, v): the factor-i operation feeding input v of φ^i
  std::vector<std::vector<Term>> slot(n);
  std::vector<std::vector<bool>> set(n);
  for (int i = 0; i < n; ++i) {
    slot[i].assign(a[i], Term());
    set[i].assign(a[i], false);
  }
  auto claim = [&](int i, int v, const Term& chi) {
    if (set[i][v - 1] && slot[i][v - 1] != chi)
      throw Unsupported("gamma: inner operations are not aligned with the grid of " + show(outer));
    slot[i][v - 1] = chi;
    set[i][v - 1] = true;
  };
  std::vector<int> wild;  // nullary inners identified with every nullary product
  for (int q = 0; q < A; ++q) {
    auto chis = components(inners[q]);
    if (isig[q].arity() > 0) {
      for (int i = 0; i < n; ++i) claim(i, cell[q][i], chis[i]);
      continue;
    }
    int nullary_factors = 0;
    for (int i = 1; i <= n; ++i)
      if (has_nullary(i, isig[q].output[i - 1])) ++nullary_factors;
    if (nullary_factors >= 2) {
      wild.push_back(q);
      continue;
    }
    for (int i = 0; i < n; ++i)
      if (Ms_[i]->signature(chis[i]).arity() == 0) claim(i, cell[q][i], chis[i]);
  }
  std::vector<std::vector<bool>> fixed = set;
  for (int i = 0; i < n; ++i)
    for (int v = 1; v <= a[i]; ++v)
      if (!set[i][v - 1]) slot[i][v - 1] = Ms_[i]->unit(phi_in[i][v - 1]);
  for (int q : wild) {
    bool ok = false;
    for (int i = 0; i < n && !ok; ++i) ok = Ms_[i]->signature(slot[i][cell[q][i] - 1]).arity() == 0;
    for (int i = 0; i < n && !ok; ++i) {
      int v = cell[q][i];
      if (fixed[i][v - 1]) continue;
      auto nullary = Ms_[i]->ops({}, phi_in[i][v - 1]);
      if (nullary.empty()) continue;
      slot[i][v - 1] = nullary.front();
      ok = true;
    }
    if (!ok) throw Unsupported("gamma: a nullary inner operation cannot be placed on the grid of " + show(outer));
  }

  // per-factor composites and their input offsets
  Terms thetas;
  std::vector<std::vector<int>> offset(n), b(n);
  std::vector<int> total(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int v = 0; v < a[i]; ++v) {
      offset[i].push_back(total[i]);
      b[i].push_back(Ms_[i]->signature(slot[i][v]).arity());
      total[i] += b[i].back();
    }
    thetas.push_back(Ms_[i]->gamma(phis[i], slot[i]));
  }
  int size = grid_size(total);
  if (size > A_) throw BoundExceeded("composite arity " + std::to_string(size) + " exceeds " + std::to_string(A_));

  std::vector<int> pi;
  for (int q = 0; q < A; ++q) {
    if (isig[q].arity() == 0) continue;
    auto Tq = twist(inners[q]);
    std::vector<int> bq;
    for (int i = 0; i < n; ++i) bq.push_back(b[i][cell[q][i] - 1]);
    for (int p = 1; p <= isig[q].arity(); ++p) {
      auto h = grid_unrank(Tq(p), bq);
      for (int i = 0; i < n; ++i) h[i] += offset[i][cell[q][i] - 1];
      pi.push_back(grid_rank(h, total));
    }
  }
  return make(thetas, Permutation(pi));
}

GridTensorPtr grid_tensor(std::vector<MulticatPtr> factors, int max_arity) {
  return std::make_shared<GridTensor>(std::move(factors), max_arity);
}

Terms grid_profile(const std::vector<Terms>& xs) {
  std::vector<int> r;
  for (const auto& x : xs) r.push_back(static_cast<int>(x.size()));
  Terms out;
  int total = grid_size(r);
  for (int q = 1; q <= total; ++q) {
    auto j = grid_unrank(q, r);
    Terms t;
    for (std::size_t i = 0; i < xs.size(); ++i) t.push_back(xs[i][j[i] - 1]);
    out.push_back(to_term(t));
  }
  return out;
}

namespace {

Terms seq(const Term& t) {
  if (!t.is_array()) throw Malformed("sequence expected: " + show(t));
  return to_terms(t);
}

FinMap map_of(const Term& f) {
  return FinMap(static_cast<int>(part(f, "src").size()), static_cast<int>(part(f, "tgt").size()),
                part(f, "map").get<std::vector<int>>());
}

}  // namespace

Term s_object(const std::vector<Terms>& xs) { return to_term(grid_profile(xs)); }

Term s_morphism(const GridTensor& T, const Terms& fs) {
  int n = T.factor_count();
  if (static_cast<int>(fs.size()) != n) throw DegreeMismatch("S: wrong number of morphisms");
  std::vector<Terms> src, tgt, phis;
  std::vector<FinMap> maps;
  std::vector<int> s;
  for (const auto& f : fs) {
    src.push_back(seq(part(f, "src")));
    tgt.push_back(seq(part(f, "tgt")));
    phis.push_back(seq(part(f, "ops")));
    maps.push_back(map_of(f));
    s.push_back(maps.back().codomain());
  }
  Terms ops;
  int total = grid_size(s);
  for (int q = 1; q <= total; ++q) {
    auto k = grid_unrank(q, s);
    Terms comps;
    for (int i = 0; i < n; ++i) comps.push_back(phis[i][k[i] - 1]);
    ops.push_back(T.make(comps));
  }
  return free_morphism(grid_profile(src), grid_profile(tgt), product_map(maps).images(), ops);
}

Term s_constraint(const GridTensor& T, int b, const std::vector<Terms>& xs, const Terms& xhat) {
  int n = T.factor_count();
  if (b < 1 || b > n) throw OutOfRange("S constraint: slot " + std::to_string(b));
  if (static_cast<int>(xs.size()) != n) throw DegreeMismatch("S constraint: wrong number of objects");
  auto hat = xs;
  hat[b - 1] = xhat;
  auto tilde = xs;
  tilde[b - 1] = pmc::concat(xs[b - 1], xhat);
  std::vector<int> r, rh, rt;
  for (int i = 0; i < n; ++i) {
    r.push_back(static_cast<int>(xs[i].size()));
    rh.push_back(static_cast<int>(hat[i].size()));
    rt.push_back(static_cast<int>(tilde[i].size()));
  }
  std::vector<int> map;
  for (int q = 1; q <= grid_size(r); ++q) map.push_back(grid_rank(grid_unrank(q, r), rt));
  for (int q = 1; q <= grid_size(rh); ++q) {
    auto j = grid_unrank(q, rh);
    j[b - 1] += r[b - 1];
    map.push_back(grid_rank(j, rt));
  }
  auto target = grid_profile(tilde);
  Terms ops;
  for (const auto& c : target) ops.push_back(T.unit(c));
  return free_morphism(pmc::concat(grid_profile(xs), grid_profile(hat)), target, map, ops);
}

NLinearFunctor s_functor(GridTensorPtr T, int max_len) {
  int n = T->factor_count();
  auto target = free_perm(T, max_len);
  if (n == 0) return nlinear_constant(target, Term::array());
  NLinearFunctor S;
  for (const auto& M : T->factors()) S.sources.push_back(free_perm(M, max_len));
  S.target = target;
  auto unpack = [](const Terms& X) {
    std::vector<Terms> xs;
    for (const auto& x : X) xs.push_back(seq(x));
    return xs;
  };
  S.on_objects = [unpack](const Terms& X) { return s_object(unpack(X)); };
  S.on_morphisms = [T](const Terms& fs) { return s_morphism(*T, fs); };
  S.constraint = [T, unpack](int b, const Terms& X, const Term& xp) { return s_constraint(*T, b, unpack(X), seq(xp)); };
  S.strong = true;
  S.strict = n == 1;
  return S;
}

Multifunctor tensor_multifunctor(const std::vector<Multifunctor>& Hs, int max_arity) {
  std::vector<MulticatPtr> src, tgt;
  for (const auto& H : Hs) {
    src.push_back(H.source);
    tgt.push_back(H.target);
  }
  auto S = grid_tensor(src, max_arity);
  auto T = grid_tensor(tgt, max_arity);
  return Multifunctor{S, T,
                      [Hs](const Term& x) {
                        Terms out;
                        for (std::size_t i = 0; i < Hs.size(); ++i) out.push_back(Hs[i].on_object(x.at(i)));
                        return to_term(out);
                      },
                      [Hs, S, T](const Term& op) {
                        auto fs = S->components(op);
                        for (std::size_t i = 0; i < Hs.size(); ++i) fs[i] = Hs[i].on_op(fs[i]);
                        return T->make(fs, S->twist(op));
                      }};
}

MultiNat tensor_multinat(const std::vector<MultiNat>& thetas, int max_arity) {
  std::vector<Multifunctor> from, to;
  for (const auto& t : thetas) {
    from.push_back(t.from);
    to.push_back(t.to);
  }
  auto F = tensor_multifunctor(from, max_arity);
  auto G = tensor_multifunctor(to, max_arity);
  auto T = std::dynamic_pointer_cast<const GridTensor>(F.target);
  return MultiNat{F, G, [thetas, T](const Term& c) {
                    Terms fs;
                    for (std::size_t i = 0; i < thetas.size(); ++i) fs.push_back(thetas[i].component(c.at(i)));
                    return T->make(fs);
                  }};
}

Multifunctor tensor_permute(GridTensorPtr T, const Permutation& s) {
  int n = T->factor_count();
  if (s.degree() != n) throw DegreeMismatch("tensor_permute: degree mismatch");
  std::vector<MulticatPtr> src;
  for (int j = 1; j <= n; ++j) src.push_back(T->factors()[s(j) - 1]);
  auto S = grid_tensor(src, T->max_arity());
  return Multifunctor{S, T, [s](const Term& x) { return to_term(sigma_place(s, to_terms(x))); },
                      [S, T, s, n](const Term& op) {
                        auto fs = S->components(op);
                        std::vector<int> a, at(n);
                        for (int j = 1; j <= n; ++j) {
                          a.push_back(S->factor(j).signature(fs[j - 1]).arity());
                          at[s(j) - 1] = a.back();
                        }
                        if (grid_size(a) == 0) return T->make(sigma_place(s, fs), Permutation());
                        std::vector<int> q;
                        for (int p = 1; p <= grid_size(a); ++p) {
                          auto h = grid_unrank(p, a);
                          std::vector<int> c(n);
                          for (int j = 1; j <= n; ++j) c[s(j) - 1] = h[j - 1];
                          q.push_back(grid_rank(c, at));
                        }
                        auto tw = S->twist(op);
                        return T->make(sigma_place(s, fs), perm_compose(Permutation(q), tw));
                      }};
}

Multifunctor tensor_collapse(GridTensorPtr T) {
  if (T->factor_count() != 1) throw DegreeMismatch("tensor_collapse needs exactly one factor");
  auto M = T->factors().front();
  return Multifunctor{T, M, [](const Term& x) { return x.at(0); },
                      [T, M](const Term& op) { return M->act(T->components(op).front(), T->twist(op)); }};
}

Multifunctor tensor_regroup(GridTensorPtr T, const std::vector<int>& sizes) {
  int n = T->factor_count();
  int sum = 0;
  for (int k : sizes) sum += k;
  if (sum != n) throw DegreeMismatch("tensor_regroup: group sizes do not add up to the factor count");
  std::vector<GridTensorPtr> groups;
  std::vector<MulticatPtr> outer;
  int at = 0;
  for (int k : sizes) {
    std::vector<MulticatPtr> fs(T->factors().begin() + at, T->factors().begin() + at + k);
    groups.push_back(grid_tensor(fs, T->max_arity()));
    outer.push_back(groups.back());
    at += k;
  }
  auto N = grid_tensor(outer, T->max_arity());
  auto split = [sizes](const Terms& v) {
    std::vector<Terms> out;
    int at = 0;
    for (int k : sizes) {
      out.emplace_back(v.begin() + at, v.begin() + at + k);
      at += k;
    }
    return out;
  };
  return Multifunctor{T, N,
                      [split](const Term& x) {
                        Terms out;
                        for (const auto& g : split(to_terms(x))) out.push_back(to_term(g));
                        return to_term(out);
                      },
                      [T, N, groups, split, n](const Term& op) {
                        auto fs = T->components(op);
                        std::vector<int> a;
                        for (int i = 0; i < n; ++i) a.push_back(T->factor(i + 1).signature(fs[i]).arity());
                        auto parts = split(fs);
                        Terms inner;
                        std::vector<int> ga;
                        std::vector<std::vector<int>> ar;
                        int at = 0;
                        for (std::size_t g = 0; g < parts.size(); ++g) {
                          inner.push_back(groups[g]->make(parts[g]));
                          ar.emplace_back(a.begin() + at, a.begin() + at + parts[g].size());
                          ga.push_back(grid_size(ar.back()));
                          at += static_cast<int>(parts[g].size());
                        }
                        if (grid_size(a) == 0) return N->make(inner, Permutation());
                        std::vector<int> q;
                        for (int p = 1; p <= grid_size(a); ++p) {
                          auto h = grid_unrank(p, a);
                          std::vector<int> c;
                          int at2 = 0;
                          for (const auto& r : ar) {
                            std::vector<int> hj(h.begin() + at2, h.begin() + at2 + r.size());
                            c.push_back(grid_rank(hj, r));
                            at2 += static_cast<int>(r.size());
                          }
                          q.push_back(grid_rank(c, ga));
                        }
                        return N->make(inner, perm_compose(Permutation(q), T->twist(op)));
                      }};
}

NLinearFunctor f_multi(const Multifunctor& H, int max_len) {
  auto T = std::dynamic_pointer_cast<const GridTensor>(H.source);
  if (!T) return nlinear_from_smf(free_on_multifunctor(H, max_len));
  return nlinear_postcompose(free_on_multifunctor(H, max_len), s_functor(T, max_len));
}

NLinearNat f_multi_nat(const MultiNat& theta, int max_len) {
  auto T = std::dynamic_pointer_cast<const GridTensor>(theta.from.source);
  auto Ft = free_on_multinat(theta, max_len);
  if (!T) return NLinearNat{nlinear_from_smf(Ft.from), nlinear_from_smf(Ft.to),
                            [Ft](const Terms& X) { return Ft.component(X.at(0)); }};
  return nlinear_whisker(Ft, s_functor(T, max_len));
}

}  // namespace pmc
