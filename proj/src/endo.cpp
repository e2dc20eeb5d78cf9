#include "permmult/endo.hpp"

#include <algorithm>

namespace pmc {

namespace {

const Term& part(const Term& op, const char* key) {
  if (!op.is_object() || !op.contains(key))
    throw Malformed("endomorphism operation lacks \"" + std::string(key) + "\": " + show(op));
  return op.at(key);
}

Terms inputs_of(const Term& op) {
  const auto& in = part(op, "in");
  if (!in.is_array()) throw Malformed("operation inputs must be an array: " + show(op));
  return to_terms(in);
}

}  // namespace

Term endo_op(const Terms& in, const Term& out, const Term& mor) {
  return Term{{"in", to_term(in)}, {"out", out}, {"mor", mor}};
}

EndView::EndView(PermCatPtr C, int max_arity) : C_(std::move(C)), A_(max_arity) {}

OpSig EndView::signature(const Term& op) const {
  auto in = inputs_of(op);
  const auto& out = part(op, "out");
  const auto& mor = part(op, "mor");
  auto src = C_->sum_objs(in);
  if (C_->source(mor) != src || C_->target(mor) != out)
    throw Malformed("operation " + show(op) + " is not typed " + show(src) + " -> " + show(out));
  return OpSig{in, out};
}

Terms EndView::ops(const Terms& inputs, const Term& output) const {
  if (static_cast<int>(inputs.size()) > A_) return {};
  Terms out;
  for (const auto& m : C_->hom(C_->sum_objs(inputs), output)) out.push_back(endo_op(inputs, output, m));
  std::sort(out.begin(), out.end());
  return out;
}

Term EndView::unit(const Term& c) const { return endo_op({c}, c, C_->identity(c)); }

Term EndView::gamma(const Term& outer, const Terms& inners) const {
  auto sig = signature(outer);
  if (sig.arity() != static_cast<int>(inners.size()))
    throw DegreeMismatch("gamma: " + std::to_string(inners.size()) + " inner operations for arity " +
                         std::to_string(sig.arity()));
  Terms in, mors;
  for (std::size_t j = 0; j < inners.size(); ++j) {
    auto s = signature(inners[j]);
    if (s.output != sig.inputs[j])
      throw Malformed("gamma: inner output " + show(s.output) + " does not match input " + show(sig.inputs[j]));
    in.insert(in.end(), s.inputs.begin(), s.inputs.end());
    mors.push_back(inners[j].at("mor"));
  }
  if (static_cast<int>(in.size()) > A_)
    throw BoundExceeded("composite arity " + std::to_string(in.size()) + " exceeds " + std::to_string(A_));
  return endo_op(in, sig.output, chain(*C_, {outer.at("mor"), C_->sum_mors(mors)}));
}

Term EndView::act(const Term& op, const Permutation& s) const {
  auto sig = signature(op);
  auto in = perm_act(s, sig.inputs);
  return endo_op(in, sig.output, C_->compose(op.at("mor"), perm_to_morphism(*C_, s.inverse(), in)));
}

std::shared_ptr<EndView> endo_multicat(PermCatPtr C, int max_arity) {
  return std::make_shared<EndView>(std::move(C), max_arity);
}

Multifunctor endo_basepoint(std::shared_ptr<EndView> E) {
  auto Mt = terminal_multicat(E->max_arity());
  auto e = E->category().unit_object();
  return Multifunctor{Mt, E, [e](const Term&) { return e; }, [Mt, E, e](const Term& op) {
                        int n = Mt->signature(op).arity();
                        return endo_op(Terms(n, e), e, E->category().identity(e));
                      }};
}

Term iterated_constraint(const SymMonFunctor& P, const Terms& xs) {
  const auto& C = *P.source;
  const auto& D = *P.target;
  if (xs.empty()) return P.unit_constraint();
  Term acc = D.identity(P.on_object(xs[0]));
  Term prefix = xs[0];
  for (std::size_t k = 1; k < xs.size(); ++k) {
    acc = chain(D, {P.constraint(prefix, xs[k]), D.sum_mor(acc, D.identity(P.on_object(xs[k])))});
    prefix = C.sum_obj(prefix, xs[k]);
  }
  return acc;
}

Multifunctor endo_on_functor(const SymMonFunctor& P, int max_arity) {
  if (!P.strictly_unital) throw Malformed("E on functors needs a strictly unital functor");
  auto u = P.unit_constraint();
  if (u != P.target->identity(P.target->unit_object()))
    throw Malformed("declared strictly unital but the unit constraint is " + show(u));
  auto src = endo_multicat(P.source, max_arity);
  auto tgt = endo_multicat(P.target, max_arity);
  return Multifunctor{src, tgt, P.on_object, [P, src](const Term& mu) {
                        auto sig = src->signature(mu);
                        Terms in;
                        for (const auto& x : sig.inputs) in.push_back(P.on_object(x));
                        auto mor = chain(*P.target, {P.on_morphism(mu.at("mor")), iterated_constraint(P, sig.inputs)});
                        return endo_op(in, P.on_object(sig.output), mor);
                      }};
}

MultiNat endo_on_nat(const MonoidalNat& theta, int max_arity) {
  auto from = endo_on_functor(theta.from, max_arity);
  auto to = endo_on_functor(theta.to, max_arity);
  return MultiNat{from, to, [theta](const Term& x) {
                    return endo_op({theta.from.on_object(x)}, theta.to.on_object(x), theta.component(x));
                  }};
}

Term endo_action(const NLinearFunctor& P, const Terms& mus, const std::vector<int>& factor_order) {
  int n = P.arity();
  if (static_cast<int>(mus.size()) != n)
    throw DegreeMismatch("endo_action: " + std::to_string(mus.size()) + " operations for a " + std::to_string(n) +
                         "-linear functor");
  const auto& D = *P.target;
  std::vector<Terms> xs(n);
  std::vector<int> r(n);
  Terms ys, mors, X;
  for (int i = 0; i < n; ++i) {
    xs[i] = inputs_of(mus[i]);
    r[i] = static_cast<int>(xs[i].size());
    ys.push_back(part(mus[i], "out"));
    mors.push_back(part(mus[i], "mor"));
    X.push_back(P.sources[i]->sum_objs(xs[i]));
  }
  std::vector<int> order = factor_order;
  if (order.empty())
    for (int i = 1; i <= n; ++i) order.push_back(i);
  Permutation check(order);  // validates the factor order
  if (check.degree() != n) throw DegreeMismatch("endo_action: factor order of the wrong length");

  // cell tuple at grid index j: collapsed factors carry X_i
  auto tuple_at = [&](const std::vector<int>& j, const std::vector<bool>& done) {
    Terms t;
    for (int i = 0; i < n; ++i) t.push_back(done[i] ? X[i] : xs[i][j[i] - 1]);
    return t;
  };
  // layout over the factors in rem, rem[0] fastest
  auto layout = [&](const std::vector<int>& rem) {
    std::vector<std::vector<int>> cells;
    std::vector<int> radii;
    for (int i : rem) radii.push_back(r[i - 1]);
    int total = grid_size(radii);
    for (int q = 1; q <= total; ++q) {
      auto local = grid_unrank(q, radii);
      std::vector<int> j(n, 1);
      for (std::size_t k = 0; k < rem.size(); ++k) j[rem[k] - 1] = local[k];
      cells.push_back(j);
    }
    return cells;
  };

  std::vector<bool> done(n, false);
  std::vector<int> natural;
  for (int i = 1; i <= n; ++i) natural.push_back(i);
  Terms grid_objs;
  for (const auto& j : layout(natural)) grid_objs.push_back(P.on_objects(tuple_at(j, done)));

  // reorder from the natural grid to the collapse layout
  auto cells = layout(order);
  std::vector<int> pi;
  for (const auto& j : cells) pi.push_back(grid_rank(j, r));
  Term acc = perm_to_morphism(D, Permutation(pi), grid_objs);

  std::vector<int> rem = order;
  while (!rem.empty()) {
    int i = rem.front();
    int m = r[i - 1];
    const auto& Ci = *P.sources[i - 1];
    rem.erase(rem.begin());
    auto next = layout(rem);
    Terms blocks;
    for (const auto& j : next) {
      if (m == 0) {
        blocks.push_back(D.identity(D.unit_object()));
        continue;
      }
      auto base = tuple_at(j, done);  // slot i is overwritten below
      auto at = [&](const Term& v) {
        auto t = base;
        t[i - 1] = v;
        return t;
      };
      Term block = D.identity(P.on_objects(at(xs[i - 1][0])));
      Term prefix = xs[i - 1][0];
      for (int k = 1; k < m; ++k) {
        const auto& z = xs[i - 1][k];
        block = chain(D, {P.constraint(i, at(prefix), z), D.sum_mor(block, D.identity(P.on_objects(at(z))))});
        prefix = Ci.sum_obj(prefix, z);
      }
      blocks.push_back(block);
    }
    done[i - 1] = true;
    acc = chain(D, {D.sum_mors(blocks), acc});
  }
  auto mor = chain(D, {P.on_morphisms(mors), acc});
  return endo_op(grid_objs, P.on_objects(ys), mor);
}

}  // namespace pmc
