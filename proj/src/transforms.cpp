#include "permmult/transforms.hpp"

#include <algorithm>

namespace pmc {

namespace {

Terms singletons(const Terms& xs) {
  Terms out;
  for (const auto& x : xs) out.push_back(Term::array({x}));
  return out;
}

int ipow(int b, int n) {
  int r = 1;
  while (n-- > 0) r *= b;
  return r;
}

// Odometer over one list per coordinate.
void for_each_tuple(const std::vector<Terms>& lists, const std::function<bool(const Terms&)>& fn) {
  for (const auto& l : lists)
    if (l.empty()) return;
  std::vector<std::size_t> k(lists.size(), 0);
  while (true) {
    Terms t;
    for (std::size_t i = 0; i < lists.size(); ++i) t.push_back(lists[i][k[i]]);
    if (!fn(t)) return;
    std::size_t i = 0;
    for (; i < lists.size(); ++i) {
      if (++k[i] < lists[i].size()) break;
      k[i] = 0;
    }
    if (i == lists.size()) return;
  }
}

}  // namespace

Term eta_op(const Multicat& M, const Term& op) {
  auto sig = M.signature(op);
  std::vector<int> iota(sig.inputs.size(), 1);
  auto mor = free_morphism(sig.inputs, {sig.output}, iota, {op});
  return endo_op(singletons(sig.inputs), Term::array({sig.output}), mor);
}

Multifunctor eta(MulticatPtr M, int max_len, int max_arity) {
  auto E = endo_multicat(free_perm(M, max_len), max_arity);
  return Multifunctor{M, E, [](const Term& w) { return Term::array({w}); },
                      [M](const Term& op) { return eta_op(*M, op); }};
}

Report check_eta_multinat(const Multifunctor& H, int bound, int max_len, const EtaOp& eta_on_op) {
  Report rep("eta multinaturality");
  auto T = std::dynamic_pointer_cast<const GridTensor>(H.source);
  auto FH = f_multi(H, max_len);
  std::vector<MulticatPtr> Ms;
  if (T)
    Ms = T->factors();
  else
    Ms = {H.source};
  int n = static_cast<int>(Ms.size());
  auto EFN = endo_multicat(FH.target, std::max(bound, 1));

  for (const auto& x : H.source->objects())
    rep.guarded("objects", [&] {
      Terms X;
      for (int a = 0; a < n; ++a) X.push_back(Term::array({T ? x.at(a) : x}));
      auto l = Term::array({H.on_object(x)});
      auto r = FH.on_objects(X);
      rep.expect("objects", l == r, [&] { return Term{{"object", x}, {"lhs", l}, {"rhs", r}}; });
    });

  auto idx = index_ops(*H.source, bound);
  for (const auto& [op, sig] : idx.all)
    rep.guarded("operations", [&] {
      Terms comps = T ? T->components(op) : Terms{op};
      Permutation tw = T ? T->twist(op) : Permutation::identity(sig.arity());
      Terms mus;
      for (int a = 0; a < n; ++a) mus.push_back(eta_on_op(*Ms[a], comps[a]));
      auto r = endo_action(FH, mus);
      if (!tw.is_identity()) r = EFN->act(r, tw);
      auto l = eta_op(*H.target, H.on_op(op));
      rep.expect("operations", l == r, [&] { return Term{{"op", op}, {"lhs", l}, {"rhs", r}}; });
    });
  return rep;
}

SymMonFunctor rho(PermCatPtr C, int max_len, int max_arity) {
  auto FE = free_perm(endo_multicat(C, max_arity), max_len);
  SymMonFunctor R;
  R.source = C;
  R.target = FE;
  R.on_object = [](const Term& x) { return Term::array({x}); };
  R.on_morphism = [C](const Term& f) {
    auto x = C->source(f), y = C->target(f);
    return free_morphism({x}, {y}, {1}, {endo_op({x}, y, f)});
  };
  R.constraint = [C](const Term& x, const Term& y) {
    auto s = C->sum_obj(x, y);
    return free_morphism({x, y}, {s}, {1, 1}, {endo_op({x, y}, s, C->identity(s))});
  };
  R.unit_constraint = [C] {
    auto e = C->unit_object();
    return free_morphism({}, {e}, {}, {endo_op({}, e, C->identity(e))});
  };
  return R;
}

Permutation xi_permutation(const FinMap& f, XiVariant v) {
  auto sigma = sigma_kgf(f, FinMap::terminal(f.codomain()), 1);
  switch (v) {
    case XiVariant::fibre:
      return sigma.inverse();
    case XiVariant::inverse:
      return sigma;
    case XiVariant::reversed: {
      std::vector<int> img;
      for (int j = 1; j <= f.codomain(); ++j) {
        auto fib = f.preimage(j);
        img.insert(img.end(), fib.rbegin(), fib.rend());
      }
      return Permutation(img);
    }
  }
  throw Malformed("xi_permutation: unknown variant");
}

SymMonFunctor epsilon(PermCatPtr C, int max_len, int max_arity, XiVariant v) {
  SymMonFunctor P;
  P.source = free_perm(endo_multicat(C, max_arity), max_len);
  P.target = C;
  P.on_object = [C](const Term& x) { return C->sum_objs(to_terms(x)); };
  P.on_morphism = [C, v](const Term& m) {
    auto src = to_terms(m.at("src"));
    auto ops = to_terms(m.at("ops"));
    std::vector<int> map = m.at("map").get<std::vector<int>>();
    FinMap f(static_cast<int>(map.size()), static_cast<int>(ops.size()), map);
    Terms mors;
    for (const auto& op : ops) mors.push_back(op.at("mor"));
    return C->compose(C->sum_mors(mors), perm_to_morphism(*C, xi_permutation(f, v), src));
  };
  P.constraint = [C](const Term& x, const Term& y) {
    return C->identity(C->sum_obj(C->sum_objs(to_terms(x)), C->sum_objs(to_terms(y))));
  };
  P.unit_constraint = [C] { return C->identity(C->unit_object()); };
  P.strict = P.strictly_unital = P.strong = true;
  return P;
}

Report check_triangles(MulticatPtr M, PermCatPtr C, int max_len, int max_arity, XiVariant v) {
  Report rep("triangle identities");

  // ε_{F(M)} ∘ F̄η_M on F(M)
  auto FM = free_perm(M, max_len);
  auto Feta = free_on_multifunctor(eta(M, max_len, max_arity), max_len);
  auto epsF = epsilon(FM, max_len, max_arity, v);
  for (const auto& x : FM->objects())
    rep.guarded("free-side", [&] {
      auto y = epsF.on_object(Feta.on_object(x));
      rep.expect("free-side", y == x, [&] { return Term{{"object", x}, {"image", y}}; });
    });
  for (const auto& f : all_morphisms(*FM))
    rep.guarded("free-side", [&] {
      auto g = epsF.on_morphism(Feta.on_morphism(f));
      rep.expect("free-side", g == f, [&] { return Term{{"morphism", f}, {"image", g}}; });
    });

  // E(ε_C) ∘ η_{E(C)} on E(C)
  auto EC = endo_multicat(C, max_arity);
  auto epsC = epsilon(C, max_arity, max_arity, v);
  auto Eeps = endo_on_functor(epsC, max_arity);
  for (const auto& p : profiles_upto(EC->objects(), max_arity))
    for (const auto& y : EC->objects())
      for (const auto& mu : EC->ops(p, y))
        rep.guarded("endo-side", [&] {
          auto r = Eeps.on_op(eta_op(*EC, mu));
          rep.expect("endo-side", r == mu, [&] { return Term{{"op", mu}, {"image", r}}; });
        });

  // ε_C ∘ ρ_C on C
  auto R = rho(C, max_len, max_arity);
  for (const auto& x : C->objects())
    rep.guarded("counit-after-rho", [&] {
      auto y = epsC.on_object(R.on_object(x));
      rep.expect("counit-after-rho", y == x, [&] { return Term{{"object", x}, {"image", y}}; });
    });
  for (const auto& f : all_morphisms(*C))
    rep.guarded("counit-after-rho", [&] {
      auto g = epsC.on_morphism(R.on_morphism(f));
      rep.expect("counit-after-rho", g == f, [&] { return Term{{"morphism", f}, {"image", g}}; });
    });
  return rep;
}

Multifunctor endo_on_nlinear(const NLinearFunctor& P, int max_arity) {
  int n = P.arity();
  if (n == 0) throw Unsupported("E on a 0-linear functor");
  std::vector<MulticatPtr> Es;
  for (const auto& C : P.sources) Es.push_back(endo_multicat(C, max_arity));
  int big = ipow(max_arity, n);
  auto T = grid_tensor(Es, big);
  auto ED = endo_multicat(P.target, big);
  return Multifunctor{T, ED, [P](const Term& x) { return P.on_objects(to_terms(x)); },
                      [P, T, ED](const Term& op) {
                        auto r = endo_action(P, T->components(op));
                        auto tw = T->twist(op);
                        return tw.is_identity() ? r : ED->act(r, tw);
                      }};
}

namespace {

struct SquareHit {
  Terms input;
  Term lhs, rhs;
};

// Runs the counit square over all morphism tuples; fn returns false to stop.
void counit_square(const NLinearFunctor& P, int max_len, int max_arity, Report& rep,
                   const std::function<bool(const SquareHit&, bool)>& fn) {
  int n = P.arity();
  auto H = endo_on_nlinear(P, max_arity);
  auto FEP = f_multi(H, max_len);
  std::vector<SymMonFunctor> eps;
  for (const auto& C : P.sources) eps.push_back(epsilon(C, max_len, max_arity));
  auto epsD = epsilon(P.target, max_len, ipow(max_arity, n));

  std::vector<Terms> objs, mors;
  for (const auto& S : FEP.sources) {
    objs.push_back(S->objects());
    mors.push_back(all_morphisms(*S));
  }
  bool go = true;
  for_each_tuple(objs, [&](const Terms& X) {
    rep.guarded("objects", [&] {
      Terms ex;
      for (int a = 0; a < n; ++a) ex.push_back(eps[a].on_object(X[a]));
      SquareHit h{X, P.on_objects(ex), epsD.on_object(FEP.on_objects(X))};
      bool ok = h.lhs == h.rhs;
      rep.expect("objects", ok, [&] { return Term{{"input", to_term(X)}, {"lhs", h.lhs}, {"rhs", h.rhs}}; });
      go = fn(h, ok);
    });
    return go;
  });
  if (!go) return;
  for_each_tuple(mors, [&](const Terms& fs) {
    rep.guarded("morphisms", [&] {
      Terms ef;
      for (int a = 0; a < n; ++a) ef.push_back(eps[a].on_morphism(fs[a]));
      SquareHit h{fs, P.on_morphisms(ef), epsD.on_morphism(FEP.on_morphisms(fs))};
      bool ok = h.lhs == h.rhs;
      rep.expect("morphisms", ok, [&] { return Term{{"input", to_term(fs)}, {"lhs", h.lhs}, {"rhs", h.rhs}}; });
      go = fn(h, ok);
    });
    return go;
  });
}

}  // namespace

Report check_epsilon_multinat(const NLinearFunctor& P, int max_len, int max_arity, bool stop_early) {
  Report rep("counit square");
  counit_square(P, max_len, max_arity, rep, [&](const SquareHit&, bool ok) { return ok || !stop_early; });
  return rep;
}

EpsilonWitness epsilon_counterexample() {
  auto I = initial_operad(4);
  auto T = grid_tensor({I, I}, 4);
  EpsilonWitness w;
  w.functor = s_functor(T, 2);
  const auto& P = w.functor;
  const auto& D = *P.target;

  for (const auto& X : object_tuples(P.sources)) {
    for (int j = 1; j <= P.arity() && w.nonidentity_constraint.is_null(); ++j)
      for (const auto& xp : P.sources[j - 1]->objects()) {
        auto c = P.constraint(j, X, xp);
        if (D.identity(D.source(c)) != c) {
          w.nonidentity_constraint = Term{{"slot", j}, {"objects", to_term(X)}, {"other", xp}, {"constraint", c}};
          break;
        }
      }
    if (!w.nonidentity_constraint.is_null()) break;
  }
  if (w.nonidentity_constraint.is_null()) throw Malformed("epsilon_counterexample: every constraint is an identity");

  Report rep("counit square");
  bool found = false;
  counit_square(P, 2, 2, rep, [&](const SquareHit& h, bool ok) {
    if (ok) return true;
    w.input = h.input;
    w.via_counit = h.lhs;
    w.via_free = h.rhs;
    found = true;
    return false;
  });
  if (!found) throw Malformed("epsilon_counterexample: the square commuted on the whole window");
  return w;
}

MarkedPermCat mark_category(PermCatPtr C) {
  auto base = materialize_permcat(*C);
  MarkedPermCat m;
  m.base = C;
  m.zero = Term("•");
  m.zero_identity = Term("1@•");
  Terms objs = base->objects();
  if (std::find(objs.begin(), objs.end(), m.zero) != objs.end())
    throw Malformed("mark_category: " + show(m.zero) + " is already an object");
  auto e = base->unit_object();
  m.t = tuple_of("t", base->identity(e));
  objs.insert(objs.begin(), m.zero);
  auto D = std::make_shared<TablePermCat>(base->name() + "•", objs, m.zero);

  for (const auto& [f, st] : base->morphisms()) D->add_morphism(f, st.first, st.second);
  for (const auto& [x, f] : base->identities()) D->set_identity(x, f);
  for (const auto& [k, v] : base->compose_table()) D->set_compose(k[0], k[1], v);
  for (const auto& [k, v] : base->sum_obj_table()) D->set_sum_obj(k[0], k[1], v);
  for (const auto& [k, v] : base->sum_mor_table()) D->set_sum_mor(k[0], k[1], v);
  for (const auto& [k, v] : base->symmetry_table()) D->set_symmetry(k[0], k[1], v);

  const auto& z = m.zero;
  const auto& z1 = m.zero_identity;
  D->add_morphism(z1, z, z);
  D->set_identity(z, z1);
  D->set_compose(z1, z1, z1);
  D->set_sum_obj(z, z, z);
  D->set_sum_mor(z1, z1, z1);
  D->set_symmetry(z, z, z1);

  Terms base_objs = base->objects();
  Terms base_mors = all_morphisms(*base);
  auto tag = [](const Term& f) { return tuple_of("t", f); };
  Terms marked;
  for (const auto& x : base_objs)
    for (const auto& f : base->hom(e, x)) {
      D->add_morphism(tag(f), z, x);
      D->set_compose(tag(f), z1, tag(f));
      marked.push_back(f);
    }
  for (const auto& x : base_objs) {
    D->set_sum_obj(z, x, x);
    D->set_sum_obj(x, z, x);
    D->set_symmetry(z, x, base->identity(x));
    D->set_symmetry(x, z, base->identity(x));
  }
  for (const auto& f : marked) {
    for (const auto& g : base_mors)
      if (base->source(g) == base->target(f)) D->set_compose(g, tag(f), tag(base->compose(g, f)));
    D->set_sum_mor(z1, tag(f), tag(f));
    D->set_sum_mor(tag(f), z1, tag(f));
    for (const auto& g : marked) D->set_sum_mor(tag(f), tag(g), tag(base->sum_mor(f, g)));
    for (const auto& h : base_mors) {
      D->set_sum_mor(tag(f), h, base->sum_mor(f, h));
      D->set_sum_mor(h, tag(f), base->sum_mor(h, f));
    }
  }
  for (const auto& h : base_mors) {
    D->set_sum_mor(z1, h, h);
    D->set_sum_mor(h, z1, h);
  }
  m.cat = D;

  SymMonFunctor col;
  col.source = D;
  col.target = C;
  col.on_object = [z, e](const Term& x) { return x == z ? e : x; };
  col.on_morphism = [D, z, z1, C, e](const Term& f) {
    if (f == z1) return C->identity(e);
    if (D->source(f) == z) return f.at(1);
    return f;
  };
  col.constraint = [C, col](const Term& x, const Term& y) {
    return C->identity(C->sum_obj(col.on_object(x), col.on_object(y)));
  };
  col.unit_constraint = [C, e] { return C->identity(e); };
  col.strict = col.strictly_unital = col.strong = true;
  m.collapse = col;

  SymMonFunctor inc;
  inc.source = C;
  inc.target = D;
  inc.on_object = [](const Term& x) { return x; };
  inc.on_morphism = [](const Term& f) { return f; };
  inc.constraint = [D](const Term& x, const Term& y) { return D->identity(D->sum_obj(x, y)); };
  inc.unit_constraint = [t = m.t] { return t; };
  m.inclusion = inc;
  return m;
}

SymMonFunctor mark_functor(const MarkedPermCat& Cm, const SymMonFunctor& P) {
  auto Dt = P.target;
  auto z = Cm.zero, z1 = Cm.zero_identity;
  auto cat = Cm.cat;
  SymMonFunctor Q;
  Q.source = cat;
  Q.target = Dt;
  Q.on_object = [P, z, Dt](const Term& x) { return x == z ? Dt->unit_object() : P.on_object(x); };
  Q.on_morphism = [P, z, z1, cat, Dt](const Term& f) {
    if (f == z1) return Dt->identity(Dt->unit_object());
    if (cat->source(f) == z) return chain(*Dt, {P.on_morphism(f.at(1)), P.unit_constraint()});
    return P.on_morphism(f);
  };
  Q.constraint = [P, z, Dt, Q](const Term& x, const Term& y) {
    if (x == z || y == z) return Dt->identity(Dt->sum_obj(Q.on_object(x), Q.on_object(y)));
    return P.constraint(x, y);
  };
  Q.unit_constraint = [Dt] { return Dt->identity(Dt->unit_object()); };
  Q.strict = P.strict;
  Q.strictly_unital = true;
  Q.strong = P.strong;
  return Q;
}

SymMonFunctor rho_mark(const MarkedPermCat& Cm, int max_len, int max_arity) {
  return mark_functor(Cm, rho(Cm.base, max_len, max_arity));
}

Report check_rho_mark_square(const SymMonFunctor& P, int max_len, int max_arity) {
  Report rep("marked rho square");
  if (!P.strictly_unital) throw Malformed("check_rho_mark_square: P must be strictly unital");
  auto Cm = mark_category(P.source);
  auto Dm = mark_category(P.target);
  auto rC = rho_mark(Cm, max_len, max_arity);
  auto rD = rho_mark(Dm, max_len, max_arity);
  auto FEP = free_on_multifunctor(endo_on_functor(P, max_arity), max_len);

  // P• : C• → D•, 0 ↦ 0, t ↦ t
  auto lift_obj = [&](const Term& x) { return x == Cm.zero ? Dm.zero : P.on_object(x); };
  auto lift_mor = [&](const Term& f) {
    if (f == Cm.zero_identity) return Dm.zero_identity;
    if (Cm.cat->source(f) == Cm.zero) return tuple_of("t", P.on_morphism(f.at(1)));
    return P.on_morphism(f);
  };

  for (const auto& x : Cm.cat->objects())
    rep.guarded("objects", [&] {
      auto l = FEP.on_object(rC.on_object(x)), r = rD.on_object(lift_obj(x));
      rep.expect("objects", l == r, [&] { return Term{{"object", x}, {"lhs", l}, {"rhs", r}}; });
    });
  for (const auto& f : all_morphisms(*Cm.cat)) {
    rep.guarded("morphisms", [&] {
      auto l = FEP.on_morphism(rC.on_morphism(f)), r = rD.on_morphism(lift_mor(f));
      rep.expect("morphisms", l == r, [&] { return Term{{"morphism", f}, {"lhs", l}, {"rhs", r}}; });
    });
    rep.guarded("collapse", [&] {
      auto l = Dm.collapse.on_morphism(lift_mor(f)), r = P.on_morphism(Cm.collapse.on_morphism(f));
      rep.expect("collapse", l == r, [&] { return Term{{"morphism", f}, {"lhs", l}, {"rhs", r}}; });
    });
  }
  return rep;
}

}  // namespace pmc
