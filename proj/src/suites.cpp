#include "permmult/suites.hpp"

#include <random>

namespace pmc {

void for_each_product(const std::vector<Terms>& lists, const std::function<void(const Terms&)>& fn) {
  Terms cur(lists.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == lists.size()) return fn(cur);
    for (const auto& x : lists[i]) {
      cur[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
}

namespace {

// (f, g) with g∘f defined.
std::vector<std::pair<Term, Term>> composable(const Category& C) {
  std::vector<std::pair<Term, Term>> out;
  auto objs = C.objects();
  for (const auto& x : objs)
    for (const auto& y : objs)
      for (const auto& f : C.hom(x, y))
        for (const auto& z : objs)
          for (const auto& g : C.hom(y, z)) out.emplace_back(f, g);
  return out;
}

std::vector<Terms> morphism_lists(const std::vector<PermCatPtr>& cats) {
  std::vector<Terms> out;
  for (const auto& C : cats) out.push_back(all_morphisms(*C));
  return out;
}

std::vector<Terms> object_lists(const std::vector<PermCatPtr>& cats) {
  std::vector<Terms> out;
  for (const auto& C : cats) out.push_back(C->objects());
  return out;
}

}  // namespace

Report check_s_functor(GridTensorPtr T, int max_len) {
  auto S = s_functor(T, max_len);
  Report rep("S on " + T->name());
  const auto& D = *S.target;
  const int n = S.arity();

  for_each_product(object_lists(S.sources), [&](const Terms& X) {
    rep.guarded("identities", [&] {
      Terms ids;
      for (int i = 0; i < n; ++i) ids.push_back(S.sources[i]->identity(X[i]));
      auto got = S.on_morphisms(ids);
      check_free_morphism(*T, got);
      auto want = D.identity(S.on_objects(X));
      rep.expect("identities", got == want, [&] { return Term{{"objects", to_term(X)}, {"image", got}}; });
    });
  });

  std::vector<std::vector<std::pair<Term, Term>>> pairs;
  for (const auto& C : S.sources) pairs.push_back(composable(*C));
  std::vector<std::size_t> pos(n, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      Terms f, g, gf;
      for (int k = 0; k < n; ++k) {
        const auto& [fk, gk] = pairs[k][pos[k]];
        f.push_back(fk);
        g.push_back(gk);
        gf.push_back(S.sources[k]->compose(gk, fk));
      }
      rep.guarded("composition", [&] {
        auto lhs = S.on_morphisms(gf);
        auto rhs = D.compose(S.on_morphisms(g), S.on_morphisms(f));
        rep.expect("composition", lhs == rhs, [&] {
          return Term{{"f", to_term(f)}, {"g", to_term(g)}, {"S(gf)", lhs}, {"S(g)S(f)", rhs}};
        });
      });
      return;
    }
    for (pos[i] = 0; pos[i] < pairs[i].size(); ++pos[i]) rec(i + 1);
  };
  rec(0);

  rep.merge(validate_nlinear(S), "multilinear/");
  return rep;
}

Report check_s_naturality(const std::vector<MultiNat>& thetas, int max_len, int max_arity) {
  std::vector<MulticatPtr> Ms, Ns;
  for (const auto& t : thetas) {
    Ms.push_back(t.from.source);
    Ns.push_back(t.from.target);
  }
  auto S = s_functor(grid_tensor(Ms, max_arity), max_len);
  auto St = s_functor(grid_tensor(Ns, max_arity), max_len);
  Report rep("2-naturality of S");
  const int n = static_cast<int>(thetas.size());

  for (bool to_side : {false, true}) {
    std::vector<Multifunctor> Hs;
    for (const auto& t : thetas) Hs.push_back(to_side ? t.to : t.from);
    std::vector<SymMonFunctor> FH;
    for (const auto& H : Hs) FH.push_back(free_on_multifunctor(H, max_len));
    auto Ft = free_on_multifunctor(tensor_multifunctor(Hs, max_arity), max_len);
    auto image = [&](const Terms& X) {
      Terms out;
      for (int i = 0; i < n; ++i) out.push_back(FH[i].on_object(X[i]));
      return out;
    };

    for_each_product(object_lists(S.sources), [&](const Terms& X) {
      rep.guarded("objects", [&] {
        auto lhs = St.on_objects(image(X)), rhs = Ft.on_object(S.on_objects(X));
        rep.expect("objects", lhs == rhs, [&] { return Term{{"objects", to_term(X)}, {"lhs", lhs}, {"rhs", rhs}}; });
      });
      for (int b = 1; b <= n; ++b)
        for (const auto& xp : S.sources[b - 1]->objects())
          rep.guarded("constraints", [&] {
            auto lhs = St.constraint(b, image(X), FH[b - 1].on_object(xp));
            auto rhs = Ft.on_morphism(S.constraint(b, X, xp));
            rep.expect("constraints", lhs == rhs, [&] {
              return Term{{"objects", to_term(X)}, {"slot", b}, {"other", xp}, {"lhs", lhs}, {"rhs", rhs}};
            });
          });
    });

    for_each_product(morphism_lists(S.sources), [&](const Terms& fs) {
      rep.guarded("morphisms", [&] {
        Terms mapped;
        for (int i = 0; i < n; ++i) mapped.push_back(FH[i].on_morphism(fs[i]));
        auto lhs = St.on_morphisms(mapped), rhs = Ft.on_morphism(S.on_morphisms(fs));
        rep.expect("morphisms", lhs == rhs, [&] { return Term{{"morphisms", to_term(fs)}, {"lhs", lhs}, {"rhs", rhs}}; });
      });
    });
  }

  std::vector<MonoidalNat> Fth;
  for (const auto& t : thetas) Fth.push_back(free_on_multinat(t, max_len));
  auto Ftt = free_on_multinat(tensor_multinat(thetas, max_arity), max_len);
  for_each_product(object_lists(S.sources), [&](const Terms& X) {
    rep.guarded("transformations", [&] {
      Terms cs;
      for (int i = 0; i < n; ++i) cs.push_back(Fth[i].component(X[i]));
      auto lhs = St.on_morphisms(cs), rhs = Ftt.component(S.on_objects(X));
      rep.expect("transformations", lhs == rhs,
                 [&] { return Term{{"objects", to_term(X)}, {"lhs", lhs}, {"rhs", rhs}}; });
    });
  });
  return rep;
}

Report check_f_symmetry(GridTensorPtr T, int max_len) {
  if (T->factor_count() != 2) throw Malformed("check_f_symmetry wants a two-factor tensor");
  Permutation s({2, 1});
  auto lhs = f_multi(tensor_permute(T, s), max_len);
  auto rhs = nlinear_sigma_act(f_multi(identity_multifunctor(T), max_len), s);
  const auto& D = *lhs.target;
  Report rep("F and the factor swap on " + T->name());
  // rhs lists the grid second-variable-fastest
  auto xi = [](const Terms& Z) {
    return xi_tensor(static_cast<int>(Z[1].size()), static_cast<int>(Z[0].size())).inverse();
  };
  auto R = [&](const Terms& Z) {
    Terms singles;
    for (const auto& c : rhs.on_objects(Z)) singles.push_back(Term::array({c}));
    return perm_to_morphism(D, xi(Z), singles);
  };
  auto flat = [](const Terms& Z) { return Z[0].size() <= 1 || Z[1].size() <= 1; };

  for_each_product(object_lists(lhs.sources), [&](const Terms& X) {
    rep.guarded("objects", [&] {
      auto a = to_terms(lhs.on_objects(X)), b = to_terms(rhs.on_objects(X));
      rep.expect("objects", perm_act(xi(X), b) == a && (!flat(X) || a == b),
                 [&] { return Term{{"objects", to_term(X)}, {"lhs", to_term(a)}, {"rhs", to_term(b)}}; });
    });
  });
  for_each_product(morphism_lists(lhs.sources), [&](const Terms& fs) {
    rep.guarded("morphisms", [&] {
      Terms X{lhs.sources[0]->source(fs[0]), lhs.sources[1]->source(fs[1])};
      Terms Y{lhs.sources[0]->target(fs[0]), lhs.sources[1]->target(fs[1])};
      auto l = lhs.on_morphisms(fs), r = rhs.on_morphisms(fs);
      bool ok = chain(D, {l, R(X)}) == chain(D, {R(Y), r});
      if (flat(X) && flat(Y)) ok = ok && l == r;
      rep.expect("morphisms", ok, [&] { return Term{{"morphisms", to_term(fs)}, {"lhs", l}, {"rhs", r}}; });
    });
  });
  return rep;
}

Report check_f_unit(MulticatPtr M, int max_len) {
  auto Fid = f_multi(identity_multifunctor(M), max_len);
  auto Fc = f_multi(tensor_collapse(grid_tensor({M}, M->max_arity())), max_len);
  auto F = free_perm(M, max_len);
  Report rep("F on units over " + M->name());
  for (const auto& f : all_morphisms(*F)) {
    rep.guarded("identity", [&] {
      auto g = Fid.on_morphisms({f});
      rep.expect("identity", g == f, [&] { return Term{{"morphism", f}, {"image", g}}; });
    });
    rep.guarded("collapse", [&] {
      auto g = Fc.on_morphisms({f});
      rep.expect("collapse", g == f, [&] { return Term{{"morphism", f}, {"image", g}}; });
    });
  }
  for (const auto& x : F->objects())
    for (const auto& y : F->objects())
      rep.guarded("collapse-constraint", [&] {
        auto c = Fc.constraint(1, {x}, y);
        rep.expect("collapse-constraint", c == F->identity(F->sum_obj(x, y)),
                   [&] { return Term{{"objects", Term::array({x, y})}, {"constraint", c}}; });
      });
  return rep;
}

Report check_f_composition(const Multifunctor& outer, const std::vector<Multifunctor>& inner, std::size_t samples,
                           unsigned seed, int max_len, int max_arity) {
  std::vector<MulticatPtr> flat_factors;
  std::vector<int> sizes;
  for (const auto& H : inner) {
    auto G = std::dynamic_pointer_cast<const GridTensor>(H.source);
    if (!G) throw Malformed("inner multifunctors must start at a tensor");
    sizes.push_back(G->factor_count());
    for (const auto& M : G->factors()) flat_factors.push_back(M);
  }
  auto flat = grid_tensor(flat_factors, max_arity);
  auto composite =
      compose_multifunctors(outer, compose_multifunctors(tensor_multifunctor(inner, max_arity), tensor_regroup(flat, sizes)));
  composite.source = flat;
  auto lhs = f_multi(composite, max_len);
  std::vector<NLinearFunctor> Fin;
  for (const auto& H : inner) Fin.push_back(f_multi(H, max_len));
  auto rhs = nlinear_gamma(f_multi(outer, max_len), Fin);
  Report rep("F on a composite of multifunctors");
  if (lhs.arity() != rhs.arity()) throw DegreeMismatch("composite arities differ");
  const int n = lhs.arity();

  for_each_product(object_lists(lhs.sources), [&](const Terms& X) {
    rep.guarded("objects", [&] {
      auto a = lhs.on_objects(X), b = rhs.on_objects(X);
      rep.expect("objects", a == b, [&] { return Term{{"objects", to_term(X)}, {"lhs", a}, {"rhs", b}}; });
    });
    for (int j = 1; j <= n; ++j)
      for (const auto& xp : lhs.sources[j - 1]->objects())
        rep.guarded("constraints", [&] {
          auto a = lhs.constraint(j, X, xp), b = rhs.constraint(j, X, xp);
          rep.expect("constraints", a == b, [&] {
            return Term{{"objects", to_term(X)}, {"slot", j}, {"other", xp}, {"lhs", a}, {"rhs", b}};
          });
        });
  });

  auto mors = morphism_lists(lhs.sources);
  std::mt19937 rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    Terms fs;
    for (const auto& m : mors) fs.push_back(m[rng() % m.size()]);
    rep.guarded("morphisms", [&] {
      auto a = lhs.on_morphisms(fs), b = rhs.on_morphisms(fs);
      rep.expect("morphisms", a == b, [&] { return Term{{"morphisms", to_term(fs)}, {"lhs", a}, {"rhs", b}}; });
    });
  }
  rep.note("sampled_morphism_tuples", samples);
  return rep;
}

}  // namespace pmc
