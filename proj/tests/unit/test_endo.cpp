#include <doctest.h>

#include "fixtures.hpp"
#include "permmult/endo.hpp"
#include "permmult/freeperm.hpp"

using namespace pmc;
using namespace pmc::fixtures;

namespace {

std::uint64_t violations(const Report& r, const std::string& axiom) {
  const auto* a = r.find(axiom);
  return a ? a->violations : 0;
}

Term sgn(int x, bool plus) { return Term(std::to_string(x) + (plus ? "+" : "-")); }

SymMonFunctor cocycle_functor(PermCatPtr C) {
  SymMonFunctor P;
  P.source = C;
  P.target = C;
  P.on_object = [](const Term& x) { return x; };
  P.on_morphism = [](const Term& f) { return f; };
  P.constraint = [](const Term& x, const Term& y) {
    int a = x.get<int>(), b = y.get<int>();
    return sgn((a + b) % 2, !(a && b));
  };
  P.unit_constraint = [] { return sgn(0, true); };
  P.strictly_unital = true;
  P.strong = true;
  return P;
}

Term op(const Terms& in, const Term& out, const Term& mor) {
  return Term{{"in", to_term(in)}, {"out", out}, {"mor", mor}};
}

// The permutation category F(I) seen on sequences of length 1 and 3.
PermCatPtr sigma3() { return with_window(free_perm(initial_operad(9), 3), {Term{"*"}, Term{"*", "*", "*"}}); }

}  // namespace

TEST_CASE("operation sets") {
  auto S = sign_permcat();
  auto E = endo_multicat(S, 3);
  // arity 0 operations into y are C(e, y)
  CHECK(E->ops({}, 0).size() == 2);
  CHECK(E->ops({}, 1).empty());
  CHECK(E->ops({1, 1}, 0).size() == 2);
  CHECK(E->ops({1, 1}, 1).empty());
  CHECK(E->ops({1, 0, 1, 1}, 1).empty());  // beyond the arity bound: nothing listed
  auto u = E->unit(1);
  CHECK(u == op({1}, 1, sgn(1, true)));
  auto psi = op({1, 1}, 0, sgn(0, false));
  CHECK(E->gamma(psi, {u, op({0, 1}, 1, sgn(1, false))}) == op({1, 0, 1}, 0, sgn(0, true)));
  CHECK_THROWS_AS(E->gamma(psi, {u}), DegreeMismatch);
  CHECK_THROWS_AS(E->gamma(psi, {u, E->unit(0)}), Malformed);
  CHECK_THROWS_AS(E->signature(op({1}, 1, sgn(0, true))), Malformed);
}

TEST_CASE("endomorphism multicategories validate") {
  CHECK(validate_multicat(*endo_multicat(sign_permcat(), 3), 3).pass());
  CHECK(validate_multicat(*endo_multicat(bool_permcat(), 3), 3).pass());
  CHECK(validate_multicat(*endo_multicat(truncated_permcat(2), 3), 3).pass());
  auto r = validate_multicat(*endo_multicat(sigma3(), 3), 3);
  CHECK(r.pass());
  CHECK(r.total_checked() > 0);
}

TEST_CASE("basepoint") {
  for (PermCatPtr C : {PermCatPtr(sign_permcat()), PermCatPtr(bool_permcat()), PermCatPtr(truncated_permcat(2))}) {
    auto E = endo_multicat(C, 3);
    auto b = endo_basepoint(E);
    CHECK(b.on_op("iota3") == op({0, 0, 0}, 0, C->identity(0)));
    CHECK(validate_multifunctor(b, 3).pass());
  }
}

TEST_CASE("action direction") {
  auto C = sigma3();
  auto E = endo_multicat(C, 3);
  // the opposite composite μ ∘ π_σ must break the right-action axioms
  auto L = std::make_shared<LambdaMulticat>();
  L->label = "wrong-direction";
  L->objs = E->objects();
  L->arity_bound = 3;
  L->sig = [E](const Term& o) { return E->signature(o); };
  L->homs = [E](const Terms& in, const Term& out) { return E->ops(in, out); };
  L->unit_of = [E](const Term& c) { return E->unit(c); };
  L->compose = [E](const Term& o, const Terms& in) { return E->gamma(o, in); };
  L->action = [C](const Term& mu, const Permutation& s) {
    auto in = perm_act(s, to_terms(mu["in"]));
    return op(in, mu["out"], C->compose(mu["mor"], perm_to_morphism(*C, s, in)));
  };
  auto r = validate_multicat(*L, 3);
  CHECK(violations(r, "action-functoriality") > 0);
}

TEST_CASE("E on strictly unital functors") {
  auto S = sign_permcat();
  auto E = endo_multicat(S, 3);
  auto id = endo_on_functor(identity_smf(S), 3);
  for (const auto& p : profiles_upto(S->objects(), 3))
    for (const auto& y : S->objects())
      for (const auto& mu : E->ops(p, y)) CHECK(id.on_op(mu) == mu);
  CHECK(validate_multifunctor(id, 3).pass());

  auto P = cocycle_functor(S);
  auto EP = endo_on_functor(P, 3);
  CHECK(validate_multifunctor(EP, 3).pass());
  // ⟨1,1⟩ → 0: the single constraint contributes a sign
  CHECK(EP.on_op(op({1, 1}, 0, sgn(0, true))) == op({1, 1}, 0, sgn(0, false)));
  // ⟨1,1,1⟩ → 1: left-normalised, constraints at (1,1) then (0,1)
  CHECK(EP.on_op(op({1, 1, 1}, 1, sgn(1, true))) == op({1, 1, 1}, 1, sgn(1, false)));

  // E(P∘P) = E(P)∘E(P)
  auto PP = endo_on_functor(smf_compose(P, P), 3);
  auto EPEP = compose_multifunctors(EP, EP);
  for (const auto& p : profiles_upto(S->objects(), 3))
    for (const auto& y : S->objects())
      for (const auto& mu : E->ops(p, y)) CHECK(PP.on_op(mu) == EPEP.on_op(mu));

  auto lax = P;
  lax.unit_constraint = [] { return sgn(0, false); };
  lax.strictly_unital = false;
  CHECK_THROWS_AS(endo_on_functor(lax, 3), Malformed);
}

TEST_CASE("E on monoidal transformations") {
  auto S = sign_permcat();
  auto id = identity_smf(S);
  auto Ei = endo_on_nat(identity_monoidal_nat(id), 3);
  CHECK(validate_multinat(Ei, 3).pass());
  CHECK(Ei.component(1) == endo_multicat(S, 3)->unit(1));
  MonoidalNat b{id, id, [](const Term& x) { return sgn(x.get<int>(), x.get<int>() == 0); }};
  auto Eb = endo_on_nat(b, 3);
  CHECK(validate_multinat(Eb, 3).pass());
  CHECK(Eb.component(1) == op({1}, 1, sgn(1, false)));
  auto wrong = b;
  wrong.component = [](const Term& x) { return sgn(x.get<int>(), false); };
  CHECK_FALSE(validate_multinat(endo_on_nat(wrong, 3), 3).pass());
}

TEST_CASE("action of multilinear functors on decomposable tuples") {
  auto S = sign_permcat();
  auto E = endo_multicat(S, 3);
  SUBCASE("one variable agrees with E on functors") {
    auto P = cocycle_functor(S);
    auto EP = endo_on_functor(P, 3);
    auto L = nlinear_from_smf(P);
    for (const auto& p : profiles_upto(S->objects(), 3))
      for (const auto& y : S->objects())
        for (const auto& mu : E->ops(p, y)) CHECK(endo_action(L, {mu}) == EP.on_op(mu));
  }
  SUBCASE("strict bilinear multiplication") {
    auto T = truncated_permcat(2);
    auto mult = [](const Term& a, const Term& b) { return Term(std::min(a.get<int>() * b.get<int>(), 2)); };
    NLinearFunctor P;
    P.sources = {T, T};
    P.target = T;
    P.on_objects = [mult](const Terms& x) { return mult(x[0], x[1]); };
    P.on_morphisms = [T, mult](const Terms& f) { return T->identity(mult(T->source(f[0]), T->source(f[1]))); };
    P.constraint = [T, mult](int j, const Terms& x, const Term& xp) {
      auto y = x;
      y[j - 1] = T->sum_obj(x[j - 1], xp);
      return T->identity(mult(y[0], y[1]));
    };
    P.strict = true;
    auto ET = endo_multicat(T, 4);
    auto a = op({1, 1}, 2, T->identity(2));
    auto b = op({1, 0}, 1, T->identity(1));
    auto r = endo_action(P, {a, b});
    // grid order: first factor fastest
    CHECK(r["in"] == Term{1, 1, 0, 0});
    CHECK(r["out"] == Term(2));
    CHECK(r["mor"] == T->identity(2));
    CHECK(endo_action(P, {a, b}, {2, 1}) == r);
    auto unary = endo_action(P, {ET->unit(1), ET->unit(2)});
    CHECK(unary == ET->unit(2));
    CHECK_THROWS_AS(endo_action(P, {a}), DegreeMismatch);
    auto empty = endo_action(P, {op({}, 0, T->identity(0)), a});
    CHECK(empty["in"] == Term::array());
    CHECK(empty["mor"] == T->identity(0));
  }
}
