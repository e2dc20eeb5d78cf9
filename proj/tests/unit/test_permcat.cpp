#include <doctest.h>

#include <random>

#include "permmult/permcat.hpp"

using namespace pmc;

namespace {

std::uint64_t violations(const Report& r, const std::string& axiom) {
  const auto* a = r.find(axiom);
  return a ? a->violations : 0;
}

Term sgn(int x, bool plus) { return Term(std::to_string(x) + (plus ? "+" : "-")); }
int obj(const Term& m) { return m.get<std::string>()[0] - '0'; }
bool plus(const Term& m) { return m.get<std::string>()[1] == '+'; }

// identity functor of the sign category with P²_{x,y} = (−1)^{xy}·c, P⁰ = +
SymMonFunctor cocycle_functor(PermCatPtr C, bool flip_unit_slot = false) {
  SymMonFunctor P;
  P.source = C;
  P.target = C;
  P.on_object = [](const Term& x) { return x; };
  P.on_morphism = [](const Term& f) { return f; };
  P.constraint = [flip_unit_slot](const Term& x, const Term& y) {
    int a = x.get<int>(), b = y.get<int>();
    bool neg = (a && b) || (flip_unit_slot && a == 1 && b == 0);
    return sgn((a + b) % 2, !neg);
  };
  P.unit_constraint = [] { return sgn(0, true); };
  P.strictly_unital = true;
  P.strong = true;
  return P;
}

// sign inversions oracle: ∏ over pairs i<j that π puts out of order of (−1)^{x_i x_j}
bool inversion_sign(const Permutation& pi, const std::vector<int>& xs) {
  auto inv = pi.inverse();
  bool neg = false;
  for (int i = 1; i <= pi.degree(); ++i)
    for (int j = i + 1; j <= pi.degree(); ++j)
      if (inv(i) > inv(j) && xs[i - 1] && xs[j - 1]) neg = !neg;
  return !neg;
}

}  // namespace

TEST_CASE("discrete and sign fixtures pass") {
  auto B = bool_permcat();
  CHECK(B->objects().size() == 2);
  CHECK(B->sum_obj(1, 1) == Term(1));
  auto r = validate_permcat(*B);
  CHECK(r.pass());
  CHECK(r.total_checked() > 0);
  CHECK(validate_permcat(*truncated_permcat(2)).pass());
  auto S = sign_permcat();
  CHECK(S->hom(1, 1).size() == 2);
  CHECK(S->hom(0, 1).empty());
  CHECK(S->symmetry(1, 1) == sgn(0, false));
  CHECK(validate_permcat(*S).pass());
}

TEST_CASE("permutative category mutants") {
  SUBCASE("symmetry not an involution") {
    auto S = sign_permcat();
    S->set_symmetry(0, 1, sgn(1, false));
    CHECK(violations(validate_permcat(*S), "symmetry-involution") > 0);
  }
  SUBCASE("symmetry breaks the hexagon") {
    auto S = sign_permcat();
    S->set_symmetry(0, 1, sgn(1, false));
    S->set_symmetry(1, 0, sgn(1, false));
    auto r = validate_permcat(*S);
    CHECK(violations(r, "hexagon") > 0);
    CHECK(violations(r, "symmetry-unit") > 0);
  }
  SUBCASE("ill-typed symmetry in a discrete category") {
    auto B = bool_permcat();
    B->set_symmetry(1, 1, "1@0");
    CHECK(violations(validate_permcat(*B), "symmetry-typing") > 0);
  }
  SUBCASE("non-functorial sum") {
    auto S = sign_permcat();
    S->set_sum_mor(sgn(1, false), sgn(1, false), sgn(0, false));
    auto r = validate_permcat(*S);
    CHECK(violations(r, "sum-functoriality") > 0);
  }
  SUBCASE("non-natural symmetry") {
    // ξ_{1,1} = −1 and sum of morphisms twisted on one side only
    auto S = sign_permcat();
    S->set_sum_mor(sgn(1, false), sgn(0, true), sgn(1, true));
    auto r = validate_permcat(*S);
    CHECK_FALSE(r.pass());
  }
  SUBCASE("composition") {
    auto S = sign_permcat();
    S->set_compose(sgn(1, false), sgn(1, true), sgn(1, true));
    CHECK(violations(validate_permcat(*S), "unity") > 0);
  }
}

TEST_CASE("perm_to_morphism basics") {
  auto S = sign_permcat();
  CHECK(perm_to_morphism(*S, Permutation::identity(3), {1, 0, 1}) == S->identity(0));
  CHECK(perm_to_morphism(*S, Permutation({2, 1}), {1, 1}) == S->symmetry(1, 1));
  CHECK(perm_to_morphism(*S, Permutation({2, 1}), {1, 0}) == S->symmetry(1, 0));
  CHECK(perm_to_morphism(*S, Permutation::identity(0), {}) == S->identity(0));
  CHECK_THROWS_AS(perm_to_morphism(*S, Permutation({2, 1}), {1}), DegreeMismatch);
}

TEST_CASE("perm_to_morphism against the inversion-sign oracle") {
  auto S = sign_permcat();
  for (int n = 0; n <= 4; ++n)
    for (const auto& pi : all_permutations(n))
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> xs;
        Terms tx;
        int total = 0;
        for (int i = 0; i < n; ++i) {
          xs.push_back((mask >> i) & 1);
          tx.push_back(xs.back());
          total += xs.back();
        }
        auto m = perm_to_morphism(*S, pi, tx);
        CHECK(obj(m) == total % 2);
        CHECK(plus(m) == inversion_sign(pi, xs));
      }
}

TEST_CASE("two factorizations agree") {
  auto S = sign_permcat();
  std::mt19937 rng(3);
  auto s4 = all_permutations(4);
  for (int trial = 0; trial < 40; ++trial) {
    const auto& pi = s4[rng() % s4.size()];
    Terms xs;
    for (int i = 0; i < 4; ++i) xs.push_back(static_cast<int>(rng() % 2));
    auto w = bubble_word(pi);
    // insert a cancelling pair and rotate the word through a braid-free detour
    std::vector<int> w2;
    int a = 1 + static_cast<int>(rng() % 3);
    w2.push_back(a);
    w2.push_back(a);
    for (int x : w) w2.push_back(x);
    CHECK(word_to_morphism(*S, w2, xs) == perm_to_morphism(*S, pi, xs));
    // selection order: bring the target's entries forward one at a time
    std::vector<int> cur{1, 2, 3, 4}, w3;
    for (int p = 1; p <= 4; ++p) {
      int at = static_cast<int>(std::find(cur.begin(), cur.end(), pi(p)) - cur.begin()) + 1;
      for (int q = at - 1; q >= p; --q) {
        w3.push_back(q);
        std::swap(cur[q - 1], cur[q]);
      }
    }
    CHECK(word_to_morphism(*S, w3, xs) == perm_to_morphism(*S, pi, xs));
  }
}

TEST_CASE("perm_to_morphism is multiplicative") {
  auto S = sign_permcat();
  for (const auto& pi : all_permutations(3))
    for (const auto& rho : all_permutations(3))
      for (int mask = 0; mask < 8; ++mask) {
        Terms xs{mask & 1, (mask >> 1) & 1, (mask >> 2) & 1};
        auto m1 = perm_to_morphism(*S, pi, xs);
        auto m2 = perm_to_morphism(*S, rho, perm_act(pi, xs));
        CHECK(S->compose(m2, m1) == perm_to_morphism(*S, perm_compose(pi, rho), xs));
      }
}

TEST_CASE("symmetric monoidal functors") {
  auto S = sign_permcat();
  auto id = identity_smf(S);
  auto r = validate_smf(id);
  CHECK(r.pass());
  CHECK(r.notes()["classification"] == "strict");

  auto P = cocycle_functor(S);
  auto rp = validate_smf(P);
  CHECK(rp.pass());
  CHECK(rp.notes()["classification"] == "strong");

  auto PP = smf_compose(P, P);
  CHECK(PP.strictly_unital);
  CHECK(PP.strong);
  CHECK_FALSE(PP.strict);
  CHECK(PP.constraint(1, 1) == sgn(0, true));
  CHECK(validate_smf(PP).pass());
  CHECK(smf_compose(id, id).strict);

  SUBCASE("mutated constraint breaks associativity") {
    auto bad = cocycle_functor(S, true);
    auto rb = validate_smf(bad);
    CHECK(violations(rb, "associativity") > 0);
  }
  SUBCASE("functor that forgets signs breaks symmetry") {
    auto T = identity_smf(S);
    T.on_morphism = [](const Term& f) { return sgn(obj(f), true); };
    T.strict = false;
    auto rt = validate_smf(T);
    CHECK(violations(rt, "symmetry") > 0);
  }
  SUBCASE("declared strict but not") {
    auto Q = cocycle_functor(S);
    Q.strict = true;
    CHECK(violations(validate_smf(Q), "flags") > 0);
  }
  SUBCASE("non-identity unit constraint on a strictly unital declaration") {
    auto Q = cocycle_functor(S);
    Q.unit_constraint = [] { return sgn(0, false); };
    auto rq = validate_smf(Q);
    CHECK(violations(rq, "unity") > 0);
    CHECK(violations(rq, "flags") > 0);
  }
  SUBCASE("broken functor") {
    auto Q = identity_smf(S);
    Q.on_morphism = [](const Term& f) { return f == sgn(1, true) ? sgn(1, false) : f; };
    CHECK(violations(validate_smf(Q), "functor") > 0);
  }
}

TEST_CASE("monoidal natural transformations") {
  auto S = sign_permcat();
  auto id = identity_smf(S);
  CHECK(validate_monoidal_nat(identity_monoidal_nat(id)).pass());
  MonoidalNat b{id, id, [](const Term& x) { return sgn(x.get<int>(), x.get<int>() == 0); }};
  CHECK(validate_monoidal_nat(b).pass());
  auto bad = b;
  bad.component = [](const Term& x) { return sgn(x.get<int>(), false); };
  CHECK(violations(validate_monoidal_nat(bad), "unity") > 0);
  auto ill = b;
  ill.component = [](const Term&) { return sgn(0, true); };
  CHECK(violations(validate_monoidal_nat(ill), "typing") > 0);
}

TEST_CASE("1-linear functors agree with strictly unital SMF validation") {
  auto S = sign_permcat();
  std::vector<SymMonFunctor> cases{identity_smf(S), cocycle_functor(S), cocycle_functor(S, true)};
  auto T = identity_smf(S);
  T.on_morphism = [](const Term& f) { return sgn(obj(f), true); };
  T.strict = false;
  cases.push_back(T);
  for (const auto& P : cases) CHECK(validate_smf(P).pass() == validate_nlinear(nlinear_from_smf(P)).pass());
  CHECK(violations(validate_nlinear(nlinear_from_smf(cocycle_functor(S, true))), "constraint-unity") > 0);
}

TEST_CASE("strict bilinear multiplication") {
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
  auto r = validate_nlinear(P);
  CHECK(r.pass());
  CHECK(r.notes()["classification"] == "strict");
  CHECK(validate_nlinear_nat(nlinear_identity_nat(P)).pass());

  auto sw = nlinear_sigma_act(P, Permutation({2, 1}));
  CHECK(validate_nlinear(sw).pass());
  CHECK(sw.strict);
  CHECK(nlinear_sigma_act(sw, Permutation({2, 1})).on_objects({1, 2}) == P.on_objects({1, 2}));

  SUBCASE("object unity fails for addition") {
    auto Q = P;
    Q.on_objects = [T](const Terms& x) { return T->sum_obj(x[0], x[1]); };
    CHECK(violations(validate_nlinear(Q), "unity") > 0);
  }

  SUBCASE("composites") {
    auto idT = nlinear_identity(T);
    auto G = nlinear_gamma(P, {idT, idT});
    CHECK(G.arity() == 2);
    CHECK(validate_nlinear(G).pass());
    auto G3 = nlinear_gamma(P, {P, idT});
    CHECK(G3.arity() == 3);
    CHECK(G3.on_objects({2, 1, 1}) == Term(2));
    CHECK(validate_nlinear(G3).pass());
    auto nat = nlinear_gamma_nat(nlinear_identity_nat(P), {nlinear_identity_nat(P), nlinear_identity_nat(idT)});
    CHECK(validate_nlinear_nat(nat).pass());
  }
}

TEST_CASE("0-linear and constant functors") {
  auto S = sign_permcat();
  auto c = nlinear_constant(S, 1);
  CHECK(c.arity() == 0);
  CHECK(validate_nlinear(c).pass());
  CHECK(c.on_objects({}) == Term(1));
  auto bad = nlinear_constant(S, 7);
  CHECK_FALSE(validate_nlinear(bad).pass());
}

TEST_CASE("1-linear natural transformations") {
  auto S = sign_permcat();
  auto P = nlinear_from_smf(identity_smf(S));
  NLinearNat b{P, P, [](const Terms& x) { return sgn(x[0].get<int>(), x[0].get<int>() == 0); }};
  CHECK(validate_nlinear_nat(b).pass());
  auto bad = b;
  bad.component = [](const Terms& x) { return sgn(x[0].get<int>(), x[0].get<int>() == 1); };
  auto r = validate_nlinear_nat(bad);
  CHECK(violations(r, "unity") > 0);
  auto plain = b;
  plain.component = [](const Terms& x) { return sgn(x[0].get<int>(), true); };
  CHECK(validate_nlinear_nat(plain).pass());
  auto sw = nlinear_sigma_act_nat(b, Permutation::identity(1));
  CHECK(validate_nlinear_nat(sw).pass());
}

TEST_CASE("sigma_place and tuples") {
  CHECK(sigma_place(Permutation({2, 3, 1}), {"a", "b", "c"}) == Terms{"c", "a", "b"});
  auto B = bool_permcat();
  CHECK(object_tuples({B, B}).size() == 4);
  CHECK(object_tuples({}).size() == 1);
  CHECK(all_morphisms(*sign_permcat()).size() == 4);
}
