#include <doctest.h>

#include "permmult/ring.hpp"

using namespace pmc;

namespace {

int I(const Term& x) { return x.get<int>(); }

// {0, 1, a, b}: a, b form a left-zero band; 0 absorbs; nonzero sums collapse to 1.
RingCategory left_band() {
  auto add = [](const Term& x, const Term& y) {
    if (x == Term(0)) return y;
    if (y == Term(0)) return x;
    return Term(1);
  };
  auto mul = [](const Term& x, const Term& y) {
    if (x == Term(0) || y == Term(0)) return Term(0);
    if (x == Term(1)) return y;
    if (y == Term(1)) return x;
    return x;
  };
  return discrete_semiring("left-band", {0, 1, "a", "b"}, 0, 1, add, mul);
}

std::vector<RingCategory> semirings() {
  return {boolean_semiring(), truncated_semiring(2), modular_semiring(2), modular_semiring(3)};
}

}  // namespace

TEST_CASE("ring categories") {
  for (const auto& R : semirings()) {
    CAPTURE(R.additive->name());
    auto rep = validate_ring_category(R);
    CHECK(rep.pass());
    CHECK(rep.notes()["tight"] == true);
    for (const char* ax : {"multiplicative-zero", "zero-factorization", "unit-factorization", "symmetry-factorization",
                           "internal-factorization", "external-factorization", "two-by-two-factorization"}) {
      REQUIRE(rep.find(ax));
      CHECK(rep.find(ax)->checked > 0);
    }
  }
}

TEST_CASE("ring category mutants") {
  auto R = boolean_semiring();
  auto C = R.additive;
  SUBCASE("zero factorization") {
    auto bad = R;
    bad.left = [C, R](const Term& a, const Term& b, const Term& c) {
      if (I(a) == 0 && I(b) == 1 && I(c) == 1) return C->identity(0);
      return R.left(a, b, c);
    };
    auto rep = validate_ring_category(bad);
    CHECK(rep.find("zero-factorization")->violations > 0);
  }
  SUBCASE("right factorization component") {
    auto bad = R;
    bad.right = [C, R](const Term& a, const Term& b, const Term& c) {
      if (I(a) == 1 && I(b) == 1 && I(c) == 1) return C->identity(0);
      return R.right(a, b, c);
    };
    auto rep = validate_ring_category(bad);
    CHECK(rep.find("internal-factorization")->violations + rep.find("two-by-two-factorization")->violations > 0);
    CHECK_FALSE(rep.pass());
  }
  SUBCASE("multiplicative zero") {
    auto bad = R;
    bad.mult.on_objects = [](const Term& x, const Term& y) { return Term(I(x) | I(y)); };
    CHECK(validate_ring_category(bad).find("multiplicative-zero")->violations > 0);
  }
}

TEST_CASE("bipermutative categories") {
  for (const auto& R : semirings()) {
    CAPTURE(R.additive->name());
    auto B = discrete_bipermutative(R);
    auto rep = validate_bipermutative(B);
    CHECK(rep.pass());
    CHECK(rep.notes()["tight"] == true);
    // every bipermutative structure is a braided ring structure with the symmetry as braiding
    CHECK(validate_braided_ring(B).pass());
    CHECK(validate_ring_category(R).pass());
  }
  SUBCASE("non-commutative product") {
    auto rep = validate_bipermutative(discrete_bipermutative(left_band()));
    CHECK_FALSE(rep.pass());
    bool perm_fail = false;
    for (const auto& ax : rep.axioms())
      if (ax.axiom.rfind("multiplicative-permutative/", 0) == 0 && ax.violations > 0) perm_fail = true;
    CHECK(perm_fail);
  }
  SUBCASE("zero symmetry") {
    auto B = discrete_bipermutative(boolean_semiring());
    auto C = B.ring.additive;
    auto sym = B.braiding;
    B.braiding = [C, sym](const Term& x, const Term& y) { return I(y) == 0 && I(x) == 1 ? C->identity(1) : sym(x, y); };
    CHECK(validate_bipermutative(B).find("zero-symmetry")->violations > 0);
  }
}

TEST_CASE("braided ring categories") {
  auto B = discrete_bipermutative(truncated_semiring(2));
  auto rep = validate_braided_ring(B);
  CHECK(rep.pass());
  CHECK(rep.find("braiding-factorization")->checked > 0);
  CHECK(rep.find("hexagon")->checked > 0);
  SUBCASE("zero braiding") {
    auto C = B.ring.additive;
    auto br = B.braiding;
    B.braiding = [C, br](const Term& x, const Term& y) { return I(x) == 0 && I(y) == 2 ? C->identity(2) : br(x, y); };
    CHECK(validate_braided_ring(B).find("zero-braiding")->violations > 0);
  }
}

TEST_CASE("n-fold monoidal categories") {
  auto R = boolean_semiring();
  SUBCASE("one product has no exchanges") {
    auto D = discrete_en(R, 1).nfold();
    auto rep = validate_nfold_monoidal(D);
    CHECK(rep.pass());
    CHECK(rep.find("internal-unity") == nullptr);
    CHECK(rep.find("product 1/associativity")->checked > 0);
  }
  SUBCASE("three equal products") {
    auto rep = validate_nfold_monoidal(discrete_en(truncated_semiring(2), 3).nfold());
    CHECK(rep.pass());
    for (const char* ax : {"internal-unity", "external-unity", "internal-associativity", "external-associativity",
                           "triple-exchange", "exchange-naturality"})
      CHECK(rep.find(ax)->checked > 0);
  }
  SUBCASE("exchange mutant") {
    auto D = discrete_en(R, 2).nfold();
    auto C = R.additive;
    auto ex = D.exchange;
    D.exchange = [C, ex](int i, int j, const Term& a, const Term& b, const Term& c, const Term& d) {
      if (I(a) == 1 && I(b) == 0) return C->identity(1);
      return ex(i, j, a, b, c, d);
    };
    CHECK(validate_nfold_monoidal(D).find("internal-associativity")->violations > 0);
  }
}

TEST_CASE("E_n-monoidal categories") {
  for (const auto& R : semirings()) {
    CAPTURE(R.additive->name());
    auto rep = validate_en_monoidal(discrete_en(R, 2));
    CHECK(rep.pass());
    CHECK(rep.notes()["tight"] == true);
    CHECK(rep.find("zero-exchange")->checked > 0);
    CHECK(rep.find("exchange-factorization")->checked > 0);
    // no pairs when n = 1
    auto one = validate_en_monoidal(discrete_en(R, 1));
    CHECK(one.pass() == validate_ring_category(R).pass());
    CHECK(one.find("zero-exchange") == nullptr);
  }
  SUBCASE("zero exchange") {
    auto R = boolean_semiring();
    auto D = discrete_en(R, 2);
    auto C = R.additive;
    auto ex = D.exchange;
    D.exchange = [C, ex](int i, int j, const Term& a, const Term& b, const Term& c, const Term& d) {
      if (I(a) == 0 && I(b) == 1 && I(c) == 1 && I(d) == 1) return C->identity(1);
      return ex(i, j, a, b, c, d);
    };
    CHECK(validate_en_monoidal(D).find("zero-exchange")->violations > 0);
  }
  SUBCASE("three products") {
    CHECK(validate_en_monoidal(discrete_en(modular_semiring(2), 3)).pass());
  }
}
