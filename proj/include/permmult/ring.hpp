#pragma once

#include "permmult/permcat.hpp"

namespace pmc {

// A strict monoidal structure on the underlying category of some PermCat.
struct StrictMonoidal {
  Term unit;
  std::function<Term(const Term&, const Term&)> on_objects;
  std::function<Term(const Term&, const Term&)> on_morphisms;
};

// ∂^l_{A,B,C}: AC ⊕ BC → (A ⊕ B)C, ∂^r_{A,B,C}: AB ⊕ AC → A(B ⊕ C).
using Factorization = std::function<Term(const Term&, const Term&, const Term&)>;
// x⊗y → y⊗x
using Braiding = std::function<Term(const Term&, const Term&)>;
// η^{ij}_{A,B,C,D}: (A ⊗_j B) ⊗_i (C ⊗_j D) → (A ⊗_i C) ⊗_j (B ⊗_i D), 1 ≤ i < j ≤ n.
using Exchange = std::function<Term(int, int, const Term&, const Term&, const Term&, const Term&)>;

struct RingCategory {
  PermCatPtr additive;
  StrictMonoidal mult;
  Factorization left;
  Factorization right;
};

// Symmetry for a bipermutative category, braiding for a braided ring category.
struct RingWithBraiding {
  RingCategory ring;
  Braiding braiding;
};

struct NFoldMonoidal {
  CategoryPtr cat;
  std::vector<StrictMonoidal> products;  // ⊗_1, …, ⊗_n, all with the same unit
  Exchange exchange;
  int n() const { return static_cast<int>(products.size()); }
};

struct EnMonoidal {
  PermCatPtr additive;
  std::vector<StrictMonoidal> products;
  std::vector<Factorization> left, right;  // per index
  Exchange exchange;
  int n() const { return static_cast<int>(products.size()); }
  RingCategory ring(int i) const;  // 1-based
  NFoldMonoidal nfold() const;
};

Report validate_strict_monoidal(const Category& C, const StrictMonoidal& M);
Report validate_ring_category(const RingCategory& R);
Report validate_bipermutative(const RingWithBraiding& B);
Report validate_braided_ring(const RingWithBraiding& B);
Report validate_nfold_monoidal(const NFoldMonoidal& D);
Report validate_en_monoidal(const EnMonoidal& D);

// Discrete category on a finite commutative semiring, identity structure maps throughout.
RingCategory discrete_semiring(const std::string& name, const Terms& elements, const Term& zero, const Term& one,
                               const std::function<Term(const Term&, const Term&)>& add,
                               const std::function<Term(const Term&, const Term&)>& mul);
RingWithBraiding discrete_bipermutative(const RingCategory& R);  // symmetry = identities
EnMonoidal discrete_en(const RingCategory& R, int n);            // every ⊗_i = ⊗, identity exchanges

RingCategory boolean_semiring();        // {0,1}, ∨, ∧
RingCategory truncated_semiring(int top);  // {0..top}, sums and products capped at top
RingCategory modular_semiring(int m);      // Z/m

}  // namespace pmc
