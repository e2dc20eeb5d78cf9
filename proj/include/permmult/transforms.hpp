#pragma once

#include "permmult/endo.hpp"
#include "permmult/tensor.hpp"

namespace pmc {

// η_M : M → E(F(M)), w ↦ (w), φ ↦ (ι_r, (φ)).
// F(M) is windowed at max_len and E(F(M)) at max_arity.
Multifunctor eta(MulticatPtr M, int max_len = 3, int max_arity = 3);
Term eta_op(const Multicat& M, const Term& op);

using EtaOp = std::function<Term(const Multicat&, const Term&)>;

// η_N ∘ H against E(F H) ∘ ⊗η on every operation of H's source up to the bound.
// A plain source is treated as a single factor. eta_on_op is replaceable for mutation tests.
Report check_eta_multinat(const Multifunctor& H, int bound = 2, int max_len = 2, const EtaOp& eta_on_op = eta_op);

// ρ_C : C → F(E(C)), length-one tuples; ρ² = (ι_2, 1), ρ⁰ = (ι_0, 1_e).
SymMonFunctor rho(PermCatPtr C, int max_len = 3, int max_arity = 3);

// How the counit reorders summands before applying ⊕φ_j.
enum class XiVariant {
  fibre,     // stable sort into fibre order
  inverse,   // mutant: the inverse permutation
  reversed,  // mutant: fibre order with each fibre reversed
};

// π with ⊕x_i → ⊕x_{π(i)} listing the summands fibre by fibre.
Permutation xi_permutation(const FinMap& f, XiVariant v = XiVariant::fibre);

// ε_C : F(E(C)) → C, strict; ⟨x⟩ ↦ ⊕x_i, (f, ⟨φ⟩) ↦ (⊕φ_j) ∘ ξ_f.
SymMonFunctor epsilon(PermCatPtr C, int max_len = 3, int max_arity = 3, XiVariant v = XiVariant::fibre);

// ε_{F(M)} ∘ F̄η_M = 1, E(ε_C) ∘ η_{E(C)} = 1 and ε_C ∘ ρ_C = 1, pointwise over the windows.
Report check_triangles(MulticatPtr M, PermCatPtr C, int max_len = 3, int max_arity = 3,
                       XiVariant v = XiVariant::fibre);

// E on an n-linear functor: ⊗E(C_i) → E(D), decomposable ⟨μ⟩·t ↦ endo_action(P, ⟨μ⟩)·t.
Multifunctor endo_on_nlinear(const NLinearFunctor& P, int max_arity = 2);

// P ∘ ∏ε against ε_D ∘ FE(P) on every tuple of morphisms over the windows.
// Stops at the first violation when stop_early is set.
Report check_epsilon_multinat(const NLinearFunctor& P, int max_len = 2, int max_arity = 2, bool stop_early = false);

struct EpsilonWitness {
  NLinearFunctor functor;
  Term nonidentity_constraint;  // {"slot", "objects", "other", "constraint"}
  Terms input;                  // one morphism per factor
  Term via_counit;              // P(ε f_1, …, ε f_n)
  Term via_free;                // ε(FE(P)(f_1, …, f_n))
};

// Multiplication on permutations, Σ × Σ → Σ ⊗ Σ, fails the counit square.
// Throws Malformed if the search comes back empty.
EpsilonWitness epsilon_counterexample();

// C with a fresh strict unit 0 and t : 0 → e. Morphisms 0 → x are ["t", f] for f : e → x.
struct MarkedPermCat {
  PermCatPtr base;
  std::shared_ptr<TablePermCat> cat;
  Term zero;
  Term zero_identity;
  Term t;
  SymMonFunctor collapse;   // C• → C, t ↦ 1_e
  SymMonFunctor inclusion;  // C → C•, unit constraint t
};

MarkedPermCat mark_category(PermCatPtr C);
// P• : C• → D, t ↦ P⁰, strictly unital.
SymMonFunctor mark_functor(const MarkedPermCat& Cm, const SymMonFunctor& P);
SymMonFunctor rho_mark(const MarkedPermCat& Cm, int max_len = 3, int max_arity = 3);

// Both ways around C• → F(E(D)) for a strictly unital P : C → D.
Report check_rho_mark_square(const SymMonFunctor& P, int max_len = 3, int max_arity = 3);

}  // namespace pmc
