#pragma once

#include "permmult/permcat.hpp"

namespace pmc {

// E(C): operations ⟨x⟩ → y are morphisms x_1 ⊕ ⋯ ⊕ x_n → y of C, as
//   {"in": [x_1, …, x_n], "out": y, "mor": m}.
class EndView : public Multicat {
 public:
  EndView(PermCatPtr C, int max_arity);

  const PermCat& category() const { return *C_; }
  PermCatPtr category_ptr() const { return C_; }

  std::string name() const override { return "E(" + C_->name() + ")"; }
  Terms objects() const override { return C_->objects(); }
  int max_arity() const override { return A_; }
  bool has_object(const Term& x) const override { return C_->has_object(x); }
  OpSig signature(const Term& op) const override;
  Terms ops(const Terms& inputs, const Term& output) const override;  // empty above the arity bound
  Term unit(const Term& c) const override;
  // ψ ∘ (φ_1 ⊕ ⋯ ⊕ φ_n)
  Term gamma(const Term& outer, const Terms& inners) const override;
  // μ ∘ (⊕x_{σ(i)} → ⊕x_i)
  Term act(const Term& op, const Permutation& s) const override;

 private:
  PermCatPtr C_;
  int A_;
};

std::shared_ptr<EndView> endo_multicat(PermCatPtr C, int max_arity = 3);

Term endo_op(const Terms& in, const Term& out, const Term& mor);

// Terminal multicategory → E(C) at the unit object; ι_n goes to 1_e.
Multifunctor endo_basepoint(std::shared_ptr<EndView> E);

// Left-normalised ⊕P(x_i) → P(⊕x_i) built from P²; P⁰ when empty.
Term iterated_constraint(const SymMonFunctor& P, const Terms& xs);

// E(P)(μ) = P(μ) ∘ iterated constraint. Throws Malformed unless P is strictly unital.
Multifunctor endo_on_functor(const SymMonFunctor& P, int max_arity = 3);
MultiNat endo_on_nat(const MonoidalNat& theta, int max_arity = 3);

// Operation of E(D) induced by an n-linear P on decomposable ⟨μ_1, …, μ_n⟩. Inputs run
// over the grid with the first factor fastest. Linearity constraints are applied one
// factor at a time in factor_order (default ascending), then P(μ_1, …, μ_n).
Term endo_action(const NLinearFunctor& P, const Terms& mus, const std::vector<int>& factor_order = {});

}  // namespace pmc
