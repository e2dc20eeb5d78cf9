#pragma once

#include <mutex>

#include "permmult/freeperm.hpp"

namespace pmc {

// Decomposable operations of M_1 ⊗ ⋯ ⊗ M_n. Objects are arrays [x^1, …, x^n].
// An operation is {"factors": [φ^1, …, φ^n], "twist": [...]} standing for (⊗φ^i)·twist,
// whose untwisted inputs run over the grid of factor inputs, first factor fastest.
//
// Operations are kept in a normal form, so equality is JSON equality:
//  - each factor is the least element of its Σ-orbit, the difference moved into the twist;
//  - the twist is the least one modulo the factor stabilizers;
//  - when some factor is nullary, the others become units, and if two or more factors
//    admit nullary operations into their outputs all such products are identified.
class GridTensor : public Multicat {
 public:
  GridTensor(std::vector<MulticatPtr> factors, int max_arity);

  int factor_count() const { return static_cast<int>(Ms_.size()); }
  const Multicat& factor(int i) const { return *Ms_.at(i - 1); }  // 1-based
  const std::vector<MulticatPtr>& factors() const { return Ms_; }

  std::string name() const override;
  Terms objects() const override { return objs_; }
  int max_arity() const override { return A_; }
  bool has_object(const Term& x) const override;
  OpSig signature(const Term& op) const override;
  // Every decomposable operation with this signature, in normal form.
  Terms ops(const Terms& inputs, const Term& output) const override;
  Term unit(const Term& c) const override;
  // Defined when the inner operations line up with the outer grid; Unsupported otherwise.
  Term gamma(const Term& outer, const Terms& inners) const override;
  Term act(const Term& op, const Permutation& s) const override;

  // Normal form of (⊗components)·twist; the identity twist when omitted.
  Term make(const Terms& components, const Permutation& twist) const;
  Term make(const Terms& components) const;

  Terms components(const Term& op) const;
  Permutation twist(const Term& op) const;

 private:
  struct Orbit {
    Term rep;
    Permutation to_op;               // rep·to_op = op
    std::vector<Permutation> stab;   // fixes rep
  };
  const Orbit& orbit(int i, const Term& op) const;
  bool has_nullary(int i, const Term& y) const;

  std::vector<MulticatPtr> Ms_;
  int A_;
  Terms objs_;
  mutable std::mutex mu_;
  mutable std::map<Term, Orbit> orbits_;  // key [i, op]
};

using GridTensorPtr = std::shared_ptr<const GridTensor>;

GridTensorPtr grid_tensor(std::vector<MulticatPtr> factors, int max_arity = 4);

// Flat grid ⟨x^{1⋯n}⟩ of factor profiles, first factor fastest; [[]] for n = 0.
Terms grid_profile(const std::vector<Terms>& xs);

// The S functor ∏F(M_i) → F(⊗M_i). Sources are F(M_i) with sequences up to max_len.
NLinearFunctor s_functor(GridTensorPtr T, int max_len = 2);
// Object tuples in, S image out.
Term s_object(const std::vector<Terms>& xs);
Term s_morphism(const GridTensor& T, const Terms& fs);
// S²_b: S⟨x⟩ ⊕ S⟨x with x̂ at b⟩ → S⟨x with x^b ⊕ x̂ at b⟩ (b is 1-based).
Term s_constraint(const GridTensor& T, int b, const std::vector<Terms>& xs, const Terms& xhat);

// Multifunctors between tensors.
Multifunctor tensor_multifunctor(const std::vector<Multifunctor>& Hs, int max_arity = 4);
MultiNat tensor_multinat(const std::vector<MultiNat>& thetas, int max_arity = 4);
// ⊗_j M_{σ(j)} → ⊗_i M_i, moving coordinate j to position σ(j).
Multifunctor tensor_permute(GridTensorPtr T, const Permutation& s);
// ⊗M → M for a single factor: (φ)·t ↦ φ·t.
Multifunctor tensor_collapse(GridTensorPtr T);
// ⊗_{a,b} M_{a,b} → ⊗_a ⊗_b M_{a,b}; sizes lists how many factors each group takes.
Multifunctor tensor_regroup(GridTensorPtr T, const std::vector<int>& sizes);

// FH = F̄H ∘ S for H out of a GridTensor; a plain source gives the 1-linear F̄H.
NLinearFunctor f_multi(const Multifunctor& H, int max_len = 2);
NLinearNat f_multi_nat(const MultiNat& theta, int max_len = 2);

}  // namespace pmc
