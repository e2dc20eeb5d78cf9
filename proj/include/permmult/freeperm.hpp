#pragma once

#include <mutex>

#include "permmult/permcat.hpp"

namespace pmc {

// Objects of F(M) are JSON arrays of M-objects. A morphism is
//   {"src": [...], "tgt": [...], "map": [f(1), …, f(r)], "ops": [φ_1, …, φ_s]}
// with φ_j an operation ⟨x⟩_{f⁻¹(j)} → y_j.

Term free_morphism(const Terms& src, const Terms& tgt, const std::vector<int>& map, const Terms& ops);
Term free_identity(const Multicat& M, const Terms& x);
// (g,⟨ψ⟩)∘(f,⟨φ⟩) = (gf, ⟨γ(ψ_k; ⟨φ⟩_{g⁻¹(k)}) · σ^k_{g,f}⟩).
Term free_compose(const Multicat& M, const Term& g, const Term& f);
Term free_sum(const Term& f, const Term& g);
Term free_symmetry(const Multicat& M, const Terms& x, const Terms& y);
// Every morphism x → y, sorted. BoundExceeded if some index map has a fibre above max_arity.
Terms free_hom_enumerate(const Multicat& M, const Terms& x, const Terms& y);
// Throws Malformed unless m is a well-typed morphism over M.
void check_free_morphism(const Multicat& M, const Term& m);

// F(M) as a view; the window is every sequence of length ≤ max_len.
class FreeView : public PermCat {
 public:
  FreeView(MulticatPtr M, int max_len);

  const Multicat& multicat() const { return *M_; }
  MulticatPtr multicat_ptr() const { return M_; }
  int max_len() const { return L_; }

  std::string name() const override { return "F(" + M_->name() + ")"; }
  Terms objects() const override { return objs_; }
  bool has_object(const Term& x) const override;
  Terms hom(const Term& x, const Term& y) const override;
  Term source(const Term& f) const override;
  Term target(const Term& f) const override;
  Term identity(const Term& x) const override;
  Term compose(const Term& g, const Term& f) const override;
  Term unit_object() const override { return Term::array(); }
  Term sum_obj(const Term& x, const Term& y) const override;
  Term sum_mor(const Term& f, const Term& g) const override;
  Term symmetry(const Term& x, const Term& y) const override;

 private:
  MulticatPtr M_;
  int L_;
  Terms objs_;
  mutable std::mutex mu_;
  mutable std::map<Term, Terms> homs_;
};

std::shared_ptr<FreeView> free_perm(MulticatPtr M, int max_len = 3);

// F̄H: strict, entrywise on objects and operations, index maps untouched.
SymMonFunctor free_on_multifunctor(const Multifunctor& H, int max_len = 3);
// (F̄κ)_⟨x⟩ = (1, ⟨κ_{x_i}⟩).
MonoidalNat free_on_multinat(const MultiNat& kappa, int max_len = 3);

}  // namespace pmc
