#pragma once

#include <functional>
#include <map>
#include <memory>

#include "permmult/category.hpp"

namespace pmc {

// Strict symmetric monoidal category with strictly associative, unital sum.
class PermCat : public Category {
 public:
  virtual Term unit_object() const = 0;
  virtual Term sum_obj(const Term& x, const Term& y) const = 0;
  virtual Term sum_mor(const Term& f, const Term& g) const = 0;
  virtual Term symmetry(const Term& x, const Term& y) const = 0;  // x⊕y → y⊕x

  Term sum_objs(const Terms& xs) const;  // e when empty
  Term sum_mors(const Terms& fs) const;  // 1_e when empty
};

using PermCatPtr = std::shared_ptr<const PermCat>;

class TablePermCat : public PermCat {
 public:
  TablePermCat(std::string name, Terms objects, Term unit);

  std::string name() const override { return name_; }
  Terms objects() const override { return objects_; }
  Terms hom(const Term& x, const Term& y) const override;
  Term source(const Term& f) const override;
  Term target(const Term& f) const override;
  Term identity(const Term& x) const override;
  Term compose(const Term& g, const Term& f) const override;
  Term unit_object() const override { return unit_; }
  Term sum_obj(const Term& x, const Term& y) const override;
  Term sum_mor(const Term& f, const Term& g) const override;
  Term symmetry(const Term& x, const Term& y) const override;

  void add_morphism(const Term& id, const Term& src, const Term& tgt);
  void set_identity(const Term& x, const Term& f);
  void set_compose(const Term& g, const Term& f, const Term& gf);
  void set_sum_obj(const Term& x, const Term& y, const Term& s);
  void set_sum_mor(const Term& f, const Term& g, const Term& s);
  void set_symmetry(const Term& x, const Term& y, const Term& m);

  const std::map<Term, std::pair<Term, Term>>& morphisms() const { return mors_; }
  const std::map<Term, Term>& identities() const { return ids_; }
  const std::map<Term, Term>& compose_table() const { return comp_; }  // key [g, f]
  const std::map<Term, Term>& sum_obj_table() const { return sobj_; }  // key [x, y]
  const std::map<Term, Term>& sum_mor_table() const { return smor_; }  // key [f, g]
  const std::map<Term, Term>& symmetry_table() const { return sym_; }  // key [x, y]

 private:
  std::string name_;
  Terms objects_;
  Term unit_;
  std::map<Term, std::pair<Term, Term>> mors_;
  std::map<Term, Terms> homs_;
  std::map<Term, Term> ids_, comp_, sobj_, smor_, sym_;
};

// Restricts the enumeration window of C to the given objects.
PermCatPtr with_window(PermCatPtr C, Terms objects);

// Freezes a permutative category over its window. Sums and composites must stay inside it.
std::shared_ptr<TablePermCat> materialize_permcat(const PermCat& C);

// Discrete category on a finite commutative monoid; ids "1@x".
std::shared_ptr<TablePermCat> discrete_permcat(const std::string& name, const Terms& elements,
                                               const Term& unit,
                                               const std::function<Term(const Term&, const Term&)>& sum);
std::shared_ptr<TablePermCat> bool_permcat();            // {0,1} under OR
std::shared_ptr<TablePermCat> truncated_permcat(int top); // {0..top} under min(a+b, top)
// Objects Z/2, each with automorphisms ±; the symmetry of 1 with itself is −.
std::shared_ptr<TablePermCat> sign_permcat();

Report validate_permcat(const PermCat& C);

// Adjacent transposition word (positions a swap a, a+1) for π, by bubble sort.
std::vector<int> bubble_word(const Permutation& pi);
// Realizes the word as a morphism ⊕x_i → ⊕x_{w(i)}, composing 1⊕ξ⊕1 steps in order.
Term word_to_morphism(const PermCat& C, const std::vector<int>& word, const Terms& xs);
// ⊕_i x_i → ⊕_i x_{π(i)}.
Term perm_to_morphism(const PermCat& C, const Permutation& pi, const Terms& xs);

struct SymMonFunctor {
  PermCatPtr source;
  PermCatPtr target;
  std::function<Term(const Term&)> on_object;
  std::function<Term(const Term&)> on_morphism;
  std::function<Term(const Term&, const Term&)> constraint;  // P²_{x,y}: Px ⊕ Py → P(x⊕y)
  std::function<Term()> unit_constraint;                     // P⁰: e → Pe
  bool strict = false;
  bool strictly_unital = false;
  bool strong = false;
};

SymMonFunctor identity_smf(PermCatPtr C);
SymMonFunctor smf_compose(const SymMonFunctor& Q, const SymMonFunctor& P);  // Q∘P

// Does f have a two-sided inverse in C?
bool is_invertible(const Category& C, const Term& f);

Report validate_smf(const SymMonFunctor& P);

struct MonoidalNat {
  SymMonFunctor from;
  SymMonFunctor to;
  std::function<Term(const Term&)> component;
};

MonoidalNat identity_monoidal_nat(const SymMonFunctor& P);
Report validate_monoidal_nat(const MonoidalNat& theta);

struct NLinearFunctor {
  std::vector<PermCatPtr> sources;
  PermCatPtr target;
  std::function<Term(const Terms&)> on_objects;
  std::function<Term(const Terms&)> on_morphisms;
  // j is 1-based: P⟨X⟩ ⊕ P⟨X ∘_j X′⟩ → P⟨X ∘_j (X_j ⊕ X′)⟩
  std::function<Term(int, const Terms&, const Term&)> constraint;
  bool strict = false;
  bool strong = false;
  int arity() const { return static_cast<int>(sources.size()); }
};

// A 0-linear functor: a bare object of D.
NLinearFunctor nlinear_constant(PermCatPtr D, const Term& object);
NLinearFunctor nlinear_from_smf(const SymMonFunctor& P);  // P must be strictly unital
NLinearFunctor nlinear_identity(PermCatPtr C);

Report validate_nlinear(const NLinearFunctor& P);

struct NLinearNat {
  NLinearFunctor from;
  NLinearFunctor to;
  std::function<Term(const Terms&)> component;
};

NLinearNat nlinear_identity_nat(const NLinearFunctor& P);
Report validate_nlinear_nat(const NLinearNat& theta);

// Q∘P with constraints Q(P²_j) ∘ Q².
NLinearFunctor nlinear_postcompose(const SymMonFunctor& Q, const NLinearFunctor& P);
// θ ∗ 1_P.
NLinearNat nlinear_whisker(const MonoidalNat& theta, const NLinearFunctor& P);

NLinearFunctor nlinear_sigma_act(const NLinearFunctor& P, const Permutation& s);
NLinearNat nlinear_sigma_act_nat(const NLinearNat& theta, const Permutation& s);
NLinearFunctor nlinear_gamma(const NLinearFunctor& P, const std::vector<NLinearFunctor>& inner);
NLinearNat nlinear_gamma_nat(const NLinearNat& theta, const std::vector<NLinearNat>& inner);

// Position σ(j) of the result holds A_j.
Terms sigma_place(const Permutation& s, const Terms& A);

// Every object tuple over the windows, first coordinate fastest.
std::vector<Terms> object_tuples(const std::vector<PermCatPtr>& cats);
// Every morphism listed in the window.
Terms all_morphisms(const Category& C);

}  // namespace pmc
