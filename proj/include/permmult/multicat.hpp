#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>

#include "permmult/combinatorics.hpp"
#include "permmult/report.hpp"

namespace pmc {

struct OpSig {
  Terms inputs;
  Term output;
  int arity() const { return static_cast<int>(inputs.size()); }
  Term to_json() const { return Term{{"in", to_term(inputs)}, {"out", output}}; }
  friend bool operator==(const OpSig&, const OpSig&) = default;
};

// A multicategory seen through a finite window: objects() lists the objects
// examined by enumeration, max_arity() the largest arity with defined data.
class Multicat {
 public:
  virtual ~Multicat() = default;

  virtual std::string name() const { return "multicat"; }
  virtual Terms objects() const = 0;
  virtual int max_arity() const = 0;
  virtual bool has_object(const Term& x) const;

  virtual OpSig signature(const Term& op) const = 0;
  // Sorted; empty when the hom-set is empty.
  virtual Terms ops(const Terms& inputs, const Term& output) const = 0;
  virtual Term unit(const Term& c) const = 0;
  virtual Term gamma(const Term& outer, const Terms& inners) const = 0;
  virtual Term act(const Term& op, const Permutation& s) const = 0;
};

using MulticatPtr = std::shared_ptr<const Multicat>;

// Table-backed multicategory. Op ids are arbitrary Terms (strings in documents).
class TableMulticat : public Multicat {
 public:
  TableMulticat(std::string name, Terms objects, int max_arity);

  std::string name() const override { return name_; }
  Terms objects() const override { return objects_; }
  int max_arity() const override { return max_arity_; }
  bool has_object(const Term& x) const override;
  OpSig signature(const Term& op) const override;
  Terms ops(const Terms& inputs, const Term& output) const override;
  Term unit(const Term& c) const override;
  Term gamma(const Term& outer, const Terms& inners) const override;
  Term act(const Term& op, const Permutation& s) const override;

  void add_op(const Term& id, OpSig sig);
  void set_unit(const Term& c, const Term& op);
  void set_gamma(const Term& outer, const Terms& inners, const Term& result);
  void set_act(const Term& op, const Permutation& s, const Term& result);

  const std::map<Term, OpSig>& op_table() const { return sigs_; }
  const std::map<Term, Term>& unit_table() const { return units_; }
  const std::map<Term, Term>& gamma_table() const { return gamma_; }  // key [outer, [inners]]
  const std::map<Term, Term>& act_table() const { return act_; }      // key [op, perm]

 private:
  std::string name_;
  Terms objects_;
  int max_arity_;
  std::map<Term, OpSig> sigs_;
  std::map<Term, Terms> by_sig_;
  std::map<Term, Term> units_;
  std::map<Term, Term> gamma_;
  std::map<Term, Term> act_;

  // interned lookup path
  struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept;
  };
  int intern(const Term& op) const;  // -1 when unknown
  std::unordered_map<std::string, int> ids_;
  std::vector<Term> id_terms_;
  std::vector<OpSig> id_sigs_;
  std::unordered_map<std::vector<int>, int, VecHash> fast_gamma_;
  std::unordered_map<std::vector<int>, int, VecHash> fast_act_;
};

// Computed multicategory assembled from callbacks.
struct LambdaMulticat : Multicat {
  std::string label = "multicat";
  Terms objs;
  int arity_bound = 0;
  std::function<OpSig(const Term&)> sig;
  std::function<Terms(const Terms&, const Term&)> homs;
  std::function<Term(const Term&)> unit_of;
  std::function<Term(const Term&, const Terms&)> compose;
  std::function<Term(const Term&, const Permutation&)> action;

  std::string name() const override { return label; }
  Terms objects() const override { return objs; }
  int max_arity() const override { return arity_bound; }
  OpSig signature(const Term& op) const override { return sig(op); }
  Terms ops(const Terms& in, const Term& out) const override { return homs(in, out); }
  Term unit(const Term& c) const override { return unit_of(c); }
  Term gamma(const Term& o, const Terms& in) const override { return compose(o, in); }
  Term act(const Term& op, const Permutation& s) const override { return action(op, s); }
};

// All input profiles of length ≤ bound over the window, shortlex order.
std::vector<Terms> profiles_upto(const Terms& objects, int bound);
std::vector<Terms> profiles_of_length(const Terms& objects, int n);

// Every operation with arity ≤ bound, grouped by output.
struct OpIndex {
  std::vector<std::pair<Term, OpSig>> all;
  std::map<Term, std::vector<std::size_t>> by_output;
};
OpIndex index_ops(const Multicat& M, int bound);

// Calls fn for every tuple ⟨ψ_j⟩ with output(ψ_j) = outputs[j] and total arity ≤ budget.
void for_each_inner_tuple(const OpIndex& idx, const Terms& outputs, int budget,
                          const std::function<void(const Terms&, const std::vector<OpSig>&)>& fn);

// Freezes a view into tables over its window.
std::shared_ptr<TableMulticat> materialize(const Multicat& M, int bound);

Report validate_multicat(const Multicat& M, int bound);

std::shared_ptr<TableMulticat> terminal_multicat(int A, bool with_nullary = true);
// Only the unit; the bound is nominal since no other arity carries operations.
std::shared_ptr<TableMulticat> initial_operad(int A = 4);
// Ops are the orderings μ_n·σ; ids "mu:" followed by the one-line σ.
std::shared_ptr<TableMulticat> associative_operad(int A, bool with_nullary = true);
// Two objects a, b with weights in Z/2; an operation ⟨x⟩ → y exists iff the
// weights add up. Fibres are orderings (associative) or singletons (commutative).
std::shared_ptr<TableMulticat> graded_multicat(int A, unsigned seed);

MulticatPtr endo_operad_of_object(MulticatPtr M, const Term& c);

struct Multifunctor {
  MulticatPtr source;
  MulticatPtr target;
  std::function<Term(const Term&)> on_object;
  std::function<Term(const Term&)> on_op;
};

Multifunctor identity_multifunctor(MulticatPtr M);
Multifunctor compose_multifunctors(const Multifunctor& Q, const Multifunctor& P);  // Q∘P
// The unique multifunctor into a terminal multicategory.
Multifunctor to_terminal(MulticatPtr M, MulticatPtr terminal);

Report validate_multifunctor(const Multifunctor& H, int bound);

struct MultiNat {
  Multifunctor from;
  Multifunctor to;
  std::function<Term(const Term&)> component;  // c ↦ unary op (from c) → (to c)
};

MultiNat identity_multinat(const Multifunctor& P);
MultiNat multinat_vcomp(const MultiNat& beta, const MultiNat& theta);
// θ′ ∗ θ for θ: P ⇒ Q on M → N and θ′: P′ ⇒ Q′ on N → L.
MultiNat multinat_hcomp(const MultiNat& theta2, const MultiNat& theta);

Report validate_multinat(const MultiNat& theta, int bound);

}  // namespace pmc
