#pragma once

#include "permmult/tensor.hpp"

namespace pmc {

// S preserves identities and composition over the windows; validate_nlinear under "multilinear/".
Report check_s_functor(GridTensorPtr T, int max_len = 2);

// S ∘ ∏F̄H_i = F̄(⊗H_i) ∘ S for the source and target functors of each θ_i, on objects,
// constraints and morphisms, and S⟨F̄θ_i⟩ = F̄(⊗θ_i) ∘ S on components.
Report check_s_naturality(const std::vector<MultiNat>& thetas, int max_len = 2, int max_arity = 4);

// F(1·σ) against F(1)·σ for the swap on a two-factor tensor: equal up to the grid
// reordering, and equal outright when one side of each grid is at most a singleton.
Report check_f_symmetry(GridTensorPtr T, int max_len = 2);

// F(1_M) and F of the one-factor collapse are identities.
Report check_f_unit(MulticatPtr M, int max_len = 2);

// F(outer ∘ (⊗inner) ∘ regroup) = γ(F outer; F inner_1, …) with each inner functor out of a
// GridTensor. Objects and constraints exhaustively, morphisms on a seeded sample.
Report check_f_composition(const Multifunctor& outer, const std::vector<Multifunctor>& inner, std::size_t samples,
                           unsigned seed = 7, int max_len = 2, int max_arity = 4);

// Calls fn on every tuple with one entry from each list, first list slowest.
void for_each_product(const std::vector<Terms>& lists, const std::function<void(const Terms&)>& fn);

}  // namespace pmc
