#pragma once

#include <functional>
#include <memory>

#include "permmult/multicat.hpp"
#include "permmult/report.hpp"
#include "permmult/term.hpp"

namespace pmc {

class Category {
 public:
  virtual ~Category() = default;

  virtual std::string name() const { return "category"; }
  virtual Terms objects() const = 0;  // finite window
  virtual bool has_object(const Term& x) const;
  virtual Terms hom(const Term& x, const Term& y) const = 0;  // sorted
  virtual Term source(const Term& f) const = 0;
  virtual Term target(const Term& f) const = 0;
  virtual Term identity(const Term& x) const = 0;
  virtual Term compose(const Term& g, const Term& f) const = 0;  // g∘f
};

using CategoryPtr = std::shared_ptr<const Category>;

// Composes right to left: chain(C, {h, g, f}) = h∘g∘f. Throws Malformed on a type mismatch.
Term chain(const Category& C, const Terms& fs);

// Identity, associativity, typing and closure of composition over the window.
Report validate_category(const Category& C);

// Unary operations of M with γ as composition.
CategoryPtr underlying_category(MulticatPtr M);

}  // namespace pmc
