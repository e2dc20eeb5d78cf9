#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace pmc {

// Objects, operations and morphisms of every structure are plain JSON values.
// Equality is structural; json's operator< gives the canonical order.
using Term = nlohmann::json;
using Terms = std::vector<Term>;

inline std::string show(const Term& t) { return t.dump(); }

inline Term to_term(const Terms& ts) {
  Term out = Term::array();
  for (const auto& t : ts) out.push_back(t);
  return out;
}

inline Terms to_terms(const Term& t) {
  Terms out;
  for (const auto& x : t) out.push_back(x);
  return out;
}

// Always an array; a braced pair of values may otherwise be read as an object.
template <class... Ts>
Term tuple_of(Ts&&... xs) {
  Term t = Term::array();
  (t.push_back(Term(std::forward<Ts>(xs))), ...);
  return t;
}

inline Terms concat(const Terms& a, const Terms& b) {
  Terms out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

#define PMC_ERROR(Name, tag)                                            \
  class Name : public Error {                                           \
   public:                                                              \
    using Error::Error;                                                 \
    const char* kind() const noexcept override { return tag; }          \
  };

PMC_ERROR(DegreeMismatch, "degree-mismatch")
PMC_ERROR(BoundExceeded, "bound-exceeded")
PMC_ERROR(Malformed, "malformed-structure")
PMC_ERROR(UnresolvedReference, "unresolved-reference")
PMC_ERROR(Unsupported, "unsupported-fragment")
PMC_ERROR(ParseError, "syntax-error")
PMC_ERROR(OutOfRange, "out-of-range")

#undef PMC_ERROR

}  // namespace pmc
