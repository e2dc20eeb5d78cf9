#include "permmult/category.hpp"

#include <algorithm>

namespace pmc {

bool Category::has_object(const Term& x) const {
  auto objs = objects();
  return std::find(objs.begin(), objs.end(), x) != objs.end();
}

Term chain(const Category& C, const Terms& fs) {
  if (fs.empty()) throw Malformed("chain: empty composite");
  Term acc = fs.back();
  for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) {
    if (C.target(acc) != C.source(*it))
      throw Malformed("chain: " + show(*it) + " does not compose after " + show(acc));
    acc = C.compose(*it, acc);
  }
  return acc;
}

Report validate_category(const Category& C) {
  Report rep("category " + C.name());
  auto objs = C.objects();
  for (const auto& x : objs)
    rep.guarded("identity", [&] {
      auto id = C.identity(x);
      rep.expect("identity", C.source(id) == x && C.target(id) == x,
                 [&] { return Term{{"object", x}, {"identity", id}}; });
    });
  for (const auto& x : objs)
    for (const auto& y : objs)
      for (const auto& f : C.hom(x, y)) {
        rep.guarded("typing", [&] {
          rep.expect("typing", C.source(f) == x && C.target(f) == y,
                     [&] { return Term{{"morphism", f}, {"listed_in", tuple_of(x, y)}}; });
        });
        rep.guarded("unity", [&] {
          auto l = C.compose(C.identity(y), f);
          auto r = C.compose(f, C.identity(x));
          rep.expect("unity", l == f && r == f,
                     [&] { return Term{{"morphism", f}, {"left", l}, {"right", r}}; });
        });
        for (const auto& z : objs)
          for (const auto& g : C.hom(y, z)) {
            rep.guarded("closure", [&] {
              auto gf = C.compose(g, f);
              auto hz = C.hom(x, z);
              rep.expect("closure", std::find(hz.begin(), hz.end(), gf) != hz.end(),
                         [&] { return Term{{"f", f}, {"g", g}, {"composite", gf}}; });
            });
            for (const auto& w : objs)
              for (const auto& h : C.hom(z, w))
                rep.guarded("associativity", [&] {
                  auto lhs = C.compose(h, C.compose(g, f));
                  auto rhs = C.compose(C.compose(h, g), f);
                  rep.expect("associativity", lhs == rhs, [&] {
                    return Term{{"f", f}, {"g", g}, {"h", h}, {"lhs", lhs}, {"rhs", rhs}};
                  });
                });
          }
      }
  return rep;
}

namespace {

class UnaryCategory : public Category {
 public:
  explicit UnaryCategory(MulticatPtr M) : M_(std::move(M)) {}
  std::string name() const override { return "unary(" + M_->name() + ")"; }
  Terms objects() const override { return M_->objects(); }
  Terms hom(const Term& x, const Term& y) const override { return M_->ops({x}, y); }
  Term source(const Term& f) const override {
    auto sig = M_->signature(f);
    if (sig.arity() != 1) throw Malformed("not a unary operation: " + show(f));
    return sig.inputs[0];
  }
  Term target(const Term& f) const override { return M_->signature(f).output; }
  Term identity(const Term& x) const override { return M_->unit(x); }
  Term compose(const Term& g, const Term& f) const override { return M_->gamma(g, {f}); }

 private:
  MulticatPtr M_;
};

}  // namespace

CategoryPtr underlying_category(MulticatPtr M) { return std::make_shared<UnaryCategory>(std::move(M)); }

}  // namespace pmc
