#include "permmult/ring.hpp"

#include <algorithm>

namespace pmc {

namespace {

// Every k-tuple over the window, first coordinate fastest.
void for_each_objects(const Terms& objs, int k, const std::function<void(const Terms&)>& fn) {
  if (objs.empty()) return;
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    Terms t;
    for (int i = 0; i < k; ++i) t.push_back(objs[idx[i]]);
    fn(t);
    int i = 0;
    for (; i < k; ++i) {
      if (++idx[i] < objs.size()) break;
      idx[i] = 0;
    }
    if (i == k) return;
  }
}

void typed(const Category& C, const Term& f, const Term& src, const Term& tgt) {
  if (C.source(f) != src || C.target(f) != tgt)
    throw Malformed(show(f) + " is not a morphism " + show(src) + " -> " + show(tgt));
}

// Records l == r under name; a typing error inside counts as a violation.
void square(Report& rep, const std::string& name, const Term& where, const std::function<Term()>& l,
            const std::function<Term()>& r) {
  rep.guarded(name, [&] {
    auto a = l(), b = r();
    rep.expect(name, a == b, [&] { return Term{{"objects", where}, {"lhs", a}, {"rhs", b}}; });
  });
}

// Shorthands over a ring category.
struct Ring {
  const PermCat& C;
  const StrictMonoidal& M;
  const Factorization& dl;
  const Factorization& dr;

  Term p(const Term& x, const Term& y) const { return C.sum_obj(x, y); }
  Term t(const Term& x, const Term& y) const { return M.on_objects(x, y); }
  Term pm(const Term& f, const Term& g) const { return C.sum_mor(f, g); }
  Term tm(const Term& f, const Term& g) const { return M.on_morphisms(f, g); }
  Term id(const Term& x) const { return C.identity(x); }
  Term zero() const { return C.unit_object(); }
  Term one() const { return M.unit; }
  Term L(const Term& a, const Term& b, const Term& c) const {
    auto f = dl(a, b, c);
    typed(C, f, p(t(a, c), t(b, c)), t(p(a, b), c));
    return f;
  }
  Term R(const Term& a, const Term& b, const Term& c) const {
    auto f = dr(a, b, c);
    typed(C, f, p(t(a, b), t(a, c)), t(a, p(b, c)));
    return f;
  }
  Term ch(const Terms& fs) const { return chain(C, fs); }
};

void ring_axioms(Report& rep, const Ring& R, bool& tight) {
  const auto& C = R.C;
  auto objs = C.objects();
  auto mors = all_morphisms(C);
  auto z = R.zero(), u = R.one();

  // factorizations are natural
  for_each_objects(objs, 3, [&](const Terms& X) {
    rep.guarded("factorization-typing", [&] {
      auto l = R.L(X[0], X[1], X[2]), r = R.R(X[0], X[1], X[2]);
      rep.pass_instance("factorization-typing");
      if (!is_invertible(C, l) || !is_invertible(C, r)) tight = false;
    });
  });
  for (const auto& f : mors)
    for (const auto& g : mors)
      for (const auto& h : mors) {
        auto a = C.source(f), b = C.source(g), c = C.source(h);
        auto a2 = C.target(f), b2 = C.target(g), c2 = C.target(h);
        Term w = tuple_of(f, g, h);
        square(rep, "factorization-naturality", w,
               [&] { return R.ch({R.L(a2, b2, c2), R.pm(R.tm(f, h), R.tm(g, h))}); },
               [&] { return R.ch({R.tm(R.pm(f, g), h), R.L(a, b, c)}); });
        square(rep, "factorization-naturality", w,
               [&] { return R.ch({R.R(a2, b2, c2), R.pm(R.tm(f, g), R.tm(f, h))}); },
               [&] { return R.ch({R.tm(f, R.pm(g, h)), R.R(a, b, c)}); });
      }

  for (const auto& x : objs) {
    square(rep, "multiplicative-zero", x, [&] { return R.t(z, x); }, [&] { return z; });
    square(rep, "multiplicative-zero", x, [&] { return R.t(x, z); }, [&] { return z; });
  }
  for (const auto& f : mors) {
    square(rep, "multiplicative-zero", f, [&] { return R.tm(R.id(z), f); }, [&] { return R.id(z); });
    square(rep, "multiplicative-zero", f, [&] { return R.tm(f, R.id(z)); }, [&] { return R.id(z); });
  }

  for_each_objects(objs, 2, [&](const Terms& X) {
    const auto &a = X[0], &b = X[1];
    Term w = to_term(X);
    square(rep, "zero-factorization", w, [&] { return R.L(z, a, b); }, [&] { return R.id(R.t(a, b)); });
    square(rep, "zero-factorization", w, [&] { return R.L(a, z, b); }, [&] { return R.id(R.t(a, b)); });
    square(rep, "zero-factorization", w, [&] { return R.L(a, b, z); }, [&] { return R.id(z); });
    square(rep, "zero-factorization", w, [&] { return R.R(z, a, b); }, [&] { return R.id(z); });
    square(rep, "zero-factorization", w, [&] { return R.R(a, z, b); }, [&] { return R.id(R.t(a, b)); });
    square(rep, "zero-factorization", w, [&] { return R.R(a, b, z); }, [&] { return R.id(R.t(a, b)); });
    square(rep, "unit-factorization", w, [&] { return R.L(a, b, u); }, [&] { return R.id(R.p(a, b)); });
    square(rep, "unit-factorization", w, [&] { return R.R(u, a, b); }, [&] { return R.id(R.p(a, b)); });
  });

  for_each_objects(objs, 3, [&](const Terms& X) {
    const auto &a = X[0], &b = X[1], &c = X[2];
    Term w = to_term(X);
    square(rep, "symmetry-factorization", w,
           [&] { return R.ch({R.tm(C.symmetry(a, b), R.id(c)), R.L(a, b, c)}); },
           [&] { return R.ch({R.L(b, a, c), C.symmetry(R.t(a, c), R.t(b, c))}); });
    square(rep, "symmetry-factorization", w,
           [&] { return R.ch({R.tm(R.id(a), C.symmetry(b, c)), R.R(a, b, c)}); },
           [&] { return R.ch({R.R(a, c, b), C.symmetry(R.t(a, b), R.t(a, c))}); });
  });

  for_each_objects(objs, 4, [&](const Terms& X) {
    Term w = to_term(X);
    {
      const auto &a = X[0], &a1 = X[1], &a2 = X[2], &b = X[3];
      square(rep, "internal-factorization", w,
             [&] { return R.ch({R.L(R.p(a, a1), a2, b), R.pm(R.L(a, a1, b), R.id(R.t(a2, b)))}); },
             [&] { return R.ch({R.L(a, R.p(a1, a2), b), R.pm(R.id(R.t(a, b)), R.L(a1, a2, b))}); });
    }
    {
      const auto &a = X[0], &b = X[1], &b1 = X[2], &b2 = X[3];
      square(rep, "internal-factorization", w,
             [&] { return R.ch({R.R(a, R.p(b, b1), b2), R.pm(R.R(a, b, b1), R.id(R.t(a, b2)))}); },
             [&] { return R.ch({R.R(a, b, R.p(b1, b2)), R.pm(R.id(R.t(a, b)), R.R(a, b1, b2))}); });
    }
    {
      const auto &a = X[0], &a1 = X[1], &b = X[2], &c = X[3];
      square(rep, "external-factorization", w, [&] { return R.L(a, a1, R.t(b, c)); },
             [&] { return R.ch({R.tm(R.L(a, a1, b), R.id(c)), R.L(R.t(a, b), R.t(a1, b), c)}); });
    }
    {
      const auto &a = X[0], &b = X[1], &b1 = X[2], &c = X[3];
      square(rep, "external-factorization", w,
             [&] { return R.ch({R.tm(R.R(a, b, b1), R.id(c)), R.L(R.t(a, b), R.t(a, b1), c)}); },
             [&] { return R.ch({R.tm(R.id(a), R.L(b, b1, c)), R.R(a, R.t(b, c), R.t(b1, c))}); });
    }
    {
      const auto &a = X[0], &b = X[1], &c = X[2], &c1 = X[3];
      square(rep, "external-factorization", w, [&] { return R.R(R.t(a, b), c, c1); },
             [&] { return R.ch({R.tm(R.id(a), R.R(b, c, c1)), R.R(a, R.t(b, c), R.t(b, c1))}); });
    }
    {
      const auto &a = X[0], &a1 = X[1], &b = X[2], &b1 = X[3];
      square(rep, "two-by-two-factorization", w,
             [&] { return R.ch({R.L(a, a1, R.p(b, b1)), R.pm(R.R(a, b, b1), R.R(a1, b, b1))}); },
             [&] {
               auto mid = C.sum_mors({R.id(R.t(a, b)), C.symmetry(R.t(a, b1), R.t(a1, b)), R.id(R.t(a1, b1))});
               return R.ch({R.R(R.p(a, a1), b, b1), R.pm(R.L(a, a1, b), R.L(a, a1, b1)), mid});
             });
    }
  });
}

}  // namespace

Report validate_strict_monoidal(const Category& C, const StrictMonoidal& M) {
  Report rep("strict monoidal structure");
  auto objs = C.objects();
  auto mors = all_morphisms(C);
  auto t = [&](const Term& x, const Term& y) { return M.on_objects(x, y); };
  auto tm = [&](const Term& f, const Term& g) { return M.on_morphisms(f, g); };

  rep.guarded("unit", [&] { rep.expect("unit", C.has_object(M.unit), [&] { return Term{{"unit", M.unit}}; }); });
  for_each_objects(objs, 2, [&](const Terms& X) {
    square(rep, "functor", to_term(X), [&] { return tm(C.identity(X[0]), C.identity(X[1])); },
           [&] { return C.identity(t(X[0], X[1])); });
  });
  for (const auto& f : mors)
    for (const auto& g : mors) {
      rep.guarded("functor", [&] {
        typed(C, tm(f, g), t(C.source(f), C.source(g)), t(C.target(f), C.target(g)));
        rep.pass_instance("functor");
      });
      for (const auto& f2 : mors)
        if (C.source(f2) == C.target(f))
          for (const auto& g2 : mors)
            if (C.source(g2) == C.target(g))
              square(rep, "functor", tuple_of(f, g, f2, g2), [&] { return tm(C.compose(f2, f), C.compose(g2, g)); },
                     [&] { return C.compose(tm(f2, g2), tm(f, g)); });
    }
  for_each_objects(objs, 3, [&](const Terms& X) {
    square(rep, "associativity", to_term(X), [&] { return t(t(X[0], X[1]), X[2]); },
           [&] { return t(X[0], t(X[1], X[2])); });
  });
  for (const auto& f : mors)
    for (const auto& g : mors)
      for (const auto& h : mors)
        square(rep, "associativity", tuple_of(f, g, h), [&] { return tm(tm(f, g), h); },
               [&] { return tm(f, tm(g, h)); });
  for (const auto& x : objs) {
    square(rep, "unit", x, [&] { return t(M.unit, x); }, [&] { return x; });
    square(rep, "unit", x, [&] { return t(x, M.unit); }, [&] { return x; });
  }
  for (const auto& f : mors) {
    square(rep, "unit", f, [&] { return tm(C.identity(M.unit), f); }, [&] { return f; });
    square(rep, "unit", f, [&] { return tm(f, C.identity(M.unit)); }, [&] { return f; });
  }
  return rep;
}

Report validate_ring_category(const RingCategory& Rc) {
  Report rep("ring category");
  rep.merge(validate_permcat(*Rc.additive), "additive/");
  rep.merge(validate_strict_monoidal(*Rc.additive, Rc.mult), "multiplicative/");
  bool tight = true;
  ring_axioms(rep, Ring{*Rc.additive, Rc.mult, Rc.left, Rc.right}, tight);
  rep.note("tight", tight);
  return rep;
}

namespace {

// (C, ⊗, 1, ξ⊗) presented as a permutative category, for reuse of its validator.
class ProductView : public PermCat {
 public:
  ProductView(PermCatPtr C, StrictMonoidal M, Braiding b) : C_(std::move(C)), M_(std::move(M)), b_(std::move(b)) {}
  std::string name() const override { return C_->name() + " under the product"; }
  Terms objects() const override { return C_->objects(); }
  bool has_object(const Term& x) const override { return C_->has_object(x); }
  Terms hom(const Term& x, const Term& y) const override { return C_->hom(x, y); }
  Term source(const Term& f) const override { return C_->source(f); }
  Term target(const Term& f) const override { return C_->target(f); }
  Term identity(const Term& x) const override { return C_->identity(x); }
  Term compose(const Term& g, const Term& f) const override { return C_->compose(g, f); }
  Term unit_object() const override { return M_.unit; }
  Term sum_obj(const Term& x, const Term& y) const override { return M_.on_objects(x, y); }
  Term sum_mor(const Term& f, const Term& g) const override { return M_.on_morphisms(f, g); }
  Term symmetry(const Term& x, const Term& y) const override { return b_(x, y); }

 private:
  PermCatPtr C_;
  StrictMonoidal M_;
  Braiding b_;
};

}  // namespace

Report validate_bipermutative(const RingWithBraiding& B) {
  Report rep("bipermutative category");
  auto ring = validate_ring_category(B.ring);
  rep.merge(ring);
  rep.note("tight", ring.notes().value("tight", false));
  const auto& Rc = B.ring;
  const auto& C = *Rc.additive;
  rep.merge(validate_permcat(ProductView(Rc.additive, Rc.mult, B.braiding)), "multiplicative-permutative/");
  Ring R{C, Rc.mult, Rc.left, Rc.right};
  auto z = R.zero();
  for (const auto& a : C.objects())
    square(rep, "zero-symmetry", a, [&] { return B.braiding(a, z); }, [&] { return R.id(z); });
  for_each_objects(C.objects(), 3, [&](const Terms& X) {
    const auto &a = X[0], &b = X[1], &c = X[2];
    square(rep, "multiplicative-symmetry-factorization", to_term(X),
           [&] { return R.ch({B.braiding(R.p(a, b), c), R.L(a, b, c)}); },
           [&] { return R.ch({R.R(c, a, b), R.pm(B.braiding(a, c), B.braiding(b, c))}); });
  });
  return rep;
}

Report validate_braided_ring(const RingWithBraiding& B) {
  Report rep("braided ring category");
  auto ring = validate_ring_category(B.ring);
  rep.merge(ring);
  rep.note("tight", ring.notes().value("tight", false));
  const auto& Rc = B.ring;
  const auto& C = *Rc.additive;
  Ring R{C, Rc.mult, Rc.left, Rc.right};
  auto objs = C.objects();
  auto mors = all_morphisms(C);
  auto br = [&](const Term& x, const Term& y) {
    auto f = B.braiding(x, y);
    typed(C, f, R.t(x, y), R.t(y, x));
    return f;
  };

  for_each_objects(objs, 2, [&](const Terms& X) {
    rep.guarded("braiding-invertible", [&] {
      auto f = br(X[0], X[1]);
      rep.expect("braiding-invertible", is_invertible(C, f), [&] { return Term{{"objects", to_term(X)}, {"braiding", f}}; });
    });
  });
  for (const auto& f : mors)
    for (const auto& g : mors)
      square(rep, "braiding-naturality", tuple_of(f, g),
             [&] { return R.ch({br(C.target(f), C.target(g)), R.tm(f, g)}); },
             [&] { return R.ch({R.tm(g, f), br(C.source(f), C.source(g))}); });
  for_each_objects(objs, 3, [&](const Terms& X) {
    const auto &a = X[0], &b = X[1], &c = X[2];
    Term w = to_term(X);
    square(rep, "hexagon", w, [&] { return br(a, R.t(b, c)); },
           [&] { return R.ch({R.tm(R.id(b), br(a, c)), R.tm(br(a, b), R.id(c))}); });
    square(rep, "hexagon", w, [&] { return br(R.t(a, b), c); },
           [&] { return R.ch({R.tm(br(a, c), R.id(b)), R.tm(R.id(a), br(b, c))}); });
  });
  auto z = R.zero();
  for (const auto& a : objs) {
    square(rep, "zero-braiding", a, [&] { return B.braiding(a, z); }, [&] { return R.id(z); });
    square(rep, "zero-braiding", a, [&] { return B.braiding(z, a); }, [&] { return R.id(z); });
  }
  // each of the two stacked squares
  for_each_objects(objs, 3, [&](const Terms& X) {
    const auto &a = X[0], &b = X[1], &c = X[2];
    Term w = to_term(X);
    square(rep, "braiding-factorization", w, [&] { return R.ch({br(R.p(a, b), c), R.L(a, b, c)}); },
           [&] { return R.ch({R.R(c, a, b), R.pm(br(a, c), br(b, c))}); });
    square(rep, "braiding-factorization", w, [&] { return R.ch({br(c, R.p(a, b)), R.R(c, a, b)}); },
           [&] { return R.ch({R.L(a, b, c), R.pm(br(c, a), br(c, b))}); });
  });
  return rep;
}

Report validate_nfold_monoidal(const NFoldMonoidal& D) {
  Report rep("n-fold monoidal category");
  if (D.n() < 1) throw Malformed("n-fold monoidal: needs at least one product");
  const auto& C = *D.cat;
  for (int i = 1; i <= D.n(); ++i) {
    rep.merge(validate_strict_monoidal(C, D.products[i - 1]), "product " + std::to_string(i) + "/");
    square(rep, "common-unit", i, [&] { return D.products[i - 1].unit; }, [&] { return D.products[0].unit; });
  }
  auto objs = C.objects();
  auto mors = all_morphisms(C);
  const auto u = D.products[0].unit;
  auto t = [&](int i, const Term& x, const Term& y) { return D.products[i - 1].on_objects(x, y); };
  auto tm = [&](int i, const Term& f, const Term& g) { return D.products[i - 1].on_morphisms(f, g); };
  auto id = [&](const Term& x) { return C.identity(x); };
  auto ch = [&](const Terms& fs) { return chain(C, fs); };
  auto ex = [&](int i, int j, const Term& a, const Term& b, const Term& c, const Term& d) {
    auto f = D.exchange(i, j, a, b, c, d);
    typed(C, f, t(i, t(j, a, b), t(j, c, d)), t(j, t(i, a, c), t(i, b, d)));
    return f;
  };

  for (int i = 1; i <= D.n(); ++i)
    for (int j = i + 1; j <= D.n(); ++j) {
      std::string tag = " " + std::to_string(i) + "," + std::to_string(j);
      for_each_objects(objs, 4, [&](const Terms& X) {
        rep.guarded("exchange-typing", [&] {
          ex(i, j, X[0], X[1], X[2], X[3]);
          rep.pass_instance("exchange-typing");
        });
      });
      for (const auto& f : mors)
        for (const auto& g : mors)
          for (const auto& h : mors)
            for (const auto& k : mors) {
              auto s = [&](const Term& m) { return C.source(m); };
              auto e = [&](const Term& m) { return C.target(m); };
              square(rep, "exchange-naturality", tuple_of(tag, f, g, h, k),
                     [&] { return ch({ex(i, j, e(f), e(g), e(h), e(k)), tm(i, tm(j, f, g), tm(j, h, k))}); },
                     [&] { return ch({tm(j, tm(i, f, h), tm(i, g, k)), ex(i, j, s(f), s(g), s(h), s(k))}); });
            }
      for_each_objects(objs, 2, [&](const Terms& X) {
        const auto &a = X[0], &b = X[1];
        Term w = tuple_of(tag, a, b);
        square(rep, "internal-unity", w, [&] { return ex(i, j, a, b, u, u); }, [&] { return id(t(j, a, b)); });
        square(rep, "internal-unity", w, [&] { return ex(i, j, u, u, a, b); }, [&] { return id(t(j, a, b)); });
        square(rep, "external-unity", w, [&] { return ex(i, j, a, u, b, u); }, [&] { return id(t(i, a, b)); });
        square(rep, "external-unity", w, [&] { return ex(i, j, u, a, u, b); }, [&] { return id(t(i, a, b)); });
      });
      for_each_objects(objs, 6, [&](const Terms& X) {
        Term w = tuple_of(tag, to_term(X));
        {
          const auto &a = X[0], &a1 = X[1], &b = X[2], &b1 = X[3], &c = X[4], &c1 = X[5];
          square(rep, "internal-associativity", w,
                 [&] { return ch({ex(i, j, a, a1, t(i, b, c), t(i, b1, c1)), tm(i, id(t(j, a, a1)), ex(i, j, b, b1, c, c1))}); },
                 [&] { return ch({ex(i, j, t(i, a, b), t(i, a1, b1), c, c1), tm(i, ex(i, j, a, a1, b, b1), id(t(j, c, c1)))}); });
        }
        {
          const auto &a = X[0], &a1 = X[1], &a2 = X[2], &b = X[3], &b1 = X[4], &b2 = X[5];
          square(rep, "external-associativity", w,
                 [&] { return ch({tm(j, id(t(i, a, b)), ex(i, j, a1, a2, b1, b2)), ex(i, j, a, t(j, a1, a2), b, t(j, b1, b2))}); },
                 [&] { return ch({tm(j, ex(i, j, a, a1, b, b1), id(t(i, a2, b2))), ex(i, j, t(j, a, a1), a2, t(j, b, b1), b2)}); });
        }
      });
      for (int k = j + 1; k <= D.n(); ++k) {
        std::string tag3 = tag + "," + std::to_string(k);
        for_each_objects(objs, 8, [&](const Terms& X) {
          const auto &a = X[0], &a1 = X[1], &b = X[2], &b1 = X[3], &c = X[4], &c1 = X[5], &d = X[6], &d1 = X[7];
          square(rep, "triple-exchange", tuple_of(tag3, to_term(X)),
                 [&] {
                   return ch({tm(k, ex(i, j, a, b, c, d), ex(i, j, a1, b1, c1, d1)),
                              ex(i, k, t(j, a, b), t(j, a1, b1), t(j, c, d), t(j, c1, d1)),
                              tm(i, ex(j, k, a, a1, b, b1), ex(j, k, c, c1, d, d1))});
                 },
                 [&] {
                   return ch({ex(j, k, t(i, a, c), t(i, a1, c1), t(i, b, d), t(i, b1, d1)),
                              tm(j, ex(i, k, a, a1, c, c1), ex(i, k, b, b1, d, d1)),
                              ex(i, j, t(k, a, a1), t(k, b, b1), t(k, c, c1), t(k, d, d1))});
                 });
        });
      }
    }
  return rep;
}

RingCategory EnMonoidal::ring(int i) const {
  return RingCategory{additive, products.at(i - 1), left.at(i - 1), right.at(i - 1)};
}

NFoldMonoidal EnMonoidal::nfold() const { return NFoldMonoidal{additive, products, exchange}; }

Report validate_en_monoidal(const EnMonoidal& D) {
  Report rep("E_n-monoidal category");
  if (D.n() < 1) throw Malformed("E_n-monoidal: needs at least one product");
  if (static_cast<int>(D.left.size()) != D.n() || static_cast<int>(D.right.size()) != D.n())
    throw Malformed("E_n-monoidal: one pair of factorizations per product");
  bool tight = true;
  for (int i = 1; i <= D.n(); ++i) {
    auto r = validate_ring_category(D.ring(i));
    tight = tight && r.notes().value("tight", false);
    rep.merge(r, "ring " + std::to_string(i) + "/");
  }
  rep.merge(validate_nfold_monoidal(D.nfold()), "n-fold/");
  rep.note("tight", tight);

  const auto& C = *D.additive;
  auto objs = C.objects();
  auto z = C.unit_object();
  auto p = [&](const Term& x, const Term& y) { return C.sum_obj(x, y); };
  auto pm = [&](const Term& f, const Term& g) { return C.sum_mor(f, g); };
  auto t = [&](int i, const Term& x, const Term& y) { return D.products[i - 1].on_objects(x, y); };
  auto tm = [&](int i, const Term& f, const Term& g) { return D.products[i - 1].on_morphisms(f, g); };
  auto id = [&](const Term& x) { return C.identity(x); };
  auto ch = [&](const Terms& fs) { return chain(C, fs); };
  auto ex = [&](int i, int j, const Term& a, const Term& b, const Term& c, const Term& d) {
    return D.exchange(i, j, a, b, c, d);
  };
  auto L = [&](int i, const Term& a, const Term& b, const Term& c) { return D.left[i - 1](a, b, c); };
  auto R = [&](int i, const Term& a, const Term& b, const Term& c) { return D.right[i - 1](a, b, c); };

  for (int i = 1; i <= D.n(); ++i)
    for (int j = i + 1; j <= D.n(); ++j) {
      std::string tag = std::to_string(i) + "," + std::to_string(j);
      for_each_objects(objs, 4, [&](const Terms& X) {
        if (std::find(X.begin(), X.end(), z) == X.end()) return;
        square(rep, "zero-exchange", tuple_of(tag, to_term(X)), [&] { return ex(i, j, X[0], X[1], X[2], X[3]); },
               [&] { return id(z); });
      });
      for_each_objects(objs, 5, [&](const Terms& X) {
        const auto &a = X[0], &b = X[1], &c = X[2], &d = X[3], &v = X[4];
        Term w = tuple_of(tag, to_term(X));
        // v is the extra summand: A′, B′, C′ or D′ in turn
        square(rep, "exchange-factorization", w,
               [&] { return ch({tm(j, L(i, a, v, c), id(t(i, b, d))), L(j, t(i, a, c), t(i, v, c), t(i, b, d)),
                                pm(ex(i, j, a, b, c, d), ex(i, j, v, b, c, d))}); },
               [&] { return ch({ex(i, j, p(a, v), b, c, d), tm(i, L(j, a, v, b), id(t(j, c, d))),
                                L(i, t(j, a, b), t(j, v, b), t(j, c, d))}); });
        square(rep, "exchange-factorization", w,
               [&] { return ch({tm(j, id(t(i, a, c)), L(i, b, v, d)), R(j, t(i, a, c), t(i, b, d), t(i, v, d)),
                                pm(ex(i, j, a, b, c, d), ex(i, j, a, v, c, d))}); },
               [&] { return ch({ex(i, j, a, p(b, v), c, d), tm(i, R(j, a, b, v), id(t(j, c, d))),
                                L(i, t(j, a, b), t(j, a, v), t(j, c, d))}); });
        square(rep, "exchange-factorization", w,
               [&] { return ch({tm(j, R(i, a, c, v), id(t(i, b, d))), L(j, t(i, a, c), t(i, a, v), t(i, b, d)),
                                pm(ex(i, j, a, b, c, d), ex(i, j, a, b, v, d))}); },
               [&] { return ch({ex(i, j, a, b, p(c, v), d), tm(i, id(t(j, a, b)), L(j, c, v, d)),
                                R(i, t(j, a, b), t(j, c, d), t(j, v, d))}); });
        square(rep, "exchange-factorization", w,
               [&] { return ch({tm(j, id(t(i, a, c)), R(i, b, d, v)), R(j, t(i, a, c), t(i, b, d), t(i, b, v)),
                                pm(ex(i, j, a, b, c, d), ex(i, j, a, b, c, v))}); },
               [&] { return ch({ex(i, j, a, b, c, p(d, v)), tm(i, id(t(j, a, b)), R(j, c, d, v)),
                                R(i, t(j, a, b), t(j, c, d), t(j, c, v))}); });
      });
    }
  return rep;
}

RingCategory discrete_semiring(const std::string& name, const Terms& elements, const Term& zero, const Term& one,
                               const std::function<Term(const Term&, const Term&)>& add,
                               const std::function<Term(const Term&, const Term&)>& mul) {
  auto C = discrete_permcat(name, elements, zero, add);
  PermCatPtr Cp = C;
  StrictMonoidal M{one, mul, [Cp, mul](const Term& f, const Term& g) {
                     return Cp->identity(mul(Cp->source(f), Cp->source(g)));
                   }};
  auto left = [Cp, add, mul](const Term& a, const Term& b, const Term& c) { return Cp->identity(mul(add(a, b), c)); };
  auto right = [Cp, add, mul](const Term& a, const Term& b, const Term& c) { return Cp->identity(mul(a, add(b, c))); };
  return RingCategory{Cp, M, left, right};
}

RingWithBraiding discrete_bipermutative(const RingCategory& R) {
  auto C = R.additive;
  auto M = R.mult;
  return RingWithBraiding{R, [C, M](const Term& x, const Term& y) { return C->identity(M.on_objects(x, y)); }};
}

EnMonoidal discrete_en(const RingCategory& R, int n) {
  EnMonoidal D;
  D.additive = R.additive;
  D.products.assign(n, R.mult);
  D.left.assign(n, R.left);
  D.right.assign(n, R.right);
  auto C = R.additive;
  auto M = R.mult;
  D.exchange = [C, M](int, int, const Term& a, const Term& b, const Term& c, const Term& d) {
    return C->identity(M.on_objects(M.on_objects(a, c), M.on_objects(b, d)));
  };
  return D;
}

RingCategory boolean_semiring() {
  return discrete_semiring(
      "boolean", {0, 1}, 0, 1, [](const Term& a, const Term& b) { return Term(a.get<int>() | b.get<int>()); },
      [](const Term& a, const Term& b) { return Term(a.get<int>() & b.get<int>()); });
}

RingCategory truncated_semiring(int top) {
  Terms els;
  for (int i = 0; i <= top; ++i) els.push_back(i);
  return discrete_semiring(
      "truncated" + std::to_string(top), els, 0, std::min(1, top),
      [top](const Term& a, const Term& b) { return Term(std::min(a.get<int>() + b.get<int>(), top)); },
      [top](const Term& a, const Term& b) { return Term(std::min(a.get<int>() * b.get<int>(), top)); });
}

RingCategory modular_semiring(int m) {
  Terms els;
  for (int i = 0; i < m; ++i) els.push_back(i);
  return discrete_semiring(
      "Z/" + std::to_string(m), els, 0, 1 % m, [m](const Term& a, const Term& b) { return Term((a.get<int>() + b.get<int>()) % m); },
      [m](const Term& a, const Term& b) { return Term((a.get<int>() * b.get<int>()) % m); });
}

}  // namespace pmc
