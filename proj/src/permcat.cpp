#include "permmult/permcat.hpp"

#include <algorithm>

namespace pmc {

Term PermCat::sum_objs(const Terms& xs) const {
  Term acc = unit_object();
  for (const auto& x : xs) acc = sum_obj(acc, x);
  return acc;
}

Term PermCat::sum_mors(const Terms& fs) const {
  Term acc = identity(unit_object());
  for (const auto& f : fs) acc = sum_mor(acc, f);
  return acc;
}

// ---- tables ----

TablePermCat::TablePermCat(std::string name, Terms objects, Term unit)
    : name_(std::move(name)), objects_(std::move(objects)), unit_(std::move(unit)) {}

namespace {

const Term& lookup(const std::map<Term, Term>& table, const Term& key, const char* what) {
  auto it = table.find(key);
  if (it == table.end()) throw Malformed(std::string(what) + " undefined at " + show(key));
  return it->second;
}

}  // namespace

Terms TablePermCat::hom(const Term& x, const Term& y) const {
  auto it = homs_.find(tuple_of(x, y));
  return it == homs_.end() ? Terms{} : it->second;
}

Term TablePermCat::source(const Term& f) const {
  auto it = mors_.find(f);
  if (it == mors_.end()) throw UnresolvedReference("unknown morphism " + show(f));
  return it->second.first;
}

Term TablePermCat::target(const Term& f) const {
  auto it = mors_.find(f);
  if (it == mors_.end()) throw UnresolvedReference("unknown morphism " + show(f));
  return it->second.second;
}

Term TablePermCat::identity(const Term& x) const {
  auto it = ids_.find(x);
  if (it == ids_.end()) throw UnresolvedReference("no identity at " + show(x));
  return it->second;
}

Term TablePermCat::compose(const Term& g, const Term& f) const {
  if (target(f) != source(g)) throw Malformed("not composable: " + show(g) + " after " + show(f));
  return lookup(comp_, tuple_of(g, f), "composite");
}

Term TablePermCat::sum_obj(const Term& x, const Term& y) const {
  return lookup(sobj_, tuple_of(x, y), "sum of objects");
}

Term TablePermCat::sum_mor(const Term& f, const Term& g) const {
  source(f), source(g);
  return lookup(smor_, tuple_of(f, g), "sum of morphisms");
}

Term TablePermCat::symmetry(const Term& x, const Term& y) const {
  return lookup(sym_, tuple_of(x, y), "symmetry");
}

void TablePermCat::add_morphism(const Term& id, const Term& src, const Term& tgt) {
  auto old = mors_.find(id);
  if (old != mors_.end()) {
    auto& v = homs_[Term{old->second.first, old->second.second}];
    v.erase(std::remove(v.begin(), v.end(), id), v.end());
  }
  mors_[id] = {src, tgt};
  auto& v = homs_[tuple_of(src, tgt)];
  v.insert(std::lower_bound(v.begin(), v.end(), id), id);
}

void TablePermCat::set_identity(const Term& x, const Term& f) {
  source(f);
  ids_[x] = f;
}

void TablePermCat::set_compose(const Term& g, const Term& f, const Term& gf) {
  source(g), source(f), source(gf);
  comp_[tuple_of(g, f)] = gf;
}

void TablePermCat::set_sum_obj(const Term& x, const Term& y, const Term& s) { sobj_[tuple_of(x, y)] = s; }

void TablePermCat::set_sum_mor(const Term& f, const Term& g, const Term& s) {
  source(f), source(g), source(s);
  smor_[tuple_of(f, g)] = s;
}

void TablePermCat::set_symmetry(const Term& x, const Term& y, const Term& m) {
  source(m);
  sym_[tuple_of(x, y)] = m;
}

// ---- windows ----

namespace {

class WindowPermCat : public PermCat {
 public:
  WindowPermCat(PermCatPtr C, Terms objs) : C_(std::move(C)), objs_(std::move(objs)) {}
  std::string name() const override { return C_->name(); }
  Terms objects() const override { return objs_; }
  Terms hom(const Term& x, const Term& y) const override { return C_->hom(x, y); }
  Term source(const Term& f) const override { return C_->source(f); }
  Term target(const Term& f) const override { return C_->target(f); }
  Term identity(const Term& x) const override { return C_->identity(x); }
  Term compose(const Term& g, const Term& f) const override { return C_->compose(g, f); }
  Term unit_object() const override { return C_->unit_object(); }
  Term sum_obj(const Term& x, const Term& y) const override { return C_->sum_obj(x, y); }
  Term sum_mor(const Term& f, const Term& g) const override { return C_->sum_mor(f, g); }
  Term symmetry(const Term& x, const Term& y) const override { return C_->symmetry(x, y); }

 private:
  PermCatPtr C_;
  Terms objs_;
};

}  // namespace

PermCatPtr with_window(PermCatPtr C, Terms objects) {
  return std::make_shared<WindowPermCat>(std::move(C), std::move(objects));
}

Terms all_morphisms(const Category& C) {
  Terms out;
  auto objs = C.objects();
  for (const auto& x : objs)
    for (const auto& y : objs)
      for (const auto& f : C.hom(x, y)) out.push_back(f);
  return out;
}

std::shared_ptr<TablePermCat> materialize_permcat(const PermCat& C) {
  auto objs = C.objects();
  auto T = std::make_shared<TablePermCat>(C.name(), objs, C.unit_object());
  auto mors = all_morphisms(C);
  for (const auto& f : mors) T->add_morphism(f, C.source(f), C.target(f));
  for (const auto& x : objs) T->set_identity(x, C.identity(x));
  for (const auto& f : mors)
    for (const auto& g : mors) {
      if (C.target(f) == C.source(g)) T->set_compose(g, f, C.compose(g, f));
      T->set_sum_mor(f, g, C.sum_mor(f, g));
    }
  for (const auto& x : objs)
    for (const auto& y : objs) {
      T->set_sum_obj(x, y, C.sum_obj(x, y));
      T->set_symmetry(x, y, C.symmetry(x, y));
    }
  return T;
}

// ---- fixtures ----

std::shared_ptr<TablePermCat> discrete_permcat(const std::string& name, const Terms& elements, const Term& unit,
                                               const std::function<Term(const Term&, const Term&)>& sum) {
  auto C = std::make_shared<TablePermCat>(name, elements, unit);
  auto id = [](const Term& x) { return Term("1@" + (x.is_string() ? x.get<std::string>() : x.dump())); };
  for (const auto& x : elements) {
    C->add_morphism(id(x), x, x);
    C->set_identity(x, id(x));
    C->set_compose(id(x), id(x), id(x));
  }
  for (const auto& x : elements)
    for (const auto& y : elements) {
      auto s = sum(x, y);
      C->set_sum_obj(x, y, s);
      if (std::find(elements.begin(), elements.end(), s) == elements.end()) continue;
      C->set_sum_mor(id(x), id(y), id(s));
      C->set_symmetry(x, y, id(s));
    }
  return C;
}

std::shared_ptr<TablePermCat> bool_permcat() {
  return discrete_permcat("bool", {0, 1}, 0, [](const Term& a, const Term& b) {
    return Term(a.get<int>() | b.get<int>());
  });
}

std::shared_ptr<TablePermCat> truncated_permcat(int top) {
  Terms els;
  for (int i = 0; i <= top; ++i) els.push_back(i);
  return discrete_permcat("truncated" + std::to_string(top), els, 0, [top](const Term& a, const Term& b) {
    return Term(std::min(a.get<int>() + b.get<int>(), top));
  });
}

std::shared_ptr<TablePermCat> sign_permcat() {
  auto C = std::make_shared<TablePermCat>("sign", Terms{0, 1}, 0);
  auto m = [](int x, bool plus) { return Term(std::to_string(x) + (plus ? "+" : "-")); };
  for (int x = 0; x < 2; ++x) {
    for (bool p : {true, false}) C->add_morphism(m(x, p), x, x);
    C->set_identity(x, m(x, true));
    for (bool p : {true, false})
      for (bool q : {true, false}) C->set_compose(m(x, p), m(x, q), m(x, p == q));
  }
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      C->set_sum_obj(x, y, (x + y) % 2);
      C->set_symmetry(x, y, m((x + y) % 2, !(x && y)));
      for (bool p : {true, false})
        for (bool q : {true, false}) C->set_sum_mor(m(x, p), m(y, q), m((x + y) % 2, p == q));
    }
  return C;
}

// ---- validation ----

namespace {

bool is_identity_mor(const Category& C, const Term& f) { return C.identity(C.source(f)) == f; }

void check_typed(const Category& C, const Term& f, const Term& src, const Term& tgt) {
  if (C.source(f) != src || C.target(f) != tgt)
    throw Malformed(show(f) + " is not a morphism " + show(src) + " -> " + show(tgt));
}

}  // namespace

Report validate_permcat(const PermCat& C) {
  Report rep("permutative category " + C.name());
  rep.merge(validate_category(C));
  auto objs = C.objects();
  auto mors = all_morphisms(C);
  auto e = C.unit_object();

  rep.guarded("sum-objects", [&] {
    rep.expect("sum-objects", C.has_object(e), [&] { return Term{{"unit_outside_window", e}}; });
  });
  for (const auto& x : objs) {
    rep.guarded("sum-objects", [&] {
      auto l = C.sum_obj(e, x), r = C.sum_obj(x, e);
      rep.expect("sum-objects", l == x && r == x, [&] { return Term{{"object", x}, {"left", l}, {"right", r}}; });
    });
    for (const auto& y : objs)
      for (const auto& z : objs)
        rep.guarded("sum-objects", [&] {
          auto l = C.sum_obj(C.sum_obj(x, y), z), r = C.sum_obj(x, C.sum_obj(y, z));
          rep.expect("sum-objects", l == r, [&] { return Term{{"objects", tuple_of(x, y, z)}, {"lhs", l}, {"rhs", r}}; });
        });
  }

  auto one_e = Term();
  rep.guarded("sum-morphisms", [&] { one_e = C.identity(e); });
  for (const auto& f : mors) {
    rep.guarded("sum-morphisms", [&] {
      auto l = C.sum_mor(one_e, f), r = C.sum_mor(f, one_e);
      rep.expect("sum-morphisms", l == f && r == f, [&] { return Term{{"morphism", f}, {"left", l}, {"right", r}}; });
    });
    for (const auto& g : mors) {
      rep.guarded("sum-typing", [&] {
        auto s = C.sum_mor(f, g);
        bool ok = C.source(s) == C.sum_obj(C.source(f), C.source(g)) &&
                  C.target(s) == C.sum_obj(C.target(f), C.target(g));
        rep.expect("sum-typing", ok, [&] { return Term{{"f", f}, {"g", g}, {"sum", s}}; });
      });
    }
  }

  // Associativity with one non-identity factor; together with functoriality below
  // this gives associativity for all triples.
  for (const auto& f : mors)
    for (const auto& x : objs)
      for (const auto& y : objs) {
        Terms slots[3] = {{f, C.identity(x), C.identity(y)}, {C.identity(x), f, C.identity(y)},
                          {C.identity(x), C.identity(y), f}};
        for (const auto& t : slots)
          rep.guarded("sum-morphisms", [&] {
            auto l = C.sum_mor(C.sum_mor(t[0], t[1]), t[2]), r = C.sum_mor(t[0], C.sum_mor(t[1], t[2]));
            rep.expect("sum-morphisms", l == r, [&] { return Term{{"morphisms", to_term(t)}, {"lhs", l}, {"rhs", r}}; });
          });
      }

  for (const auto& x : objs)
    for (const auto& y : objs)
      rep.guarded("sum-functoriality", [&] {
        auto l = C.sum_mor(C.identity(x), C.identity(y));
        auto r = C.identity(C.sum_obj(x, y));
        rep.expect("sum-functoriality", l == r, [&] { return Term{{"objects", tuple_of(x, y)}, {"sum", l}, {"identity", r}}; });
      });
  // ⊕ is a bifunctor iff it is functorial in each slot and f⊕g = (f⊕1)∘(1⊕g) = (1⊕g)∘(f⊕1).
  std::vector<std::pair<Term, Term>> pairs;
  for (const auto& f : mors)
    for (const auto& g : mors)
      if (C.target(f) == C.source(g)) pairs.emplace_back(f, g);
  for (const auto& [f, g] : pairs)
    for (const auto& z : objs)
      rep.guarded("sum-functoriality", [&] {
        auto iz = C.identity(z);
        auto gf = C.compose(g, f);
        auto l1 = C.sum_mor(gf, iz), r1 = chain(C, {C.sum_mor(g, iz), C.sum_mor(f, iz)});
        auto l2 = C.sum_mor(iz, gf), r2 = chain(C, {C.sum_mor(iz, g), C.sum_mor(iz, f)});
        rep.expect("sum-functoriality", l1 == r1 && l2 == r2,
                   [&] { return Term{{"pair", tuple_of(f, g)}, {"object", z}, {"right_slot", l1 == r1}}; });
      });
  for (const auto& f : mors)
    for (const auto& g : mors)
      rep.guarded("sum-functoriality", [&] {
        auto x = C.source(f), x2 = C.target(f), y = C.source(g), y2 = C.target(g);
        auto s = C.sum_mor(f, g);
        auto a = chain(C, {C.sum_mor(f, C.identity(y2)), C.sum_mor(C.identity(x), g)});
        auto b = chain(C, {C.sum_mor(C.identity(x2), g), C.sum_mor(f, C.identity(y))});
        rep.expect("sum-functoriality", s == a && s == b,
                   [&] { return Term{{"f", f}, {"g", g}, {"sum", s}, {"first_then", a}, {"second_then", b}}; });
      });

  for (const auto& x : objs)
    for (const auto& y : objs) {
      rep.guarded("symmetry-typing", [&] {
        auto s = C.symmetry(x, y);
        bool ok = C.source(s) == C.sum_obj(x, y) && C.target(s) == C.sum_obj(y, x);
        rep.expect("symmetry-typing", ok, [&] { return Term{{"objects", tuple_of(x, y)}, {"symmetry", s}}; });
      });
      rep.guarded("symmetry-involution", [&] {
        auto c = chain(C, {C.symmetry(y, x), C.symmetry(x, y)});
        rep.expect("symmetry-involution", c == C.identity(C.sum_obj(x, y)),
                   [&] { return Term{{"objects", tuple_of(x, y)}, {"composite", c}}; });
      });
    }
  for (const auto& x : objs)
    rep.guarded("symmetry-unit", [&] {
      auto l = C.symmetry(x, e), r = C.symmetry(e, x), id = C.identity(x);
      rep.expect("symmetry-unit", l == id && r == id, [&] { return Term{{"object", x}, {"left", l}, {"right", r}}; });
    });
  for (const auto& f : mors)
    for (const auto& g : mors)
      rep.guarded("symmetry-naturality", [&] {
        auto x = C.source(f), y = C.source(g), x2 = C.target(f), y2 = C.target(g);
        auto l = chain(C, {C.symmetry(x2, y2), C.sum_mor(f, g)});
        auto r = chain(C, {C.sum_mor(g, f), C.symmetry(x, y)});
        rep.expect("symmetry-naturality", l == r, [&] { return Term{{"f", f}, {"g", g}, {"lhs", l}, {"rhs", r}}; });
      });
  // ξ_{x,y⊕z} = (1_y ⊕ ξ_{x,z}) ∘ (ξ_{x,y} ⊕ 1_z)
  for (const auto& x : objs)
    for (const auto& y : objs)
      for (const auto& z : objs)
        rep.guarded("hexagon", [&] {
          auto l = C.symmetry(x, C.sum_obj(y, z));
          auto r = chain(C, {C.sum_mor(C.identity(y), C.symmetry(x, z)), C.sum_mor(C.symmetry(x, y), C.identity(z))});
          rep.expect("hexagon", l == r, [&] { return Term{{"objects", tuple_of(x, y, z)}, {"lhs", l}, {"rhs", r}}; });
        });
  return rep;
}

// ---- permutations as morphisms ----

std::vector<int> bubble_word(const Permutation& pi) {
  int n = pi.degree();
  auto inv = pi.inverse();
  std::vector<int> cur(n), word;
  for (int i = 0; i < n; ++i) cur[i] = i + 1;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int a = 1; a < n; ++a)
      if (inv(cur[a - 1]) > inv(cur[a])) {
        std::swap(cur[a - 1], cur[a]);
        word.push_back(a);
        moved = true;
      }
  }
  return word;
}

Term word_to_morphism(const PermCat& C, const std::vector<int>& word, const Terms& xs) {
  Terms cur = xs;
  int n = static_cast<int>(xs.size());
  Term acc = C.identity(C.sum_objs(xs));
  for (int a : word) {
    if (a < 1 || a >= n) throw OutOfRange("transposition position " + std::to_string(a) + " in degree " + std::to_string(n));
    Terms left(cur.begin(), cur.begin() + (a - 1)), right(cur.begin() + (a + 1), cur.end());
    auto step = C.sum_mors({C.identity(C.sum_objs(left)), C.symmetry(cur[a - 1], cur[a]), C.identity(C.sum_objs(right))});
    acc = C.compose(step, acc);
    std::swap(cur[a - 1], cur[a]);
  }
  return acc;
}

Term perm_to_morphism(const PermCat& C, const Permutation& pi, const Terms& xs) {
  if (pi.degree() != static_cast<int>(xs.size()))
    throw DegreeMismatch("permutation of degree " + std::to_string(pi.degree()) + " on " +
                         std::to_string(xs.size()) + " objects");
  return word_to_morphism(C, bubble_word(pi), xs);
}

// ---- symmetric monoidal functors ----

SymMonFunctor identity_smf(PermCatPtr C) {
  SymMonFunctor P;
  P.source = C;
  P.target = C;
  P.on_object = [](const Term& x) { return x; };
  P.on_morphism = [](const Term& f) { return f; };
  P.constraint = [C](const Term& x, const Term& y) { return C->identity(C->sum_obj(x, y)); };
  P.unit_constraint = [C] { return C->identity(C->unit_object()); };
  P.strict = P.strictly_unital = P.strong = true;
  return P;
}

SymMonFunctor smf_compose(const SymMonFunctor& Q, const SymMonFunctor& P) {
  SymMonFunctor R;
  R.source = P.source;
  R.target = Q.target;
  R.on_object = [Q, P](const Term& x) { return Q.on_object(P.on_object(x)); };
  R.on_morphism = [Q, P](const Term& f) { return Q.on_morphism(P.on_morphism(f)); };
  R.constraint = [Q, P](const Term& x, const Term& y) {
    return Q.target->compose(Q.on_morphism(P.constraint(x, y)), Q.constraint(P.on_object(x), P.on_object(y)));
  };
  R.unit_constraint = [Q, P] { return Q.target->compose(Q.on_morphism(P.unit_constraint()), Q.unit_constraint()); };
  R.strict = Q.strict && P.strict;
  R.strictly_unital = Q.strictly_unital && P.strictly_unital;
  R.strong = Q.strong && P.strong;
  return R;
}

bool is_invertible(const Category& C, const Term& f) {
  auto x = C.source(f), y = C.target(f);
  for (const auto& g : C.hom(y, x))
    if (C.compose(g, f) == C.identity(x) && C.compose(f, g) == C.identity(y)) return true;
  return false;
}

namespace {

void set_flags(Report& rep, bool strict_decl, bool strict, bool strong_decl, bool strong, const char* axiom) {
  rep.expect(axiom, !strict_decl || strict, [] { return Term{{"declared", "strict"}}; });
  rep.expect(axiom, !strong_decl || strong, [] { return Term{{"declared", "strong"}}; });
  rep.note("classification", strict ? "strict" : strong ? "strong" : "lax");
}

}  // namespace

Report validate_smf(const SymMonFunctor& P) {
  Report rep("symmetric monoidal functor");
  const auto& C = *P.source;
  const auto& D = *P.target;
  auto objs = C.objects();
  auto mors = all_morphisms(C);
  bool strict = true, strong = true, unital = true;

  for (const auto& x : objs)
    rep.guarded("functor", [&] {
      auto m = P.on_morphism(C.identity(x));
      rep.expect("functor", m == D.identity(P.on_object(x)), [&] { return Term{{"identity_at", x}, {"image", m}}; });
    });
  for (const auto& f : mors) {
    rep.guarded("functor", [&] {
      auto m = P.on_morphism(f);
      bool ok = D.source(m) == P.on_object(C.source(f)) && D.target(m) == P.on_object(C.target(f));
      rep.expect("functor", ok, [&] { return Term{{"morphism", f}, {"image", m}}; });
    });
    for (const auto& g : mors)
      if (C.target(f) == C.source(g))
        rep.guarded("functor", [&] {
          auto l = P.on_morphism(C.compose(g, f));
          auto r = chain(D, {P.on_morphism(g), P.on_morphism(f)});
          rep.expect("functor", l == r, [&] { return Term{{"f", f}, {"g", g}, {"lhs", l}, {"rhs", r}}; });
        });
  }

  auto e = C.unit_object();
  rep.guarded("constraint-typing", [&] {
    auto u = P.unit_constraint();
    check_typed(D, u, D.unit_object(), P.on_object(e));
    rep.pass_instance("constraint-typing");
    if (!is_identity_mor(D, u)) strict = unital = false;
    if (!is_invertible(D, u)) strong = false;
  });
  for (const auto& x : objs)
    for (const auto& y : objs)
      rep.guarded("constraint-typing", [&] {
        auto c = P.constraint(x, y);
        check_typed(D, c, D.sum_obj(P.on_object(x), P.on_object(y)), P.on_object(C.sum_obj(x, y)));
        rep.pass_instance("constraint-typing");
        if (!is_identity_mor(D, c)) strict = false;
        if (!is_invertible(D, c)) strong = false;
      });

  for (const auto& f : mors)
    for (const auto& g : mors)
      rep.guarded("constraint-naturality", [&] {
        auto x = C.source(f), y = C.source(g), x2 = C.target(f), y2 = C.target(g);
        auto l = chain(D, {P.on_morphism(C.sum_mor(f, g)), P.constraint(x, y)});
        auto r = chain(D, {P.constraint(x2, y2), D.sum_mor(P.on_morphism(f), P.on_morphism(g))});
        rep.expect("constraint-naturality", l == r, [&] { return Term{{"f", f}, {"g", g}, {"lhs", l}, {"rhs", r}}; });
      });

  for (const auto& x : objs)
    for (const auto& y : objs)
      for (const auto& z : objs)
        rep.guarded("associativity", [&] {
          auto Px = P.on_object(x), Pz = P.on_object(z);
          auto l = chain(D, {P.constraint(C.sum_obj(x, y), z), D.sum_mor(P.constraint(x, y), D.identity(Pz))});
          auto r = chain(D, {P.constraint(x, C.sum_obj(y, z)), D.sum_mor(D.identity(Px), P.constraint(y, z))});
          rep.expect("associativity", l == r, [&] { return Term{{"objects", tuple_of(x, y, z)}, {"lhs", l}, {"rhs", r}}; });
        });

  for (const auto& x : objs)
    rep.guarded("unity", [&] {
      auto Px = P.on_object(x);
      auto u = P.unit_constraint();
      auto l = chain(D, {P.constraint(e, x), D.sum_mor(u, D.identity(Px))});
      auto r = chain(D, {P.constraint(x, e), D.sum_mor(D.identity(Px), u)});
      auto id = D.identity(Px);
      rep.expect("unity", l == id && r == id, [&] { return Term{{"object", x}, {"left", l}, {"right", r}}; });
    });

  for (const auto& x : objs)
    for (const auto& y : objs)
      rep.guarded("symmetry", [&] {
        auto l = chain(D, {P.on_morphism(C.symmetry(x, y)), P.constraint(x, y)});
        auto r = chain(D, {P.constraint(y, x), D.symmetry(P.on_object(x), P.on_object(y))});
        rep.expect("symmetry", l == r, [&] { return Term{{"objects", tuple_of(x, y)}, {"lhs", l}, {"rhs", r}}; });
      });

  set_flags(rep, P.strict, strict, P.strong, strong, "flags");
  rep.expect("flags", !P.strictly_unital || unital, [] { return Term{{"declared", "strictly_unital"}}; });
  rep.note("strictly_unital", unital);
  return rep;
}

MonoidalNat identity_monoidal_nat(const SymMonFunctor& P) {
  return MonoidalNat{P, P, [P](const Term& x) { return P.target->identity(P.on_object(x)); }};
}

Report validate_monoidal_nat(const MonoidalNat& theta) {
  Report rep("monoidal natural transformation");
  const auto& P = theta.from;
  const auto& Q = theta.to;
  const auto& C = *P.source;
  const auto& D = *P.target;
  auto objs = C.objects();
  for (const auto& x : objs)
    rep.guarded("typing", [&] {
      auto t = theta.component(x);
      bool ok = D.source(t) == P.on_object(x) && D.target(t) == Q.on_object(x);
      rep.expect("typing", ok, [&] { return Term{{"object", x}, {"component", t}}; });
    });
  for (const auto& f : all_morphisms(C))
    rep.guarded("naturality", [&] {
      auto l = chain(D, {Q.on_morphism(f), theta.component(C.source(f))});
      auto r = chain(D, {theta.component(C.target(f)), P.on_morphism(f)});
      rep.expect("naturality", l == r, [&] { return Term{{"morphism", f}, {"lhs", l}, {"rhs", r}}; });
    });
  rep.guarded("unity", [&] {
    auto l = chain(D, {theta.component(C.unit_object()), P.unit_constraint()});
    auto r = Q.unit_constraint();
    rep.expect("unity", l == r, [&] { return Term{{"lhs", l}, {"rhs", r}}; });
  });
  for (const auto& x : objs)
    for (const auto& y : objs)
      rep.guarded("constraint", [&] {
        auto l = chain(D, {Q.constraint(x, y), D.sum_mor(theta.component(x), theta.component(y))});
        auto r = chain(D, {theta.component(C.sum_obj(x, y)), P.constraint(x, y)});
        rep.expect("constraint", l == r, [&] { return Term{{"objects", tuple_of(x, y)}, {"lhs", l}, {"rhs", r}}; });
      });
  return rep;
}

// ---- n-linear functors ----

Terms sigma_place(const Permutation& s, const Terms& A) {
  if (s.degree() != static_cast<int>(A.size())) throw DegreeMismatch("sigma_place: degree mismatch");
  Terms out(A.size());
  for (int j = 1; j <= s.degree(); ++j) out[s(j) - 1] = A[j - 1];
  return out;
}

namespace {

// Cartesian product, first coordinate fastest.
std::vector<Terms> product(const std::vector<Terms>& factors) {
  std::size_t total = 1;
  for (const auto& f : factors) total *= f.size();
  std::vector<Terms> out;
  out.reserve(total);
  for (std::size_t r = 0; r < total; ++r) {
    Terms t;
    std::size_t rest = r;
    for (const auto& f : factors) {
      t.push_back(f[rest % f.size()]);
      rest /= f.size();
    }
    out.push_back(std::move(t));
  }
  return out;
}

Terms with_at(Terms X, int j, const Term& v) {
  X[j - 1] = v;
  return X;
}

}  // namespace

std::vector<Terms> object_tuples(const std::vector<PermCatPtr>& cats) {
  std::vector<Terms> f;
  for (const auto& c : cats) f.push_back(c->objects());
  return product(f);
}

NLinearFunctor nlinear_constant(PermCatPtr D, const Term& object) {
  NLinearFunctor P;
  P.target = D;
  P.on_objects = [object](const Terms&) { return object; };
  P.on_morphisms = [D, object](const Terms&) { return D->identity(object); };
  P.constraint = [](int, const Terms&, const Term&) -> Term { throw OutOfRange("constant functor has no slots"); };
  P.strict = P.strong = true;
  return P;
}

NLinearFunctor nlinear_from_smf(const SymMonFunctor& S) {
  NLinearFunctor P;
  P.sources = {S.source};
  P.target = S.target;
  P.on_objects = [S](const Terms& x) { return S.on_object(x[0]); };
  P.on_morphisms = [S](const Terms& f) { return S.on_morphism(f[0]); };
  P.constraint = [S](int, const Terms& x, const Term& xp) { return S.constraint(x[0], xp); };
  P.strict = S.strict;
  P.strong = S.strong;
  return P;
}

NLinearFunctor nlinear_identity(PermCatPtr C) { return nlinear_from_smf(identity_smf(std::move(C))); }

Report validate_nlinear(const NLinearFunctor& P) {
  Report rep(std::to_string(P.arity()) + "-linear functor");
  const auto& D = *P.target;
  int n = P.arity();
  if (n == 0) {
    rep.guarded("object", [&] {
      auto x = P.on_objects({});
      rep.expect("object", D.has_object(x), [&] { return Term{{"object_outside_window", x}}; });
    });
    rep.note("classification", "strict");
    return rep;
  }

  std::vector<Terms> objw, morw;
  for (const auto& c : P.sources) {
    objw.push_back(c->objects());
    morw.push_back(all_morphisms(*c));
  }
  auto Xs = product(objw);
  auto Fs = product(morw);
  auto src = [&](const Terms& f) {
    Terms out;
    for (int j = 0; j < n; ++j) out.push_back(P.sources[j]->source(f[j]));
    return out;
  };
  auto tgt = [&](const Terms& f) {
    Terms out;
    for (int j = 0; j < n; ++j) out.push_back(P.sources[j]->target(f[j]));
    return out;
  };
  auto ids = [&](const Terms& X) {
    Terms out;
    for (int j = 0; j < n; ++j) out.push_back(P.sources[j]->identity(X[j]));
    return out;
  };
  auto C = [&](int j) -> const PermCat& { return *P.sources[j - 1]; };

  // functor
  for (const auto& X : Xs)
    rep.guarded("functor", [&] {
      auto m = P.on_morphisms(ids(X));
      rep.expect("functor", m == D.identity(P.on_objects(X)), [&] { return Term{{"identity_at", X}, {"image", m}}; });
    });
  for (const auto& f : Fs)
    rep.guarded("functor", [&] {
      auto m = P.on_morphisms(f);
      bool ok = D.source(m) == P.on_objects(src(f)) && D.target(m) == P.on_objects(tgt(f));
      rep.expect("functor", ok, [&] { return Term{{"morphisms", f}, {"image", m}}; });
    });
  {
    std::vector<Terms> pairw;
    for (int j = 1; j <= n; ++j) {
      Terms ps;
      for (const auto& f : morw[j - 1])
        for (const auto& g : morw[j - 1])
          if (C(j).target(f) == C(j).source(g)) ps.push_back(tuple_of(g, f));
      pairw.push_back(ps);
    }
    for (const auto& gf : product(pairw))
      rep.guarded("functor", [&] {
        Terms g, f, c;
        for (int j = 1; j <= n; ++j) {
          g.push_back(gf[j - 1][0]);
          f.push_back(gf[j - 1][1]);
          c.push_back(C(j).compose(g.back(), f.back()));
        }
        auto l = P.on_morphisms(c);
        auto r = chain(D, {P.on_morphisms(g), P.on_morphisms(f)});
        rep.expect("functor", l == r, [&] { return Term{{"g", g}, {"f", f}, {"lhs", l}, {"rhs", r}}; });
      });
  }

  // unity
  auto e = D.unit_object();
  for (const auto& X : Xs) {
    bool hit = false;
    for (int j = 1; j <= n; ++j) hit = hit || X[j - 1] == C(j).unit_object();
    if (!hit) continue;
    rep.guarded("unity", [&] {
      auto y = P.on_objects(X);
      rep.expect("unity", y == e, [&] { return Term{{"objects", X}, {"image", y}}; });
    });
  }
  for (const auto& f : Fs) {
    bool hit = false;
    for (int j = 1; j <= n; ++j) hit = hit || f[j - 1] == C(j).identity(C(j).unit_object());
    if (!hit) continue;
    rep.guarded("unity", [&] {
      auto m = P.on_morphisms(f);
      rep.expect("unity", m == D.identity(e), [&] { return Term{{"morphisms", f}, {"image", m}}; });
    });
  }

  // constraints
  bool strict = true, strong = true;
  for (int j = 1; j <= n; ++j)
    for (const auto& X : Xs)
      for (const auto& xp : objw[j - 1]) {
        rep.guarded("constraint-typing", [&] {
          auto c = P.constraint(j, X, xp);
          check_typed(D, c, D.sum_obj(P.on_objects(X), P.on_objects(with_at(X, j, xp))),
                      P.on_objects(with_at(X, j, C(j).sum_obj(X[j - 1], xp))));
          rep.pass_instance("constraint-typing");
          if (!is_identity_mor(D, c)) strict = false;
          if (!is_invertible(D, c)) strong = false;
        });
        bool unit_slot = xp == C(j).unit_object();
        for (int i = 1; i <= n; ++i) unit_slot = unit_slot || X[i - 1] == C(i).unit_object();
        if (unit_slot)
          rep.guarded("constraint-unity", [&] {
            auto c = P.constraint(j, X, xp);
            rep.expect("constraint-unity", is_identity_mor(D, c),
                       [&] { return Term{{"slot", j}, {"objects", X}, {"extra", xp}, {"constraint", c}}; });
          });
      }

  for (int j = 1; j <= n; ++j)
    for (const auto& f : Fs)
      for (const auto& g : morw[j - 1])
        rep.guarded("constraint-naturality", [&] {
          auto X = src(f), Y = tgt(f);
          auto xp = C(j).source(g), yp = C(j).target(g);
          auto l = chain(D, {P.on_morphisms(with_at(f, j, C(j).sum_mor(f[j - 1], g))), P.constraint(j, X, xp)});
          auto r = chain(D, {P.constraint(j, Y, yp), D.sum_mor(P.on_morphisms(f), P.on_morphisms(with_at(f, j, g)))});
          rep.expect("constraint-naturality", l == r,
                     [&] { return Term{{"slot", j}, {"morphisms", f}, {"extra", g}, {"lhs", l}, {"rhs", r}}; });
        });

  for (int i = 1; i <= n; ++i)
    for (const auto& X : Xs)
      for (const auto& x1 : objw[i - 1])
        for (const auto& x2 : objw[i - 1])
          rep.guarded("associativity", [&] {
            const auto& Ci = C(i);
            auto X1 = with_at(X, i, x1);
            auto l = chain(D, {P.constraint(i, X, Ci.sum_obj(x1, x2)),
                               D.sum_mor(D.identity(P.on_objects(X)), P.constraint(i, X1, x2))});
            auto r = chain(D, {P.constraint(i, with_at(X, i, Ci.sum_obj(X[i - 1], x1)), x2),
                               D.sum_mor(P.constraint(i, X, x1), D.identity(P.on_objects(with_at(X, i, x2))))});
            rep.expect("associativity", l == r,
                       [&] { return Term{{"slot", i}, {"objects", X}, {"extra", tuple_of(x1, x2)}, {"lhs", l}, {"rhs", r}}; });
          });

  for (int i = 1; i <= n; ++i)
    for (const auto& X : Xs)
      for (const auto& xp : objw[i - 1])
        rep.guarded("symmetry", [&] {
          auto Xp = with_at(X, i, xp);
          auto l = chain(D, {P.on_morphisms(with_at(ids(X), i, C(i).symmetry(X[i - 1], xp))), P.constraint(i, X, xp)});
          auto r = chain(D, {P.constraint(i, Xp, X[i - 1]), D.symmetry(P.on_objects(X), P.on_objects(Xp))});
          rep.expect("symmetry", l == r,
                     [&] { return Term{{"slot", i}, {"objects", X}, {"extra", xp}, {"lhs", l}, {"rhs", r}}; });
        });

  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k) {
      if (i == k) continue;
      for (const auto& X : Xs)
        for (const auto& xi : objw[i - 1])
          for (const auto& xk : objw[k - 1])
            rep.guarded("2-by-2", [&] {
              auto Xi = with_at(X, i, xi), Xk = with_at(X, k, xk), Xik = with_at(Xi, k, xk);
              auto si = C(i).sum_obj(X[i - 1], xi), sk = C(k).sum_obj(X[k - 1], xk);
              auto top = chain(D, {P.constraint(k, with_at(X, i, si), xk),
                                   D.sum_mor(P.constraint(i, X, xi), P.constraint(i, Xk, xi))});
              auto mid = D.sum_mors({D.identity(P.on_objects(X)), D.symmetry(P.on_objects(Xi), P.on_objects(Xk)),
                                     D.identity(P.on_objects(Xik))});
              auto bottom = chain(D, {P.constraint(i, with_at(X, k, sk), xi),
                                      D.sum_mor(P.constraint(k, X, xk), P.constraint(k, Xi, xk)), mid});
              rep.expect("2-by-2", top == bottom, [&] {
                return Term{{"slots", tuple_of(i, k)}, {"objects", X}, {"extra", tuple_of(xi, xk)}, {"lhs", top}, {"rhs", bottom}};
              });
            });
    }

  set_flags(rep, P.strict, strict, P.strong, strong, "flags");
  return rep;
}

NLinearNat nlinear_identity_nat(const NLinearFunctor& P) {
  return NLinearNat{P, P, [P](const Terms& X) { return P.target->identity(P.on_objects(X)); }};
}

Report validate_nlinear_nat(const NLinearNat& theta) {
  const auto& P = theta.from;
  const auto& Q = theta.to;
  const auto& D = *P.target;
  int n = P.arity();
  Report rep(std::to_string(n) + "-linear transformation");
  std::vector<Terms> objw, morw;
  for (const auto& c : P.sources) {
    objw.push_back(c->objects());
    morw.push_back(all_morphisms(*c));
  }
  auto Xs = product(objw);
  for (const auto& X : Xs) {
    rep.guarded("typing", [&] {
      auto t = theta.component(X);
      bool ok = D.source(t) == P.on_objects(X) && D.target(t) == Q.on_objects(X);
      rep.expect("typing", ok, [&] { return Term{{"objects", X}, {"component", t}}; });
    });
    bool hit = false;
    for (int j = 0; j < n; ++j) hit = hit || X[j] == P.sources[j]->unit_object();
    if (hit)
      rep.guarded("unity", [&] {
        auto t = theta.component(X);
        rep.expect("unity", t == D.identity(D.unit_object()), [&] { return Term{{"objects", X}, {"component", t}}; });
      });
  }
  for (const auto& f : product(morw))
    rep.guarded("naturality", [&] {
      Terms X, Y;
      for (int j = 0; j < n; ++j) {
        X.push_back(P.sources[j]->source(f[j]));
        Y.push_back(P.sources[j]->target(f[j]));
      }
      auto l = chain(D, {Q.on_morphisms(f), theta.component(X)});
      auto r = chain(D, {theta.component(Y), P.on_morphisms(f)});
      rep.expect("naturality", l == r, [&] { return Term{{"morphisms", f}, {"lhs", l}, {"rhs", r}}; });
    });
  for (int i = 1; i <= n; ++i)
    for (const auto& X : Xs)
      for (const auto& xp : objw[i - 1])
        rep.guarded("constraint", [&] {
          auto Xp = with_at(X, i, xp);
          auto S = with_at(X, i, P.sources[i - 1]->sum_obj(X[i - 1], xp));
          auto l = chain(D, {theta.component(S), P.constraint(i, X, xp)});
          auto r = chain(D, {Q.constraint(i, X, xp), D.sum_mor(theta.component(X), theta.component(Xp))});
          rep.expect("constraint", l == r,
                     [&] { return Term{{"slot", i}, {"objects", X}, {"extra", xp}, {"lhs", l}, {"rhs", r}}; });
        });
  return rep;
}

NLinearFunctor nlinear_postcompose(const SymMonFunctor& Q, const NLinearFunctor& P) {
  NLinearFunctor R;
  R.sources = P.sources;
  R.target = Q.target;
  R.on_objects = [Q, P](const Terms& X) { return Q.on_object(P.on_objects(X)); };
  R.on_morphisms = [Q, P](const Terms& f) { return Q.on_morphism(P.on_morphisms(f)); };
  R.constraint = [Q, P](int j, const Terms& X, const Term& xp) {
    auto Y = X;
    Y[j - 1] = xp;
    return chain(*Q.target, {Q.on_morphism(P.constraint(j, X, xp)), Q.constraint(P.on_objects(X), P.on_objects(Y))});
  };
  R.strict = P.strict && Q.strict;
  R.strong = P.strong && Q.strong;
  return R;
}

NLinearNat nlinear_whisker(const MonoidalNat& theta, const NLinearFunctor& P) {
  return NLinearNat{nlinear_postcompose(theta.from, P), nlinear_postcompose(theta.to, P),
                    [theta, P](const Terms& X) { return theta.component(P.on_objects(X)); }};
}

NLinearFunctor nlinear_sigma_act(const NLinearFunctor& P, const Permutation& s) {
  if (s.degree() != P.arity()) throw DegreeMismatch("sigma action: degree mismatch");
  NLinearFunctor R;
  for (int j = 1; j <= s.degree(); ++j) R.sources.push_back(P.sources[s(j) - 1]);
  R.target = P.target;
  R.on_objects = [P, s](const Terms& A) { return P.on_objects(sigma_place(s, A)); };
  R.on_morphisms = [P, s](const Terms& f) { return P.on_morphisms(sigma_place(s, f)); };
  R.constraint = [P, s](int j, const Terms& A, const Term& ap) { return P.constraint(s(j), sigma_place(s, A), ap); };
  R.strict = P.strict;
  R.strong = P.strong;
  return R;
}

NLinearNat nlinear_sigma_act_nat(const NLinearNat& theta, const Permutation& s) {
  return NLinearNat{nlinear_sigma_act(theta.from, s), nlinear_sigma_act(theta.to, s),
                    [theta, s](const Terms& A) { return theta.component(sigma_place(s, A)); }};
}

namespace {

struct Split {
  std::vector<int> offset;  // offset[j] = number of inputs before block j
  std::pair<int, int> locate(int l) const {
    for (std::size_t j = 0; j + 1 < offset.size(); ++j)
      if (l > offset[j] && l <= offset[j + 1]) return {static_cast<int>(j) + 1, l - offset[j]};
    throw OutOfRange("slot " + std::to_string(l));
  }
  std::vector<Terms> blocks(const Terms& W) const {
    std::vector<Terms> out;
    for (std::size_t j = 0; j + 1 < offset.size(); ++j)
      out.emplace_back(W.begin() + offset[j], W.begin() + offset[j + 1]);
    return out;
  }
};

Split split_of(const std::vector<int>& arities) {
  Split s{{0}};
  for (int a : arities) s.offset.push_back(s.offset.back() + a);
  return s;
}

}  // namespace

NLinearFunctor nlinear_gamma(const NLinearFunctor& P, const std::vector<NLinearFunctor>& inner) {
  if (static_cast<int>(inner.size()) != P.arity()) throw DegreeMismatch("gamma: wrong number of inner functors");
  std::vector<int> ar;
  NLinearFunctor R;
  R.target = P.target;
  R.strict = P.strict;
  R.strong = P.strong;
  for (const auto& Q : inner) {
    ar.push_back(Q.arity());
    R.sources.insert(R.sources.end(), Q.sources.begin(), Q.sources.end());
    R.strict = R.strict && Q.strict;
    R.strong = R.strong && Q.strong;
  }
  auto sp = split_of(ar);
  auto inner_objects = [inner, sp](const Terms& W) {
    auto bs = sp.blocks(W);
    Terms out;
    for (std::size_t j = 0; j < bs.size(); ++j) out.push_back(inner[j].on_objects(bs[j]));
    return out;
  };
  R.on_objects = [P, inner_objects](const Terms& W) { return P.on_objects(inner_objects(W)); };
  R.on_morphisms = [P, inner, sp](const Terms& f) {
    auto bs = sp.blocks(f);
    Terms out;
    for (std::size_t j = 0; j < bs.size(); ++j) out.push_back(inner[j].on_morphisms(bs[j]));
    return P.on_morphisms(out);
  };
  R.constraint = [P, inner, sp, inner_objects](int l, const Terms& W, const Term& wp) {
    auto [j, i] = sp.locate(l);
    const auto& D = *P.target;
    auto PW = inner_objects(W);
    auto Wj = sp.blocks(W)[j - 1];
    auto first = P.constraint(j, PW, inner[j - 1].on_objects(with_at(Wj, i, wp)));
    Terms fs;
    for (std::size_t k = 0; k < PW.size(); ++k)
      fs.push_back(static_cast<int>(k) + 1 == j ? inner[j - 1].constraint(i, Wj, wp)
                                                 : inner[k].target->identity(PW[k]));
    return chain(D, {P.on_morphisms(fs), first});
  };
  return R;
}

NLinearNat nlinear_gamma_nat(const NLinearNat& theta, const std::vector<NLinearNat>& inner) {
  std::vector<NLinearFunctor> from, to;
  std::vector<int> ar;
  for (const auto& t : inner) {
    from.push_back(t.from);
    to.push_back(t.to);
    ar.push_back(t.from.arity());
  }
  auto sp = split_of(ar);
  NLinearNat R{nlinear_gamma(theta.from, from), nlinear_gamma(theta.to, to), nullptr};
  R.component = [theta, inner, sp](const Terms& W) {
    auto bs = sp.blocks(W);
    Terms QW, parts;
    for (std::size_t j = 0; j < bs.size(); ++j) {
      QW.push_back(inner[j].to.on_objects(bs[j]));
      parts.push_back(inner[j].component(bs[j]));
    }
    return chain(*theta.from.target, {theta.component(QW), theta.from.on_morphisms(parts)});
  };
  return R;
}

}  // namespace pmc
