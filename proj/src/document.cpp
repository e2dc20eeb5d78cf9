#include "permmult/document.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace pmc {

namespace {

// ---- reading helpers ----

const Term& field(const Term& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw Malformed(where + " must be an object");
  auto it = j.find(key);
  if (it == j.end()) throw Malformed(where + " has no field \"" + key + "\"");
  return *it;
}

const Term& list_field(const Term& j, const char* key, const std::string& where) {
  const auto& v = field(j, key, where);
  if (!v.is_array()) throw Malformed(where + "." + key + " must be a list");
  return v;
}

Term id_field(const Term& j, const char* key, const std::string& where) {
  const auto& v = field(j, key, where);
  if (!v.is_string()) throw Malformed(where + "." + key + " must be a string id");
  return v;
}

int int_field(const Term& j, const char* key, const std::string& where) {
  const auto& v = field(j, key, where);
  if (!v.is_number_integer()) throw Malformed(where + "." + key + " must be an integer");
  return v.get<int>();
}

Terms id_list(const Term& j, const char* key, const std::string& where) {
  Terms out;
  for (const auto& x : list_field(j, key, where)) {
    if (!x.is_string()) throw Malformed(where + "." + key + " must list string ids");
    out.push_back(x);
  }
  return out;
}

template <class Set>
void resolve(const Set& known, const Term& id, const std::string& what) {
  if (!known.count(id)) throw UnresolvedReference("unknown " + what + " " + show(id));
}

std::set<Term> unique_ids(const Terms& ids, const std::string& what) {
  std::set<Term> out;
  for (const auto& x : ids)
    if (!out.insert(x).second) throw Malformed("duplicate " + what + " " + show(x));
  return out;
}

// Fills key ↦ value, rejecting duplicates.
void put(std::map<Term, Term>& table, const Term& key, const Term& value, const std::string& what) {
  if (!table.emplace(key, value).second) throw Malformed("duplicate " + what + " entry for " + show(key));
}

void require(const std::map<Term, Term>& table, const Term& key, const std::string& what) {
  if (!table.count(key)) throw Malformed(what + " table is not total: no entry for " + show(key));
}

std::function<Term(const Term&)> unary_lookup(std::shared_ptr<const std::map<Term, Term>> t, std::string what) {
  return [t, what](const Term& x) {
    auto it = t->find(x);
    if (it == t->end()) throw UnresolvedReference(what + ": nothing listed for " + show(x));
    return it->second;
  };
}

Term lookup_key(const std::map<Term, Term>& t, const Term& key, const std::string& what) {
  auto it = t.find(key);
  if (it == t.end()) throw UnresolvedReference(what + ": nothing listed for " + show(key));
  return it->second;
}

Bounds read_bounds(const Term& j) {
  Bounds b;
  if (!j.contains("bounds")) return b;
  const auto& bj = j["bounds"];
  if (!bj.is_object()) throw Malformed("bounds must be an object");
  if (bj.contains("max_arity")) b.max_arity = int_field(bj, "max_arity", "bounds");
  if (bj.contains("max_len")) b.max_len = int_field(bj, "max_len", "bounds");
  if (b.max_arity < 0 || b.max_len < 0) throw Malformed("bounds must be non-negative");
  return b;
}

// ---- payload parsers ----

std::shared_ptr<TableMulticat> parse_multicat(const Term& j, const std::string& name, int A) {
  const std::string w = "multicat";
  auto objs = id_list(j, "objects", w);
  auto obj_set = unique_ids(objs, "object");
  auto M = std::make_shared<TableMulticat>(name, objs, A);

  std::map<Term, OpSig> sigs;
  for (const auto& e : list_field(j, "operations", w)) {
    auto id = id_field(e, "id", "operation");
    auto in = id_list(e, "in", "operation " + id.get<std::string>());
    auto out = id_field(e, "out", "operation " + id.get<std::string>());
    for (const auto& x : in) resolve(obj_set, x, "object");
    resolve(obj_set, out, "object");
    if (static_cast<int>(in.size()) > A)
      throw Malformed("operation " + show(id) + " has arity " + std::to_string(in.size()) + " above max_arity " +
                      std::to_string(A));
    if (!sigs.emplace(id, OpSig{in, out}).second) throw Malformed("duplicate operation " + show(id));
    M->add_op(id, OpSig{in, out});
  }

  std::map<Term, Term> units;
  for (const auto& e : list_field(j, "units", w)) {
    auto c = id_field(e, "object", "unit");
    auto op = id_field(e, "op", "unit");
    resolve(obj_set, c, "object");
    resolve(sigs, op, "operation");
    put(units, c, op, "unit");
  }
  for (const auto& c : objs) {
    require(units, c, "unit");
    M->set_unit(c, units[c]);
  }

  std::map<Term, Term> act;
  for (const auto& e : list_field(j, "action", w)) {
    auto op = id_field(e, "op", "action");
    resolve(sigs, op, "operation");
    auto s = Permutation::from_json(field(e, "perm", "action"));
    if (s.degree() != sigs[op].arity())
      throw Malformed("action on " + show(op) + " by a permutation of degree " + std::to_string(s.degree()));
    auto r = id_field(e, "result", "action");
    resolve(sigs, r, "operation");
    put(act, tuple_of(op, s.to_json()), r, "action");
    M->set_act(op, s, r);
  }
  for (const auto& [op, sig] : sigs)
    for (const auto& s : all_permutations(sig.arity())) require(act, tuple_of(op, s.to_json()), "action");

  std::map<Term, Term> gamma;
  for (const auto& e : list_field(j, "composition", w)) {
    auto outer = id_field(e, "outer", "composition");
    resolve(sigs, outer, "operation");
    auto inners = id_list(e, "inners", "composition");
    const auto& osig = sigs[outer];
    if (static_cast<int>(inners.size()) != osig.arity())
      throw Malformed("composition into " + show(outer) + " lists " + std::to_string(inners.size()) + " inner operations");
    int total = 0;
    for (std::size_t k = 0; k < inners.size(); ++k) {
      resolve(sigs, inners[k], "operation");
      if (sigs[inners[k]].output != osig.inputs[k])
        throw Malformed("composition into " + show(outer) + ": inner " + show(inners[k]) + " does not land in input " +
                        std::to_string(k + 1));
      total += sigs[inners[k]].arity();
    }
    if (total > A) throw Malformed("composition into " + show(outer) + " exceeds max_arity");
    auto r = id_field(e, "result", "composition");
    resolve(sigs, r, "operation");
    put(gamma, tuple_of(outer, to_term(inners)), r, "composition");
    M->set_gamma(outer, inners, r);
  }
  auto idx = index_ops(*M, A);
  for (const auto& [op, sig] : idx.all)
    for_each_inner_tuple(idx, sig.inputs, A, [&, op = op](const Terms& inner, const std::vector<OpSig>&) {
      require(gamma, tuple_of(op, to_term(inner)), "composition");
    });
  return M;
}

// Objects, morphisms, identities and composition; sums and symmetry when with_sums.
std::shared_ptr<TablePermCat> parse_category(const Term& j, const std::string& name, bool with_sums) {
  const std::string w = with_sums ? "permcat" : "category";
  auto objs = id_list(j, "objects", w);
  auto obj_set = unique_ids(objs, "object");
  Term unit;
  if (with_sums) {
    unit = id_field(j, "unit", w);
    resolve(obj_set, unit, "object");
  }
  auto C = std::make_shared<TablePermCat>(name, objs, unit);

  std::map<Term, std::pair<Term, Term>> mors;
  for (const auto& e : list_field(j, "morphisms", w)) {
    auto id = id_field(e, "id", "morphism");
    auto s = id_field(e, "src", "morphism " + id.get<std::string>());
    auto t = id_field(e, "tgt", "morphism " + id.get<std::string>());
    resolve(obj_set, s, "object");
    resolve(obj_set, t, "object");
    if (!mors.emplace(id, std::pair{s, t}).second) throw Malformed("duplicate morphism " + show(id));
    C->add_morphism(id, s, t);
  }

  std::map<Term, Term> ids;
  for (const auto& e : list_field(j, "identities", w)) {
    auto x = id_field(e, "object", "identity");
    auto f = id_field(e, "morphism", "identity");
    resolve(obj_set, x, "object");
    resolve(mors, f, "morphism");
    put(ids, x, f, "identity");
    C->set_identity(x, f);
  }
  for (const auto& x : objs) require(ids, x, "identity");

  std::map<Term, Term> comp;
  for (const auto& e : list_field(j, "composition", w)) {
    auto g = id_field(e, "g", "composition"), f = id_field(e, "f", "composition");
    auto r = id_field(e, "result", "composition");
    resolve(mors, g, "morphism");
    resolve(mors, f, "morphism");
    resolve(mors, r, "morphism");
    if (mors[f].second != mors[g].first) throw Malformed("composition lists " + show(g) + " after " + show(f));
    put(comp, tuple_of(g, f), r, "composition");
    C->set_compose(g, f, r);
  }
  for (const auto& [f, st] : mors)
    for (const auto& [g, st2] : mors)
      if (st.second == st2.first) require(comp, tuple_of(g, f), "composition");

  if (!with_sums) return C;

  std::map<Term, Term> sobj, smor, sym;
  for (const auto& e : list_field(j, "sum_objects", w)) {
    auto a = id_field(e, "a", "sum_objects"), b = id_field(e, "b", "sum_objects");
    auto r = id_field(e, "result", "sum_objects");
    for (const auto& x : {a, b, r}) resolve(obj_set, x, "object");
    put(sobj, tuple_of(a, b), r, "sum_objects");
    C->set_sum_obj(a, b, r);
  }
  for (const auto& e : list_field(j, "sum_morphisms", w)) {
    auto f = id_field(e, "f", "sum_morphisms"), g = id_field(e, "g", "sum_morphisms");
    auto r = id_field(e, "result", "sum_morphisms");
    for (const auto& x : {f, g, r}) resolve(mors, x, "morphism");
    put(smor, tuple_of(f, g), r, "sum_morphisms");
    C->set_sum_mor(f, g, r);
  }
  for (const auto& e : list_field(j, "symmetry", w)) {
    auto a = id_field(e, "a", "symmetry"), b = id_field(e, "b", "symmetry");
    auto m = id_field(e, "morphism", "symmetry");
    resolve(obj_set, a, "object");
    resolve(obj_set, b, "object");
    resolve(mors, m, "morphism");
    put(sym, tuple_of(a, b), m, "symmetry");
    C->set_symmetry(a, b, m);
  }
  for (const auto& x : objs)
    for (const auto& y : objs) {
      require(sobj, tuple_of(x, y), "sum_objects");
      require(sym, tuple_of(x, y), "symmetry");
    }
  for (const auto& [f, st] : mors)
    for (const auto& [g, st2] : mors) require(smor, tuple_of(f, g), "sum_morphisms");
  return C;
}

std::set<Term> object_set(const Category& C) {
  auto o = C.objects();
  return {o.begin(), o.end()};
}

std::set<Term> morphism_set(const TablePermCat& C) {
  std::set<Term> out;
  for (const auto& [f, st] : C.morphisms()) out.insert(f);
  return out;
}

StrictMonoidal parse_product(const Term& j, const TablePermCat& C, const std::string& w) {
  auto objs = object_set(C);
  auto mors = morphism_set(C);
  StrictMonoidal P;
  P.unit = id_field(j, "unit", w);
  resolve(objs, P.unit, "object");
  auto po = std::make_shared<std::map<Term, Term>>();
  auto pm = std::make_shared<std::map<Term, Term>>();
  for (const auto& e : list_field(j, "objects", w)) {
    auto a = id_field(e, "a", w), b = id_field(e, "b", w), r = id_field(e, "result", w);
    for (const auto& x : {a, b, r}) resolve(objs, x, "object");
    put(*po, tuple_of(a, b), r, w + " objects");
  }
  for (const auto& e : list_field(j, "morphisms", w)) {
    auto f = id_field(e, "f", w), g = id_field(e, "g", w), r = id_field(e, "result", w);
    for (const auto& x : {f, g, r}) resolve(mors, x, "morphism");
    put(*pm, tuple_of(f, g), r, w + " morphisms");
  }
  for (const auto& a : objs)
    for (const auto& b : objs) require(*po, tuple_of(a, b), w + " objects");
  for (const auto& f : mors)
    for (const auto& g : mors) require(*pm, tuple_of(f, g), w + " morphisms");
  P.on_objects = [po](const Term& a, const Term& b) { return lookup_key(*po, tuple_of(a, b), "product"); };
  P.on_morphisms = [pm](const Term& f, const Term& g) { return lookup_key(*pm, tuple_of(f, g), "product"); };
  return P;
}

Factorization parse_factorization(const Term& list, const TablePermCat& C, const std::string& w) {
  if (!list.is_array()) throw Malformed(w + " must be a list");
  auto objs = object_set(C);
  auto mors = morphism_set(C);
  auto t = std::make_shared<std::map<Term, Term>>();
  for (const auto& e : list) {
    auto a = id_field(e, "a", w), b = id_field(e, "b", w), c = id_field(e, "c", w);
    auto m = id_field(e, "morphism", w);
    for (const auto& x : {a, b, c}) resolve(objs, x, "object");
    resolve(mors, m, "morphism");
    put(*t, tuple_of(a, b, c), m, w);
  }
  for (const auto& a : objs)
    for (const auto& b : objs)
      for (const auto& c : objs) require(*t, tuple_of(a, b, c), w);
  return [t, w](const Term& a, const Term& b, const Term& c) { return lookup_key(*t, tuple_of(a, b, c), w); };
}

Braiding parse_braiding(const Term& list, const TablePermCat& C) {
  const std::string w = "braiding";
  if (!list.is_array()) throw Malformed(w + " must be a list");
  auto objs = object_set(C);
  auto mors = morphism_set(C);
  auto t = std::make_shared<std::map<Term, Term>>();
  for (const auto& e : list) {
    auto a = id_field(e, "a", w), b = id_field(e, "b", w), m = id_field(e, "morphism", w);
    resolve(objs, a, "object");
    resolve(objs, b, "object");
    resolve(mors, m, "morphism");
    put(*t, tuple_of(a, b), m, w);
  }
  for (const auto& a : objs)
    for (const auto& b : objs) require(*t, tuple_of(a, b), w);
  return [t](const Term& a, const Term& b) { return lookup_key(*t, tuple_of(a, b), "braiding"); };
}

Exchange parse_exchange(const Term& list, const TablePermCat& C, int n) {
  const std::string w = "exchange";
  if (!list.is_array()) throw Malformed(w + " must be a list");
  auto objs = object_set(C);
  auto mors = morphism_set(C);
  auto t = std::make_shared<std::map<Term, Term>>();
  for (const auto& e : list) {
    int i = int_field(e, "i", w), k = int_field(e, "j", w);
    if (!(1 <= i && i < k && k <= n))
      throw Malformed("exchange indices " + std::to_string(i) + "," + std::to_string(k) + " out of range");
    auto a = id_field(e, "a", w), b = id_field(e, "b", w), c = id_field(e, "c", w), d = id_field(e, "d", w);
    auto m = id_field(e, "morphism", w);
    for (const auto& x : {a, b, c, d}) resolve(objs, x, "object");
    resolve(mors, m, "morphism");
    put(*t, tuple_of(i, k, a, b, c, d), m, w);
  }
  for (int i = 1; i <= n; ++i)
    for (int k = i + 1; k <= n; ++k)
      for (const auto& a : objs)
        for (const auto& b : objs)
          for (const auto& c : objs)
            for (const auto& d : objs) require(*t, tuple_of(i, k, a, b, c, d), w);
  return [t](int i, int k, const Term& a, const Term& b, const Term& c, const Term& d) {
    return lookup_key(*t, tuple_of(i, k, a, b, c, d), "exchange");
  };
}

std::vector<StrictMonoidal> parse_products(const Term& j, const TablePermCat& C) {
  std::vector<StrictMonoidal> out;
  const auto& list = list_field(j, "products", "document");
  for (std::size_t i = 0; i < list.size(); ++i) out.push_back(parse_product(list[i], C, "product " + std::to_string(i + 1)));
  if (out.empty()) throw Malformed("products must not be empty");
  for (const auto& P : out)
    if (P.unit != out[0].unit) throw Malformed("products must share a unit");
  return out;
}

std::shared_ptr<TableMulticat> as_multicat(const Document& d, const std::string& role) {
  if (d.kind != "multicat") throw Malformed(role + " must be a multicat document");
  return d.multicat;
}

std::shared_ptr<TablePermCat> as_permcat(const Document& d, const std::string& role) {
  if (d.kind != "permcat") throw Malformed(role + " must be a permcat document");
  return d.permcat;
}

template <class Range>
std::set<Term> as_set(const Range& r) {
  return {r.begin(), r.end()};
}

template <class Map>
std::set<Term> keys(const Map& m) {
  std::set<Term> out;
  for (const auto& [k, v] : m) out.insert(k);
  return out;
}

using Images = std::shared_ptr<std::map<Term, Term>>;

Images image_table(const Term& j, const char* key, const char* from, const std::set<Term>& dom,
                   const std::set<Term>& cod, const std::string& what) {
  auto t = std::make_shared<std::map<Term, Term>>();
  for (const auto& e : list_field(j, key, "functor")) {
    auto x = id_field(e, from, key), y = id_field(e, "image", key);
    resolve(dom, x, what);
    resolve(cod, y, what);
    put(*t, x, y, key);
  }
  for (const auto& x : dom) require(*t, x, key);
  return t;
}

bool flag(const Term& j, const char* key) {
  if (!j.contains(key)) return false;
  if (!j[key].is_boolean()) throw Malformed(std::string(key) + " must be a boolean");
  return j[key].get<bool>();
}

void parse_functor(const Term& j, Document& d) {
  const auto& variant = field(j, "variant", "functor");
  auto src = document_from_json(field(j, "source", "functor"));
  auto tgt = document_from_json(field(j, "target", "functor"));
  if (variant == "multifunctor") {
    auto M = as_multicat(src, "source"), N = as_multicat(tgt, "target");
    auto ob = image_table(j, "objects", "object", as_set(M->objects()), as_set(N->objects()), "object");
    auto op = image_table(j, "operations", "op", keys(M->op_table()), keys(N->op_table()), "operation");
    d.multifunctor = Multifunctor{M, N, unary_lookup(ob, "object image"), unary_lookup(op, "operation image")};
    return;
  }
  if (variant == "symmetric-monoidal") {
    auto C = as_permcat(src, "source"), D = as_permcat(tgt, "target");
    auto dobjs = as_set(D->objects());
    auto dmors = morphism_set(*D);
    auto ob = image_table(j, "objects", "object", as_set(C->objects()), dobjs, "object");
    auto mor = image_table(j, "morphisms", "morphism", morphism_set(*C), dmors, "morphism");
    auto con = std::make_shared<std::map<Term, Term>>();
    for (const auto& e : list_field(j, "constraints", "functor")) {
      auto a = id_field(e, "a", "constraints"), b = id_field(e, "b", "constraints");
      auto m = id_field(e, "morphism", "constraints");
      resolve(as_set(C->objects()), a, "object");
      resolve(as_set(C->objects()), b, "object");
      resolve(dmors, m, "morphism");
      put(*con, tuple_of(a, b), m, "constraints");
    }
    for (const auto& a : C->objects())
      for (const auto& b : C->objects()) require(*con, tuple_of(a, b), "constraints");
    auto u = id_field(j, "unit_constraint", "functor");
    resolve(dmors, u, "morphism");
    SymMonFunctor P;
    P.source = C;
    P.target = D;
    P.on_object = unary_lookup(ob, "object image");
    P.on_morphism = unary_lookup(mor, "morphism image");
    P.constraint = [con](const Term& a, const Term& b) { return lookup_key(*con, tuple_of(a, b), "constraint"); };
    P.unit_constraint = [u] { return u; };
    P.strict = flag(j, "strict");
    P.strictly_unital = flag(j, "strictly_unital");
    P.strong = flag(j, "strong");
    d.smf = P;
    return;
  }
  throw Malformed("functor variant must be \"multifunctor\" or \"symmetric-monoidal\"");
}

void parse_multinat(const Term& j, Document& d) {
  auto from = document_from_json(field(j, "from", "multinat"));
  auto to = document_from_json(field(j, "to", "multinat"));
  if (!from.multifunctor || !to.multifunctor) throw Malformed("multinat must join two multifunctor documents");
  auto& P = *from.multifunctor;
  auto& Q = *to.multifunctor;
  auto same = [](const Multicat& a, const Multicat& b) {
    return multicat_document(a, a.max_arity()) == multicat_document(b, b.max_arity());
  };
  if (!same(*P.source, *Q.source) || !same(*P.target, *Q.target))
    throw Malformed("multinat: the two functors must share source and target");
  Q.source = P.source;
  Q.target = P.target;
  auto N = std::static_pointer_cast<const TableMulticat>(P.target);
  auto comp = image_table(j, "components", "object", as_set(P.source->objects()), keys(N->op_table()), "operation");
  d.multinat = MultiNat{P, Q, unary_lookup(comp, "component")};
}

// ---- writing helpers ----

// Renders ids as strings and notices two distinct ids with the same rendering.
class Ids {
 public:
  Term operator()(const Term& t) {
    std::string s = t.is_string() ? t.get<std::string>() : t.dump();
    auto [it, fresh] = seen_.emplace(s, t);
    if (!fresh && it->second != t)
      throw Malformed("ids " + show(it->second) + " and " + show(t) + " render as the same string");
    return s;
  }
  Term list(const Terms& ts) {
    Term out = Term::array();
    for (const auto& t : ts) out.push_back((*this)(t));
    return out;
  }

 private:
  std::map<std::string, Term> seen_;
};

Term sorted(Term a) {
  std::sort(a.begin(), a.end());
  return a;
}

Term header(const std::string& kind, const std::string& name, const Bounds& b) {
  return {{"kind", kind},
          {"version", kDocumentVersion},
          {"name", name},
          {"bounds", {{"max_arity", b.max_arity}, {"max_len", b.max_len}}}};
}

Term multicat_doc(const Multicat& M, int A, const Bounds& b, Ids& id) {
  auto T = materialize(M, A);
  Term out = header("multicat", M.name(), {T->max_arity(), b.max_len});
  out["objects"] = sorted(id.list(T->objects()));
  Term ops = Term::array(), units = Term::array(), gamma = Term::array(), act = Term::array();
  for (const auto& [op, sig] : T->op_table())
    ops.push_back({{"id", id(op)}, {"in", id.list(sig.inputs)}, {"out", id(sig.output)}});
  for (const auto& [c, u] : T->unit_table()) units.push_back({{"object", id(c)}, {"op", id(u)}});
  for (const auto& [k, r] : T->gamma_table())
    gamma.push_back({{"outer", id(k[0])}, {"inners", id.list(to_terms(k[1]))}, {"result", id(r)}});
  for (const auto& [k, r] : T->act_table()) act.push_back({{"op", id(k[0])}, {"perm", k[1]}, {"result", id(r)}});
  out["operations"] = sorted(ops);
  out["units"] = sorted(units);
  out["composition"] = sorted(gamma);
  out["action"] = sorted(act);
  return out;
}

void category_payload(Term& out, const Category& C, Ids& id) {
  auto objs = C.objects();
  auto mors = all_morphisms(C);
  out["objects"] = sorted(id.list(objs));
  Term ms = Term::array(), ids = Term::array(), comp = Term::array();
  for (const auto& f : mors) ms.push_back({{"id", id(f)}, {"src", id(C.source(f))}, {"tgt", id(C.target(f))}});
  for (const auto& x : objs) ids.push_back({{"object", id(x)}, {"morphism", id(C.identity(x))}});
  for (const auto& f : mors)
    for (const auto& g : mors)
      if (C.target(f) == C.source(g)) comp.push_back({{"g", id(g)}, {"f", id(f)}, {"result", id(C.compose(g, f))}});
  out["morphisms"] = sorted(ms);
  out["identities"] = sorted(ids);
  out["composition"] = sorted(comp);
}

void permcat_payload(Term& out, const PermCat& C, Ids& id) {
  category_payload(out, C, id);
  auto objs = C.objects();
  auto mors = all_morphisms(C);
  out["unit"] = id(C.unit_object());
  Term so = Term::array(), sm = Term::array(), sym = Term::array();
  for (const auto& a : objs)
    for (const auto& b : objs) {
      so.push_back({{"a", id(a)}, {"b", id(b)}, {"result", id(C.sum_obj(a, b))}});
      sym.push_back({{"a", id(a)}, {"b", id(b)}, {"morphism", id(C.symmetry(a, b))}});
    }
  for (const auto& f : mors)
    for (const auto& g : mors) sm.push_back({{"f", id(f)}, {"g", id(g)}, {"result", id(C.sum_mor(f, g))}});
  out["sum_objects"] = sorted(so);
  out["sum_morphisms"] = sorted(sm);
  out["symmetry"] = sorted(sym);
}

Term permcat_doc(const PermCat& C, const Bounds& b, Ids& id) {
  Term out = header("permcat", C.name(), b);
  permcat_payload(out, C, id);
  return out;
}

Term product_payload(const Category& C, const StrictMonoidal& P, Ids& id) {
  auto objs = C.objects();
  auto mors = all_morphisms(C);
  Term po = Term::array(), pm = Term::array();
  for (const auto& a : objs)
    for (const auto& b : objs) po.push_back({{"a", id(a)}, {"b", id(b)}, {"result", id(P.on_objects(a, b))}});
  for (const auto& f : mors)
    for (const auto& g : mors) pm.push_back({{"f", id(f)}, {"g", id(g)}, {"result", id(P.on_morphisms(f, g))}});
  return {{"unit", id(P.unit)}, {"objects", sorted(po)}, {"morphisms", sorted(pm)}};
}

Term factorization_payload(const Category& C, const Factorization& F, Ids& id) {
  auto objs = C.objects();
  Term out = Term::array();
  for (const auto& a : objs)
    for (const auto& b : objs)
      for (const auto& c : objs)
        out.push_back({{"a", id(a)}, {"b", id(b)}, {"c", id(c)}, {"morphism", id(F(a, b, c))}});
  return sorted(out);
}

Term braiding_payload(const Category& C, const Braiding& B, Ids& id) {
  auto objs = C.objects();
  Term out = Term::array();
  for (const auto& a : objs)
    for (const auto& b : objs) out.push_back({{"a", id(a)}, {"b", id(b)}, {"morphism", id(B(a, b))}});
  return sorted(out);
}

Term exchange_payload(const Category& C, const Exchange& X, int n, Ids& id) {
  auto objs = C.objects();
  Term out = Term::array();
  for (int i = 1; i <= n; ++i)
    for (int k = i + 1; k <= n; ++k)
      for (const auto& a : objs)
        for (const auto& b : objs)
          for (const auto& c : objs)
            for (const auto& d : objs)
              out.push_back({{"i", i},
                             {"j", k},
                             {"a", id(a)},
                             {"b", id(b)},
                             {"c", id(c)},
                             {"d", id(d)},
                             {"morphism", id(X(i, k, a, b, c, d))}});
  return sorted(out);
}

Term ring_doc(const RingCategory& R, const std::string& kind, const std::string& name, Ids& id) {
  Term out = header(kind, name, {});
  Term add = Term::object();
  permcat_payload(add, *R.additive, id);
  out["additive"] = add;
  out["product"] = product_payload(*R.additive, R.mult, id);
  out["left"] = factorization_payload(*R.additive, R.left, id);
  out["right"] = factorization_payload(*R.additive, R.right, id);
  return out;
}

Term multifunctor_doc(const Multifunctor& H, int A, const std::string& name, Ids& id) {
  Term out = header("functor", name, {A, 3});
  out["variant"] = "multifunctor";
  out["source"] = multicat_doc(*H.source, A, {}, id);
  out["target"] = multicat_doc(*H.target, A, {}, id);
  Term ob = Term::array(), ops = Term::array();
  for (const auto& x : H.source->objects()) ob.push_back({{"object", id(x)}, {"image", id(H.on_object(x))}});
  for (const auto& [op, sig] : index_ops(*H.source, std::min(A, H.source->max_arity())).all)
    ops.push_back({{"op", id(op)}, {"image", id(H.on_op(op))}});
  out["objects"] = sorted(ob);
  out["operations"] = sorted(ops);
  return out;
}

}  // namespace

// ---- public ----

Document document_from_json(const Term& j) {
  if (!j.is_object()) throw Malformed("a document must be a JSON object");
  auto kind = field(j, "kind", "document");
  if (!kind.is_string()) throw Malformed("kind must be a string");
  if (int_field(j, "version", "document") != kDocumentVersion)
    throw Malformed("unsupported version " + j["version"].dump());
  Document d;
  d.kind = kind.get<std::string>();
  d.name = d.kind;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw Malformed("name must be a string");
    d.name = j["name"].get<std::string>();
  }
  d.bounds = read_bounds(j);

  if (d.kind == "multicat") {
    d.multicat = parse_multicat(j, d.name, d.bounds.max_arity);
  } else if (d.kind == "permcat") {
    d.permcat = parse_category(j, d.name, true);
  } else if (d.kind == "ring" || d.kind == "biperm" || d.kind == "braided") {
    auto C = parse_category(field(j, "additive", "document"), d.name, true);
    d.permcat = C;
    d.ring = RingCategory{C, parse_product(field(j, "product", "document"), *C, "product"),
                          parse_factorization(field(j, "left", "document"), *C, "left"),
                          parse_factorization(field(j, "right", "document"), *C, "right")};
    if (d.kind != "ring") d.braiding = parse_braiding(field(j, "braiding", "document"), *C);
  } else if (d.kind == "nfold") {
    auto C = parse_category(field(j, "category", "document"), d.name, false);
    d.permcat = C;
    auto products = parse_products(j, *C);
    int n = static_cast<int>(products.size());
    d.nfold = NFoldMonoidal{C, products, parse_exchange(field(j, "exchange", "document"), *C, n)};
  } else if (d.kind == "en") {
    auto C = parse_category(field(j, "additive", "document"), d.name, true);
    d.permcat = C;
    EnMonoidal D;
    D.additive = C;
    D.products = parse_products(j, *C);
    const auto& l = list_field(j, "left", "document");
    const auto& r = list_field(j, "right", "document");
    if (l.size() != D.products.size() || r.size() != D.products.size())
      throw Malformed("left and right must list one factorization per product");
    for (std::size_t i = 0; i < l.size(); ++i) {
      D.left.push_back(parse_factorization(l[i], *C, "left " + std::to_string(i + 1)));
      D.right.push_back(parse_factorization(r[i], *C, "right " + std::to_string(i + 1)));
    }
    D.exchange = parse_exchange(field(j, "exchange", "document"), *C, D.n());
    d.en = D;
  } else if (d.kind == "functor") {
    parse_functor(j, d);
  } else if (d.kind == "multinat") {
    parse_multinat(j, d);
  } else {
    throw Malformed("unknown kind \"" + d.kind + "\"");
  }
  return d;
}

Document parse_document(const std::string& text) {
  Term j;
  try {
    j = Term::parse(text);
  } catch (const Term::parse_error& e) {
    throw ParseError("syntax error at byte (1-based) " + std::to_string(e.byte) + ": " + e.what());
  }
  return document_from_json(j);
}

Document load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::string serialize(const Term& doc) { return doc.dump(2) + "\n"; }
std::string serialize(const Document& doc) { return serialize(doc.to_json()); }

Term multicat_document(const Multicat& M, int max_arity, const Bounds& b) {
  Ids id;
  return multicat_doc(M, max_arity, b, id);
}

Term permcat_document(const PermCat& C, const Bounds& b) {
  Ids id;
  return permcat_doc(C, b, id);
}

Term ring_document(const RingCategory& R, const std::string& name) {
  Ids id;
  return ring_doc(R, "ring", name, id);
}

Term braided_document(const RingWithBraiding& B, const std::string& kind, const std::string& name) {
  if (kind != "biperm" && kind != "braided") throw Malformed("kind must be biperm or braided");
  Ids id;
  Term out = ring_doc(B.ring, kind, name, id);
  out["braiding"] = braiding_payload(*B.ring.additive, B.braiding, id);
  return out;
}

Term nfold_document(const NFoldMonoidal& D, const std::string& name) {
  Ids id;
  Term out = header("nfold", name, {});
  Term cat = Term::object();
  category_payload(cat, *D.cat, id);
  out["category"] = cat;
  Term ps = Term::array();
  for (const auto& P : D.products) ps.push_back(product_payload(*D.cat, P, id));
  out["products"] = ps;
  out["exchange"] = exchange_payload(*D.cat, D.exchange, D.n(), id);
  return out;
}

Term en_document(const EnMonoidal& D, const std::string& name) {
  Ids id;
  Term out = header("en", name, {});
  Term add = Term::object();
  permcat_payload(add, *D.additive, id);
  out["additive"] = add;
  Term ps = Term::array(), l = Term::array(), r = Term::array();
  for (int i = 0; i < D.n(); ++i) {
    ps.push_back(product_payload(*D.additive, D.products[i], id));
    l.push_back(factorization_payload(*D.additive, D.left[i], id));
    r.push_back(factorization_payload(*D.additive, D.right[i], id));
  }
  out["products"] = ps;
  out["left"] = l;
  out["right"] = r;
  out["exchange"] = exchange_payload(*D.additive, D.exchange, D.n(), id);
  return out;
}

Term multifunctor_document(const Multifunctor& H, int max_arity, const std::string& name) {
  Ids id;
  return multifunctor_doc(H, max_arity, name, id);
}

Term smf_document(const SymMonFunctor& P, const std::string& name) {
  Ids id;
  Term out = header("functor", name, {});
  out["variant"] = "symmetric-monoidal";
  out["source"] = permcat_doc(*P.source, {}, id);
  out["target"] = permcat_doc(*P.target, {}, id);
  const auto& C = *P.source;
  Term ob = Term::array(), ms = Term::array(), con = Term::array();
  for (const auto& x : C.objects()) ob.push_back({{"object", id(x)}, {"image", id(P.on_object(x))}});
  for (const auto& f : all_morphisms(C)) ms.push_back({{"morphism", id(f)}, {"image", id(P.on_morphism(f))}});
  for (const auto& a : C.objects())
    for (const auto& b : C.objects()) con.push_back({{"a", id(a)}, {"b", id(b)}, {"morphism", id(P.constraint(a, b))}});
  out["objects"] = sorted(ob);
  out["morphisms"] = sorted(ms);
  out["constraints"] = sorted(con);
  out["unit_constraint"] = id(P.unit_constraint());
  out["strict"] = P.strict;
  out["strictly_unital"] = P.strictly_unital;
  out["strong"] = P.strong;
  return out;
}

Term multinat_document(const MultiNat& t, int max_arity, const std::string& name) {
  Ids id;
  Term out = header("multinat", name, {max_arity, 3});
  out["from"] = multifunctor_doc(t.from, max_arity, "from", id);
  out["to"] = multifunctor_doc(t.to, max_arity, "to", id);
  Term comp = Term::array();
  for (const auto& x : t.from.source->objects()) comp.push_back({{"object", id(x)}, {"image", id(t.component(x))}});
  out["components"] = sorted(comp);
  return out;
}

Term Document::to_json() const {
  Term out;
  if (kind == "multicat") {
    out = multicat_document(*multicat, bounds.max_arity, bounds);
  } else if (kind == "permcat") {
    out = permcat_document(*permcat, bounds);
  } else if (kind == "ring") {
    out = ring_document(*ring, name);
  } else if (kind == "biperm" || kind == "braided") {
    out = braided_document({*ring, braiding}, kind, name);
  } else if (kind == "nfold") {
    out = nfold_document(*nfold, name);
  } else if (kind == "en") {
    out = en_document(*en, name);
  } else if (kind == "functor" && multifunctor) {
    out = multifunctor_document(*multifunctor, std::max(multifunctor->source->max_arity(), multifunctor->target->max_arity()),
                                name);
  } else if (kind == "functor" && smf) {
    out = smf_document(*smf, name);
  } else if (kind == "multinat" && multinat) {
    out = multinat_document(*multinat, std::max(multinat->from.source->max_arity(), multinat->from.target->max_arity()),
                            name);
  } else {
    throw Malformed("empty document");
  }
  out["name"] = name;
  out["bounds"] = {{"max_arity", bounds.max_arity}, {"max_len", bounds.max_len}};
  return out;
}

}  // namespace pmc
