#include "permmult/freeperm.hpp"

#include <algorithm>

namespace pmc {

namespace {

const Term& field(const Term& m, const char* key) {
  if (!m.is_object() || !m.contains(key)) throw Malformed("free morphism lacks \"" + std::string(key) + "\": " + show(m));
  return m.at(key);
}

Terms seq_of(const Term& t) {
  if (!t.is_array()) throw Malformed("sequence expected: " + show(t));
  return to_terms(t);
}

FinMap index_map(const Term& m) {
  const auto& images = field(m, "map");
  if (!images.is_array()) throw Malformed("index map must be an array: " + show(images));
  std::vector<int> v;
  for (const auto& i : images) {
    if (!i.is_number_integer()) throw Malformed("index map entries must be integers: " + show(images));
    v.push_back(i.get<int>());
  }
  return FinMap(static_cast<int>(field(m, "src").size()), static_cast<int>(field(m, "tgt").size()), std::move(v));
}

Term make(const Terms& src, const Terms& tgt, const std::vector<int>& images, const Terms& ops) {
  return Term{{"src", to_term(src)}, {"tgt", to_term(tgt)}, {"map", images}, {"ops", to_term(ops)}};
}

Terms restrict(const Terms& x, const std::vector<int>& idx) {
  Terms out;
  for (int i : idx) out.push_back(x[i - 1]);
  return out;
}

}  // namespace

Term free_morphism(const Terms& src, const Terms& tgt, const std::vector<int>& map, const Terms& ops) {
  return make(src, tgt, map, ops);
}

Term free_identity(const Multicat& M, const Terms& x) {
  Terms ops;
  for (const auto& c : x) ops.push_back(M.unit(c));
  return make(x, x, FinMap::identity(static_cast<int>(x.size())).images(), ops);
}

void check_free_morphism(const Multicat& M, const Term& m) {
  auto x = seq_of(field(m, "src"));
  auto y = seq_of(field(m, "tgt"));
  auto f = index_map(m);
  const auto& ops = field(m, "ops");
  if (!ops.is_array() || ops.size() != y.size())
    throw Malformed("expected " + std::to_string(y.size()) + " operations in " + show(m));
  for (int j = 1; j <= static_cast<int>(y.size()); ++j) {
    OpSig want{restrict(x, f.preimage(j)), y[j - 1]};
    auto got = M.signature(ops[j - 1]);
    if (!(got == want))
      throw Malformed("operation " + show(ops[j - 1]) + " has signature " + show(got.to_json()) + ", expected " +
                      show(want.to_json()));
  }
}

Term free_compose(const Multicat& M, const Term& g, const Term& f) {
  if (field(f, "tgt") != field(g, "src"))
    throw Malformed("not composable: " + show(g) + " after " + show(f));
  auto mf = index_map(f), mg = index_map(g);
  const auto& phi = field(f, "ops");
  const auto& psi = field(g, "ops");
  auto gf = compose(mg, mf);
  Terms ops;
  for (int k = 1; k <= gf.codomain(); ++k) {
    Terms inner;
    for (int j : mg.preimage(k)) inner.push_back(phi.at(j - 1));
    auto theta = M.gamma(psi.at(k - 1), inner);
    ops.push_back(M.act(theta, sigma_kgf(mf, mg, k)));
  }
  return make(seq_of(field(f, "src")), seq_of(field(g, "tgt")), gf.images(), ops);
}

Term free_sum(const Term& f, const Term& g) {
  auto m = direct_sum(index_map(f), index_map(g));
  return make(pmc::concat(seq_of(field(f, "src")), seq_of(field(g, "src"))),
              pmc::concat(seq_of(field(f, "tgt")), seq_of(field(g, "tgt"))), m.images(),
              pmc::concat(seq_of(field(f, "ops")), seq_of(field(g, "ops"))));
}

Term free_symmetry(const Multicat& M, const Terms& x, const Terms& y) {
  int r = static_cast<int>(x.size()), r2 = static_cast<int>(y.size());
  std::vector<int> images;
  for (int i = 1; i <= r + r2; ++i) images.push_back(i <= r ? r2 + i : i - r);
  auto tgt = pmc::concat(y, x);
  Terms ops;
  for (const auto& c : tgt) ops.push_back(M.unit(c));
  return make(pmc::concat(x, y), tgt, images, ops);
}

Terms free_hom_enumerate(const Multicat& M, const Terms& x, const Terms& y) {
  for (const auto& c : pmc::concat(x, y))
    if (!M.has_object(c)) throw UnresolvedReference("unknown object " + show(c));
  int r = static_cast<int>(x.size()), s = static_cast<int>(y.size());
  if (s > 0 && r > M.max_arity())
    throw BoundExceeded("fibres of size " + std::to_string(r) + " exceed the arity bound " +
                        std::to_string(M.max_arity()));
  Terms out;
  for (const auto& f : all_finmaps(r, s)) {
    std::vector<Terms> choices;
    for (int j = 1; j <= s; ++j) choices.push_back(M.ops(restrict(x, f.preimage(j)), y[j - 1]));
    // odometer over the per-fibre choices
    std::vector<std::size_t> at(s, 0);
    bool empty = std::any_of(choices.begin(), choices.end(), [](const Terms& c) { return c.empty(); });
    while (!empty) {
      Terms ops;
      for (int j = 0; j < s; ++j) ops.push_back(choices[j][at[j]]);
      out.push_back(make(x, y, f.images(), ops));
      int j = 0;
      while (j < s && ++at[j] == choices[j].size()) at[j++] = 0;
      if (j == s) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- view ----

FreeView::FreeView(MulticatPtr M, int max_len) : M_(std::move(M)), L_(max_len) {
  for (const auto& p : profiles_upto(M_->objects(), L_)) objs_.push_back(to_term(p));
}

bool FreeView::has_object(const Term& x) const {
  if (!x.is_array()) return false;
  return std::all_of(x.begin(), x.end(), [&](const Term& c) { return M_->has_object(c); });
}

Terms FreeView::hom(const Term& x, const Term& y) const {
  Term key = tuple_of(x, y);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = homs_.find(key);
    if (it != homs_.end()) return it->second;
  }
  auto h = free_hom_enumerate(*M_, seq_of(x), seq_of(y));
  std::lock_guard<std::mutex> lock(mu_);
  homs_.emplace(key, h);
  return h;
}

Term FreeView::source(const Term& f) const { return field(f, "src"); }
Term FreeView::target(const Term& f) const { return field(f, "tgt"); }
Term FreeView::identity(const Term& x) const { return free_identity(*M_, seq_of(x)); }
Term FreeView::compose(const Term& g, const Term& f) const { return free_compose(*M_, g, f); }
Term FreeView::sum_obj(const Term& x, const Term& y) const { return to_term(pmc::concat(seq_of(x), seq_of(y))); }
Term FreeView::sum_mor(const Term& f, const Term& g) const { return free_sum(f, g); }
Term FreeView::symmetry(const Term& x, const Term& y) const { return free_symmetry(*M_, seq_of(x), seq_of(y)); }

std::shared_ptr<FreeView> free_perm(MulticatPtr M, int max_len) {
  return std::make_shared<FreeView>(std::move(M), max_len);
}

// ---- 2-functoriality ----

SymMonFunctor free_on_multifunctor(const Multifunctor& H, int max_len) {
  auto src = free_perm(H.source, max_len);
  auto tgt = free_perm(H.target, max_len);
  auto on_seq = [H](const Term& x) {
    Terms out;
    for (const auto& c : seq_of(x)) out.push_back(H.on_object(c));
    return to_term(out);
  };
  SymMonFunctor P;
  P.source = src;
  P.target = tgt;
  P.on_object = on_seq;
  P.on_morphism = [H, on_seq](const Term& f) {
    Terms ops;
    for (const auto& op : field(f, "ops")) ops.push_back(H.on_op(op));
    auto out = f;
    out["src"] = on_seq(field(f, "src"));
    out["tgt"] = on_seq(field(f, "tgt"));
    out["ops"] = to_term(ops);
    return out;
  };
  P.constraint = [tgt, on_seq](const Term& x, const Term& y) {
    return tgt->identity(tgt->sum_obj(on_seq(x), on_seq(y)));
  };
  P.unit_constraint = [tgt] { return tgt->identity(Term::array()); };
  P.strict = P.strictly_unital = P.strong = true;
  return P;
}

MonoidalNat free_on_multinat(const MultiNat& kappa, int max_len) {
  auto from = free_on_multifunctor(kappa.from, max_len);
  auto to = free_on_multifunctor(kappa.to, max_len);
  return MonoidalNat{from, to, [kappa, from, to](const Term& x) {
                       auto xs = seq_of(x);
                       Terms ops;
                       for (const auto& c : xs) ops.push_back(kappa.component(c));
                       return make(seq_of(from.on_object(x)), seq_of(to.on_object(x)),
                                   FinMap::identity(static_cast<int>(xs.size())).images(), ops);
                     }};
}

}  // namespace pmc
