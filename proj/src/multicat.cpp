#include "permmult/multicat.hpp"

#include <algorithm>
#include <random>

namespace pmc {

namespace {

Term gamma_key(const Term& outer, const Terms& inners) { return tuple_of(outer, to_term(inners)); }
Term act_key(const Term& op, const Permutation& s) { return tuple_of(op, s.to_json()); }
Term sig_key(const Terms& inputs, const Term& output) { return tuple_of(to_term(inputs), output); }

std::string perm_label(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// Calls fn for every tuple of permutations with the given degrees.
void for_each_perm_tuple(const std::vector<int>& degrees,
                         const std::function<void(const std::vector<Permutation>&)>& fn) {
  std::vector<std::vector<Permutation>> pools;
  for (int k : degrees) pools.push_back(all_permutations(k));
  std::vector<Permutation> cur(degrees.size());
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == degrees.size()) return fn(cur);
    for (const auto& p : pools[j]) {
      cur[j] = p;
      rec(j + 1);
    }
  };
  rec(0);
}

}  // namespace

bool Multicat::has_object(const Term& x) const {
  auto objs = objects();
  return std::find(objs.begin(), objs.end(), x) != objs.end();
}

TableMulticat::TableMulticat(std::string name, Terms objects, int max_arity)
    : name_(std::move(name)), objects_(std::move(objects)), max_arity_(max_arity) {}

bool TableMulticat::has_object(const Term& x) const {
  return std::find(objects_.begin(), objects_.end(), x) != objects_.end();
}

namespace {
const std::string& op_key(const Term& op, std::string& scratch) {
  if (op.is_string()) return op.get_ref<const std::string&>();
  scratch = op.dump();
  return scratch;
}
}  // namespace

std::size_t TableMulticat::VecHash::operator()(const std::vector<int>& v) const noexcept {
  std::size_t h = v.size();
  for (int x : v) h = h * 1000003u ^ static_cast<std::size_t>(x + 0x9e3779b9);
  return h;
}

int TableMulticat::intern(const Term& op) const {
  std::string scratch;
  auto it = ids_.find(op_key(op, scratch));
  return it == ids_.end() ? -1 : it->second;
}

OpSig TableMulticat::signature(const Term& op) const {
  int i = intern(op);
  if (i < 0) throw UnresolvedReference("unknown operation " + show(op));
  return id_sigs_[i];
}

Terms TableMulticat::ops(const Terms& inputs, const Term& output) const {
  auto it = by_sig_.find(sig_key(inputs, output));
  return it == by_sig_.end() ? Terms{} : it->second;
}

Term TableMulticat::unit(const Term& c) const {
  auto it = units_.find(c);
  if (it == units_.end()) throw UnresolvedReference("no unit for object " + show(c));
  return it->second;
}

Term TableMulticat::gamma(const Term& outer, const Terms& inners) const {
  std::vector<int> key;
  key.reserve(inners.size() + 1);
  int o = intern(outer);
  if (o < 0) throw UnresolvedReference("unknown operation " + show(outer));
  key.push_back(o);
  int total = 0;
  for (const auto& x : inners) {
    int i = intern(x);
    if (i < 0) throw UnresolvedReference("unknown operation " + show(x));
    key.push_back(i);
    total += id_sigs_[i].arity();
  }
  if (id_sigs_[o].arity() != static_cast<int>(inners.size()))
    throw DegreeMismatch("gamma: " + show(outer) + " takes " + std::to_string(id_sigs_[o].arity()) +
                         " inputs");
  if (total > max_arity_) throw BoundExceeded("gamma: composite arity " + std::to_string(total));
  auto it = fast_gamma_.find(key);
  if (it == fast_gamma_.end())
    throw Malformed("gamma table has no entry for " + show(gamma_key(outer, inners)));
  return id_terms_[it->second];
}

Term TableMulticat::act(const Term& op, const Permutation& s) const {
  int o = intern(op);
  if (o < 0) throw UnresolvedReference("unknown operation " + show(op));
  if (id_sigs_[o].arity() != s.degree()) throw DegreeMismatch("act: degree vs arity");
  std::vector<int> key{o};
  key.insert(key.end(), s.images().begin(), s.images().end());
  auto it = fast_act_.find(key);
  if (it == fast_act_.end()) throw Malformed("action table has no entry for " + show(act_key(op, s)));
  return id_terms_[it->second];
}

void TableMulticat::add_op(const Term& id, OpSig sig) {
  if (sigs_.count(id)) throw Malformed("duplicate operation " + show(id));
  auto& bucket = by_sig_[sig_key(sig.inputs, sig.output)];
  bucket.insert(std::upper_bound(bucket.begin(), bucket.end(), id), id);
  std::string scratch;
  ids_[op_key(id, scratch)] = static_cast<int>(id_terms_.size());
  id_terms_.push_back(id);
  id_sigs_.push_back(sig);
  sigs_.emplace(id, std::move(sig));
}

void TableMulticat::set_unit(const Term& c, const Term& op) { units_[c] = op; }

void TableMulticat::set_gamma(const Term& outer, const Terms& inners, const Term& result) {
  std::vector<int> key{intern(outer)};
  for (const auto& x : inners) key.push_back(intern(x));
  int r = intern(result);
  for (int k : key)
    if (k < 0) throw UnresolvedReference("gamma entry mentions an unknown operation");
  if (r < 0) throw UnresolvedReference("gamma entry result " + show(result) + " is unknown");
  fast_gamma_[key] = r;
  gamma_[gamma_key(outer, inners)] = result;
}

void TableMulticat::set_act(const Term& op, const Permutation& s, const Term& result) {
  int o = intern(op), r = intern(result);
  if (o < 0 || r < 0) throw UnresolvedReference("action entry mentions an unknown operation");
  std::vector<int> key{o};
  key.insert(key.end(), s.images().begin(), s.images().end());
  fast_act_[key] = r;
  act_[act_key(op, s)] = result;
}

std::vector<Terms> profiles_of_length(const Terms& objects, int n) {
  std::vector<Terms> out{Terms{}};
  for (int i = 0; i < n; ++i) {
    std::vector<Terms> next;
    for (const auto& p : out)
      for (const auto& x : objects) {
        auto q = p;
        q.push_back(x);
        next.push_back(std::move(q));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<Terms> profiles_upto(const Terms& objects, int bound) {
  std::vector<Terms> out;
  for (int n = 0; n <= bound; ++n)
    for (auto& p : profiles_of_length(objects, n)) out.push_back(std::move(p));
  return out;
}

OpIndex index_ops(const Multicat& M, int bound) {
  OpIndex idx;
  auto objs = M.objects();
  for (const auto& y : objs) idx.by_output[y];
  for (const auto& prof : profiles_upto(objs, std::min(bound, M.max_arity())))
    for (const auto& y : objs)
      for (const auto& op : M.ops(prof, y)) {
        idx.by_output[y].push_back(idx.all.size());
        idx.all.emplace_back(op, OpSig{prof, y});
      }
  return idx;
}

void for_each_inner_tuple(const OpIndex& idx, const Terms& outputs, int budget,
                          const std::function<void(const Terms&, const std::vector<OpSig>&)>& fn) {
  Terms cur(outputs.size());
  std::vector<OpSig> sigs(outputs.size());
  std::function<void(std::size_t, int)> rec = [&](std::size_t j, int left) {
    if (j == outputs.size()) return fn(cur, sigs);
    auto it = idx.by_output.find(outputs[j]);
    if (it == idx.by_output.end()) return;
    for (auto k : it->second) {
      const auto& [op, sig] = idx.all[k];
      if (sig.arity() > left) continue;
      cur[j] = op;
      sigs[j] = sig;
      rec(j + 1, left - sig.arity());
    }
  };
  rec(0, budget);
}

std::shared_ptr<TableMulticat> materialize(const Multicat& M, int bound) {
  const int A = std::min(bound, M.max_arity());
  auto T = std::make_shared<TableMulticat>(M.name(), M.objects(), A);
  auto idx = index_ops(M, A);
  for (const auto& [op, sig] : idx.all) T->add_op(op, sig);
  for (const auto& c : M.objects()) T->set_unit(c, M.unit(c));
  for (const auto& [op, sig] : idx.all) {
    for (const auto& s : all_permutations(sig.arity())) T->set_act(op, s, M.act(op, s));
    for_each_inner_tuple(idx, sig.inputs, A, [&](const Terms& inner, const std::vector<OpSig>&) {
      try {
        T->set_gamma(op, inner, M.gamma(op, inner));
      } catch (const BoundExceeded&) {
      }
    });
  }
  return T;
}

Report validate_multicat(const Multicat& M, int bound) {
  Report rep("multicategory " + M.name());
  const int A = std::min(bound, M.max_arity());
  auto idx = index_ops(M, A);

  for (const auto& c : M.objects())
    rep.guarded("signature", [&] {
      auto u = M.unit(c);
      auto sig = M.signature(u);
      rep.expect("signature", sig == OpSig{Terms{c}, c},
                 [&] { return Term{{"unit_of", c}, {"op", u}, {"signature", sig.to_json()}}; });
    });

  for (const auto& [phi, sig] : idx.all) {
    const int n = sig.arity();
    rep.guarded("signature", [&] {
      auto got = M.signature(phi);
      rep.expect("signature", got == sig, [&] {
        return Term{{"op", phi}, {"listed", sig.to_json()}, {"reported", got.to_json()}};
      });
    });

    auto perms = all_permutations(n);
    for (const auto& s : perms) {
      rep.guarded("signature", [&] {
        auto got = M.signature(M.act(phi, s));
        OpSig want{perm_act(s, sig.inputs), sig.output};
        rep.expect("signature", got == want, [&] {
          return Term{{"op", phi}, {"perm", s.to_json()}, {"reported", got.to_json()}};
        });
      });
      for (const auto& t : perms)
        rep.guarded("action-functoriality", [&] {
          auto lhs = M.act(M.act(phi, s), t);
          auto rhs = M.act(phi, perm_compose(s, t));
          rep.expect("action-functoriality", lhs == rhs, [&] {
            return Term{{"op", phi}, {"sigma", s.to_json()}, {"tau", t.to_json()}, {"lhs", lhs}, {"rhs", rhs}};
          });
        });
    }
    rep.guarded("action-functoriality", [&] {
      auto got = M.act(phi, Permutation::identity(n));
      rep.expect("action-functoriality", got == phi,
                 [&] { return Term{{"op", phi}, {"identity_action", got}}; });
    });

    rep.guarded("left-unity", [&] {
      auto got = M.gamma(M.unit(sig.output), {phi});
      rep.expect("left-unity", got == phi, [&] { return Term{{"op", phi}, {"got", got}}; });
    });
    rep.guarded("right-unity", [&] {
      Terms units;
      for (const auto& c : sig.inputs) units.push_back(M.unit(c));
      auto got = M.gamma(phi, units);
      rep.expect("right-unity", got == phi, [&] { return Term{{"op", phi}, {"got", got}}; });
    });

    for_each_inner_tuple(idx, sig.inputs, A, [&](const Terms& psi, const std::vector<OpSig>& psig) {
      std::vector<int> k;
      Terms mid;
      for (const auto& ps : psig) {
        k.push_back(ps.arity());
        for (const auto& x : ps.inputs) mid.push_back(x);
      }
      Term composite;
      try {
        composite = M.gamma(phi, psi);
        auto got = M.signature(composite);
        rep.expect("signature", got == OpSig{mid, sig.output}, [&] {
          return Term{{"outer", phi}, {"inners", to_term(psi)}, {"reported", got.to_json()}};
        });
      } catch (const BoundExceeded&) {
        rep.skip("signature");
        return;
      } catch (const Unsupported&) {
        rep.skip("signature");
        return;
      } catch (const Error& e) {
        rep.fail("signature", Term{{"outer", phi}, {"inners", to_term(psi)}, {"error", e.what()}});
        return;
      }

      for_each_inner_tuple(idx, mid, A, [&](const Terms& theta, const std::vector<OpSig>&) {
        rep.guarded("associativity", [&] {
          auto lhs = M.gamma(composite, theta);
          Terms inner;
          std::size_t at = 0;
          for (std::size_t j = 0; j < psi.size(); ++j) {
            Terms block(theta.begin() + at, theta.begin() + at + k[j]);
            at += k[j];
            inner.push_back(M.gamma(psi[j], block));
          }
          auto rhs = M.gamma(phi, inner);
          rep.expect("associativity", lhs == rhs, [&] {
            return Term{{"outer", phi}, {"middle", to_term(psi)}, {"inner", to_term(theta)},
                        {"lhs", lhs}, {"rhs", rhs}};
          });
        });
      });

      for (const auto& s : perms)
        rep.guarded("top-equivariance", [&] {
          auto lhs = M.gamma(M.act(phi, s), perm_act(s, psi));
          auto rhs = M.act(composite, block_perm(s, k));
          rep.expect("top-equivariance", lhs == rhs, [&] {
            return Term{{"outer", phi}, {"inners", to_term(psi)}, {"sigma", s.to_json()}, {"lhs", lhs}, {"rhs", rhs}};
          });
        });

      for_each_perm_tuple(k, [&](const std::vector<Permutation>& taus) {
        rep.guarded("bottom-equivariance", [&] {
          Terms twisted;
          for (std::size_t j = 0; j < psi.size(); ++j) twisted.push_back(M.act(psi[j], taus[j]));
          auto lhs = M.gamma(phi, twisted);
          auto rhs = M.act(composite, block_sum(taus));
          Term tj = Term::array();
          for (const auto& t : taus) tj.push_back(t.to_json());
          rep.expect("bottom-equivariance", lhs == rhs, [&] {
            return Term{{"outer", phi}, {"inners", to_term(psi)}, {"taus", tj}, {"lhs", lhs}, {"rhs", rhs}};
          });
        });
      });
    });
  }
  return rep;
}

std::shared_ptr<TableMulticat> terminal_multicat(int A, bool with_nullary) {
  auto M = std::make_shared<TableMulticat>(with_nullary ? "terminal" : "terminal+", Terms{"*"}, A);
  auto id = [](int n) { return Term("iota" + std::to_string(n)); };
  const int lo = with_nullary ? 0 : 1;
  for (int n = lo; n <= A; ++n) M->add_op(id(n), OpSig{Terms(n, "*"), "*"});
  M->set_unit("*", id(1));
  auto idx = index_ops(*M, A);
  for (int n = lo; n <= A; ++n) {
    for (const auto& s : all_permutations(n)) M->set_act(id(n), s, id(n));
    for_each_inner_tuple(idx, Terms(n, "*"), A, [&](const Terms& inner, const std::vector<OpSig>& sigs) {
      int tot = 0;
      for (const auto& s : sigs) tot += s.arity();
      M->set_gamma(id(n), inner, id(tot));
    });
  }
  return M;
}

std::shared_ptr<TableMulticat> initial_operad(int A) {
  auto M = std::make_shared<TableMulticat>("initial", Terms{"*"}, A);
  M->add_op("1", OpSig{Terms{"*"}, "*"});
  M->set_unit("*", "1");
  M->set_gamma("1", {"1"}, "1");
  M->set_act("1", Permutation::identity(1), "1");
  return M;
}

namespace {

// ⟨μ·σ⟩ composition: twist = block_sum(τ') ∘ block_perm(σ, k') with ψ'_q = ψ_{σ⁻¹(q)}.
Permutation ordering_gamma(const Permutation& s, const std::vector<Permutation>& taus) {
  auto inv = s.inverse();
  std::vector<Permutation> tp;
  std::vector<int> kp;
  for (int q = 1; q <= s.degree(); ++q) {
    tp.push_back(taus[inv(q) - 1]);
    kp.push_back(taus[inv(q) - 1].degree());
  }
  return perm_compose(block_sum(tp), block_perm(s, kp));
}

Permutation parse_ordering(const std::string& id) {
  auto colon = id.rfind(':');
  std::vector<int> v;
  std::string rest = id.substr(colon + 1);
  std::size_t pos = 0;
  while (pos < rest.size()) {
    auto comma = rest.find(',', pos);
    if (comma == std::string::npos) comma = rest.size();
    v.push_back(std::stoi(rest.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return Permutation(std::move(v));
}

}  // namespace

std::shared_ptr<TableMulticat> associative_operad(int A, bool with_nullary) {
  LambdaMulticat L;
  L.label = with_nullary ? "associative" : "associative+";
  L.objs = {"*"};
  L.arity_bound = A;
  auto id = [](const Permutation& s) { return Term("mu:" + perm_label(s.images())); };
  const int lo = with_nullary ? 0 : 1;
  L.sig = [](const Term& op) {
    return OpSig{Terms(parse_ordering(op.get<std::string>()).degree(), "*"), "*"};
  };
  L.homs = [id, lo](const Terms& in, const Term&) {
    Terms out;
    if (static_cast<int>(in.size()) < lo) return out;
    for (const auto& s : all_permutations(static_cast<int>(in.size()))) out.push_back(id(s));
    std::sort(out.begin(), out.end());
    return out;
  };
  L.unit_of = [id](const Term&) { return id(Permutation::identity(1)); };
  L.compose = [id](const Term& outer, const Terms& inners) {
    std::vector<Permutation> taus;
    for (const auto& x : inners) taus.push_back(parse_ordering(x.get<std::string>()));
    return id(ordering_gamma(parse_ordering(outer.get<std::string>()), taus));
  };
  L.action = [id](const Term& op, const Permutation& s) {
    return id(perm_compose(parse_ordering(op.get<std::string>()), s));
  };
  return materialize(L, A);
}

std::shared_ptr<TableMulticat> graded_multicat(int A, unsigned seed) {
  std::mt19937 rng(seed);
  const bool ordered = rng() % 2 == 0;
  const int wa = static_cast<int>(rng() % 2);
  const int wb = 1 - wa;
  auto weight = [=](const Term& x) { return x == Term("a") ? wa : wb; };
  auto word = [](const Terms& xs) {
    std::string s;
    for (const auto& x : xs) s += x.get<std::string>();
    return s;
  };
  auto id = [=](const Terms& in, const Term& out, const Permutation& s) {
    std::string base = "g:" + word(in) + ">" + out.get<std::string>();
    return Term(ordered ? base + ":" + perm_label(s.images()) : base);
  };

  LambdaMulticat L;
  L.label = std::string("graded-") + (ordered ? "assoc" : "comm") + "-" + std::to_string(seed);
  L.objs = {"a", "b"};
  L.arity_bound = A;
  L.sig = [](const Term& op) {
    std::string s = op.get<std::string>();
    auto gt = s.find('>');
    Terms in;
    for (std::size_t i = 2; i < gt; ++i) in.push_back(std::string(1, s[i]));
    return OpSig{in, std::string(1, s[gt + 1])};
  };
  L.homs = [=](const Terms& in, const Term& out) {
    int w = 0;
    for (const auto& x : in) w += weight(x);
    Terms ops;
    if (w % 2 != weight(out)) return ops;
    if (!ordered) return Terms{id(in, out, Permutation())};
    for (const auto& s : all_permutations(static_cast<int>(in.size()))) ops.push_back(id(in, out, s));
    std::sort(ops.begin(), ops.end());
    return ops;
  };
  L.unit_of = [=](const Term& c) { return id({c}, c, Permutation::identity(1)); };
  auto ordering_of = [=](const Term& op) {
    if (!ordered) return Permutation::identity(L.sig(op).arity());
    return parse_ordering(op.get<std::string>());
  };
  L.compose = [=](const Term& outer, const Terms& inners) {
    std::vector<Permutation> taus;
    Terms in;
    for (const auto& x : inners) {
      taus.push_back(ordering_of(x));
      for (const auto& y : L.sig(x).inputs) in.push_back(y);
    }
    return id(in, L.sig(outer).output, ordering_gamma(ordering_of(outer), taus));
  };
  L.action = [=](const Term& op, const Permutation& s) {
    auto sig = L.sig(op);
    return id(perm_act(s, sig.inputs), sig.output, perm_compose(ordering_of(op), s));
  };
  return materialize(L, A);
}

MulticatPtr endo_operad_of_object(MulticatPtr M, const Term& c) {
  if (!M->has_object(c)) throw UnresolvedReference("endo_operad_of_object: unknown object " + show(c));
  auto L = std::make_shared<LambdaMulticat>();
  L->label = M->name() + "|End(" + show(c) + ")";
  L->objs = {c};
  L->arity_bound = M->max_arity();
  L->sig = [M](const Term& op) { return M->signature(op); };
  L->homs = [M, c](const Terms& in, const Term& out) {
    if (out != c) return Terms{};
    for (const auto& x : in)
      if (x != c) return Terms{};
    return M->ops(in, out);
  };
  L->unit_of = [M](const Term& x) { return M->unit(x); };
  L->compose = [M](const Term& o, const Terms& in) { return M->gamma(o, in); };
  L->action = [M](const Term& op, const Permutation& s) { return M->act(op, s); };
  return L;
}

Multifunctor identity_multifunctor(MulticatPtr M) {
  return Multifunctor{M, M, [](const Term& x) { return x; }, [](const Term& op) { return op; }};
}

Multifunctor compose_multifunctors(const Multifunctor& Q, const Multifunctor& P) {
  return Multifunctor{P.source, Q.target, [Q, P](const Term& x) { return Q.on_object(P.on_object(x)); },
                      [Q, P](const Term& op) { return Q.on_op(P.on_op(op)); }};
}

Multifunctor to_terminal(MulticatPtr M, MulticatPtr terminal) {
  auto star = terminal->objects().at(0);
  return Multifunctor{M, terminal, [star](const Term&) { return star; }, [M, terminal, star](const Term& op) {
                        auto n = M->signature(op).arity();
                        auto ops = terminal->ops(Terms(n, star), star);
                        if (ops.size() != 1) throw Malformed("target is not terminal at arity " + std::to_string(n));
                        return ops[0];
                      }};
}

Report validate_multifunctor(const Multifunctor& H, int bound) {
  Report rep("multifunctor " + H.source->name() + " -> " + H.target->name());
  const auto& S = *H.source;
  const auto& T = *H.target;
  auto idx = index_ops(S, bound);
  for (const auto& c : S.objects()) {
    rep.guarded("object-map", [&] {
      auto img = H.on_object(c);
      rep.expect("object-map", T.has_object(img), [&] { return Term{{"object", c}, {"image", img}}; });
    });
    rep.guarded("unit", [&] {
      auto lhs = H.on_op(S.unit(c));
      auto rhs = T.unit(H.on_object(c));
      rep.expect("unit", lhs == rhs, [&] { return Term{{"object", c}, {"lhs", lhs}, {"rhs", rhs}}; });
    });
  }
  auto map_profile = [&](const Terms& xs) {
    Terms out;
    for (const auto& x : xs) out.push_back(H.on_object(x));
    return out;
  };
  for (const auto& [phi, sig] : idx.all) {
    rep.guarded("signature", [&] {
      auto img = H.on_op(phi);
      auto got = T.signature(img);
      OpSig want{map_profile(sig.inputs), H.on_object(sig.output)};
      rep.expect("signature", got == want,
                 [&] { return Term{{"op", phi}, {"image", img}, {"reported", got.to_json()}}; });
    });
    for (const auto& s : all_permutations(sig.arity()))
      rep.guarded("equivariance", [&] {
        auto lhs = H.on_op(S.act(phi, s));
        auto rhs = T.act(H.on_op(phi), s);
        rep.expect("equivariance", lhs == rhs, [&] {
          return Term{{"op", phi}, {"sigma", s.to_json()}, {"lhs", lhs}, {"rhs", rhs}};
        });
      });
    for_each_inner_tuple(idx, sig.inputs, bound, [&](const Terms& psi, const std::vector<OpSig>&) {
      rep.guarded("composition", [&] {
        auto lhs = H.on_op(S.gamma(phi, psi));
        Terms hpsi;
        for (const auto& x : psi) hpsi.push_back(H.on_op(x));
        auto rhs = T.gamma(H.on_op(phi), hpsi);
        rep.expect("composition", lhs == rhs, [&] {
          return Term{{"outer", phi}, {"inners", to_term(psi)}, {"lhs", lhs}, {"rhs", rhs}};
        });
      });
    });
  }
  return rep;
}

MultiNat identity_multinat(const Multifunctor& P) {
  return MultiNat{P, P, [P](const Term& c) { return P.target->unit(P.on_object(c)); }};
}

MultiNat multinat_vcomp(const MultiNat& beta, const MultiNat& theta) {
  auto N = theta.from.target;
  return MultiNat{theta.from, beta.to, [beta, theta, N](const Term& c) {
                    return N->gamma(beta.component(c), {theta.component(c)});
                  }};
}

MultiNat multinat_hcomp(const MultiNat& theta2, const MultiNat& theta) {
  auto L = theta2.from.target;
  auto from = compose_multifunctors(theta2.from, theta.from);
  auto to = compose_multifunctors(theta2.to, theta.to);
  return MultiNat{from, to, [theta2, theta, L](const Term& c) {
                    return L->gamma(theta2.component(theta.to.on_object(c)),
                                    {theta2.from.on_op(theta.component(c))});
                  }};
}

Report validate_multinat(const MultiNat& theta, int bound) {
  const auto& S = *theta.from.source;
  const auto& T = *theta.from.target;
  Report rep("multinatural transformation on " + S.name());
  for (const auto& c : S.objects())
    rep.guarded("component", [&] {
      auto comp = theta.component(c);
      auto got = T.signature(comp);
      OpSig want{Terms{theta.from.on_object(c)}, theta.to.on_object(c)};
      rep.expect("component", got == want,
                 [&] { return Term{{"object", c}, {"component", comp}, {"reported", got.to_json()}}; });
    });
  auto idx = index_ops(S, bound);
  for (const auto& [phi, sig] : idx.all)
    rep.guarded("naturality", [&] {
      auto lhs = T.gamma(theta.component(sig.output), {theta.from.on_op(phi)});
      Terms comps;
      for (const auto& c : sig.inputs) comps.push_back(theta.component(c));
      auto rhs = T.gamma(theta.to.on_op(phi), comps);
      rep.expect("naturality", lhs == rhs, [&] { return Term{{"op", phi}, {"lhs", lhs}, {"rhs", rhs}}; });
    });
  return rep;
}

}  // namespace pmc
