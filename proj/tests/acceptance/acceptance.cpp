// One line per acceptance criterion; exit status 1 if any is red.
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include <unistd.h>

#include "fixtures.hpp"
#include "mutants.hpp"
#include "permmult/cli.hpp"
#include "permmult/document.hpp"
#include "permmult/suites.hpp"
#include "permmult/transforms.hpp"

using namespace pmc;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("failed: " + what);
    }
  }
  void info(const std::string& s) { notes.push_back(s); }
};

std::string summary(const Report& r) {
  return r.subject() + " checked=" + std::to_string(r.total_checked()) +
         " violations=" + std::to_string(r.total_violations());
}

void expect_pass(Outcome& o, const std::string& label, const Report& r) {
  o.require(r.pass() && r.total_checked() > 0, label + " (" + summary(r) + ")");
}

std::uint64_t checked(const Report& r, const std::string& axiom) {
  const auto* a = r.find(axiom);
  return a ? a->checked : 0;
}

// ---- criterion 1 ----

Outcome axiom_suite() {
  Outcome o;
  expect_pass(o, "terminal multicategory", validate_multicat(*terminal_multicat(4), 4));
  expect_pass(o, "initial operad", validate_multicat(*initial_operad(4), 4));
  // End(sign) at arity 3 takes several seconds; arity 2 keeps the run short.
  expect_pass(o, "End(sign)", validate_multicat(*endo_multicat(sign_permcat(), 2), 2));
  expect_pass(o, "End(bool)", validate_multicat(*endo_multicat(bool_permcat(), 3), 3));
  expect_pass(o, "End(truncated 2)", validate_multicat(*endo_multicat(truncated_permcat(2), 2), 2));
  expect_pass(o, "As (x) Mterm",
              validate_multicat(*grid_tensor({associative_operad(2), terminal_multicat(2)}, 2), 2));

  int mutants = 0, axioms = 0;
  for (const auto& f : acceptance::run_mutant_catalogue()) {
    mutants += f.mutants;
    axioms += static_cast<int>(f.axioms.size());
    o.require(f.clean_pass, f.family + " clean fixture");
    for (const auto& s : f.survivors) o.require(false, f.family + " mutant survived: " + s);
    for (const auto& a : f.axioms) o.require(f.covered.count(a) > 0, f.family + " axiom never violated: " + a);
  }
  o.info(std::to_string(mutants) + " mutants over " + std::to_string(axioms) + " axioms");
  return o;
}

// ---- criterion 2 ----

// maps [r] → [s] by odometer
long count_maps(int r, int s) {
  if (r == 0) return 1;
  if (s == 0) return 0;
  std::vector<int> d(r, 0);
  long n = 0;
  while (true) {
    ++n;
    int i = 0;
    while (i < r && ++d[i] == s) d[i++] = 0;
    if (i == r) return n;
  }
}

long count_bijections(int r, int s) {
  if (r != s) return 0;
  std::vector<int> p(r);
  std::iota(p.begin(), p.end(), 0);
  long n = 0;
  do ++n;
  while (std::next_permutation(p.begin(), p.end()));
  return n;
}

Outcome hom_counts() {
  Outcome o;
  auto Mt = terminal_multicat(4);
  auto I = initial_operad(4);
  int cells = 0;
  for (int r = 0; r <= 4; ++r)
    for (int s = 0; s <= 4; ++s) {
      auto tag = "(" + std::to_string(r) + "," + std::to_string(s) + ")";
      auto a = free_hom_enumerate(*Mt, Terms(r, Mt->objects()[0]), Terms(s, Mt->objects()[0]));
      o.require(static_cast<long>(a.size()) == count_maps(r, s), "F(Mterm)" + tag);
      auto b = free_hom_enumerate(*I, Terms(r, I->objects()[0]), Terms(s, I->objects()[0]));
      o.require(static_cast<long>(b.size()) == count_bijections(r, s), "F(I)" + tag);
      cells += 2;
    }
  o.info(std::to_string(cells) + " hom-sets against enumeration");
  return o;
}

// ---- criterion 3 ----

// Every morphism x → y whose index map has fibres no larger than the arity bound.
Terms bounded_hom(const Multicat& M, const Terms& x, const Terms& y) {
  Terms out;
  int r = static_cast<int>(x.size()), s = static_cast<int>(y.size());
  if (s == 0 && r > 0) return out;
  std::vector<int> img(r, 1);
  while (true) {
    std::vector<Terms> choices(s);
    bool fits = true;
    for (int j = 1; j <= s && fits; ++j) {
      Terms profile;
      for (int i = 0; i < r; ++i)
        if (img[i] == j) profile.push_back(x[i]);
      fits = static_cast<int>(profile.size()) <= M.max_arity();
      if (fits) choices[j - 1] = M.ops(profile, y[j - 1]);
    }
    if (fits)
      for_each_product(choices, [&](const Terms& ops) { out.push_back(free_morphism(x, y, img, ops)); });
    int i = 0;
    while (i < r && ++img[i] > s) img[i++] = 1;
    if (i == r) return out;
  }
}

Outcome free_category() {
  Outcome o;
  // full windows are enumerable only while the length stays within the arity; the category axioms run as part of this
  expect_pass(o, "permutative", validate_permcat(*free_perm(associative_operad(3), 3)));

  auto M = associative_operad(2);
  const Term star = M->objects()[0];
  std::vector<Terms> objs;
  for (int n = 0; n <= 3; ++n) objs.push_back(Terms(n, star));
  std::map<std::pair<int, int>, Terms> hom;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) hom[{a, b}] = bounded_hom(*M, objs[a], objs[b]);
  long triples = 0, beyond = 0, units = 0;
  auto compose = [&](const Term& g, const Term& f) -> std::optional<Term> {
    try {
      return free_compose(*M, g, f);
    } catch (const BoundExceeded&) {
      return std::nullopt;
    }
  };
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (const auto& f : hom[{a, b}]) {
        ++units;
        o.require(free_compose(*M, free_identity(*M, objs[b]), f) == f, "left identity");
        o.require(free_compose(*M, f, free_identity(*M, objs[a])) == f, "right identity");
        for (int c = 0; c <= 3; ++c)
          for (const auto& g : hom[{b, c}]) {
            auto gf = compose(g, f);
            for (int d = 0; d <= 3; ++d)
              for (const auto& h : hom[{c, d}]) {
                auto hg = compose(h, g);
                std::optional<Term> l, r;
                if (gf) l = compose(h, *gf);
                if (hg) r = compose(*hg, f);
                if (!l || !r) {
                  ++beyond;
                  continue;
                }
                ++triples;
                o.require(*l == *r, "associativity");
              }
          }
      }
  o.info(std::to_string(units) + " morphisms, " + std::to_string(triples) + " triples compared, " +
         std::to_string(beyond) + " leave the arity window");
  return o;
}

// ---- criterion 4 ----

Outcome s_suite() {
  Outcome o;
  auto r = check_s_functor(grid_tensor({associative_operad(4), terminal_multicat(4)}, 4), 2);
  expect_pass(o, "S functor", r);
  auto W = fixtures::weighted_com(3);
  MultiNat twist{identity_multifunctor(W), fixtures::twist_functor(W), [](const Term&) { return Term("c1.1"); }};
  o.require(validate_multinat(twist, 3).pass(), "twist is multinatural");
  auto As = associative_operad(4);
  auto Mt = terminal_multicat(4);
  auto n1 = check_s_naturality({twist, identity_multinat(identity_multifunctor(As))}, 2, 4);
  auto n2 = check_s_naturality({identity_multinat(identity_multifunctor(Mt)), twist}, 2, 4);
  for (const auto* n : {&n1, &n2}) {
    expect_pass(o, "S naturality", *n);
    for (const char* ax : {"objects", "constraints", "morphisms", "transformations"})
      o.require(checked(*n, ax) > 0, std::string("S naturality exercised ") + ax);
  }
  o.info(std::to_string(r.total_checked() + n1.total_checked() + n2.total_checked()) + " instances");
  return o;
}

// ---- criterion 5 ----

Outcome f_suite() {
  Outcome o;
  auto A = associative_operad(4);
  auto Mt = terminal_multicat(4);
  auto W = fixtures::weighted_com(3);
  auto sym = check_f_symmetry(grid_tensor({A, graded_multicat(3, 5)}, 4), 2);
  expect_pass(o, "symmetry", sym);
  auto unit = check_f_unit(A, 2);
  expect_pass(o, "unit", unit);
  auto H1 = to_terminal(grid_tensor({A, Mt}, 4), Mt);
  auto H2 = compose_multifunctors(fixtures::twist_functor(W), tensor_collapse(grid_tensor({W}, 4)));
  auto Hp = tensor_permute(grid_tensor({W, Mt}, 4), Permutation({2, 1}));
  auto comp = check_f_composition(Hp, {H1, H2}, 300);
  expect_pass(o, "composition", comp);
  o.require(checked(comp, "constraints") > 0, "composition constraints exercised");
  o.info(std::to_string(sym.total_checked() + unit.total_checked() + comp.total_checked()) + " instances");
  return o;
}

// ---- criterion 6 ----

NLinearFunctor bool_and() {
  auto B = bool_permcat();
  auto meet = [](const Term& a, const Term& b) { return Term(a.get<int>() & b.get<int>()); };
  NLinearFunctor P;
  P.sources = {B, B};
  P.target = B;
  P.on_objects = [meet](const Terms& X) { return meet(X[0], X[1]); };
  P.on_morphisms = [B, meet](const Terms& fs) { return B->identity(meet(B->source(fs[0]), B->source(fs[1]))); };
  P.constraint = [B, meet](int j, const Terms& X, const Term& xp) {
    Terms Y = X;
    Y[j - 1] = xp;
    return B->identity(B->sum_obj(meet(X[0], X[1]), meet(Y[0], Y[1])));
  };
  P.strict = P.strong = true;
  return P;
}

Outcome adjunction() {
  Outcome o;
  expect_pass(o, "unit multifunctor", validate_multifunctor(eta(associative_operad(3), 3, 3), 3));
  auto T = grid_tensor({associative_operad(2), terminal_multicat(2)}, 2);
  auto H = to_terminal(T, terminal_multicat(2));
  expect_pass(o, "unit multinaturality", check_eta_multinat(H, 2, 2));
  auto tri = check_triangles(associative_operad(3), sign_permcat(), 3, 3);
  expect_pass(o, "triangles", tri);
  for (const char* ax : {"free-side", "endo-side", "counit-after-rho"})
    o.require(checked(tri, ax) > 0, std::string("triangle exercised ") + ax);
  auto w = epsilon_counterexample();
  o.require(w.via_counit != w.via_free, "counit counterexample separates the two paths");
  auto anti = check_epsilon_multinat(bool_and(), 2, 2);
  expect_pass(o, "counit square for a strict bilinear functor", anti);
  o.info("counterexample index maps " + w.via_counit["map"].dump() + " vs " + w.via_free["map"].dump());
  return o;
}

// ---- criterion 7 ----

Outcome marking() {
  Outcome o;
  auto P = acceptance::cocycle(sign_permcat());
  auto Cm = mark_category(P.source);
  expect_pass(o, "marked category", validate_permcat(*Cm.cat));
  auto Pm = validate_smf(mark_functor(Cm, P));
  expect_pass(o, "marked functor", Pm);
  o.require(Pm.notes().value("strictly_unital", false), "marked functor strictly unital");
  auto R = validate_smf(rho_mark(Cm, 3, 3));
  expect_pass(o, "marked rho", R);
  auto sq = check_rho_mark_square(P, 3, 3);
  expect_pass(o, "marked square", sq);
  o.info(std::to_string(Cm.cat->objects().size()) + " marked objects, square " + summary(sq));
  return o;
}

// ---- criterion 8 ----

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  Outcome o;
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / ("pmc-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string fx = PMC_FIXTURE_DIR;
  std::vector<std::vector<std::string>> commands = {
      {"check-ring", fx + "/en-mutant.json", "--level", "en"},
      {"check-adjunction", fx + "/mterm.json", fx + "/bool.json"},
      {"validate", fx + "/multinat.json"},
  };
  int compared = 0;
  for (const auto& cmd : commands) {
    std::string outs[2], files[2];
    int codes[2];
    for (int k = 0; k < 2; ++k) {
      auto path = (dir / ("run" + std::to_string(k) + ".json")).string();
      std::vector<std::string> args{"pmc"};
      args.insert(args.end(), cmd.begin(), cmd.end());
      args.insert(args.end(), {"--report", path});
      std::ostringstream out, err;
      codes[k] = run_command(args, out, err);
      outs[k] = out.str();
      files[k] = slurp(path);
    }
    o.require(codes[0] == codes[1] && outs[0] == outs[1], cmd[0] + " console output stable");
    o.require(!files[0].empty() && files[0] == files[1], cmd[0] + " report byte-identical");
    ++compared;
  }
  auto a = serialize(check_triangles(terminal_multicat(3), bool_permcat(), 3, 3).to_json());
  auto b = serialize(check_triangles(terminal_multicat(3), bool_permcat(), 3, 3).to_json());
  o.require(a == b, "in-memory report stable");
  fs::remove_all(dir);
  o.info(std::to_string(compared) + " commands run twice");
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, Outcome (*)()>> criteria = {
      {"axiom suite and mutants", axiom_suite},      {"free hom-set sizes", hom_counts},
      {"free permutative category", free_category},  {"S functor and naturality", s_suite},
      {"F symmetry, unit, composition", f_suite},    {"adjunction data", adjunction},
      {"marked categories", marking},                {"deterministic reports", determinism},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("threw ") + e.what());
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    all = all && o.ok;
    std::cout << "criterion " << i + 1 << ": " << (o.ok ? "PASS" : "FAIL") << " " << criteria[i].first;
    for (const auto& n : o.notes) std::cout << "; " << n;
    std::cout << " [" << ms << " ms]" << std::endl;
  }
  return all ? 0 : 1;
}
