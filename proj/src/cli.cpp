#include "permmult/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <ostream>

#include "permmult/document.hpp"
#include "permmult/suites.hpp"
#include "permmult/transforms.hpp"

namespace pmc {

namespace {

struct Options {
  std::vector<std::string> files;
  std::optional<int> max_arity, max_len;
  std::string report;
  std::string level;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--max-arity", o.max_arity, "largest arity examined (default: document bound)")->check(CLI::NonNegativeNumber);
  sub->add_option("--max-len", o.max_len, "longest object sequence examined (default: document bound)")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--report", o.report, "write the report as JSON to this path");
}

struct InputError : Error {
  using Error::Error;
  const char* kind() const noexcept override { return "input-error"; }
};

Bounds effective(const Options& o, const Document& d) {
  Bounds b = d.bounds;
  if (o.max_arity) b.max_arity = *o.max_arity;
  if (o.max_len) b.max_len = *o.max_len;
  return b;
}

std::shared_ptr<TableMulticat> need_multicat(const Document& d, const std::string& file) {
  if (d.kind != "multicat") throw InputError(file + ": expected a multicat document, found " + d.kind);
  return d.multicat;
}

std::shared_ptr<TablePermCat> need_permcat(const Document& d, const std::string& file) {
  if (d.kind != "permcat") throw InputError(file + ": expected a permcat document, found " + d.kind);
  return d.permcat;
}

Report validate_document(const Document& d, const Bounds& b) {
  if (d.kind == "multicat") return validate_multicat(*d.multicat, b.max_arity);
  if (d.kind == "permcat") return validate_permcat(*d.permcat);
  if (d.kind == "ring") return validate_ring_category(*d.ring);
  if (d.kind == "biperm") return validate_bipermutative({*d.ring, d.braiding});
  if (d.kind == "braided") return validate_braided_ring({*d.ring, d.braiding});
  if (d.kind == "nfold") return validate_nfold_monoidal(*d.nfold);
  if (d.kind == "en") return validate_en_monoidal(*d.en);
  if (d.multifunctor) return validate_multifunctor(*d.multifunctor, b.max_arity);
  if (d.smf) return validate_smf(*d.smf);
  if (d.multinat) return validate_multinat(*d.multinat, b.max_arity);
  throw InputError("nothing to validate in a " + d.kind + " document");
}

Report check_ring(const Document& d, const std::string& level) {
  const auto& k = d.kind;
  if (level == "ring" && d.ring) return validate_ring_category(*d.ring);
  if (level == "ring" && d.en) {
    Report rep("ring structures of " + d.name);
    for (int i = 1; i <= d.en->n(); ++i) rep.merge(validate_ring_category(d.en->ring(i)), "ring " + std::to_string(i) + "/");
    return rep;
  }
  if (level == "biperm" && k == "biperm") return validate_bipermutative({*d.ring, d.braiding});
  if (level == "braided" && (k == "braided" || k == "biperm")) return validate_braided_ring({*d.ring, d.braiding});
  if (level == "nfold" && d.nfold) return validate_nfold_monoidal(*d.nfold);
  if (level == "nfold" && d.en) return validate_nfold_monoidal(d.en->nfold());
  if (level == "en" && d.en) return validate_en_monoidal(*d.en);
  throw InputError("level " + level + " does not apply to a " + k + " document");
}

Report free_report(const Multicat& M, const Bounds& b) {
  auto F = free_perm(std::shared_ptr<const Multicat>(&M, [](const Multicat*) {}), b.max_len);
  Report rep = validate_permcat(*F);
  Term sizes = Term::array();
  for (const auto& x : F->objects())
    for (const auto& y : F->objects()) {
      Term n;
      try {
        n = F->hom(x, y).size();
      } catch (const BoundExceeded&) {
        n = nullptr;
      }
      sizes.push_back({{"src", x}, {"tgt", y}, {"count", n}});
    }
  rep.note("hom_sizes", sizes);
  return rep;
}

void print_report(const Report& rep, std::ostream& out) {
  out << rep.subject() << "\n";
  for (const auto& a : rep.axioms()) {
    out << "  " << a.axiom << "  checked=" << a.checked << " skipped=" << a.skipped << " violations=" << a.violations
        << "\n";
    if (!a.witnesses.empty()) out << "    witness: " << a.witnesses.front().dump() << "\n";
  }
  if (!rep.notes().empty()) out << "notes: " << rep.notes().dump() << "\n";
  out << "verdict: " << (rep.pass() ? "pass" : "fail") << "\n";
}

int run(const std::string& cmd, const Options& o, std::ostream& out) {
  std::vector<Document> docs;
  for (const auto& f : o.files) docs.push_back(load_document(f));
  const auto b = effective(o, docs.front());

  Report rep;
  if (cmd == "validate") {
    rep = validate_document(docs[0], b);
  } else if (cmd == "free") {
    rep = free_report(*need_multicat(docs[0], o.files[0]), b);
  } else if (cmd == "endo") {
    auto C = need_permcat(docs[0], o.files[0]);
    rep = validate_multicat(*endo_multicat(C, b.max_arity), b.max_arity);
  } else if (cmd == "tensor-s" || cmd == "check-s") {
    std::vector<MulticatPtr> Ms;
    for (std::size_t i = 0; i < docs.size(); ++i) Ms.push_back(need_multicat(docs[i], o.files[i]));
    auto T = grid_tensor(Ms, b.max_arity);
    rep = cmd == "tensor-s" ? validate_multicat(*T, b.max_arity) : check_s_functor(T, b.max_len);
  } else if (cmd == "check-adjunction") {
    auto M = need_multicat(docs[0], o.files[0]);
    auto C = need_permcat(docs[1], o.files[1]);
    rep = Report("adjunction fragment on " + M->name() + " and " + C->name());
    rep.merge(validate_multifunctor(eta(M, b.max_len, b.max_arity), b.max_arity), "unit/");
    rep.merge(check_eta_multinat(identity_multifunctor(M), std::min(2, b.max_arity), std::min(2, b.max_len)),
              "unit-multinaturality/");
    rep.merge(check_triangles(M, C, b.max_len, b.max_arity), "triangles/");
  } else if (cmd == "check-ring") {
    rep = check_ring(docs[0], o.level);
  }

  print_report(rep, out);
  if (!o.report.empty()) {
    Term doc = {{"command", cmd},
                {"inputs", o.files},
                {"bounds", {{"max_arity", b.max_arity}, {"max_len", b.max_len}}},
                {"structure", docs[0].name},
                {"report", rep.to_json()}};
    std::ofstream f(o.report, std::ios::binary);
    if (!f) throw InputError("cannot write " + o.report);
    f << serialize(doc);
  }
  return rep.pass() ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite checks for multicategories, permutative categories and their ring structures", "pmc"};
  app.require_subcommand(1);
  Options o;

  struct Sub {
    const char* name;
    const char* help;
    int files;  // -1: two or more
  };
  const Sub subs[] = {
      {"validate", "check every axiom of the structure in a document", 1},
      {"free", "free permutative category on a multicat, with hom-set sizes", 1},
      {"endo", "endomorphism multicategory of a permcat", 1},
      {"tensor-s", "multicategory axioms on the tensor fragment of several multicats", -1},
      {"check-s", "functoriality and multilinearity of S on several multicats", -1},
      {"check-adjunction", "unit, counit and triangle identities for a multicat and a permcat", 2},
      {"check-ring", "ring-level axioms of a ring, biperm, braided, nfold or en document", 1},
  };
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    auto* files = sub->add_option("files", o.files, "input documents")->required()->check(CLI::ExistingFile);
    if (s.files > 0)
      files->expected(s.files);
    else
      files->expected(2, 16);
    add_common(sub, o);
    if (std::string(s.name) == "check-ring")
      sub->add_option("--level", o.level, "ring | biperm | braided | nfold | en")
          ->required()
          ->check(CLI::IsMember({"ring", "biperm", "braided", "nfold", "en"}));
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  std::string cmd;
  for (auto* sub : app.get_subcommands()) cmd = sub->get_name();
  try {
    return run(cmd, o, out);
  } catch (const Error& e) {
    err << "error (" << e.kind() << "): " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace pmc
