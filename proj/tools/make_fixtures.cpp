// Writes the shipped example documents into the directory given as the only argument.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "permmult/document.hpp"

using namespace pmc;

namespace {

void write(const std::filesystem::path& dir, const std::string& file, const std::string& text) {
  std::ofstream f(dir / file, std::ios::binary);
  f << text;
  if (!f) throw Error("cannot write " + (dir / file).string());
}

void write(const std::filesystem::path& dir, const std::string& file, const Term& doc) {
  write(dir, file, serialize(doc));
}

PermCatPtr cyclic_monoid(int m) {
  Terms els;
  for (int i = 0; i < m; ++i) els.push_back(i);
  return discrete_permcat("z" + std::to_string(m), els, 0,
                          [m](const Term& a, const Term& b) { return Term((a.get<int>() + b.get<int>()) % m); });
}

// Boolean E_2 category whose exchange at (0,1,1,1) is the identity of 1.
EnMonoidal zero_exchange_mutant() {
  auto D = discrete_en(boolean_semiring(), 2);
  auto C = D.additive;
  auto ex = D.exchange;
  D.exchange = [C, ex](int i, int j, const Term& a, const Term& b, const Term& c, const Term& d) {
    if (a == 0 && b == 1 && c == 1 && d == 1) return C->identity(1);
    return ex(i, j, a, b, c, d);
  };
  return D;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <dir>\n";
    return 2;
  }
  std::filesystem::path dir(argv[1]);
  std::filesystem::create_directories(dir);
  try {
    auto Mt = terminal_multicat(3);
    auto As = associative_operad(3);
    write(dir, "mterm.json", multicat_document(*Mt, 3));
    write(dir, "as.json", multicat_document(*As, 3));
    write(dir, "initial.json", multicat_document(*initial_operad(4), 4));
    write(dir, "graded.json", multicat_document(*graded_multicat(2, 5), 2, {2, 2}));
    write(dir, "monoid.json", permcat_document(*cyclic_monoid(3)));
    write(dir, "sign.json", permcat_document(*sign_permcat()));
    write(dir, "bool.json", permcat_document(*bool_permcat()));

    write(dir, "ring.json", ring_document(boolean_semiring(), "boolean"));
    write(dir, "biperm.json", braided_document(discrete_bipermutative(truncated_semiring(2)), "biperm", "truncated-2"));
    write(dir, "braided.json", braided_document(discrete_bipermutative(modular_semiring(3)), "braided", "z3"));
    write(dir, "nfold.json", nfold_document(discrete_en(boolean_semiring(), 2).nfold(), "boolean-2fold"));
    write(dir, "en.json", en_document(discrete_en(boolean_semiring(), 2), "boolean-e2"));
    write(dir, "en-mutant.json", en_document(zero_exchange_mutant(), "boolean-e2-mutant"));

    write(dir, "functor.json", multifunctor_document(to_terminal(As, Mt), 3, "as-to-terminal"));
    write(dir, "smf.json", smf_document(identity_smf(sign_permcat()), "sign-identity"));
    write(dir, "multinat.json", multinat_document(identity_multinat(to_terminal(As, Mt)), 3, "identity"));

    // seeded bad documents
    auto bad = multicat_document(*Mt, 3);
    for (auto& e : bad["composition"])
      if (!e["inners"].empty()) {
        e["inners"][0] = "missing-op";
        break;
      }
    write(dir, "bad-gamma.json", bad);
    auto partial = permcat_document(*sign_permcat());
    partial["composition"].erase(partial["composition"].size() - 1);
    write(dir, "bad-nontotal.json", partial);
    write(dir, "bad-syntax.json", std::string("{\"kind\": \"permcat\", \"version\": 1,\n  \"objects\": [\"0\" \"1\"]}\n"));
  } catch (const Error& e) {
    std::cerr << "error (" << e.kind() << "): " << e.what() << "\n";
    return 1;
  }
  return 0;
}
