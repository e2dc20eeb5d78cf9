#pragma once

#include "permmult/multicat.hpp"

namespace pmc::fixtures {

inline Terms star(int n) { return Terms(n, Term("*")); }

// Commutative operad weighted by Z/2: ops (n, g), γ adds weights.
inline std::shared_ptr<TableMulticat> weighted_com(int A) {
  auto M = std::make_shared<TableMulticat>("weighted-com", Terms{"*"}, A);
  auto id = [](int n, int g) { return Term("c" + std::to_string(n) + "." + std::to_string(g)); };
  for (int n = 0; n <= A; ++n)
    for (int g = 0; g < 2; ++g) M->add_op(id(n, g), OpSig{star(n), "*"});
  M->set_unit("*", id(1, 0));
  for (int n = 0; n <= A; ++n)
    for (int g = 0; g < 2; ++g) {
      for (const auto& s : all_permutations(n)) M->set_act(id(n, g), s, id(n, g));
      // every inner tuple within bound
      std::function<void(int, int, int, Terms)> rec = [&](int j, int tot, int w, Terms inner) {
        if (j == n) {
          M->set_gamma(id(n, g), inner, id(tot, (g + w) % 2));
          return;
        }
        for (int k = 0; tot + k <= A; ++k)
          for (int h = 0; h < 2; ++h) {
            auto next = inner;
            next.push_back(id(k, h));
            rec(j + 1, tot + k, w + h, next);
          }
      };
      rec(0, 0, 0, {});
    }
  return M;
}

// (n, g) ↦ (n, g + n − 1)
inline Multifunctor twist_functor(MulticatPtr M) {
  return Multifunctor{M, M, [](const Term& x) { return x; }, [M](const Term& op) {
                        std::string s = op.get<std::string>();
                        auto dot = s.find('.');
                        int n = std::stoi(s.substr(1, dot - 1));
                        int g = std::stoi(s.substr(dot + 1));
                        return Term("c" + std::to_string(n) + "." + std::to_string(((g + n - 1) % 2 + 2) % 2));
                      }};
}

}  // namespace pmc::fixtures
