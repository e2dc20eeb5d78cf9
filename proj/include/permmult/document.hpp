#pragma once

#include <optional>
#include <string>

#include "permmult/ring.hpp"

namespace pmc {

// Structure documents: JSON with "kind", "version" and a kind-specific payload.
// Every id is a string; permutations are 1-indexed lists. See docs/formats.md.

struct Bounds {
  int max_arity = 3;
  int max_len = 3;
};

struct Document {
  std::string kind;  // multicat | permcat | ring | biperm | braided | nfold | en | functor | multinat
  std::string name;
  Bounds bounds;

  std::shared_ptr<TableMulticat> multicat;
  std::shared_ptr<TablePermCat> permcat;  // also the additive part of ring kinds, the category of nfold
  std::optional<RingCategory> ring;       // ring, biperm, braided
  Braiding braiding;                      // biperm, braided
  std::optional<NFoldMonoidal> nfold;
  std::optional<EnMonoidal> en;
  std::optional<Multifunctor> multifunctor;  // functor with variant "multifunctor"
  std::optional<SymMonFunctor> smf;          // functor with variant "symmetric-monoidal"
  std::optional<MultiNat> multinat;

  // Tables are re-enumerated from the parsed structure, so this is canonical.
  Term to_json() const;
};

inline constexpr int kDocumentVersion = 1;

// Total-or-error: ParseError (with byte offset), UnresolvedReference, or Malformed.
Document parse_document(const std::string& text);
Document document_from_json(const Term& j);
Document load_document(const std::string& path);

// Sorted keys, sorted entry lists, two-space indent, trailing newline.
std::string serialize(const Term& doc);
std::string serialize(const Document& doc);

// Documents of in-memory structures. Non-string ids are rendered with their JSON text;
// Malformed if two distinct ids render alike.
Term multicat_document(const Multicat& M, int max_arity, const Bounds& b = {});
Term permcat_document(const PermCat& C, const Bounds& b = {});
Term ring_document(const RingCategory& R, const std::string& name = "ring");
Term braided_document(const RingWithBraiding& B, const std::string& kind, const std::string& name = "ring");
Term nfold_document(const NFoldMonoidal& D, const std::string& name = "nfold");
Term en_document(const EnMonoidal& D, const std::string& name = "en");
Term multifunctor_document(const Multifunctor& H, int max_arity, const std::string& name = "functor");
Term smf_document(const SymMonFunctor& P, const std::string& name = "functor");
Term multinat_document(const MultiNat& t, int max_arity, const std::string& name = "multinat");

}  // namespace pmc
