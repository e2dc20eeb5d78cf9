#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "permmult/term.hpp"

namespace pmc {

struct AxiomResult {
  std::string axiom;
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;  // instances whose evaluation left the arity bound
  std::uint64_t violations = 0;
  std::vector<Term> witnesses;  // first few only
};

class Report {
 public:
  static constexpr std::size_t kMaxWitnesses = 5;

  Report() = default;
  explicit Report(std::string subject) : subject_(std::move(subject)) {}

  const std::string& subject() const { return subject_; }

  // Get or create, keeping first-use order.
  AxiomResult& axiom(const std::string& name);
  const AxiomResult* find(const std::string& name) const;

  void pass_instance(const std::string& name) { axiom(name).checked++; }
  void skip(const std::string& name) { axiom(name).skipped++; }
  void fail(const std::string& name, Term witness);

  // Records one instance; the witness is only built on failure.
  void expect(const std::string& name, bool ok, const std::function<Term()>& witness) {
    if (ok)
      pass_instance(name);
    else
      fail(name, witness());
  }

  // Runs body; bound overruns count as skipped, structural errors as violations.
  void guarded(const std::string& name, const std::function<void()>& body);

  void note(const std::string& key, Term value) { notes_[key] = std::move(value); }
  const Term& notes() const { return notes_; }

  bool pass() const;
  std::uint64_t total_violations() const;
  std::uint64_t total_checked() const;
  const std::vector<AxiomResult>& axioms() const { return axioms_; }

  // Appends other's axioms, prefixing names.
  void merge(const Report& other, const std::string& prefix = "");

  Term to_json() const;

 private:
  std::string subject_;
  std::vector<AxiomResult> axioms_;
  Term notes_ = Term::object();
};

}  // namespace pmc
