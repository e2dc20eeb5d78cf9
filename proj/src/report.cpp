#include "permmult/report.hpp"

namespace pmc {

AxiomResult& Report::axiom(const std::string& name) {
  for (auto& a : axioms_)
    if (a.axiom == name) return a;
  AxiomResult a;
  a.axiom = name;
  axioms_.push_back(std::move(a));
  return axioms_.back();
}

const AxiomResult* Report::find(const std::string& name) const {
  for (const auto& a : axioms_)
    if (a.axiom == name) return &a;
  return nullptr;
}

void Report::fail(const std::string& name, Term witness) {
  auto& a = axiom(name);
  a.checked++;
  a.violations++;
  if (a.witnesses.size() < kMaxWitnesses) a.witnesses.push_back(std::move(witness));
}

void Report::guarded(const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const BoundExceeded&) {
    skip(name);
  } catch (const Unsupported&) {
    skip(name);
  } catch (const Error& e) {
    fail(name, Term{{"error", e.kind()}, {"message", e.what()}});
  }
}

bool Report::pass() const { return total_violations() == 0; }

std::uint64_t Report::total_violations() const {
  std::uint64_t n = 0;
  for (const auto& a : axioms_) n += a.violations;
  return n;
}

std::uint64_t Report::total_checked() const {
  std::uint64_t n = 0;
  for (const auto& a : axioms_) n += a.checked;
  return n;
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& a : other.axioms_) {
    auto& mine = axiom(prefix + a.axiom);
    mine.checked += a.checked;
    mine.skipped += a.skipped;
    mine.violations += a.violations;
    for (const auto& w : a.witnesses)
      if (mine.witnesses.size() < kMaxWitnesses) mine.witnesses.push_back(w);
  }
  for (auto it = other.notes_.begin(); it != other.notes_.end(); ++it)
    notes_[prefix + it.key()] = it.value();
}

Term Report::to_json() const {
  Term axioms = Term::array();
  for (const auto& a : axioms_) {
    Term w = Term::array();
    for (const auto& x : a.witnesses) w.push_back(x);
    axioms.push_back({{"axiom", a.axiom},
                      {"checked", a.checked},
                      {"skipped", a.skipped},
                      {"violations", a.violations},
                      {"witnesses", w}});
  }
  Term out = {{"subject", subject_}, {"axioms", axioms}, {"verdict", pass() ? "pass" : "fail"}};
  if (!notes_.empty()) out["notes"] = notes_;
  return out;
}

}  // namespace pmc
