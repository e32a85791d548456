#include "mvalg/signature.hpp"

#include <algorithm>

#include "mvalg/ideal.hpp"

namespace mvalg {

std::vector<int> SymbolicCounts::distinct_values() const {
  if (family) throw InvalidParameterError("value set is infinite (family present)");
  std::vector<int> out;
  for (const auto& [v, c] : explicit_part)
    if (!c.is_zero()) out.push_back(v);
  return out;
}

bool SymbolicCounts::equals(const SymbolicCounts& other) const {
  const bool f1 = family.has_value(), f2 = other.family.has_value();
  if (f1 != f2) return false;

  int bound = 0;
  if (!explicit_part.empty()) bound = std::max(bound, explicit_part.rbegin()->first);
  if (!other.explicit_part.empty()) bound = std::max(bound, other.explicit_part.rbegin()->first);
  if (f1) {
    bound = std::max({bound, family->first, other.family->first});
    // Beyond every explicit key and both starting points the counts are the
    // family indicators; two arithmetic progressions agree there iff they
    // share the step and the residue.
    if (family->step != other.family->step) return false;
    if (((family->first - other.family->first) % family->step) != 0) return false;
  }
  for (int n = 0; n <= bound; ++n)
    if (count(n) != other.count(n)) return false;
  return true;
}

SymbolicCounts SymbolicCounts::shifted(int delta, int min_value) const {
  SymbolicCounts out;
  for (const auto& [v, c] : explicit_part) {
    if (c.is_zero()) continue;
    const int nv = v + delta;
    if (nv < min_value)
      throw InvalidParameterError("shift pushes value " + std::to_string(v) + " below " +
                                  std::to_string(min_value));
    out.explicit_part.emplace(nv, c);
  }
  if (family) {
    if (family->first + delta < min_value)
      throw InvalidParameterError("shift pushes family start below " +
                                  std::to_string(min_value));
    out.family = RankFamily{family->first + delta, family->step};
  }
  return out;
}

std::string SymbolicCounts::str() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [v, c] : explicit_part) {
    if (c.is_zero()) continue;
    if (!first) s += ", ";
    s += std::to_string(v) + ":" + c.str();
    first = false;
  }
  if (family) {
    if (!first) s += ", ";
    s += family->str();
  }
  return s + "}";
}

void SpectralSignature::validate() const {
  for (const auto& [v, c] : ranks.explicit_part) {
    if (v < 2) throw InvalidParameterError("rank " + std::to_string(v) + " below 2");
    if (!c.is_countable() && c.value() == 0)
      throw InvalidParameterError("rank " + std::to_string(v) + " carries a zero count");
  }
  if (ranks.family) {
    if (ranks.family->first < 2) throw InvalidParameterError("rank family must start at 2 or above");
    if (ranks.family->step < 1) throw InvalidParameterError("rank family step must be positive");
  }
  if (atom_orders) {
    for (const auto& [v, c] : atom_orders->explicit_part) {
      if (v < 1) throw InvalidParameterError("atom order " + std::to_string(v) + " below 1");
      if (!c.is_countable() && c.value() == 0)
        throw InvalidParameterError("atom order " + std::to_string(v) + " carries a zero count");
    }
    if (atom_orders->family) {
      if (atom_orders->family->first < 1)
        throw InvalidParameterError("atom-order family must start at 1 or above");
      if (atom_orders->family->step < 1)
        throw InvalidParameterError("atom-order family step must be positive");
    }
  }
}

bool SpectralSignature::same_description(const SpectralSignature& other) const {
  if (!same_spectrum(other)) return false;
  if (atom_orders.has_value() != other.atom_orders.has_value()) return false;
  if (atom_orders && !atom_orders->equals(*other.atom_orders)) return false;
  return is_atomic == other.is_atomic;
}

SpectralSignature sig_of_finite_algebra(const AlgebraPtr& a) {
  SpectralSignature s;
  std::map<int, std::uint64_t> ranks;
  for (const Ideal& m : max_ideals(a)) ++ranks[rank(m)];
  for (const auto& [r, c] : ranks) s.ranks.explicit_part.emplace(r, Card::finite(c));

  std::map<int, std::uint64_t> orders;
  for (ElementId at : a->atoms()) ++orders[static_cast<int>(a->element_order(at).value())];
  SymbolicCounts ao;
  for (const auto& [o, c] : orders) ao.explicit_part.emplace(o, Card::finite(c));
  s.atom_orders = std::move(ao);
  s.is_atomic = a->is_atomic();
  s.infinite_rank_count = Card::finite(0);
  s.validate();
  return s;
}

SpectralSignature sig_profinite(const SpectralSignature& s) {
  s.validate();
  SpectralSignature out;
  out.ranks = s.ranks;
  out.infinite_rank_count = Card::finite(0);
  // The completion is a product of chains with one atom of order rank−1 per
  // factor.
  out.atom_orders = s.ranks.shifted(-1, 1);
  out.is_atomic = true;
  return out;
}

SpectralSignature sig_macneille(const SpectralSignature& s) {
  s.validate();
  if (!s.is_atomic || !s.atom_orders)
    throw PreconditionError("MacNeille signature requires atom data and atomicity");
  SpectralSignature out;
  out.ranks = s.atom_orders->shifted(+1, 2);
  out.infinite_rank_count = Card::finite(0);
  out.atom_orders = *s.atom_orders;
  out.is_atomic = true;
  return out;
}

SigMacCriterion sig_mac_criterion(const SpectralSignature& s) {
  s.validate();
  if (!s.atom_orders) throw PreconditionError("MacNeille criterion requires atom data");
  if (!s.is_atomic) return {false, "signature is not atomic"};

  const SymbolicCounts profinite_ranks = sig_profinite(s).ranks;
  const SymbolicCounts macneille_ranks = sig_macneille(s).ranks;
  if (profinite_ranks.equals(macneille_ranks))
    return {true, "profinite and MacNeille rank spectra coincide: " + profinite_ranks.str()};
  return {false, "profinite ranks " + profinite_ranks.str() + " differ from MacNeille ranks " +
                     macneille_ranks.str()};
}

const char* completion_verdict_name(CompletionVerdict v) {
  switch (v) {
    case CompletionVerdict::YesBounded: return "YES_BOUNDED";
    case CompletionVerdict::YesDivisibility: return "YES_DIVISIBILITY";
    case CompletionVerdict::Unknown: return "UNKNOWN";
  }
  return "?";
}

CompletionDecision divisibility_decision(const SpectralSignature& s,
                                         DivisibilityReading reading) {
  s.validate();
  CompletionDecision out{CompletionVerdict::Unknown, std::nullopt, {}, ""};

  if (s.ranks.value_set_finite()) {
    out.verdict = CompletionVerdict::YesBounded;
    out.note = "rank set is finite";
    return out;
  }

  const RankFamily fam = *s.ranks.family;
  // Offset 1 tests (n0−1) | (n−1), the condition for Ł_{n0} ⊆ Ł_n; offset 0
  // is the literal (n0−1) | n.
  const int offset = reading == DivisibilityReading::ProofConsistent ? 1 : 0;

  // Candidates n0 must lie in the rank set. Within the family only the first
  // member can work: for m = first + k·step with k ≥ 1, m−1 exceeds the step
  // and cannot divide it.
  std::vector<int> candidates;
  for (const auto& [r, c] : s.ranks.explicit_part)
    if (!c.is_zero()) candidates.push_back(r);
  candidates.push_back(fam.first);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  for (int n0 : candidates) {
    const int d = n0 - 1;
    if (d < 1) continue;
    // All but finitely many members of the family must satisfy the division;
    // since the family is an arithmetic progression this happens exactly
    // when d divides the step and the (shifted) first member.
    if (fam.step % d != 0) continue;
    if ((fam.first - offset) % d != 0) continue;

    out.verdict = CompletionVerdict::YesDivisibility;
    out.n0 = n0;
    for (const auto& [r, c] : s.ranks.explicit_part)
      if (!c.is_zero() && (r - offset) % d != 0) out.exceptional_ranks.push_back(r);
    out.note = "n0=" + std::to_string(n0) + " divides the family tail; " +
               std::to_string(out.exceptional_ranks.size()) + " exceptional explicit ranks";
    return out;
  }

  out.note = "no rank n0 covers the family tail; undecided by the known sufficient conditions";
  return out;
}

SpectralSignature builtin_example_convergent() {
  SpectralSignature s;
  s.ranks.family = RankFamily::all_from(2);  // ranks n+1 for all n ≥ 1
  s.infinite_rank_count = Card::finite(1);
  SymbolicCounts ao;
  ao.family = RankFamily::all_from(1);  // one atom of every order n ≥ 1
  s.atom_orders = std::move(ao);
  s.is_atomic = true;
  s.validate();
  return s;
}

bool sig_equal(const SpectralSignature& s1, const SpectralSignature& s2) {
  s1.validate();
  s2.validate();
  return s1.same_spectrum(s2);
}

}  // namespace mvalg
