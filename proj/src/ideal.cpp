#include "mvalg/ideal.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "mvalg/detail/build.hpp"

namespace mvalg {

namespace {

Bitset downset_of(const FiniteMvAlgebra& a, ElementId top) {
  Bitset b(a.size());
  for (ElementId x = 0; x < a.size(); ++x)
    if (a.leq(x, top)) b.set(x);
  return b;
}

// Symmetric difference d(x,y) = (x⊙¬y) ⊕ (y⊙¬x); x ~ y mod I iff d(x,y) ∈ I.
ElementId sym_diff(const FiniteMvAlgebra& a, ElementId x, ElementId y) {
  const ElementId l = a.neg(a.oplus(a.neg(x), y));  // x ⊙ ¬y
  const ElementId r = a.neg(a.oplus(a.neg(y), x));  // y ⊙ ¬x
  return a.oplus(l, r);
}

}  // namespace

Ideal Ideal::create(AlgebraPtr algebra, Bitset members) {
  if (!algebra) throw InvalidParameterError("ideal requires an algebra");
  if (members.universe() != algebra->size())
    throw InvalidParameterError("ideal member set sized for a different carrier");
  if (!members.test(algebra->zero())) throw InvalidParameterError("ideal must contain 0");
  for (ElementId y = 0; y < algebra->size(); ++y) {
    if (!members.test(y)) continue;
    for (ElementId x = 0; x < algebra->size(); ++x) {
      if (algebra->leq(x, y) && !members.test(x))
        throw InvalidParameterError("ideal not downward closed: " + algebra->name(x) + " ≤ " +
                                    algebra->name(y));
      if (members.test(x) && !members.test(algebra->oplus(x, y)))
        throw InvalidParameterError("ideal not ⊕-closed at (" + algebra->name(x) + ", " +
                                    algebra->name(y) + ")");
    }
  }
  Ideal i;
  i.algebra_ = std::move(algebra);
  i.members_ = std::move(members);
  return i;
}

Ideal Ideal::zero_ideal(const AlgebraPtr& algebra) {
  Bitset b(algebra->size());
  b.set(algebra->zero());
  return create(algebra, std::move(b));
}

Ideal Ideal::whole(const AlgebraPtr& algebra) {
  Bitset b(algebra->size());
  for (ElementId x = 0; x < algebra->size(); ++x) b.set(x);
  return create(algebra, std::move(b));
}

std::string Ideal::str() const {
  std::string s = "{";
  bool first = true;
  for (std::size_t x : members_.members()) {
    if (!first) s += ", ";
    s += algebra_->name(static_cast<ElementId>(x));
    first = false;
  }
  return s + "}";
}

Ideal ideal_generated(const AlgebraPtr& a, const std::vector<ElementId>& generators) {
  Bitset in(a->size());
  in.set(a->zero());
  std::vector<ElementId> work{a->zero()};
  for (ElementId g : generators) {
    if (g >= a->size()) throw InvalidParameterError("generator outside the carrier");
    if (!in.test(g)) {
      in.set(g);
      work.push_back(g);
    }
  }

  while (!work.empty()) {
    const ElementId y = work.back();
    work.pop_back();
    for (ElementId x = 0; x < a->size(); ++x) {
      if (!in.test(x) && a->leq(x, y)) {
        in.set(x);
        work.push_back(x);
      }
      if (in.test(x)) {
        const ElementId s = a->oplus(x, y);
        if (!in.test(s)) {
          in.set(s);
          work.push_back(s);
        }
      }
    }
  }

  Ideal result = Ideal::create(a, std::move(in));

  // Least among all ideals containing the generators.
  for (const Ideal& other : all_ideals(a)) {
    bool contains_gens = true;
    for (ElementId g : generators)
      if (!other.contains(g)) {
        contains_gens = false;
        break;
      }
    if (contains_gens && !result.subset_of(other))
      throw InternalCheckError("generated ideal is not minimal below " + other.str());
  }
  return result;
}

std::vector<Ideal> all_ideals(const AlgebraPtr& a, const Limits& limits) {
  if (a->size() > limits.max_carrier)
    throw ResourceLimitError("carrier size " + std::to_string(a->size()) +
                             " exceeds the enumeration limit " +
                             std::to_string(limits.max_carrier));
  // Every ideal of a finite MV-algebra is the downset of its largest element,
  // which is idempotent; conversely the downset of any idempotent is an
  // ideal. Enumerating idempotents therefore enumerates ideals.
  std::vector<Ideal> out;
  std::vector<Bitset> seen;
  for (ElementId e = 0; e < a->size(); ++e) {
    if (a->oplus(e, e) != e) continue;
    Bitset down = downset_of(*a, e);
    if (std::find(seen.begin(), seen.end(), down) != seen.end()) continue;
    seen.push_back(down);
    out.push_back(Ideal::create(a, std::move(down)));
    if (out.size() > limits.max_ideal_count)
      throw ResourceLimitError("ideal count exceeds limit " +
                               std::to_string(limits.max_ideal_count));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime(const Ideal& ideal) {
  if (!ideal.is_proper()) throw InvalidParameterError("primality is defined for proper ideals");
  const FiniteMvAlgebra& a = *ideal.algebra();
  for (ElementId x = 0; x < a.size(); ++x)
    for (ElementId y = x; y < a.size(); ++y)
      if (ideal.contains(a.meet(x, y)) && !ideal.contains(x) && !ideal.contains(y)) return false;
  return true;
}

namespace {

bool is_maximal_given(const Ideal& ideal, const std::vector<Ideal>& all) {
  const AlgebraPtr& a = ideal.algebra();

  // Definitional: for a ∉ M there is n ≥ 1 with ¬(na) ∈ M, reading na as the
  // n-fold ⊕ iterate. ¬(na) decreases as n grows and M is downward closed,
  // so the stabilized power decides the whole family.
  bool definitional = true;
  for (ElementId x = 0; x < a->size() && definitional; ++x) {
    if (ideal.contains(x)) continue;
    if (!ideal.contains(a->neg(a->idempotent_power(x)))) definitional = false;
  }

  bool inclusion = true;
  for (const Ideal& other : all) {
    if (!other.is_proper() || other == ideal) continue;
    if (ideal.subset_of(other)) {
      inclusion = false;
      break;
    }
  }

  if (definitional != inclusion)
    throw InternalCheckError("maximality readings disagree on " + ideal.str());
  return definitional;
}

}  // namespace

bool is_maximal(const Ideal& ideal) {
  if (!ideal.is_proper()) throw InvalidParameterError("maximality is defined for proper ideals");
  return is_maximal_given(ideal, all_ideals(ideal.algebra()));
}

std::optional<ElementId> is_principal(const Ideal& ideal) {
  const AlgebraPtr& a = ideal.algebra();
  for (ElementId g = 0; g < a->size(); ++g) {
    if (!ideal.contains(g)) continue;
    if (downset_of(*a, a->idempotent_power(g)) == ideal.members()) return g;
  }
  return std::nullopt;
}

Quotient quotient(const AlgebraPtr& a, const Ideal& ideal) {
  if (ideal.algebra() != a) throw InvalidParameterError("ideal belongs to a different algebra");
  const std::size_t n = a->size();

  std::vector<ElementId> class_of(n);
  std::vector<ElementId> reps;
  for (ElementId x = 0; x < n; ++x) {
    bool assigned = false;
    for (std::size_t c = 0; c < reps.size(); ++c) {
      if (ideal.contains(sym_diff(*a, x, reps[c]))) {
        class_of[x] = static_cast<ElementId>(c);
        assigned = true;
        break;
      }
    }
    if (!assigned) {
      class_of[x] = static_cast<ElementId>(reps.size());
      reps.push_back(x);
    }
  }

  const std::size_t m = reps.size();
  AlgebraTables t;
  t.names.reserve(m);
  for (ElementId r : reps) t.names.push_back("[" + a->name(r) + "]");
  t.oplus.resize(m * m);
  t.neg.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    t.neg[i] = class_of[a->neg(reps[i])];
    for (std::size_t j = 0; j < m; ++j) t.oplus[i * m + j] = class_of[a->oplus(reps[i], reps[j])];
  }
  t.zero = class_of[a->zero()];

  // Well-definedness: the induced tables may not depend on representatives.
  for (ElementId x = 0; x < n; ++x) {
    if (class_of[a->neg(x)] != t.neg[class_of[x]])
      throw InternalCheckError("quotient negation ill-defined at " + a->name(x) +
                               " (non-ideal input slipped through)");
    for (ElementId y = 0; y < n; ++y)
      if (class_of[a->oplus(x, y)] != t.oplus[class_of[x] * m + class_of[y]])
        throw InternalCheckError("quotient oplus ill-defined at (" + a->name(x) + ", " +
                                 a->name(y) + ") (non-ideal input slipped through)");
  }

  AlgebraPtr q = detail::build_algebra(std::move(t), Provenance{ProvenanceKind::Table, {}}, {},
                                       {}, detail::BuildMode::Structural, a->limits());

  Homomorphism proj;
  proj.source = a;
  proj.target = q;
  proj.map = class_of;
  proj.require_valid("quotient projection");
  if (!proj.is_surjective()) throw InternalCheckError("quotient projection not surjective");

  // Kernel = I exactly.
  for (ElementId x = 0; x < n; ++x)
    if ((class_of[x] == class_of[a->zero()]) != ideal.contains(x))
      throw InternalCheckError("projection kernel differs from the ideal at " + a->name(x));

  return Quotient{q, std::move(proj), std::move(class_of)};
}

int rank(const Ideal& maximal_ideal) {
  if (!is_maximal(maximal_ideal))
    throw InvalidParameterError("rank is defined for maximal ideals; got " + maximal_ideal.str());
  Quotient q = quotient(maximal_ideal.algebra(), maximal_ideal);
  const FiniteMvAlgebra& c = *q.algebra;
  for (ElementId x = 0; x < c.size(); ++x)
    for (ElementId y = 0; y < c.size(); ++y)
      if (!c.leq(x, y) && !c.leq(y, x))
        throw InternalCheckError("quotient by a maximal ideal is not a chain");
  return static_cast<int>(c.size());
}

std::vector<Ideal> max_ideals(const AlgebraPtr& a, const Limits& limits) {
  const std::vector<Ideal> all = all_ideals(a, limits);
  std::vector<Ideal> out;
  for (const Ideal& i : all)
    if (i.is_proper() && is_maximal_given(i, all)) out.push_back(i);
  return out;
}

Ideal radical(const AlgebraPtr& a) {
  Bitset inter(a->size());
  for (ElementId x = 0; x < a->size(); ++x) inter.set(x);
  for (const Ideal& m : max_ideals(a)) inter &= m.members();
  return Ideal::create(a, std::move(inter));
}

bool is_semisimple(const AlgebraPtr& a) { return radical(a).size() == 1; }

SDecomposition s_decomposition(const AlgebraPtr& a, const Ideal& ideal) {
  if (ideal.algebra() != a) throw InvalidParameterError("ideal belongs to a different algebra");

  std::vector<Ideal> factors;
  for (const Ideal& m : max_ideals(a))
    if (ideal.subset_of(m)) factors.push_back(m);

  Bitset inter(a->size());
  for (ElementId x = 0; x < a->size(); ++x) inter.set(x);
  for (const Ideal& m : factors) inter &= m.members();
  if (inter != ideal.members())
    throw InternalCheckError("S(I) intersection differs from I for " + ideal.str());

  Quotient qi = quotient(a, ideal);
  std::vector<Quotient> qms;
  std::vector<AlgebraPtr> parts;
  qms.reserve(factors.size());
  for (const Ideal& m : factors) {
    qms.push_back(quotient(a, m));
    parts.push_back(qms.back().algebra);
  }
  AlgebraPtr prod = product_of(parts, a->limits());

  // φ_I : A/I -> ∏ A/M, [a] ↦ ([a]_M)_M, evaluated on class representatives.
  std::vector<ElementId> rep_of(qi.algebra->size());
  for (ElementId x = 0; x < a->size(); ++x) rep_of[qi.class_of[x]] = x;
  Homomorphism phi;
  phi.source = qi.algebra;
  phi.target = prod;
  phi.map.resize(qi.algebra->size());
  std::vector<std::size_t> cs(factors.size());
  for (ElementId c = 0; c < qi.algebra->size(); ++c) {
    for (std::size_t k = 0; k < factors.size(); ++k) cs[k] = qms[k].class_of[rep_of[c]];
    phi.map[c] = factors.empty() ? 0 : prod->id_from_factor_coords(cs);
  }

  if (qi.algebra->size() != prod->size())
    throw InternalCheckError("|A/I| differs from ∏|A/M| for " + ideal.str());
  IsoWitness witness = iso_from_bijection_checked(std::move(phi), "φ_I for " + ideal.str());

  return SDecomposition{ideal, std::move(factors), qi.algebra, prod, std::move(witness)};
}

}  // namespace mvalg
