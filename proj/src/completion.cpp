#include "mvalg/completion.hpp"

#include <algorithm>
#include <map>

#include "mvalg/detail/build.hpp"

namespace mvalg {

const char* completion_method_name(CompletionMethod m) {
  switch (m) {
    case CompletionMethod::InverseLimit: return "inverse-limit";
    case CompletionMethod::MaxfProduct: return "maxf-product";
    case CompletionMethod::Macneille: return "macneille";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Inverse system and inverse limit

InverseSystem InverseSystem::build(const AlgebraPtr& a, const Limits& limits) {
  InverseSystem sys;
  sys.base_ = a;
  for (const Ideal& i : all_ideals(a, limits))
    sys.nodes_.push_back(Node{i, quotient(a, i)});
  // all_ideals sorts by size, so {0} comes first and is the least index of
  // (id_f, ⊇).
  if (sys.nodes_.empty() || sys.nodes_[0].ideal.size() != 1)
    throw InternalCheckError("zero ideal missing from the inverse system index");

  const std::size_t k = sys.nodes_.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!sys.nodes_[i].ideal.subset_of(sys.nodes_[j].ideal)) continue;
      const Quotient& qi = sys.nodes_[i].quotient;
      const Quotient& qj = sys.nodes_[j].quotient;
      std::vector<ElementId> t(qi.algebra->size());
      std::vector<bool> defined(qi.algebra->size(), false);
      for (ElementId x = 0; x < a->size(); ++x) {
        const ElementId ci = qi.class_of[x];
        const ElementId cj = qj.class_of[x];
        if (defined[ci]) {
          if (t[ci] != cj)
            throw InternalCheckError("transition map ill-defined between comparable ideals");
        } else {
          defined[ci] = true;
          t[ci] = cj;
        }
      }
      if (i == j) {
        for (ElementId c = 0; c < qi.algebra->size(); ++c)
          if (t[c] != c) throw InternalCheckError("φ_II is not the identity");
      }
      sys.transitions_[{i, j}] = std::move(t);
    }
  }

  // Composition coherence: φ_KJ ∘ φ_JI = φ_KI whenever I ⊆ J ⊆ K.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j || !sys.le(i, j)) continue;
      for (std::size_t l = 0; l < k; ++l) {
        if (j == l || !sys.le(j, l)) continue;
        const auto& tij = *sys.transition(i, j);
        const auto& tjl = *sys.transition(j, l);
        const auto& til = *sys.transition(i, l);
        for (ElementId c = 0; c < sys.nodes_[i].quotient.algebra->size(); ++c)
          if (tjl[tij[c]] != til[c])
            throw InternalCheckError("transition maps fail composition coherence");
      }
    }

  return sys;
}

bool InverseSystem::le(std::size_t i, std::size_t j) const {
  return nodes_[i].ideal.subset_of(nodes_[j].ideal);
}

const std::vector<ElementId>* InverseSystem::transition(std::size_t i, std::size_t j) const {
  auto it = transitions_.find({i, j});
  return it == transitions_.end() ? nullptr : &it->second;
}

namespace {

struct LimitData {
  InverseSystem system;
  AlgebraPtr algebra;
  std::vector<std::vector<ElementId>> tuples;
};

LimitData build_limit(const AlgebraPtr& a, const Limits& limits) {
  LimitData out{InverseSystem::build(a, limits), nullptr, {}};
  const InverseSystem& sys = out.system;
  const std::size_t k = sys.nodes().size();
  const Quotient& q0 = sys.nodes()[0].quotient;

  // {0} ⊆ I for every I, so a compatible tuple is forced by its coordinate
  // at {0}: α(I) = φ_{I,{0}}(α({0})). Enumerate those extensions.
  const std::size_t n0 = q0.algebra->size();
  out.tuples.reserve(n0);
  for (ElementId c0 = 0; c0 < n0; ++c0) {
    std::vector<ElementId> t(k);
    for (std::size_t j = 0; j < k; ++j) t[j] = (*sys.transition(0, j))[c0];
    out.tuples.push_back(std::move(t));
  }

  // Every extension must itself be compatible, every compatible tuple is
  // determined at {0}, and distinct seeds give distinct tuples.
  for (const auto& t : out.tuples) {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        if (!sys.le(i, j)) continue;
        if ((*sys.transition(i, j))[t[i]] != t[j])
          throw InternalCheckError("forced extension is not a compatible tuple");
      }
    for (std::size_t j = 0; j < k; ++j)
      if ((*sys.transition(0, j))[t[0]] != t[j])
        throw InternalCheckError("compatible tuple not determined at the least ideal");
  }
  std::map<std::vector<ElementId>, ElementId> index;
  for (ElementId i = 0; i < out.tuples.size(); ++i)
    if (!index.emplace(out.tuples[i], i).second)
      throw InternalCheckError("distinct seeds produced equal limit tuples");
  if (out.tuples.size() != a->size())
    throw InternalCheckError("limit tuple count differs from |A/{0}|");

  // Coordinatewise operations close on the tuple set.
  const std::size_t n = out.tuples.size();
  AlgebraTables tb;
  tb.names.resize(n);
  tb.oplus.resize(n * n);
  tb.neg.resize(n);
  std::vector<ElementId> rep0(n0);
  for (ElementId x = 0; x < a->size(); ++x) rep0[q0.class_of[x]] = x;
  for (ElementId i = 0; i < n; ++i) tb.names[i] = "~" + a->name(rep0[out.tuples[i][0]]);

  std::vector<ElementId> scratch(k);
  auto locate = [&index](const std::vector<ElementId>& t) {
    auto it = index.find(t);
    if (it == index.end())
      throw InternalCheckError("coordinatewise result escapes the limit (not ⊕/¬-closed)");
    return it->second;
  };
  for (ElementId x = 0; x < n; ++x) {
    for (std::size_t j = 0; j < k; ++j)
      scratch[j] = sys.nodes()[j].quotient.algebra->neg(out.tuples[x][j]);
    tb.neg[x] = locate(scratch);
    for (ElementId y = 0; y < n; ++y) {
      for (std::size_t j = 0; j < k; ++j)
        scratch[j] =
            sys.nodes()[j].quotient.algebra->oplus(out.tuples[x][j], out.tuples[y][j]);
      tb.oplus[x * n + y] = locate(scratch);
    }
  }
  {
    for (std::size_t j = 0; j < k; ++j)
      scratch[j] = sys.nodes()[j].quotient.algebra->zero();
    tb.zero = locate(scratch);
  }

  out.algebra = detail::build_algebra(std::move(tb), Provenance{ProvenanceKind::Table, {}}, {},
                                      {}, detail::BuildMode::Structural, limits);
  return out;
}

}  // namespace

InverseLimitResult inverse_limit_profinite(const AlgebraPtr& a, const Limits& limits) {
  LimitData data = build_limit(a, limits);
  CompletionReport report;
  report.method = CompletionMethod::InverseLimit;
  report.multiset = canonical_decomposition(data.algebra).multiset;
  report.diagnostics.push_back("nodes=" + std::to_string(data.system.nodes().size()));
  report.diagnostics.push_back("transition coherence and least-ideal determinacy verified");
  return InverseLimitResult{data.algebra, std::move(data.tuples), std::move(report)};
}

ProfiniteProductResult profinite_product(const AlgebraPtr& a, const Limits& limits) {
  struct Factor {
    Ideal ideal;
    Quotient q;
    int rank;
  };
  std::vector<Factor> fs;
  for (const Ideal& m : max_ideals(a, limits)) {
    Quotient q = quotient(a, m);
    const int r = static_cast<int>(q.algebra->size());
    fs.push_back(Factor{m, std::move(q), r});
  }
  std::sort(fs.begin(), fs.end(), [](const Factor& x, const Factor& y) {
    if (x.rank != y.rank) return x.rank < y.rank;
    return x.ideal < y.ideal;
  });

  ProfiniteProductResult out;
  std::vector<AlgebraPtr> parts;
  for (Factor& f : fs) {
    out.report.multiset.add(f.rank);
    parts.push_back(f.q.algebra);
    out.factors.push_back(f.ideal);
    out.quotients.push_back(std::move(f.q));
  }
  out.algebra = product_of(parts, limits);
  out.report.method = CompletionMethod::MaxfProduct;
  out.report.diagnostics.push_back("factors=" + std::to_string(out.factors.size()));
  return out;
}

IsoWitness verify_main_theorem(const AlgebraPtr& a, const Limits& limits) {
  LimitData data = build_limit(a, limits);
  const InverseSystem& sys = data.system;

  // Product over the maximal ideals among the system nodes, in node order.
  std::vector<std::size_t> max_nodes;
  for (std::size_t j = 0; j < sys.nodes().size(); ++j)
    if (sys.nodes()[j].ideal.is_proper() && is_maximal(sys.nodes()[j].ideal))
      max_nodes.push_back(j);

  std::vector<AlgebraPtr> parts;
  for (std::size_t j : max_nodes) parts.push_back(sys.nodes()[j].quotient.algebra);
  AlgebraPtr prod = product_of(parts, limits);

  Homomorphism drop;
  drop.source = data.algebra;
  drop.target = prod;
  drop.map.resize(data.algebra->size());
  std::vector<std::size_t> cs(max_nodes.size());
  for (ElementId x = 0; x < data.algebra->size(); ++x) {
    for (std::size_t p = 0; p < max_nodes.size(); ++p) cs[p] = data.tuples[x][max_nodes[p]];
    drop.map[x] = max_nodes.empty() ? 0 : prod->id_from_factor_coords(cs);
  }

  auto witness = iso_from_bijection(std::move(drop));
  if (!witness)
    throw InternalCheckError(
        "main theorem violation: coordinate-dropping map is not an isomorphism for " +
        a->provenance().str());
  return *std::move(witness);
}

// ---------------------------------------------------------------------------
// Corollaries

SelfIsoEvidence check_self_iso(const AlgebraPtr& a) {
  ProfiniteProductResult hat = profinite_product(a);
  std::optional<IsoWitness> w = is_isomorphic(a, hat.algebra);

  std::vector<std::pair<Ideal, ElementId>> gens;
  bool all_principal = true;
  for (const Ideal& m : max_ideals(a)) {
    auto g = is_principal(m);
    if (!g) {
      all_principal = false;
      continue;
    }
    gens.emplace_back(m, *g);
  }

  // Finite algebras are profinite, so the biconditional reduces to the
  // principality side matching the isomorphism side.
  if (w.has_value() != all_principal)
    throw InternalCheckError("self-isomorphism biconditional failed");
  if (!w) throw InternalCheckError("finite algebra not isomorphic to its profinite completion");
  return SelfIsoEvidence{true, *std::move(w), std::move(gens)};
}

RegularityReport is_regular(const AlgebraPtr& a) {
  RegularityReport report{true, boolean_center(a), {}};
  const CenterResult& c = report.center;

  for (const Ideal& n : all_ideals(c.algebra)) {
    if (!n.is_proper() || !is_prime(n)) continue;
    std::vector<ElementId> gens;
    for (std::size_t x : n.members().members())
      gens.push_back(c.embedding.map[static_cast<ElementId>(x)]);
    Ideal generated = ideal_generated(a, gens);
    const bool prime = generated.is_proper() && is_prime(generated);
    if (!prime) report.regular = false;
    report.entries.push_back(RegularityReport::Entry{n, std::move(generated), prime});
  }
  return report;
}

CenterPreservation check_boolean_center_preservation(const AlgebraPtr& a) {
  RegularityReport reg = is_regular(a);
  if (!reg.regular) {
    for (const auto& e : reg.entries)
      if (!e.generated_prime)
        throw PreconditionError("algebra is not regular: center prime " + e.center_prime.str() +
                                " generates a non-prime ideal");
  }

  AlgebraPtr hat = profinite_product(a).algebra;
  AlgebraPtr lhs = boolean_center(hat).algebra;
  AlgebraPtr rhs = profinite_product(boolean_center(a).algebra).algebra;
  auto w = is_isomorphic(lhs, rhs);
  if (!w) throw InternalCheckError("B(Â) ≇ B(A)^ on a regular algebra");
  return CenterPreservation{lhs, rhs, *std::move(w)};
}

ProductPreservation check_product_preservation(const AlgebraPtr& a1, const AlgebraPtr& a2) {
  Limits limits = a1->limits();
  limits.max_carrier = std::max(limits.max_carrier, a2->limits().max_carrier);
  limits.max_ideal_count = std::max(limits.max_ideal_count, a2->limits().max_ideal_count);
  return check_product_preservation(a1, a2, limits);
}

ProductPreservation check_product_preservation(const AlgebraPtr& a1, const AlgebraPtr& a2,
                                               const Limits& limits) {
  AlgebraPtr p = product_of({a1, a2}, limits);
  ProfiniteProductResult lhs = profinite_product(p, limits);
  AlgebraPtr rhs = product_of(
      {profinite_product(a1, limits).algebra, profinite_product(a2, limits).algebra}, limits);

  auto w = is_isomorphic(lhs.algebra, rhs);
  if (!w) throw InternalCheckError("(A1×A2)^ ≇ Â1×Â2");

  // Bookkeeping from the proof: maximal ideals of A1×A2 are exactly the
  // M1×A2 and the A1×M2.
  std::vector<Bitset> expected;
  for (const Ideal& m1 : max_ideals(a1, limits)) {
    Bitset b(p->size());
    for (ElementId x = 0; x < p->size(); ++x)
      if (m1.contains(static_cast<ElementId>(p->factor_coord(x, 0)))) b.set(x);
    expected.push_back(std::move(b));
  }
  for (const Ideal& m2 : max_ideals(a2, limits)) {
    Bitset b(p->size());
    for (ElementId x = 0; x < p->size(); ++x)
      if (m2.contains(static_cast<ElementId>(p->factor_coord(x, 1)))) b.set(x);
    expected.push_back(std::move(b));
  }
  std::vector<Bitset> actual;
  for (const Ideal& m : lhs.factors) actual.push_back(m.members());
  auto bitset_less = [](const Bitset& a, const Bitset& b) { return a < b; };
  std::sort(expected.begin(), expected.end(), bitset_less);
  std::sort(actual.begin(), actual.end(), bitset_less);
  if (expected != actual)
    throw InternalCheckError("maximal ideals of the product are not the expected M×A, A×M");

  return ProductPreservation{p, lhs.report.multiset, *std::move(w)};
}

// ---------------------------------------------------------------------------
// MacNeille side

FinitePoset order_poset(const FiniteMvAlgebra& a) {
  return FinitePoset::create(
      a.size(), [&a](std::size_t x, std::size_t y) {
        return a.leq(static_cast<ElementId>(x), static_cast<ElementId>(y));
      });
}

MacneilleResult macneille_mv(const AlgebraPtr& a, const Limits& limits) {
  if (!is_semisimple(a))
    throw PreconditionError("MacNeille completion computed only for semisimple algebras");
  if (!a->is_atomic()) throw PreconditionError("MacNeille product formula requires atomicity");

  const std::vector<ElementId> atoms = a->atoms();
  std::vector<int> sizes;
  ChainMultiset ms;
  for (ElementId at : atoms) {
    const ElementOrder o = a->element_order(at);
    if (o.is_infinite()) throw InternalCheckError("atom of infinite order in a finite algebra");
    sizes.push_back(static_cast<int>(o.value()) + 1);
    ms.add(static_cast<int>(o.value()) + 1);
  }
  AlgebraPtr result = sizes.empty() ? make_trivial() : make_product(sizes, limits);

  // Cross-check: the cut completion of A's order is the lattice of the
  // product. A is a finite lattice, so every cut must be a principal downset
  // and the composite cut ↦ max ↦ iso(max) must be an order isomorphism.
  const FinitePoset order = order_poset(*a);
  const DmCompletion dm = dedekind_macneille(order);
  if (dm.size() != a->size())
    throw InternalCheckError("cut completion of a finite lattice grew extra cuts");

  std::optional<IsoWitness> alg_iso = is_isomorphic(a, result);
  if (!alg_iso)
    throw InternalCheckError("finite algebra not isomorphic to its atom-order product");

  std::vector<ElementId> cut_to_result(dm.size());
  for (std::size_t c = 0; c < dm.size(); ++c) {
    std::optional<ElementId> top;
    for (std::size_t x : dm.cuts[c].members()) {
      bool is_top = true;
      for (std::size_t y : dm.cuts[c].members())
        if (!order.leq(y, x)) {
          is_top = false;
          break;
        }
      if (is_top) {
        top = static_cast<ElementId>(x);
        break;
      }
    }
    if (!top || dm.cuts[c] != order.downset(*top))
      throw InternalCheckError("non-principal cut over a complete lattice");
    cut_to_result[c] = alg_iso->forward.map[*top];
  }
  for (std::size_t c = 0; c < dm.size(); ++c)
    for (std::size_t d = 0; d < dm.size(); ++d)
      if (dm.leq(c, d) != result->leq(cut_to_result[c], cut_to_result[d]))
        throw InternalCheckError("atom-order product disagrees with the cut completion");

  CompletionReport report;
  report.method = CompletionMethod::Macneille;
  report.multiset = std::move(ms);
  report.witness = std::move(alg_iso);
  report.diagnostics.push_back("atoms=" + std::to_string(atoms.size()));
  report.diagnostics.push_back("lattice-level cut completion cross-check passed");
  return MacneilleResult{result, std::move(report)};
}

MacCriterionResult check_mac_criterion(const AlgebraPtr& a) {
  if (!is_semisimple(a))
    throw PreconditionError("MacNeille criterion stated for semisimple algebras");

  MacCriterionResult out;
  const bool atomic = a->is_atomic();

  struct AtomInfo {
    ElementId atom;
    int size;  // |a| + 1
  };
  std::vector<AtomInfo> ai;
  ChainMultiset atom_ms;
  for (ElementId at : a->atoms()) {
    const int s = static_cast<int>(a->element_order(at).value()) + 1;
    ai.push_back(AtomInfo{at, s});
    atom_ms.add(s);
  }

  struct IdealInfo {
    Ideal m;
    int rank;
  };
  std::vector<IdealInfo> mi;
  ChainMultiset rank_ms;
  for (const Ideal& m : max_ideals(a)) {
    const int r = rank(m);
    mi.push_back(IdealInfo{m, r});
    rank_ms.add(r);
  }

  out.holds = atomic && atom_ms == rank_ms;
  if (!out.holds) {
    out.note = !atomic ? "algebra is not atomic"
                       : "atom-order multiset " + atom_ms.str() + " differs from rank multiset " +
                             rank_ms.str();
    return out;
  }

  std::sort(ai.begin(), ai.end(), [](const AtomInfo& x, const AtomInfo& y) {
    if (x.size != y.size) return x.size < y.size;
    return x.atom < y.atom;
  });
  std::sort(mi.begin(), mi.end(), [](const IdealInfo& x, const IdealInfo& y) {
    if (x.rank != y.rank) return x.rank < y.rank;
    return x.m < y.m;
  });
  for (std::size_t i = 0; i < ai.size(); ++i) {
    if (ai[i].size != mi[i].rank)
      throw InternalCheckError("rank-respecting pairing failed despite equal multisets");
    out.tau.emplace_back(ai[i].atom, mi[i].m);
  }

  auto iso = is_isomorphic(profinite_product(a).algebra, macneille_mv(a).algebra);
  if (!iso) throw InternalCheckError("Â ≇ Ā although the criterion holds");
  out.completion_iso = std::move(iso);
  out.note = "criterion holds with " + std::to_string(out.tau.size()) + " atom/ideal pairs";
  return out;
}

PowersetWitness boolean_profinite_powerset(const AlgebraPtr& b, const Limits& limits) {
  for (ElementId x = 0; x < b->size(); ++x)
    if (b->oplus(x, x) != x)
      throw PreconditionError("input is not Boolean: " + b->name(x) + " is not idempotent");

  ProfiniteProductResult hat = profinite_product(b, limits);
  const std::size_t k = hat.factors.size();
  for (const Quotient& q : hat.quotients)
    if (q.algebra->size() != 2)
      throw InternalCheckError("maximal ideal of a Boolean algebra with rank ≠ 2");
  if (k >= 63 || (std::size_t{1} << k) > limits.max_carrier)
    throw ResourceLimitError("power set carrier exceeds limit");

  // P(X) on the maximal-ideal set X: union, complement, ∅.
  const std::size_t n = std::size_t{1} << k;
  AlgebraTables t;
  t.names.resize(n);
  t.oplus.resize(n * n);
  t.neg.resize(n);
  t.zero = 0;
  for (std::size_t s = 0; s < n; ++s) {
    std::string nm = "{";
    bool first = true;
    for (std::size_t i = 0; i < k; ++i)
      if (s & (std::size_t{1} << i)) {
        if (!first) nm += ",";
        nm += "M" + std::to_string(i + 1);
        first = false;
      }
    t.names[s] = nm + "}";
    t.neg[s] = static_cast<ElementId>(~s & (n - 1));
    for (std::size_t u = 0; u < n; ++u) t.oplus[s * n + u] = static_cast<ElementId>(s | u);
  }
  AlgebraPtr powerset = detail::build_algebra(std::move(t), Provenance{ProvenanceKind::Table, {}},
                                              {}, {}, detail::BuildMode::Exhaustive, limits);

  // Tuple ↦ {M : coordinate at M is the nonzero class}.
  Homomorphism fwd;
  fwd.source = hat.algebra;
  fwd.target = powerset;
  fwd.map.resize(hat.algebra->size());
  for (ElementId x = 0; x < hat.algebra->size(); ++x) {
    std::size_t mask = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (hat.algebra->factor_coord(x, i) != hat.quotients[i].algebra->zero())
        mask |= std::size_t{1} << i;
    fwd.map[x] = static_cast<ElementId>(mask);
  }
  IsoWitness w = iso_from_bijection_checked(std::move(fwd), "Boolean power-set description");

  return PowersetWitness{powerset, hat.algebra, hat.factors, std::move(w)};
}

}  // namespace mvalg
