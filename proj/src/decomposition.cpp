#include "mvalg/decomposition.hpp"

#include <algorithm>
#include <numeric>

namespace mvalg {

namespace {

struct FactorData {
  Ideal ideal;
  Quotient q;
  int rank;
};

std::vector<FactorData> decomposed_factors(const AlgebraPtr& a) {
  std::vector<FactorData> fs;
  for (const Ideal& m : max_ideals(a)) {
    Quotient q = quotient(a, m);
    const FiniteMvAlgebra& c = *q.algebra;
    for (ElementId x = 0; x < c.size(); ++x)
      for (ElementId y = 0; y < c.size(); ++y)
        if (!c.leq(x, y) && !c.leq(y, x))
          throw InternalCheckError("quotient by maximal ideal " + m.str() + " is not a chain");
    const int r = static_cast<int>(c.size());
    fs.push_back(FactorData{m, std::move(q), r});
  }
  std::sort(fs.begin(), fs.end(), [](const FactorData& x, const FactorData& y) {
    if (x.rank != y.rank) return x.rank < y.rank;
    return x.ideal < y.ideal;
  });
  return fs;
}

}  // namespace

std::vector<ElementId> sorted_chain(const FiniteMvAlgebra& chain) {
  std::vector<ElementId> ids(chain.size());
  std::iota(ids.begin(), ids.end(), 0);
  std::sort(ids.begin(), ids.end(),
            [&chain](ElementId x, ElementId y) { return x != y && chain.leq(x, y); });
  return ids;
}

CanonicalDecomposition canonical_decomposition(const AlgebraPtr& a) {
  std::vector<FactorData> fs = decomposed_factors(a);

  ChainMultiset ms;
  std::vector<AlgebraPtr> parts;
  std::vector<Ideal> factor_ideals;
  for (const FactorData& f : fs) {
    ms.add(f.rank);
    parts.push_back(f.q.algebra);
    factor_ideals.push_back(f.ideal);
  }
  AlgebraPtr prod = product_of(parts, a->limits());

  Homomorphism fwd;
  fwd.source = a;
  fwd.target = prod;
  fwd.map.resize(a->size());
  std::vector<std::size_t> cs(fs.size());
  for (ElementId x = 0; x < a->size(); ++x) {
    for (std::size_t k = 0; k < fs.size(); ++k) cs[k] = fs[k].q.class_of[x];
    fwd.map[x] = fs.empty() ? 0 : prod->id_from_factor_coords(cs);
  }

  if (a->size() != prod->size())
    throw InternalCheckError("carrier size differs from the product of quotient sizes");
  IsoWitness iso = iso_from_bijection_checked(std::move(fwd), "canonical decomposition");

  if (ms.carrier_size() != a->size())
    throw InternalCheckError("chain multiset does not multiply out to the carrier size");

  return CanonicalDecomposition{std::move(ms), std::move(factor_ideals), prod, std::move(iso)};
}

std::optional<IsoWitness> is_isomorphic(const AlgebraPtr& a, const AlgebraPtr& b) {
  CanonicalDecomposition da = canonical_decomposition(a);
  CanonicalDecomposition db = canonical_decomposition(b);
  if (da.multiset != db.multiset) return std::nullopt;

  // Matching factors of equal rank positionally (both factor lists are
  // sorted by rank). Chains of equal size have a unique isomorphism: the
  // order-preserving bijection.
  std::vector<FactorData> fa, fb;
  {
    // Rebuild the per-factor quotients in the same sorted order.
    auto rebuild = [](const AlgebraPtr& alg, const std::vector<Ideal>& factors) {
      std::vector<FactorData> out;
      for (const Ideal& m : factors) out.push_back(FactorData{m, quotient(alg, m), 0});
      return out;
    };
    fa = rebuild(a, da.factors);
    fb = rebuild(b, db.factors);
  }

  Homomorphism fwd;
  fwd.source = a;
  fwd.target = b;
  fwd.map.resize(a->size());

  const std::size_t k = fa.size();
  // Per-factor chain maps, by order index.
  std::vector<std::vector<ElementId>> chain_map(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::vector<ElementId> sa = sorted_chain(*fa[i].q.algebra);
    const std::vector<ElementId> sb = sorted_chain(*fb[i].q.algebra);
    if (sa.size() != sb.size())
      throw InternalCheckError("factor ranks disagree despite equal multisets");
    chain_map[i].resize(sa.size());
    for (std::size_t p = 0; p < sa.size(); ++p) chain_map[i][sa[p]] = sb[p];
  }

  std::vector<std::size_t> cs(k);
  for (ElementId x = 0; x < a->size(); ++x) {
    for (std::size_t i = 0; i < k; ++i) cs[i] = chain_map[i][fa[i].q.class_of[x]];
    const ElementId pb = k == 0 ? 0 : db.product->id_from_factor_coords(cs);
    fwd.map[x] = db.iso.inverse.map[pb];
  }

  return iso_from_bijection_checked(std::move(fwd),
                                    "isomorphism from matching chain multisets");
}

}  // namespace mvalg
