#include "mvalg/poset.hpp"

#include <algorithm>
#include <set>

namespace mvalg {

FinitePoset FinitePoset::create(std::size_t n,
                                const std::function<bool(std::size_t, std::size_t)>& le) {
  FinitePoset p;
  p.n_ = n;
  p.up_.assign(n, Bitset(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (le(x, y)) p.up_[x].set(y);

  for (std::size_t x = 0; x < n; ++x)
    if (!p.up_[x].test(x))
      throw InvalidParameterError("relation not reflexive at " + std::to_string(x));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && p.up_[x].test(y) && p.up_[y].test(x))
        throw InvalidParameterError("relation not antisymmetric at (" + std::to_string(x) + "," +
                                    std::to_string(y) + ")");
      if (p.up_[x].test(y) && !p.up_[y].subset_of(p.up_[x]))
        throw InvalidParameterError("relation not transitive through (" + std::to_string(x) +
                                    "," + std::to_string(y) + ")");
    }
  return p;
}

Bitset FinitePoset::downset(std::size_t x) const {
  Bitset b(n_);
  for (std::size_t y = 0; y < n_; ++y)
    if (leq(y, x)) b.set(y);
  return b;
}

namespace {

Bitset full_set(std::size_t n) {
  Bitset b(n);
  for (std::size_t i = 0; i < n; ++i) b.set(i);
  return b;
}

Bitset upper_bounds(const FinitePoset& p, const Bitset& s) {
  Bitset u = full_set(p.size());
  for (std::size_t y = 0; y < p.size(); ++y)
    if (s.test(y)) u &= p.upset(y);
  return u;
}

Bitset lower_bounds(const FinitePoset& p, const Bitset& s) {
  Bitset l = full_set(p.size());
  for (std::size_t y = 0; y < p.size(); ++y)
    if (s.test(y)) l &= p.downset(y);
  return l;
}

Bitset cut_closure(const FinitePoset& p, const Bitset& s) {
  return lower_bounds(p, upper_bounds(p, s));
}

}  // namespace

FinitePoset DmCompletion::lattice() const {
  return FinitePoset::create(cuts.size(),
                             [this](std::size_t i, std::size_t j) { return leq(i, j); });
}

DmCompletion dedekind_macneille(const FinitePoset& p) {
  const std::size_t n = p.size();
  DmCompletion dm;

  // Closed sets are exactly the intersections of principal downsets (the
  // empty intersection giving the full carrier), so closing the principal
  // downsets together with the full set under intersections enumerates them.
  std::vector<Bitset> principal(n, Bitset(0));
  for (std::size_t x = 0; x < n; ++x) principal[x] = p.downset(x);

  std::set<Bitset> seen;
  std::vector<Bitset> work;
  auto push = [&seen, &work](const Bitset& b) {
    if (seen.insert(b).second) work.push_back(b);
  };
  push(full_set(n));
  for (const Bitset& d : principal) push(d);
  while (!work.empty()) {
    Bitset c = work.back();
    work.pop_back();
    for (const Bitset& d : principal) push(c & d);
  }

  auto cut_less = [](const Bitset& a, const Bitset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  };
  dm.cuts.assign(seen.begin(), seen.end());
  std::sort(dm.cuts.begin(), dm.cuts.end(), cut_less);
  auto cut_index = [&dm, &cut_less](const Bitset& b) -> std::size_t {
    auto it = std::lower_bound(dm.cuts.begin(), dm.cuts.end(), b, cut_less);
    if (it == dm.cuts.end() || *it != b) throw InternalCheckError("cut family not closed");
    return static_cast<std::size_t>(it - dm.cuts.begin());
  };

  for (const Bitset& c : dm.cuts)
    if (cut_closure(p, c) != c) throw InternalCheckError("non-closed cut in the completion");

  dm.embedding.resize(n);
  for (std::size_t x = 0; x < n; ++x) dm.embedding[x] = cut_index(principal[x]);

  // Order-embedding: x ≤ y iff ↓x ⊆ ↓y; injectivity follows.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (p.leq(x, y) != principal[x].subset_of(principal[y]))
        throw InternalCheckError("principal embedding is not an order-embedding");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (dm.embedding[x] == dm.embedding[y])
        throw InternalCheckError("principal embedding is not injective");

  // Join-density: every cut is the join of the principal cuts below it.
  // Meet-density: every cut is the meet of the principal cuts above it.
  for (const Bitset& c : dm.cuts) {
    Bitset join_base(n);
    for (std::size_t x = 0; x < n; ++x)
      if (principal[x].subset_of(c)) join_base |= principal[x];
    if (cut_closure(p, join_base) != c)
      throw InternalCheckError("image of the embedding is not join-dense");

    Bitset meet = full_set(n);
    for (std::size_t x = 0; x < n; ++x)
      if (c.subset_of(principal[x])) meet &= principal[x];
    if (meet != c) throw InternalCheckError("image of the embedding is not meet-dense");
  }

  // Completeness: top and bottom exist; pairwise meets are intersections and
  // pairwise joins are cut closures of unions, all inside the family. With
  // both bounds this is completeness for a finite order.
  cut_index(full_set(n));
  {
    Bitset bottom = full_set(n);
    for (const Bitset& c : dm.cuts) bottom &= c;
    cut_index(bottom);
  }
  for (std::size_t i = 0; i < dm.cuts.size(); ++i)
    for (std::size_t j = i + 1; j < dm.cuts.size(); ++j) {
      cut_index(dm.cuts[i] & dm.cuts[j]);
      cut_index(cut_closure(p, dm.cuts[i] | dm.cuts[j]));
    }

  dm.diagnostics.push_back("cuts=" + std::to_string(dm.cuts.size()));
  dm.diagnostics.push_back("embedding, densities and completeness verified");
  return dm;
}

}  // namespace mvalg
