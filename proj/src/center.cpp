#include "mvalg/center.hpp"

#include <unordered_map>

#include "mvalg/detail/build.hpp"

namespace mvalg {

CenterResult boolean_center(const AlgebraPtr& a) {
  std::vector<ElementId> members;
  for (ElementId x = 0; x < a->size(); ++x)
    if (a->oplus(x, x) == x) members.push_back(x);

  std::unordered_map<ElementId, ElementId> pos;
  for (std::size_t i = 0; i < members.size(); ++i) pos[members[i]] = static_cast<ElementId>(i);

  auto inside = [&pos, &a](ElementId parent, const std::string& what) {
    auto it = pos.find(parent);
    if (it == pos.end())
      throw InternalCheckError("Boolean center not closed under " + what + " at " +
                               a->name(parent));
    return it->second;
  };

  const std::size_t n = members.size();
  AlgebraTables t;
  t.names.reserve(n);
  t.oplus.resize(n * n);
  t.neg.resize(n);
  std::vector<std::vector<Fraction>> coords;
  if (a->has_coords()) coords.resize(n);

  for (std::size_t i = 0; i < n; ++i) {
    t.names.push_back(a->name(members[i]));
    if (a->has_coords()) coords[i] = a->coords(members[i]);
    t.neg[i] = inside(a->neg(members[i]), "negation");
    for (std::size_t j = 0; j < n; ++j)
      t.oplus[i * n + j] = inside(a->oplus(members[i], members[j]), "oplus");
  }
  t.zero = inside(a->zero(), "zero");

  AlgebraPtr center =
      detail::build_algebra(std::move(t), Provenance{ProvenanceKind::Table, {}},
                            std::move(coords), {}, detail::BuildMode::Structural, a->limits());

  // The center must be Boolean: complementation holds for idempotents.
  for (ElementId x = 0; x < center->size(); ++x) {
    if (center->join(x, center->neg(x)) != center->one() ||
        center->meet(x, center->neg(x)) != center->zero())
      throw InternalCheckError("Boolean center fails complementation at " + center->name(x));
  }

  Homomorphism embed;
  embed.source = center;
  embed.target = a;
  embed.map = members;
  embed.require_valid("Boolean center inclusion");

  return CenterResult{center, std::move(embed)};
}

}  // namespace mvalg
