#include "mvalg/hom.hpp"

#include <algorithm>

namespace mvalg {

std::optional<std::string> Homomorphism::check() const {
  if (!source || !target) return "homomorphism missing source or target";
  if (map.size() != source->size()) return "map is not total on the source carrier";
  for (ElementId v : map)
    if (v >= target->size()) return "map image outside the target carrier";

  if (map[source->zero()] != target->zero())
    return "0 not preserved: maps to " + target->name(map[source->zero()]);
  for (ElementId x = 0; x < source->size(); ++x)
    if (map[source->neg(x)] != target->neg(map[x]))
      return "negation not preserved at " + source->name(x);
  for (ElementId x = 0; x < source->size(); ++x)
    for (ElementId y = 0; y < source->size(); ++y)
      if (map[source->oplus(x, y)] != target->oplus(map[x], map[y]))
        return "oplus not preserved at (" + source->name(x) + ", " + source->name(y) + ")";
  return std::nullopt;
}

void Homomorphism::require_valid(const std::string& context) const {
  if (auto err = check())
    throw InternalCheckError(context + ": " + *err);
}

bool Homomorphism::is_injective() const {
  std::vector<bool> seen(target->size(), false);
  for (ElementId v : map) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool Homomorphism::is_surjective() const {
  std::vector<bool> seen(target->size(), false);
  std::size_t hits = 0;
  for (ElementId v : map)
    if (!seen[v]) {
      seen[v] = true;
      ++hits;
    }
  return hits == target->size();
}

std::optional<std::string> IsoWitness::check() const {
  if (auto err = forward.check()) return "forward: " + *err;
  if (auto err = inverse.check()) return "inverse: " + *err;
  if (forward.source != inverse.target || forward.target != inverse.source)
    return "forward and inverse do not connect the same algebras";
  for (ElementId x = 0; x < forward.source->size(); ++x)
    if (inverse.map[forward.map[x]] != x)
      return "inverse∘forward is not the identity at " + forward.source->name(x);
  for (ElementId y = 0; y < inverse.source->size(); ++y)
    if (forward.map[inverse.map[y]] != y)
      return "forward∘inverse is not the identity at " + inverse.source->name(y);
  return std::nullopt;
}

void IsoWitness::require_valid(const std::string& context) const {
  if (auto err = check())
    throw InternalCheckError(context + ": " + *err);
}

std::optional<IsoWitness> iso_from_bijection(Homomorphism forward) {
  if (forward.source->size() != forward.target->size()) return std::nullopt;
  if (!forward.is_injective()) return std::nullopt;
  if (forward.check()) return std::nullopt;

  Homomorphism inv;
  inv.source = forward.target;
  inv.target = forward.source;
  inv.map.resize(forward.target->size());
  for (ElementId x = 0; x < forward.source->size(); ++x) inv.map[forward.map[x]] = x;

  IsoWitness w{std::move(forward), std::move(inv)};
  if (w.check()) return std::nullopt;
  return w;
}

IsoWitness iso_from_bijection_checked(Homomorphism forward, const std::string& context) {
  if (auto err = forward.check()) throw InternalCheckError(context + ": " + *err);
  if (forward.source->size() != forward.target->size() || !forward.is_injective())
    throw InternalCheckError(context + ": map is not bijective");
  auto w = iso_from_bijection(std::move(forward));
  if (!w) throw InternalCheckError(context + ": bijection verification failed");
  return *std::move(w);
}

Homomorphism compose(const Homomorphism& first, const Homomorphism& then) {
  if (first.target != then.source)
    throw InvalidParameterError("composition mismatch: target of first != source of second");
  Homomorphism out;
  out.source = first.source;
  out.target = then.target;
  out.map.resize(first.map.size());
  for (std::size_t i = 0; i < first.map.size(); ++i) out.map[i] = then.map[first.map[i]];
  return out;
}

}  // namespace mvalg
