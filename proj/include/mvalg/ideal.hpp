#pragma once

#include <optional>
#include <vector>

#include "mvalg/bitset.hpp"
#include "mvalg/hom.hpp"

namespace mvalg {

/// A subset of a carrier containing 0, downward closed and closed under ⊕.
/// Construction validates all three properties.
class Ideal {
 public:
  Ideal() = default;

  static Ideal create(AlgebraPtr algebra, Bitset members);
  static Ideal zero_ideal(const AlgebraPtr& algebra);
  static Ideal whole(const AlgebraPtr& algebra);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Bitset& members() const { return members_; }
  bool contains(ElementId x) const { return members_.test(x); }
  std::size_t size() const { return members_.count(); }
  bool is_proper() const { return size() < algebra_->size(); }
  bool subset_of(const Ideal& other) const { return members_.subset_of(other.members_); }

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.members_ == b.members_; }
  friend bool operator!=(const Ideal& a, const Ideal& b) { return !(a == b); }
  /// (size, lexicographic) order; fixes enumeration order in reports.
  friend bool operator<(const Ideal& a, const Ideal& b) {
    const std::size_t ca = a.members_.count(), cb = b.members_.count();
    if (ca != cb) return ca < cb;
    return a.members_ < b.members_;
  }

  std::string str() const;

 private:
  AlgebraPtr algebra_;
  Bitset members_;
};

/// Least ideal containing the given elements, by fixpoint of downward closure
/// and ⊕-closure. Minimality is asserted against every enumerated ideal that
/// contains the generators.
Ideal ideal_generated(const AlgebraPtr& a, const std::vector<ElementId>& generators);

/// Complete duplicate-free enumeration, sorted by (size, lex). Includes {0}
/// and the whole algebra. For a finite algebra this is also id_f(A): every
/// quotient is finite. Without explicit limits the subject's construction
/// limits are used.
std::vector<Ideal> all_ideals(const AlgebraPtr& a, const Limits& limits);
inline std::vector<Ideal> all_ideals(const AlgebraPtr& a) {
  return all_ideals(a, a->limits());
}
inline std::vector<Ideal> id_f(const AlgebraPtr& a) { return all_ideals(a); }
inline std::vector<Ideal> id_f(const AlgebraPtr& a, const Limits& limits) {
  return all_ideals(a, limits);
}

/// Whenever x∧y ∈ P, x ∈ P or y ∈ P. Requires a proper ideal.
bool is_prime(const Ideal& ideal);

/// Definitional check (every a outside the ideal has ¬(na) inside for some
/// n-fold ⊕ iterate), cross-checked against inclusion-maximality among all
/// enumerated proper ideals.
bool is_maximal(const Ideal& ideal);

/// Some generator a with ⟨a⟩ = I, if one exists. Finite MV-algebras always
/// have one; it is still searched for, not assumed.
std::optional<ElementId> is_principal(const Ideal& ideal);

struct Quotient {
  AlgebraPtr algebra;              // A/I
  Homomorphism projection;         // A -> A/I, kernel asserted equal to I
  std::vector<ElementId> class_of; // source element -> class id
};

/// Quotient by the congruence x ~ y iff (x⊙¬y)⊕(y⊙¬x) ∈ I, with the induced
/// operations verified well-defined.
Quotient quotient(const AlgebraPtr& a, const Ideal& ideal);

/// |A/M| for a maximal ideal M; the quotient is asserted to be a chain.
int rank(const Ideal& maximal_ideal);

std::vector<Ideal> max_ideals(const AlgebraPtr& a, const Limits& limits);
inline std::vector<Ideal> max_ideals(const AlgebraPtr& a) {
  return max_ideals(a, a->limits());
}
inline std::vector<Ideal> max_f(const AlgebraPtr& a) { return max_ideals(a); }
inline std::vector<Ideal> max_f(const AlgebraPtr& a, const Limits& limits) {
  return max_ideals(a, limits);
}

/// Intersection of all maximal ideals.
Ideal radical(const AlgebraPtr& a);
bool is_semisimple(const AlgebraPtr& a);

/// The unique set of finite-rank maximal ideals with ∩ factors = I and
/// A/I ≅ ∏ A/M, together with the verified isomorphism.
struct SDecomposition {
  Ideal ideal;
  std::vector<Ideal> factors;   // maximal ideals containing I, sorted
  AlgebraPtr quotient;          // A/I
  AlgebraPtr product;           // ∏_{M} A/M
  IsoWitness phi;               // A/I -> ∏ A/M, [a] ↦ ([a]_M)_M
};

/// For the improper ideal the decomposition is empty (trivial quotient,
/// empty product).
SDecomposition s_decomposition(const AlgebraPtr& a, const Ideal& ideal);

}  // namespace mvalg
