#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mvalg/errors.hpp"
#include "mvalg/fraction.hpp"
#include "mvalg/limits.hpp"

namespace mvalg {

using ElementId = std::uint32_t;

class FiniteMvAlgebra;
using AlgebraPtr = std::shared_ptr<const FiniteMvAlgebra>;

enum class ProvenanceKind { Chain, Product, Table };

/// How an algebra was built. Product with an empty size list is the trivial
/// one-element algebra (only reachable through make_trivial).
struct Provenance {
  ProvenanceKind kind = ProvenanceKind::Table;
  std::vector<int> chain_sizes;  // Chain: {n}; Product: the size list

  std::string str() const;
};

enum class Axiom {
  Commutativity,   // x⊕y = y⊕x
  Associativity,   // (x⊕y)⊕z = x⊕(y⊕z)
  ZeroIdentity,    // x⊕0 = x
  Involution,      // ¬¬x = x
  TopAbsorbing,    // ¬0⊕x = ¬0
  Lukasiewicz,     // ¬(¬x⊕y)⊕y = ¬(¬y⊕x)⊕x
};

const char* axiom_name(Axiom a);

struct AxiomCheck {
  Axiom axiom;
  bool passed = true;
  std::vector<ElementId> witness;  // offending elements when failed
  bool exhaustive = true;          // false when skipped for structural reasons
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const AxiomCheck* first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return &c;
    return nullptr;
  }
};

/// Raw operation tables before validation. `oplus` is row-major, size n*n.
struct AlgebraTables {
  std::vector<std::string> names;
  std::vector<ElementId> oplus;
  std::vector<ElementId> neg;
  ElementId zero = 0;

  std::size_t size() const { return names.size(); }
  ElementId op(ElementId x, ElementId y) const { return oplus[x * names.size() + y]; }
};

/// Exhaustive check of the six axiom groups against raw tables.
/// Always exhaustive regardless of carrier size; callers pay what they ask.
AxiomReport validate_axioms(const AlgebraTables& t);

/// Order of an element: the largest n for which the n-fold partial sum is
/// defined; infinite for 0 (the defining supremum is unbounded there).
class ElementOrder {
 public:
  static ElementOrder infinite() { return ElementOrder(true, 0); }
  static ElementOrder finite(std::int64_t n) { return ElementOrder(false, n); }

  bool is_infinite() const { return infinite_; }
  std::int64_t value() const {
    if (infinite_) throw InvalidParameterError("order is infinite");
    return value_;
  }
  friend bool operator==(const ElementOrder& a, const ElementOrder& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  std::string str() const { return infinite_ ? "inf" : std::to_string(value_); }

 private:
  ElementOrder(bool inf, std::int64_t v) : infinite_(inf), value_(v) {}
  bool infinite_;
  std::int64_t value_;
};

/// An immutable, validated finite MV-algebra: a carrier of element ids with
/// total ⊕ and ¬ tables and a distinguished 0. All derived structure (order,
/// joins, partial addition, atoms, Boolean center) is computed from the two
/// tables. Instances are shared via AlgebraPtr and never mutate, so any
/// operation may run concurrently on the same algebra.
class FiniteMvAlgebra {
 public:
  std::size_t size() const { return tables_.size(); }
  ElementId zero() const { return tables_.zero; }
  ElementId one() const { return one_; }

  ElementId oplus(ElementId x, ElementId y) const { return tables_.op(x, y); }
  ElementId neg(ElementId x) const { return tables_.neg[x]; }
  ElementId otimes(ElementId x, ElementId y) const { return neg(oplus(neg(x), neg(y))); }

  bool leq(ElementId x, ElementId y) const { return oplus(neg(x), y) == one_; }
  ElementId join(ElementId x, ElementId y) const { return oplus(neg(oplus(neg(x), y)), y); }
  ElementId meet(ElementId x, ElementId y) const { return neg(join(neg(x), neg(y))); }

  /// x + y when x ≤ ¬y, absent otherwise.
  std::optional<ElementId> try_partial_add(ElementId x, ElementId y) const {
    if (!leq(x, neg(y))) return std::nullopt;
    return oplus(x, y);
  }
  /// Throwing form of try_partial_add.
  ElementId partial_add(ElementId x, ElementId y) const;
  /// a + a + ... + a (n times), evaluated stepwise; throws at the first
  /// undefined step.
  ElementId nfold(ElementId a, std::int64_t n) const;

  ElementOrder element_order(ElementId a) const;

  /// Minimal elements of carrier ∖ {0}, in id order.
  std::vector<ElementId> atoms() const;
  /// Every nonzero element dominates an atom. True for all finite algebras,
  /// but computed, not assumed.
  bool is_atomic() const;

  const std::string& name(ElementId x) const { return tables_.names[x]; }
  /// Exact coordinates for chain/product provenance; empty otherwise.
  const std::vector<Fraction>& coords(ElementId x) const;
  bool has_coords() const { return !coords_.empty(); }
  std::optional<ElementId> find_by_coords(const std::vector<Fraction>& value) const;
  std::optional<ElementId> find_by_name(const std::string& name) const;

  const Provenance& provenance() const { return provenance_; }
  const AlgebraTables& tables() const { return tables_; }
  const AxiomReport& validation_report() const { return validation_; }
  /// The guards this algebra was built under; derived computations
  /// (quotients, enumerations, completions) inherit them.
  const Limits& limits() const { return limits_; }

  /// Product shape when built as a direct product: per-factor carrier sizes.
  /// Empty for non-product algebras.
  const std::vector<std::size_t>& factor_sizes() const { return factor_sizes_; }
  std::size_t factor_coord(ElementId x, std::size_t i) const;
  ElementId id_from_factor_coords(std::span<const std::size_t> cs) const;

  /// x ↦ the idempotent reached by repeatedly doubling x under ⊕. The
  /// principal ideal generated by x is exactly the downset of this element.
  ElementId idempotent_power(ElementId x) const;

  std::string describe_element(ElementId x) const { return name(x); }

 private:
  friend class AlgebraBuilder;
  FiniteMvAlgebra() = default;

  AlgebraTables tables_;
  ElementId one_ = 0;
  Provenance provenance_;
  std::vector<std::vector<Fraction>> coords_;  // empty when not applicable
  std::vector<std::size_t> factor_sizes_;
  AxiomReport validation_;
  Limits limits_;
};

/// Łukasiewicz chain Ł_n on {0, 1/(n-1), ..., 1} with truncated addition
/// x⊕y = min(1, x+y) and ¬x = 1−x.
AlgebraPtr make_chain(int n, const Limits& limits = default_limits());

/// Componentwise product of chains Ł_{n1} × ... × Ł_{nk}; sizes must be ≥ 2
/// and the list nonempty (the trivial algebra has its own constructor).
AlgebraPtr make_product(const std::vector<int>& sizes, const Limits& limits = default_limits());

/// The one-element algebra.
AlgebraPtr make_trivial();

/// Algebra from explicit tables; fully validated, rejecting the first
/// violated axiom instance.
AlgebraPtr make_table(const std::vector<std::string>& names,
                      const std::vector<std::vector<std::string>>& oplus,
                      const std::vector<std::string>& neg, const std::string& zero,
                      const Limits& limits = default_limits());

/// Direct product of arbitrary validated algebras (componentwise tables).
/// An empty list yields the trivial algebra.
AlgebraPtr product_of(const std::vector<AlgebraPtr>& factors,
                      const Limits& limits = default_limits());

enum class MvOp { Oplus, Neg, Leq, Join, Meet, Otimes, PartialAdd, Nfold };

using EvalResult = std::variant<ElementId, bool>;

/// Generic dispatcher over the element-level operations. `args` are element
/// ids except for the trailing count of Nfold.
EvalResult evaluate(const FiniteMvAlgebra& a, MvOp op, std::span<const std::int64_t> args);

}  // namespace mvalg
