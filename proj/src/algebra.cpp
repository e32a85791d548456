#include "mvalg/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "mvalg/detail/build.hpp"

namespace mvalg {

namespace {

// Full associativity scans are cubic; beyond this carrier size the structured
// constructors (chains, products of validated factors, quotient images) rely
// on the closure of the MV equations under those constructions and skip the
// cubic pass. make_table always runs it, whatever the size.
constexpr std::size_t kAssocExhaustiveLimit = 300;

std::string element_list(const AlgebraTables& t, const std::vector<ElementId>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += t.names[xs[i]];
  }
  return s;
}

}  // namespace

std::string Provenance::str() const {
  switch (kind) {
    case ProvenanceKind::Chain:
      return "chain(" + std::to_string(chain_sizes.at(0)) + ")";
    case ProvenanceKind::Product: {
      if (chain_sizes.empty()) return "trivial";
      std::string s = "product(";
      for (std::size_t i = 0; i < chain_sizes.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(chain_sizes[i]);
      }
      return s + ")";
    }
    case ProvenanceKind::Table:
      return "table";
  }
  return "table";
}

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::Commutativity: return "commutativity";
    case Axiom::Associativity: return "associativity";
    case Axiom::ZeroIdentity: return "zero_identity";
    case Axiom::Involution: return "involution";
    case Axiom::TopAbsorbing: return "top_absorbing";
    case Axiom::Lukasiewicz: return "lukasiewicz";
  }
  return "?";
}

AxiomReport validate_axioms(const AlgebraTables& t) {
  const std::size_t n = t.size();
  AxiomReport report;

  auto add = [&report](Axiom a, bool passed, std::vector<ElementId> witness,
                       bool exhaustive = true) {
    report.checks.push_back(AxiomCheck{a, passed, std::move(witness), exhaustive});
  };

  // Commutativity
  {
    bool ok = true;
    std::vector<ElementId> w;
    for (ElementId x = 0; x < n && ok; ++x)
      for (ElementId y = x + 1; y < n && ok; ++y)
        if (t.op(x, y) != t.op(y, x)) {
          ok = false;
          w = {x, y};
        }
    add(Axiom::Commutativity, ok, std::move(w));
  }

  // Associativity
  {
    bool ok = true;
    std::vector<ElementId> w;
    for (ElementId x = 0; x < n && ok; ++x)
      for (ElementId y = 0; y < n && ok; ++y) {
        const ElementId xy = t.op(x, y);
        for (ElementId z = 0; z < n; ++z)
          if (t.op(xy, z) != t.op(x, t.op(y, z))) {
            ok = false;
            w = {x, y, z};
            break;
          }
      }
    add(Axiom::Associativity, ok, std::move(w));
  }

  // x ⊕ 0 = x
  {
    bool ok = true;
    std::vector<ElementId> w;
    for (ElementId x = 0; x < n && ok; ++x)
      if (t.op(x, t.zero) != x) {
        ok = false;
        w = {x};
      }
    add(Axiom::ZeroIdentity, ok, std::move(w));
  }

  // ¬¬x = x
  {
    bool ok = true;
    std::vector<ElementId> w;
    for (ElementId x = 0; x < n && ok; ++x)
      if (t.neg[t.neg[x]] != x) {
        ok = false;
        w = {x};
      }
    add(Axiom::Involution, ok, std::move(w));
  }

  // ¬0 ⊕ x = ¬0
  {
    const ElementId top = t.neg[t.zero];
    bool ok = true;
    std::vector<ElementId> w;
    for (ElementId x = 0; x < n && ok; ++x)
      if (t.op(top, x) != top) {
        ok = false;
        w = {x};
      }
    add(Axiom::TopAbsorbing, ok, std::move(w));
  }

  // ¬(¬x⊕y)⊕y = ¬(¬y⊕x)⊕x
  {
    bool ok = true;
    std::vector<ElementId> w;
    for (ElementId x = 0; x < n && ok; ++x)
      for (ElementId y = 0; y < n; ++y) {
        const ElementId lhs = t.op(t.neg[t.op(t.neg[x], y)], y);
        const ElementId rhs = t.op(t.neg[t.op(t.neg[y], x)], x);
        if (lhs != rhs) {
          ok = false;
          w = {x, y};
          break;
        }
      }
    add(Axiom::Lukasiewicz, ok, std::move(w));
  }

  return report;
}

// ---------------------------------------------------------------------------
// Construction

enum class ValidationMode {
  Exhaustive,  // all six axiom groups scanned in full
  Structural,  // associativity skipped above the cubic limit; everything else full
};

class AlgebraBuilder {
 public:
  static AlgebraPtr build(AlgebraTables tables, Provenance provenance,
                          std::vector<std::vector<Fraction>> coords,
                          std::vector<std::size_t> factor_sizes, ValidationMode mode,
                          const Limits& limits) {
    const std::size_t n = tables.size();
    if (n == 0) throw InvalidParameterError("carrier must be nonempty");
    if (n > limits.max_carrier)
      throw ResourceLimitError("carrier size " + std::to_string(n) + " exceeds limit " +
                               std::to_string(limits.max_carrier));
    if (tables.oplus.size() != n * n || tables.neg.size() != n)
      throw InvalidParameterError("operation tables are not total over the carrier");
    for (ElementId v : tables.oplus)
      if (v >= n) throw InvalidParameterError("oplus table entry outside the carrier");
    for (ElementId v : tables.neg)
      if (v >= n) throw InvalidParameterError("neg table entry outside the carrier");
    if (tables.zero >= n) throw InvalidParameterError("zero outside the carrier");

    const bool full_assoc = mode == ValidationMode::Exhaustive || n <= kAssocExhaustiveLimit;
    AxiomReport report = run_validation(tables, full_assoc);
    if (const AxiomCheck* fail = report.first_failure()) {
      throw ValidationError(axiom_name(fail->axiom),
                            "witness (" + element_list(tables, fail->witness) + ")");
    }

    const ElementId one = tables.neg[tables.zero];
    if (n > 1 && one == tables.zero)
      throw ValidationError("top_absorbing", "¬0 = 0 in a nontrivial algebra");

    auto a = std::shared_ptr<FiniteMvAlgebra>(new FiniteMvAlgebra());
    a->tables_ = std::move(tables);
    a->one_ = one;
    a->provenance_ = std::move(provenance);
    a->coords_ = std::move(coords);
    a->factor_sizes_ = std::move(factor_sizes);
    a->validation_ = std::move(report);
    a->limits_ = limits;
    return a;
  }

 private:
  // Everything except the cubic associativity scan, which is marked as
  // structurally inherited.
  static AxiomReport run_validation(const AlgebraTables& t, bool full_assoc) {
    if (full_assoc) return validate_axioms(t);
    return validate_axioms_without_assoc(t);
  }

  static AxiomReport validate_axioms_without_assoc(const AlgebraTables& t);
};

AxiomReport AlgebraBuilder::validate_axioms_without_assoc(const AlgebraTables& t) {
  const std::size_t n = t.size();
  AxiomReport report;

  {
    bool ok = true;
    std::vector<ElementId> w;
    for (ElementId x = 0; x < n && ok; ++x)
      for (ElementId y = x + 1; y < n && ok; ++y)
        if (t.op(x, y) != t.op(y, x)) {
          ok = false;
          w = {x, y};
        }
    report.checks.push_back({Axiom::Commutativity, ok, std::move(w), true});
  }
  report.checks.push_back({Axiom::Associativity, true, {}, false});
  {
    bool ok = true;
    std::vector<ElementId> w;
    for (ElementId x = 0; x < n && ok; ++x)
      if (t.op(x, t.zero) != x) {
        ok = false;
        w = {x};
      }
    report.checks.push_back({Axiom::ZeroIdentity, ok, std::move(w), true});
  }
  {
    bool ok = true;
    std::vector<ElementId> w;
    for (ElementId x = 0; x < n && ok; ++x)
      if (t.neg[t.neg[x]] != x) {
        ok = false;
        w = {x};
      }
    report.checks.push_back({Axiom::Involution, ok, std::move(w), true});
  }
  {
    const ElementId top = t.neg[t.zero];
    bool ok = true;
    std::vector<ElementId> w;
    for (ElementId x = 0; x < n && ok; ++x)
      if (t.op(top, x) != top) {
        ok = false;
        w = {x};
      }
    report.checks.push_back({Axiom::TopAbsorbing, ok, std::move(w), true});
  }
  {
    bool ok = true;
    std::vector<ElementId> w;
    for (ElementId x = 0; x < n && ok; ++x)
      for (ElementId y = 0; y < n; ++y) {
        const ElementId lhs = t.op(t.neg[t.op(t.neg[x], y)], y);
        const ElementId rhs = t.op(t.neg[t.op(t.neg[y], x)], x);
        if (lhs != rhs) {
          ok = false;
          w = {x, y};
          break;
        }
      }
    report.checks.push_back({Axiom::Lukasiewicz, ok, std::move(w), true});
  }
  return report;
}

namespace detail {

AlgebraPtr build_algebra(AlgebraTables tables, Provenance provenance,
                         std::vector<std::vector<Fraction>> coords,
                         std::vector<std::size_t> factor_sizes, BuildMode mode,
                         const Limits& limits) {
  return AlgebraBuilder::build(std::move(tables), std::move(provenance), std::move(coords),
                               std::move(factor_sizes),
                               mode == BuildMode::Exhaustive ? ValidationMode::Exhaustive
                                                             : ValidationMode::Structural,
                               limits);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Factories

AlgebraPtr make_chain(int n, const Limits& limits) {
  if (n < 2) throw InvalidParameterError("chain size must be at least 2, got " + std::to_string(n));

  const std::size_t sz = static_cast<std::size_t>(n);
  AlgebraTables t;
  t.names.reserve(sz);
  t.oplus.resize(sz * sz);
  t.neg.resize(sz);
  t.zero = 0;

  std::vector<std::vector<Fraction>> coords(sz);
  const std::int64_t den = n - 1;
  for (std::size_t i = 0; i < sz; ++i) {
    coords[i] = {Fraction(static_cast<std::int64_t>(i), den)};
    t.names.push_back(coords[i][0].str());
    t.neg[i] = static_cast<ElementId>(sz - 1 - i);
    for (std::size_t j = 0; j < sz; ++j)
      t.oplus[i * sz + j] = static_cast<ElementId>(std::min(sz - 1, i + j));
  }

  return AlgebraBuilder::build(std::move(t), Provenance{ProvenanceKind::Chain, {n}},
                               std::move(coords), {}, ValidationMode::Structural, limits);
}

AlgebraPtr make_trivial() {
  AlgebraTables t;
  t.names = {"0"};
  t.oplus = {0};
  t.neg = {0};
  t.zero = 0;
  return AlgebraBuilder::build(std::move(t), Provenance{ProvenanceKind::Product, {}}, {}, {},
                               ValidationMode::Exhaustive, default_limits());
}

namespace {

struct ProductLayout {
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> strides;  // leftmost factor most significant
  std::size_t total = 1;
};

ProductLayout layout_for(const std::vector<AlgebraPtr>& factors, const Limits& limits) {
  ProductLayout lay;
  lay.sizes.reserve(factors.size());
  for (const auto& f : factors) {
    lay.sizes.push_back(f->size());
    if (lay.total > limits.max_carrier / f->size())
      throw ResourceLimitError("product carrier exceeds limit " +
                               std::to_string(limits.max_carrier));
    lay.total *= f->size();
  }
  lay.strides.assign(factors.size(), 1);
  for (std::size_t i = factors.size(); i-- > 1;)
    lay.strides[i - 1] = lay.strides[i] * lay.sizes[i];
  return lay;
}

std::size_t coord_of(const ProductLayout& lay, std::size_t id, std::size_t i) {
  return (id / lay.strides[i]) % lay.sizes[i];
}

}  // namespace

AlgebraPtr product_of(const std::vector<AlgebraPtr>& factors, const Limits& limits) {
  if (factors.empty()) return make_trivial();
  if (factors.size() == 1) {
    // Singleton products are the factor itself, re-tagged.
    const AlgebraPtr& f = factors[0];
    AlgebraTables t = f->tables();
    std::vector<std::vector<Fraction>> coords;
    if (f->has_coords()) {
      coords.resize(f->size());
      for (ElementId x = 0; x < f->size(); ++x) coords[x] = f->coords(x);
    }
    Provenance prov = f->provenance();
    return AlgebraBuilder::build(std::move(t), std::move(prov), std::move(coords),
                                 {f->size()}, ValidationMode::Structural, limits);
  }

  const ProductLayout lay = layout_for(factors, limits);
  const std::size_t n = lay.total;
  const std::size_t k = factors.size();

  AlgebraTables t;
  t.names.resize(n);
  t.oplus.resize(n * n);
  t.neg.resize(n);

  const bool all_coords = std::all_of(factors.begin(), factors.end(),
                                      [](const AlgebraPtr& f) { return f->has_coords(); });
  std::vector<std::vector<Fraction>> coords;
  if (all_coords) coords.resize(n);

  std::vector<std::size_t> cs(k);
  for (std::size_t id = 0; id < n; ++id) {
    std::string nm = "(";
    for (std::size_t i = 0; i < k; ++i) {
      cs[i] = coord_of(lay, id, i);
      if (i) nm += ",";
      nm += factors[i]->name(static_cast<ElementId>(cs[i]));
      if (all_coords)
        for (const Fraction& fr : factors[i]->coords(static_cast<ElementId>(cs[i])))
          coords[id].push_back(fr);
    }
    nm += ")";
    t.names[id] = std::move(nm);

    std::size_t neg_id = 0;
    for (std::size_t i = 0; i < k; ++i)
      neg_id += factors[i]->neg(static_cast<ElementId>(cs[i])) * lay.strides[i];
    t.neg[id] = static_cast<ElementId>(neg_id);
  }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t r = 0;
      for (std::size_t i = 0; i < k; ++i) {
        const auto cx = static_cast<ElementId>(coord_of(lay, x, i));
        const auto cy = static_cast<ElementId>(coord_of(lay, y, i));
        r += factors[i]->oplus(cx, cy) * lay.strides[i];
      }
      t.oplus[x * n + y] = static_cast<ElementId>(r);
    }

  std::size_t zero_id = 0;
  for (std::size_t i = 0; i < k; ++i) zero_id += factors[i]->zero() * lay.strides[i];
  t.zero = static_cast<ElementId>(zero_id);

  // Product of chains keeps the chain-size provenance; anything else is a
  // generic table-backed product.
  Provenance prov{ProvenanceKind::Table, {}};
  const bool all_chains =
      std::all_of(factors.begin(), factors.end(), [](const AlgebraPtr& f) {
        return f->provenance().kind == ProvenanceKind::Chain;
      });
  if (all_chains) {
    prov.kind = ProvenanceKind::Product;
    for (const auto& f : factors) prov.chain_sizes.push_back(f->provenance().chain_sizes[0]);
  }

  return AlgebraBuilder::build(std::move(t), std::move(prov), std::move(coords), lay.sizes,
                               ValidationMode::Structural, limits);
}

AlgebraPtr make_product(const std::vector<int>& sizes, const Limits& limits) {
  if (sizes.empty())
    throw InvalidParameterError(
        "product requires a nonempty size list (use make_trivial for the one-element algebra)");
  std::vector<AlgebraPtr> chains;
  chains.reserve(sizes.size());
  for (int n : sizes) chains.push_back(make_chain(n, limits));
  return product_of(chains, limits);
}

AlgebraPtr make_table(const std::vector<std::string>& names,
                      const std::vector<std::vector<std::string>>& oplus,
                      const std::vector<std::string>& neg, const std::string& zero,
                      const Limits& limits) {
  const std::size_t n = names.size();
  if (n == 0) throw InvalidParameterError("element list is empty");

  std::unordered_map<std::string, ElementId> index;
  for (std::size_t i = 0; i < n; ++i)
    if (!index.emplace(names[i], static_cast<ElementId>(i)).second)
      throw InvalidParameterError("duplicate element name '" + names[i] + "'");

  auto lookup = [&index](const std::string& nm, const char* where) {
    auto it = index.find(nm);
    if (it == index.end())
      throw InvalidParameterError(std::string("unknown element '") + nm + "' in " + where);
    return it->second;
  };

  if (oplus.size() != n) throw InvalidParameterError("oplus table must have one row per element");
  if (neg.size() != n) throw InvalidParameterError("neg table must have one entry per element");

  AlgebraTables t;
  t.names = names;
  t.oplus.resize(n * n);
  t.neg.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (oplus[i].size() != n)
      throw InvalidParameterError("oplus row " + std::to_string(i) + " is not total");
    for (std::size_t j = 0; j < n; ++j) t.oplus[i * n + j] = lookup(oplus[i][j], "oplus");
    t.neg[i] = lookup(neg[i], "neg");
  }
  t.zero = lookup(zero, "zero");

  return AlgebraBuilder::build(std::move(t), Provenance{ProvenanceKind::Table, {}}, {}, {},
                               ValidationMode::Exhaustive, limits);
}

// ---------------------------------------------------------------------------
// Element-level operations

ElementId FiniteMvAlgebra::partial_add(ElementId x, ElementId y) const {
  if (auto r = try_partial_add(x, y)) return *r;
  throw UndefinedPartialSumError("partial sum " + name(x) + " + " + name(y) +
                                 " undefined (requires x ≤ ¬y)");
}

ElementId FiniteMvAlgebra::nfold(ElementId a, std::int64_t n) const {
  if (n < 1) throw InvalidParameterError("nfold requires n >= 1");
  ElementId s = a;
  for (std::int64_t k = 2; k <= n; ++k) {
    auto next = try_partial_add(s, a);
    if (!next)
      throw UndefinedPartialSumError("nfold(" + name(a) + ", " + std::to_string(n) +
                                     ") undefined at step " + std::to_string(k));
    s = *next;
  }
  return s;
}

ElementOrder FiniteMvAlgebra::element_order(ElementId a) const {
  if (a == zero()) return ElementOrder::infinite();
  ElementId s = a;
  std::int64_t order = 1;
  while (auto next = try_partial_add(s, a)) {
    s = *next;
    ++order;
    if (order > static_cast<std::int64_t>(size()) + 1)
      throw InternalCheckError("element order did not stabilize for " + name(a));
  }
  return ElementOrder::finite(order);
}

std::vector<ElementId> FiniteMvAlgebra::atoms() const {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < size(); ++x) {
    if (x == zero()) continue;
    bool minimal = true;
    for (ElementId y = 0; y < size(); ++y) {
      if (y == zero() || y == x) continue;
      if (leq(y, x) && !leq(x, y)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(x);
  }
  return out;
}

bool FiniteMvAlgebra::is_atomic() const {
  const std::vector<ElementId> as = atoms();
  for (ElementId x = 0; x < size(); ++x) {
    if (x == zero()) continue;
    bool covered = false;
    for (ElementId a : as)
      if (leq(a, x)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

const std::vector<Fraction>& FiniteMvAlgebra::coords(ElementId x) const {
  static const std::vector<Fraction> empty;
  if (coords_.empty()) return empty;
  return coords_[x];
}

std::optional<ElementId> FiniteMvAlgebra::find_by_coords(
    const std::vector<Fraction>& value) const {
  if (coords_.empty()) return std::nullopt;
  for (ElementId x = 0; x < size(); ++x)
    if (coords_[x] == value) return x;
  return std::nullopt;
}

std::optional<ElementId> FiniteMvAlgebra::find_by_name(const std::string& nm) const {
  for (ElementId x = 0; x < size(); ++x)
    if (tables_.names[x] == nm) return x;
  return std::nullopt;
}

std::size_t FiniteMvAlgebra::factor_coord(ElementId x, std::size_t i) const {
  std::size_t stride = 1;
  for (std::size_t j = factor_sizes_.size(); j-- > i + 1;) stride *= factor_sizes_[j];
  return (x / stride) % factor_sizes_[i];
}

ElementId FiniteMvAlgebra::id_from_factor_coords(std::span<const std::size_t> cs) const {
  std::size_t id = 0;
  std::size_t stride = 1;
  for (std::size_t j = factor_sizes_.size(); j-- > 0;) {
    id += cs[j] * stride;
    stride *= factor_sizes_[j];
  }
  return static_cast<ElementId>(id);
}

ElementId FiniteMvAlgebra::idempotent_power(ElementId x) const {
  ElementId e = x;
  for (std::size_t guard = 0; guard <= size() + 1; ++guard) {
    const ElementId next = oplus(e, e);
    if (next == e) return e;
    e = next;
  }
  throw InternalCheckError("idempotent power did not stabilize for " + name(x));
}

EvalResult evaluate(const FiniteMvAlgebra& a, MvOp op, std::span<const std::int64_t> args) {
  auto el = [&a, &args](std::size_t i) {
    if (i >= args.size() || args[i] < 0 || args[i] >= static_cast<std::int64_t>(a.size()))
      throw InvalidParameterError("argument " + std::to_string(i) + " is not a valid element id");
    return static_cast<ElementId>(args[i]);
  };
  auto need = [&args](std::size_t k) {
    if (args.size() != k)
      throw InvalidParameterError("operation expects " + std::to_string(k) + " arguments");
  };
  switch (op) {
    case MvOp::Oplus: need(2); return a.oplus(el(0), el(1));
    case MvOp::Neg: need(1); return a.neg(el(0));
    case MvOp::Leq: need(2); return a.leq(el(0), el(1));
    case MvOp::Join: need(2); return a.join(el(0), el(1));
    case MvOp::Meet: need(2); return a.meet(el(0), el(1));
    case MvOp::Otimes: need(2); return a.otimes(el(0), el(1));
    case MvOp::PartialAdd: need(2); return a.partial_add(el(0), el(1));
    case MvOp::Nfold: {
      need(2);
      if (args[1] < 1) throw InvalidParameterError("nfold requires n >= 1");
      return a.nfold(el(0), args[1]);
    }
  }
  throw InvalidParameterError("unknown operation");
}

}  // namespace mvalg
