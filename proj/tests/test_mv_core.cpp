#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "mvalg/center.hpp"
#include "mvalg/decomposition.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace mvalg;

namespace {

ElementId chain_el(const AlgebraPtr& a, std::int64_t num, std::int64_t den) {
  auto id = a->find_by_coords({Fraction(num, den)});
  REQUIRE(id.has_value());
  return *id;
}

ElementId prod_el(const AlgebraPtr& a, std::vector<Fraction> fs) {
  auto id = a->find_by_coords(fs);
  REQUIRE(id.has_value());
  return *id;
}

}  // namespace

TEST_CASE("chains: boolean two-element case") {
  AlgebraPtr a = make_chain(2);
  CHECK(a->size() == 2);
  CHECK(a->neg(a->zero()) == a->one());
  CHECK(a->oplus(a->one(), a->one()) == a->one());
  CHECK(a->name(a->zero()) == "0");
  CHECK(a->name(a->one()) == "1");
}

TEST_CASE("chains: three elements with truncation at the top") {
  AlgebraPtr a = make_chain(3);
  const ElementId half = chain_el(a, 1, 2);
  CHECK(a->size() == 3);
  CHECK(a->oplus(half, half) == a->one());
}

TEST_CASE("chains: five-element arithmetic matches min(1, x+y) and 1-x") {
  AlgebraPtr a = make_chain(5);
  // Oracle: evaluate the standard semantics directly on numerators over 4.
  for (std::int64_t i = 0; i <= 4; ++i)
    for (std::int64_t j = 0; j <= 4; ++j) {
      const ElementId s = a->oplus(chain_el(a, i, 4), chain_el(a, j, 4));
      CHECK(a->coords(s)[0] == Fraction(std::min<std::int64_t>(4, i + j), 4));
    }
  CHECK(a->oplus(chain_el(a, 2, 4), chain_el(a, 1, 4)) == chain_el(a, 3, 4));
  CHECK(a->neg(chain_el(a, 3, 4)) == chain_el(a, 1, 4));
  CHECK(a->name(chain_el(a, 2, 4)) == "2/4");
}

TEST_CASE("chains: size below two is rejected") {
  CHECK_THROWS_AS(make_chain(1), InvalidParameterError);
  CHECK_THROWS_AS(make_chain(0), InvalidParameterError);
}

TEST_CASE("products: componentwise operations") {
  AlgebraPtr a = make_product({2, 3});
  CHECK(a->size() == 6);
  const ElementId x = prod_el(a, {Fraction(1, 1), Fraction(1, 2)});
  const ElementId y = prod_el(a, {Fraction(0, 1), Fraction(1, 2)});
  CHECK(a->oplus(x, y) == prod_el(a, {Fraction(1, 1), Fraction(2, 2)}));

  AlgebraPtr b = make_product({3, 3});
  const ElementId z = prod_el(b, {Fraction(1, 2), Fraction(0, 2)});
  CHECK(b->neg(z) == prod_el(b, {Fraction(1, 2), Fraction(2, 2)}));
}

TEST_CASE("products: singleton product is the chain itself") {
  AlgebraPtr p = make_product({2});
  AlgebraPtr c = make_chain(2);
  CHECK(p->tables().oplus == c->tables().oplus);
  CHECK(p->tables().neg == c->tables().neg);
  CHECK(p->tables().names == c->tables().names);
  CHECK(is_isomorphic(p, c).has_value());
}

TEST_CASE("products: empty size list is rejected") {
  CHECK_THROWS_AS(make_product({}), InvalidParameterError);
  CHECK_THROWS_AS(make_product({2, 1}), InvalidParameterError);
}

TEST_CASE("tables: renamed three-chain is accepted and isomorphic to it") {
  AlgebraPtr t = make_table({"z", "h", "u"},
                            {{"z", "h", "u"}, {"h", "u", "u"}, {"u", "u", "u"}},
                            {"u", "h", "z"}, "z");
  CHECK(t->size() == 3);
  auto iso = is_isomorphic(t, make_chain(3));
  REQUIRE(iso.has_value());
  CHECK(!iso->check().has_value());
}

TEST_CASE("tables: corrupted negation is rejected at the involution axiom") {
  try {
    make_table({"z", "h", "u"},
               {{"z", "h", "u"}, {"h", "u", "u"}, {"u", "u", "u"}},
               {"u", "u", "z"}, "z");
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.axiom() == "involution");
  }
}

TEST_CASE("tables: one-element algebra is the trivial algebra") {
  AlgebraPtr t = make_table({"z"}, {{"z"}}, {"z"}, "z");
  CHECK(t->size() == 1);
  CHECK(t->zero() == t->one());
  AlgebraPtr triv = make_trivial();
  CHECK(is_isomorphic(t, triv).has_value());
}

TEST_CASE("tables: totality violations are parameter errors") {
  CHECK_THROWS_AS(make_table({"a", "b"}, {{"a", "b"}}, {"b", "a"}, "a"), InvalidParameterError);
  CHECK_THROWS_AS(make_table({"a", "b"}, {{"a", "b"}, {"b"}}, {"b", "a"}, "a"),
                  InvalidParameterError);
  CHECK_THROWS_AS(make_table({"a", "a"}, {{"a", "a"}, {"a", "a"}}, {"a", "a"}, "a"),
                  InvalidParameterError);
}

TEST_CASE("validate_axioms: constructed algebras pass, patched tables fail") {
  CHECK(validate_axioms(make_chain(4)->tables()).all_passed());
  CHECK(validate_axioms(make_trivial()->tables()).all_passed());

  // Patch one oplus entry of 2x2 and watch commutativity or associativity go.
  AlgebraTables t = make_product({2, 2})->tables();
  AlgebraPtr p = make_product({2, 2});
  const ElementId e10 = prod_el(p, {Fraction(1, 1), Fraction(0, 1)});
  const ElementId e01 = prod_el(p, {Fraction(0, 1), Fraction(1, 1)});
  t.oplus[e10 * 4 + e01] = p->zero();
  AxiomReport r = validate_axioms(t);
  CHECK(!r.all_passed());
  const AxiomCheck* f = r.first_failure();
  REQUIRE(f != nullptr);
  const bool comm_or_assoc =
      f->axiom == Axiom::Commutativity || f->axiom == Axiom::Associativity;
  CHECK(comm_or_assoc);
  CHECK(!f->witness.empty());
}

TEST_CASE("order: leq against the definitional formula, joins against brute force") {
  for (const AlgebraPtr& a : {make_chain(3), make_chain(5), make_product({2, 3}),
                              make_product({3, 4}), make_product({2, 2, 2})}) {
    for (ElementId x = 0; x < a->size(); ++x)
      for (ElementId y = 0; y < a->size(); ++y) {
        CHECK(a->leq(x, y) == (a->oplus(a->neg(x), y) == a->one()));
        auto lub = oracle::brute_lub(*a, x, y);
        auto glb = oracle::brute_glb(*a, x, y);
        REQUIRE(lub.has_value());
        REQUIRE(glb.has_value());
        CHECK(a->join(x, y) == *lub);
        CHECK(a->meet(x, y) == *glb);
      }
  }
}

TEST_CASE("order: partial order laws") {
  AlgebraPtr a = make_product({3, 4});
  for (ElementId x = 0; x < a->size(); ++x) {
    CHECK(a->leq(x, x));
    for (ElementId y = 0; y < a->size(); ++y) {
      if (a->leq(x, y) && a->leq(y, x)) CHECK(x == y);
      for (ElementId z = 0; z < a->size(); ++z)
        if (a->leq(x, y) && a->leq(y, z)) CHECK(a->leq(x, z));
    }
  }
}

TEST_CASE("evaluate: dispatcher and worked instances") {
  AlgebraPtr l3 = make_chain(3);
  const ElementId half = chain_el(l3, 1, 2);
  CHECK(l3->leq(half, l3->one()));
  CHECK(std::get<bool>(evaluate(*l3, MvOp::Leq,
                                std::vector<std::int64_t>{half, l3->one()})));

  AlgebraPtr l5 = make_chain(5);
  const ElementId two4 = chain_el(l5, 2, 4);
  CHECK(l5->partial_add(two4, two4) == l5->one());
  CHECK_THROWS_AS(l5->nfold(two4, 3), UndefinedPartialSumError);
  CHECK_THROWS_AS(l5->partial_add(l5->one(), two4), UndefinedPartialSumError);

  AlgebraPtr p = make_product({2, 3});
  const ElementId x = prod_el(p, {Fraction(1, 1), Fraction(0, 2)});
  const ElementId y = prod_el(p, {Fraction(0, 1), Fraction(1, 2)});
  CHECK(p->join(x, y) == prod_el(p, {Fraction(1, 1), Fraction(1, 2)}));

  CHECK(std::get<ElementId>(evaluate(*l5, MvOp::Otimes,
                                     std::vector<std::int64_t>{two4, two4})) ==
        chain_el(l5, 0, 4));
  CHECK_THROWS_AS(evaluate(*l5, MvOp::Nfold, std::vector<std::int64_t>{two4, 0}),
                  InvalidParameterError);
}

TEST_CASE("element order: chain closed form and the infinite zero") {
  // Oracle for Ł_n: |k/(n-1)| = floor((n-1)/k).
  for (int n = 2; n <= 12; ++n) {
    AlgebraPtr a = make_chain(n);
    CHECK(a->element_order(a->zero()) == ElementOrder::infinite());
    for (int k = 1; k <= n - 1; ++k)
      CHECK(a->element_order(chain_el(a, k, n - 1)) == ElementOrder::finite((n - 1) / k));
  }

  AlgebraPtr l5 = make_chain(5);
  CHECK(l5->element_order(chain_el(l5, 1, 4)) == ElementOrder::finite(4));
  CHECK(l5->element_order(chain_el(l5, 2, 4)) == ElementOrder::finite(2));
  CHECK(l5->element_order(chain_el(l5, 3, 4)) == ElementOrder::finite(1));
  CHECK(l5->element_order(l5->one()) == ElementOrder::finite(1));

  AlgebraPtr p = make_product({2, 3});
  CHECK(p->element_order(prod_el(p, {Fraction(0, 1), Fraction(1, 2)})) ==
        ElementOrder::finite(2));
}

TEST_CASE("element order: archimedean property on samples") {
  for (const AlgebraPtr& a :
       {make_chain(6), make_product({2, 3}), make_product({4, 5, 2})}) {
    for (ElementId x = 0; x < a->size(); ++x)
      if (x != a->zero()) CHECK(!a->element_order(x).is_infinite());
  }
}

TEST_CASE("atoms: minimality and atomicity") {
  AlgebraPtr p = make_product({2, 3});
  auto atoms = p->atoms();
  REQUIRE(atoms.size() == 2);
  std::vector<ElementId> expected{prod_el(p, {Fraction(1, 1), Fraction(0, 2)}),
                                  prod_el(p, {Fraction(0, 1), Fraction(1, 2)})};
  std::sort(expected.begin(), expected.end());
  CHECK(atoms == expected);
  CHECK(p->is_atomic());

  for (int n : {2, 4, 7}) {
    AlgebraPtr c = make_chain(n);
    auto as = c->atoms();
    REQUIRE(as.size() == 1);
    CHECK(c->coords(as[0])[0] == Fraction(1, n - 1));
  }

  AlgebraPtr triv = make_trivial();
  CHECK(triv->atoms().empty());
  CHECK(triv->is_atomic());
}

TEST_CASE("atoms: in a product of chains the factor atoms have order n_i - 1") {
  for (const auto& sizes : corpus::distinct_size_multisets(2)) {
    AlgebraPtr a = make_product(sizes);
    for (ElementId at : a->atoms()) {
      // The atom sits at 1/(n_i - 1) in exactly one coordinate.
      int factor = -1;
      for (std::size_t i = 0; i < sizes.size(); ++i)
        if (a->coords(at)[i].num != 0) factor = static_cast<int>(i);
      REQUIRE(factor >= 0);
      CHECK(a->element_order(at) == ElementOrder::finite(sizes[factor] - 1));
    }
  }
}

TEST_CASE("boolean center: idempotents form the expected Boolean algebras") {
  CenterResult c3 = boolean_center(make_chain(3));
  CHECK(c3.algebra->size() == 2);

  AlgebraPtr b4 = make_product({2, 2});
  CHECK(boolean_center(b4).algebra->size() == 4);

  AlgebraPtr p = make_product({2, 3});
  CenterResult cp = boolean_center(p);
  CHECK(cp.algebra->size() == 4);
  for (ElementId x = 0; x < cp.algebra->size(); ++x) {
    CHECK(cp.algebra->join(x, cp.algebra->neg(x)) == cp.algebra->one());
    CHECK(cp.algebra->meet(x, cp.algebra->neg(x)) == cp.algebra->zero());
  }
  CHECK(!cp.embedding.check().has_value());
}

TEST_CASE("isomorphism: factor permutations, distinct multisets, table copies") {
  auto w = is_isomorphic(make_product({2, 3}), make_product({3, 2}));
  REQUIRE(w.has_value());
  CHECK(!w->check().has_value());

  CHECK(!is_isomorphic(make_chain(4), make_product({2, 2})).has_value());

  std::mt19937 rng(20240811);
  AlgebraPtr scrambled = corpus::scrambled_table_copy(make_chain(3), rng);
  CHECK(is_isomorphic(scrambled, make_chain(3)).has_value());
}

TEST_CASE("canonical decomposition: chain multisets") {
  CHECK(canonical_decomposition(make_product({2, 3})).multiset ==
        ChainMultiset{{{2, 1}, {3, 1}}});
  CHECK(canonical_decomposition(make_chain(5)).multiset == ChainMultiset{{{5, 1}}});
  CHECK(canonical_decomposition(make_product({2, 2, 2})).multiset == ChainMultiset{{{2, 3}}});
  CHECK(canonical_decomposition(make_trivial()).multiset.empty());
}

TEST_CASE("isomorphism: equal carriers with different multisets never match") {
  std::map<std::size_t, std::vector<AlgebraPtr>> by_carrier;
  for (const auto& sizes : corpus::distinct_size_multisets())
    if (auto a = make_product(sizes); a->size() <= 40) by_carrier[a->size()].push_back(a);

  int separated = 0;
  for (const auto& [carrier, algebras] : by_carrier)
    for (std::size_t i = 0; i < algebras.size(); ++i)
      for (std::size_t j = i + 1; j < algebras.size(); ++j) {
        CHECK(!is_isomorphic(algebras[i], algebras[j]).has_value());
        ++separated;
      }
  CHECK(separated > 0);
}

TEST_CASE("canonical decomposition: witness verifies and sizes multiply out") {
  for (const auto& sizes : corpus::distinct_size_multisets(2)) {
    AlgebraPtr a = make_product(sizes);
    CanonicalDecomposition d = canonical_decomposition(a);
    CHECK(!d.iso.check().has_value());
    CHECK(d.multiset.carrier_size() == a->size());
  }
}

TEST_CASE("axioms: exhaustive validation against the independent oracle") {
  for (const AlgebraPtr& a : {make_chain(2), make_chain(6), make_product({2, 3}),
                              make_product({4, 4}), make_product({2, 3, 4}), make_trivial()}) {
    CHECK(a->validation_report().all_passed());
    CHECK(oracle::broken_axioms(a->tables()).empty());
  }
}

TEST_CASE("limits: carrier guard trips with a resource error") {
  Limits tight;
  tight.max_carrier = 10;
  CHECK_THROWS_AS(make_product({4, 4}, tight), ResourceLimitError);
  CHECK(make_product({2, 5}, tight)->size() == 10);
}
