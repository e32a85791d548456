// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance here is exact equality; the subjects are the
// desk-scale corpus of chain products (sizes 2..6, up to three factors) and
// the symbolic signature layer.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mvalg/cli.hpp"
#include "mvalg/completion.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace mvalg;

namespace {

struct Failure {
  std::string detail;
};

int g_failures = 0;

void run_criterion(int number, const std::string& title,
                   const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string failure;
  try {
    body();
  } catch (const Failure& f) {
    failure = f.detail;
  } catch (const std::exception& e) {
    failure = e.what();
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  if (failure.empty()) {
    std::printf("[PASS] criterion %d: %s (%lld ms)\n", number, title.c_str(),
                static_cast<long long>(ms));
  } else {
    ++g_failures;
    std::printf("[FAIL] criterion %d: %s (%lld ms)\n       %s\n", number, title.c_str(),
                static_cast<long long>(ms), failure.c_str());
  }
  std::fflush(stdout);
}

void require(bool ok, const std::string& detail) {
  if (!ok) throw Failure{detail};
}

std::string tuple_str(const std::vector<int>& sizes) {
  std::string s = "[";
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(sizes[i]);
  }
  return s + "]";
}

// ---------------------------------------------------------------------------

void criterion_main_theorem() {
  int count = 0;
  for (const auto& sizes : corpus::ordered_size_tuples()) {
    AlgebraPtr a = make_product(sizes);
    IsoWitness w = verify_main_theorem(a);
    require(!w.check().has_value(), "witness failed on " + tuple_str(sizes));
    require(w.forward.source->size() == a->size(), "carrier mismatch on " + tuple_str(sizes));
    ++count;
  }
  require(count >= 125, "corpus smaller than expected: " + std::to_string(count));

  // The theorem also holds for the same algebras presented as scrambled raw
  // tables (carriers up to 120).
  std::mt19937 rng(606);
  for (const auto& sizes : corpus::distinct_size_multisets()) {
    std::size_t carrier = 1;
    for (int s : sizes) carrier *= static_cast<std::size_t>(s);
    if (carrier > 120) continue;
    AlgebraPtr scrambled = corpus::scrambled_table_copy(make_product(sizes), rng);
    IsoWitness w = verify_main_theorem(scrambled);
    require(!w.check().has_value(), "witness failed on a table copy of " + tuple_str(sizes));
  }
}

void criterion_s_decomposition() {
  for (const auto& sizes : corpus::ordered_size_tuples()) {
    AlgebraPtr a = make_product(sizes);
    const auto ideals = all_ideals(a);
    std::vector<SDecomposition> ds;
    for (const Ideal& i : ideals) ds.push_back(s_decomposition(a, i));

    for (const SDecomposition& d : ds) {
      if (d.ideal.is_proper()) {
        Bitset inter(a->size());
        for (ElementId x = 0; x < a->size(); ++x) inter.set(x);
        for (const Ideal& m : d.factors) inter &= m.members();
        require(inter == d.ideal.members(), "∩S(I) ≠ I on " + tuple_str(sizes));
      }
      std::size_t prod = 1;
      for (const Ideal& m : d.factors)
        prod *= quotient(a, m).algebra->size();
      require(d.quotient->size() == prod, "|A/I| ≠ ∏|A/M| on " + tuple_str(sizes));
      require(!d.phi.check().has_value(), "φ_I not bijective on " + tuple_str(sizes));
    }

    for (std::size_t i = 0; i < ideals.size(); ++i)
      for (std::size_t j = 0; j < ideals.size(); ++j) {
        if (!ideals[i].subset_of(ideals[j])) continue;
        for (const Ideal& mj : ds[j].factors) {
          bool found = false;
          for (const Ideal& mi : ds[i].factors)
            if (mi == mj) found = true;
          require(found, "S-monotonicity failed on " + tuple_str(sizes));
        }
      }
  }
}

void criterion_boolean() {
  for (int k = 1; k <= 4; ++k) {
    AlgebraPtr b = make_product(std::vector<int>(static_cast<std::size_t>(k), 2));
    PowersetWitness pw = boolean_profinite_powerset(b);
    require(pw.points.size() == static_cast<std::size_t>(k),
            "2^" + std::to_string(k) + " has wrong point count");
    require(pw.powerset->size() == (std::size_t{1} << k),
            "power set size wrong for k=" + std::to_string(k));
    require(!pw.witness.check().has_value(), "power-set witness failed");

    // Ultrafilters, built as complements of the maximal ideals and verified
    // to be maximal filters.
    std::size_t ultrafilters = 0;
    for (const Ideal& m : pw.points) {
      Bitset f(b->size());
      for (ElementId x = 0; x < b->size(); ++x)
        if (!m.contains(x)) f.set(x);
      for (ElementId x = 0; x < b->size(); ++x) {
        if (!f.test(x)) continue;
        for (ElementId y = 0; y < b->size(); ++y) {
          if (b->leq(x, y))
            require(f.test(y), "ultrafilter not upward closed");
          if (f.test(y))
            require(f.test(b->meet(x, y)), "ultrafilter not meet-closed");
        }
      }
      require(!f.test(b->zero()), "ultrafilter contains 0");
      for (ElementId x = 0; x < b->size(); ++x)
        require(f.test(x) != f.test(b->neg(x)), "filter not an ultrafilter");
      ++ultrafilters;
    }

    const std::size_t atom_count = b->atoms().size();
    require(atom_count == ultrafilters,
            "atom/ultrafilter counts differ for k=" + std::to_string(k));
    MacCriterionResult mc = check_mac_criterion(b);
    require(mc.holds == (atom_count == ultrafilters),
            "MacNeille criterion did not reduce to the count equality");
    require(mc.holds, "MacNeille criterion failed on 2^" + std::to_string(k));
  }
}

void criterion_validator_sensitivity() {
  std::mt19937 rng(20260808);
  const std::vector<AlgebraPtr> bases{make_chain(3), make_chain(4), make_product({2, 3})};
  for (const AlgebraPtr& base : bases) {
    const std::size_t n = base->size();
    for (int trial = 0; trial < 100; ++trial) {
      AlgebraTables t = base->tables();
      std::uniform_int_distribution<std::size_t> val(0, n - 1);
      std::uniform_int_distribution<std::size_t> pos(0, n * n + n - 1);
      const std::size_t p = pos(rng);
      if (p < n * n)
        t.oplus[p] = static_cast<ElementId>(val(rng));
      else
        t.neg[p - n * n] = static_cast<ElementId>(val(rng));

      const bool oracle_ok = oracle::broken_axioms(t).empty();
      const bool tool_ok = validate_axioms(t).all_passed();
      require(tool_ok == oracle_ok, "validator disagrees with the brute-force oracle");

      // The constructor must agree with the report-level answer.
      bool constructed = true;
      try {
        std::vector<std::vector<std::string>> rows(n, std::vector<std::string>(n));
        std::vector<std::string> negs(n);
        for (std::size_t i = 0; i < n; ++i) {
          negs[i] = t.names[t.neg[i]];
          for (std::size_t j = 0; j < n; ++j) rows[i][j] = t.names[t.oplus[i * n + j]];
        }
        make_table(t.names, rows, negs, t.names[t.zero]);
      } catch (const ValidationError&) {
        constructed = false;
      }
      require(constructed == oracle_ok, "constructor disagrees with the oracle");
    }
  }
}

void criterion_element_order() {
  for (int n = 2; n <= 12; ++n) {
    AlgebraPtr a = make_chain(n);
    for (int k = 1; k <= n - 1; ++k) {
      const ElementId x = *a->find_by_coords({Fraction(k, n - 1)});

      // Stepwise partial addition, done directly here.
      std::int64_t steps = 1;
      ElementId s = x;
      while (auto next = a->try_partial_add(s, x)) {
        s = *next;
        ++steps;
      }

      const ElementOrder reported = a->element_order(x);
      require(reported == ElementOrder::finite(steps), "element_order differs from stepwise sum");
      require(steps == (n - 1) / k, "stepwise order differs from floor((n-1)/k)");
    }
    require(a->element_order(a->zero()).is_infinite(), "|0| must be infinite");
  }
}

void criterion_macneille() {
  for (const auto& sizes : corpus::ordered_size_tuples()) {
    AlgebraPtr a = make_product(sizes);
    MacneilleResult m = macneille_mv(a);  // internally cross-checks the cut lattice
    require(is_isomorphic(m.algebra, a).has_value(),
            "MacNeille completion not isomorphic to " + tuple_str(sizes));
  }

  FinitePoset antichain =
      FinitePoset::create(2, [](std::size_t x, std::size_t y) { return x == y; });
  require(dedekind_macneille(antichain).size() == 4, "DM(2-antichain) must have 4 elements");

  std::mt19937 rng(1789);
  std::uniform_int_distribution<std::size_t> size_dist(1, 8);
  for (int trial = 0; trial < 50; ++trial) {
    FinitePoset p = oracle::random_poset(rng, size_dist(rng));
    DmCompletion dm1 = dedekind_macneille(p);
    DmCompletion dm2 = dedekind_macneille(dm1.lattice());
    require(dm2.size() == dm1.size(), "DM not idempotent (size changed)");
    std::vector<bool> hit(dm2.size(), false);
    for (std::size_t x = 0; x < dm1.size(); ++x) {
      hit[dm2.embedding[x]] = true;
      for (std::size_t y = 0; y < dm1.size(); ++y)
        require(dm1.leq(x, y) == dm2.leq(dm2.embedding[x], dm2.embedding[y]),
                "DM not idempotent (order changed)");
    }
    for (bool h : hit) require(h, "DM not idempotent (embedding not onto)");
  }
}

void criterion_signatures() {
  SpectralSignature b = builtin_example_convergent();
  require(sig_mac_criterion(b).holds, "builtin example must satisfy the MacNeille criterion");

  SpectralSignature hat = sig_profinite(b);
  require(hat.infinite_rank_count == Card::finite(0), "completion kept an infinite-rank ideal");
  require(hat.ranks.family.has_value() && *hat.ranks.family == RankFamily::all_from(2),
          "completion ranks must be {n+1 : n ≥ 1}");
  require(hat.ranks.explicit_part.empty(), "completion ranks carry stray explicit entries");

  SpectralSignature simple;
  simple.infinite_rank_count = Card::countable();
  require(sig_profinite(simple).trivial(), "infinite simple algebra must complete trivially");

  // The four decision instances.
  SpectralSignature bounded;
  bounded.ranks.explicit_part = {{2, Card::finite(1)}, {3, Card::finite(1)}, {4, Card::finite(1)}};
  require(divisibility_decision(bounded).verdict == CompletionVerdict::YesBounded,
          "bounded rank set must give YES_BOUNDED");

  SpectralSignature arith;
  arith.ranks.family = RankFamily::arithmetic(3, 2);
  CompletionDecision da = divisibility_decision(arith);
  require(da.verdict == CompletionVerdict::YesDivisibility && da.n0 == 3,
          "arithmetic(3,2) must give YES_DIVISIBILITY with n0=3");

  SpectralSignature all2;
  all2.ranks.family = RankFamily::all_from(2);
  CompletionDecision d2 = divisibility_decision(all2);
  require(d2.verdict == CompletionVerdict::YesDivisibility && d2.n0 == 2,
          "all_ranks_from(2) must give YES_DIVISIBILITY with n0=2");

  SpectralSignature a410;
  a410.ranks.family = RankFamily::arithmetic(4, 10);
  require(divisibility_decision(a410).verdict == CompletionVerdict::Unknown,
          "arithmetic(4,10) must give UNKNOWN");
}

void criterion_preservation() {
  const auto multisets = corpus::distinct_size_multisets();
  std::vector<AlgebraPtr> algebras;
  for (const auto& sizes : multisets) algebras.push_back(make_product(sizes));

  int pairs = 0;
  for (std::size_t i = 0; i < algebras.size(); ++i)
    for (std::size_t j = i; j < algebras.size(); ++j) {
      if (algebras[i]->size() * algebras[j]->size() > 500) continue;
      ProductPreservation p = check_product_preservation(algebras[i], algebras[j]);
      require(!p.witness.check().has_value(),
              "product preservation witness failed on " + tuple_str(multisets[i]) + "×" +
                  tuple_str(multisets[j]));
      ++pairs;
    }
  require(pairs > 0, "no pairs under the combined-carrier bound");

  int regular_count = 0;
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    RegularityReport reg = is_regular(algebras[i]);
    require(reg.regular, "corpus algebra " + tuple_str(multisets[i]) + " reported non-regular");
    CenterPreservation cp = check_boolean_center_preservation(algebras[i]);
    require(!cp.witness.check().has_value(),
            "center preservation witness failed on " + tuple_str(multisets[i]));
    ++regular_count;
  }
  require(regular_count == static_cast<int>(algebras.size()),
          "regularity did not hold across the corpus");
}

void criterion_commutation() {
  for (const auto& sizes : corpus::ordered_size_tuples()) {
    AlgebraPtr a = make_product(sizes);
    SpectralSignature concrete = sig_of_finite_algebra(profinite_product(a).algebra);
    SpectralSignature symbolic = sig_profinite(sig_of_finite_algebra(a));
    require(concrete.same_description(symbolic),
            "concrete/symbolic completions differ on " + tuple_str(sizes));
  }
}

}  // namespace

int main() {
  std::printf("acceptance: corpus = products of chains, sizes 2..6, up to 3 factors\n");

  run_criterion(1, "main theorem witnesses across the corpus", criterion_main_theorem);
  run_criterion(2, "S(I) decomposition identities and monotonicity", criterion_s_decomposition);
  run_criterion(3, "Boolean completions are power sets; criterion reduces to counts",
                criterion_boolean);
  run_criterion(4, "axiom validator agrees with the brute-force oracle on mutations",
                criterion_validator_sensitivity);
  run_criterion(5, "element orders match stepwise partial addition and the closed form",
                criterion_element_order);
  run_criterion(6, "MacNeille completions fix finite algebras; DM is idempotent",
                criterion_macneille);
  run_criterion(7, "signature layer reproduces the worked example and decisions",
                criterion_signatures);
  run_criterion(8, "completions preserve products and Boolean centers", criterion_preservation);
  run_criterion(9, "concrete and symbolic completions commute", criterion_commutation);

  if (g_failures == 0) {
    std::printf("acceptance: all 9 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return 1;
}
