#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mvalg/completion.hpp"
#include "mvalg/signature.hpp"
#include "support/corpus.hpp"

using namespace mvalg;

namespace {

SpectralSignature sig_ranks(std::map<int, Card> ranks) {
  SpectralSignature s;
  s.ranks.explicit_part = std::move(ranks);
  return s;
}

}  // namespace

TEST_CASE("signature of a finite algebra: ranks and atom orders") {
  SpectralSignature s = sig_of_finite_algebra(make_product({2, 3}));
  CHECK(s.ranks.explicit_part ==
        std::map<int, Card>{{2, Card::finite(1)}, {3, Card::finite(1)}});
  CHECK(s.infinite_rank_count == Card::finite(0));
  REQUIRE(s.atom_orders.has_value());
  CHECK(s.atom_orders->explicit_part ==
        std::map<int, Card>{{1, Card::finite(1)}, {2, Card::finite(1)}});
  CHECK(s.is_atomic);

  SpectralSignature triv = sig_of_finite_algebra(make_trivial());
  CHECK(triv.trivial());

  SpectralSignature cube = sig_of_finite_algebra(make_product({2, 2, 2}));
  CHECK(cube.ranks.explicit_part == std::map<int, Card>{{2, Card::finite(3)}});
}

TEST_CASE("sig_profinite: drops infinite ranks, keeps the finite spectrum") {
  // An infinite simple algebra: one maximal ideal, infinite rank.
  SpectralSignature simple;
  simple.infinite_rank_count = Card::countable();
  SpectralSignature hat = sig_profinite(simple);
  CHECK(hat.trivial());

  SpectralSignature example = builtin_example_convergent();
  SpectralSignature ehat = sig_profinite(example);
  CHECK(ehat.infinite_rank_count == Card::finite(0));
  REQUIRE(ehat.ranks.family.has_value());
  CHECK(*ehat.ranks.family == RankFamily::all_from(2));

  SpectralSignature fin = sig_ranks({{2, Card::finite(1)}, {3, Card::finite(1)}});
  CHECK(sig_profinite(fin).ranks.equals(fin.ranks));
}

TEST_CASE("sig_profinite: recomputed atom orders are the shifted ranks") {
  SpectralSignature fin = sig_ranks({{2, Card::finite(2)}, {5, Card::finite(1)}});
  SpectralSignature hat = sig_profinite(fin);
  REQUIRE(hat.atom_orders.has_value());
  CHECK(hat.atom_orders->explicit_part ==
        std::map<int, Card>{{1, Card::finite(2)}, {4, Card::finite(1)}});
  CHECK(hat.is_atomic);
}

TEST_CASE("sig_macneille: atom orders shift up to ranks") {
  // One atom of every order (symbolic): ranks n+1 for every n.
  SpectralSignature s;
  s.is_atomic = true;
  SymbolicCounts ao;
  ao.family = RankFamily::all_from(1);
  s.atom_orders = ao;
  SpectralSignature mac = sig_macneille(s);
  REQUIRE(mac.ranks.family.has_value());
  CHECK(*mac.ranks.family == RankFamily::all_from(2));

  // Boolean with k atoms: ranks {2:k}.
  SpectralSignature b;
  b.is_atomic = true;
  SymbolicCounts bo;
  bo.explicit_part.emplace(1, Card::finite(7));
  b.atom_orders = bo;
  CHECK(sig_macneille(b).ranks.explicit_part == std::map<int, Card>{{2, Card::finite(7)}});

  SpectralSignature one;
  one.is_atomic = true;
  SymbolicCounts oo;
  oo.explicit_part.emplace(2, Card::finite(1));
  one.atom_orders = oo;
  CHECK(sig_macneille(one).ranks.explicit_part == std::map<int, Card>{{3, Card::finite(1)}});

  SpectralSignature missing;
  CHECK_THROWS_AS(sig_macneille(missing), PreconditionError);
}

TEST_CASE("sig_mac_criterion: the convergent example satisfies it") {
  CHECK(sig_mac_criterion(builtin_example_convergent()).holds);
}

TEST_CASE("sig_mac_criterion: countable atoms against finitely many ideals fail") {
  SpectralSignature s;
  s.is_atomic = true;
  s.ranks.explicit_part.emplace(2, Card::finite(5));
  SymbolicCounts ao;
  ao.explicit_part.emplace(1, Card::countable());
  s.atom_orders = ao;
  SigMacCriterion r = sig_mac_criterion(s);
  CHECK(!r.holds);
}

TEST_CASE("sig_mac_criterion: finite algebras satisfy it via their signatures") {
  CHECK(sig_mac_criterion(sig_of_finite_algebra(make_product({2, 3}))).holds);
  for (const auto& sizes : corpus::distinct_size_multisets(2))
    CHECK(sig_mac_criterion(sig_of_finite_algebra(make_product(sizes))).holds);
}

TEST_CASE("sig_mac_criterion agrees with the element-level criterion") {
  for (const auto& sizes : corpus::distinct_size_multisets(2)) {
    AlgebraPtr a = make_product(sizes);
    CHECK(sig_mac_criterion(sig_of_finite_algebra(a)).holds == check_mac_criterion(a).holds);
  }
  AlgebraPtr t = make_trivial();
  CHECK(sig_mac_criterion(sig_of_finite_algebra(t)).holds == check_mac_criterion(t).holds);
}

TEST_CASE("divisibility decision: the four reference instances") {
  // Bounded rank set.
  CompletionDecision bounded = divisibility_decision(
      sig_ranks({{2, Card::finite(1)}, {3, Card::finite(1)}, {4, Card::finite(1)}}));
  CHECK(bounded.verdict == CompletionVerdict::YesBounded);

  // Arithmetic ranks 3,5,7,...: n0 = 3 works since 2 divides every n-1.
  SpectralSignature arith;
  arith.ranks.family = RankFamily::arithmetic(3, 2);
  CompletionDecision da = divisibility_decision(arith);
  CHECK(da.verdict == CompletionVerdict::YesDivisibility);
  CHECK(da.n0 == 3);
  CHECK(da.exceptional_ranks.empty());

  // All ranks from 2: n0 = 2 works since 1 divides everything.
  SpectralSignature all2;
  all2.ranks.family = RankFamily::all_from(2);
  CompletionDecision d2 = divisibility_decision(all2);
  CHECK(d2.verdict == CompletionVerdict::YesDivisibility);
  CHECK(d2.n0 == 2);

  // Arithmetic (4, 10): the only candidate 4 needs 3 | 10.
  SpectralSignature a410;
  a410.ranks.family = RankFamily::arithmetic(4, 10);
  CHECK(divisibility_decision(a410).verdict == CompletionVerdict::Unknown);
}

TEST_CASE("divisibility decision: rank 2 anywhere settles the question") {
  SpectralSignature s;
  s.ranks.explicit_part.emplace(2, Card::countable());
  s.ranks.family = RankFamily::arithmetic(4, 10);
  CompletionDecision d = divisibility_decision(s);
  CHECK(d.verdict == CompletionVerdict::YesDivisibility);
  CHECK(d.n0 == 2);
  CHECK(d.exceptional_ranks.empty());

  // Bounded even with countable multiplicities.
  SpectralSignature b;
  b.ranks.explicit_part.emplace(2, Card::countable());
  CHECK(divisibility_decision(b).verdict == CompletionVerdict::YesBounded);
}

TEST_CASE("divisibility decision: exceptional explicit ranks are reported") {
  SpectralSignature s;
  s.ranks.explicit_part.emplace(4, Card::finite(1));  // 4-1=3 not divisible by 2
  s.ranks.family = RankFamily::arithmetic(3, 2);
  CompletionDecision d = divisibility_decision(s);
  CHECK(d.verdict == CompletionVerdict::YesDivisibility);
  CHECK(d.n0 == 3);
  CHECK(d.exceptional_ranks == std::vector<int>{4});
}

TEST_CASE("divisibility decision: literal reading differs on odd progressions") {
  SpectralSignature arith;
  arith.ranks.family = RankFamily::arithmetic(3, 2);
  CHECK(divisibility_decision(arith, DivisibilityReading::ProofConsistent).verdict ==
        CompletionVerdict::YesDivisibility);
  // Literally, 2 must divide the odd ranks 3, 5, 7, ... and never does.
  CHECK(divisibility_decision(arith, DivisibilityReading::Literal).verdict ==
        CompletionVerdict::Unknown);

  // All-from-2 passes under both readings via n0 = 2.
  SpectralSignature all2;
  all2.ranks.family = RankFamily::all_from(2);
  CHECK(divisibility_decision(all2, DivisibilityReading::Literal).verdict ==
        CompletionVerdict::YesDivisibility);
}

TEST_CASE("builtin convergent example: the claims of the worked example") {
  SpectralSignature b = builtin_example_convergent();
  CHECK(b.infinite_rank_count == Card::finite(1));
  CHECK(b.is_atomic);

  SpectralSignature hat = sig_profinite(b);
  CHECK(hat.infinite_rank_count == Card::finite(0));
  REQUIRE(hat.ranks.family.has_value());
  CHECK(*hat.ranks.family == RankFamily::all_from(2));

  CHECK(sig_mac_criterion(b).holds);

  CompletionDecision d = divisibility_decision(b);
  CHECK(d.verdict == CompletionVerdict::YesDivisibility);
  CHECK(d.n0 == 2);
}

TEST_CASE("sig_equal: multiset comparison with cardinality classes") {
  CHECK(sig_equal(sig_ranks({{2, Card::finite(1)}, {3, Card::finite(1)}}),
                  sig_ranks({{3, Card::finite(1)}, {2, Card::finite(1)}})));
  CHECK(!sig_equal(sig_ranks({{2, Card::countable()}}), sig_ranks({{2, Card::finite(5)}})));

  SpectralSignature f1, f2;
  f1.ranks.family = RankFamily::all_from(2);
  f2.ranks.family = RankFamily::arithmetic(2, 1);
  CHECK(sig_equal(f1, f2));

  // Same generated set split differently between family and explicit part.
  SpectralSignature g1, g2;
  g1.ranks.family = RankFamily::arithmetic(2, 1);
  g2.ranks.family = RankFamily::arithmetic(3, 1);
  g2.ranks.explicit_part.emplace(2, Card::finite(1));
  CHECK(sig_equal(g1, g2));

  // Different residues of the same step differ.
  SpectralSignature h1, h2;
  h1.ranks.family = RankFamily::arithmetic(3, 2);
  h2.ranks.family = RankFamily::arithmetic(4, 2);
  CHECK(!sig_equal(h1, h2));

  // Infinite-rank counts are part of the spectrum.
  SpectralSignature i1 = sig_ranks({{2, Card::finite(1)}});
  SpectralSignature i2 = sig_ranks({{2, Card::finite(1)}});
  i2.infinite_rank_count = Card::countable();
  CHECK(!sig_equal(i1, i2));
}

TEST_CASE("sig_profinite is idempotent") {
  for (const SpectralSignature& s :
       {builtin_example_convergent(), sig_ranks({{2, Card::finite(3)}}),
        sig_of_finite_algebra(make_product({4, 5}))}) {
    SpectralSignature once = sig_profinite(s);
    SpectralSignature twice = sig_profinite(once);
    CHECK(once.same_description(twice));
  }
}

TEST_CASE("concrete and symbolic completions commute on finite algebras") {
  for (const auto& sizes : corpus::distinct_size_multisets(2)) {
    AlgebraPtr a = make_product(sizes);
    SpectralSignature concrete = sig_of_finite_algebra(profinite_product(a).algebra);
    SpectralSignature symbolic = sig_profinite(sig_of_finite_algebra(a));
    CHECK(concrete.same_description(symbolic));
  }
}

TEST_CASE("divisibility verdicts hold on sampled family members") {
  std::vector<SpectralSignature> subjects;
  SpectralSignature s1;
  s1.ranks.family = RankFamily::arithmetic(3, 2);
  s1.ranks.explicit_part.emplace(6, Card::finite(2));
  subjects.push_back(s1);
  subjects.push_back(builtin_example_convergent());
  SpectralSignature s3;
  s3.ranks.family = RankFamily::arithmetic(5, 4);
  subjects.push_back(s3);

  for (const SpectralSignature& s : subjects) {
    CompletionDecision d = divisibility_decision(s);
    if (d.verdict != CompletionVerdict::YesDivisibility) continue;
    REQUIRE(d.n0.has_value());
    const int div = *d.n0 - 1;
    // Every family member must satisfy the division; only explicit ranks may
    // be exceptional, and those are listed.
    const RankFamily fam = *s.ranks.family;
    for (int k = 0; k < 50; ++k) {
      const int member = fam.first + k * fam.step;
      CHECK((member - 1) % div == 0);
    }
    for (const auto& [r, c] : s.ranks.explicit_part) {
      const bool listed =
          std::find(d.exceptional_ranks.begin(), d.exceptional_ranks.end(), r) !=
          d.exceptional_ranks.end();
      CHECK(listed == ((r - 1) % div != 0));
    }
  }
}

TEST_CASE("signature validation: malformed fields are rejected") {
  SpectralSignature bad_rank;
  bad_rank.ranks.explicit_part.emplace(1, Card::finite(1));
  CHECK_THROWS_AS(bad_rank.validate(), InvalidParameterError);

  SpectralSignature bad_family;
  bad_family.ranks.family = RankFamily::arithmetic(1, 2);
  CHECK_THROWS_AS(bad_family.validate(), InvalidParameterError);

  SpectralSignature bad_step;
  bad_step.ranks.family = RankFamily::arithmetic(3, 0);
  CHECK_THROWS_AS(bad_step.validate(), InvalidParameterError);

  SpectralSignature bad_order;
  SymbolicCounts ao;
  ao.explicit_part.emplace(0, Card::finite(1));
  bad_order.atom_orders = ao;
  CHECK_THROWS_AS(bad_order.validate(), InvalidParameterError);
}
