#include <catch2/catch_amalgamated.hpp>

#include "ginwb/enumeration.hpp"

using namespace ginwb;

static std::multiset<long long> bound_multiset(const std::vector<EnumerationRecord>& recs) {
  std::multiset<long long> m;
  for (const auto& r : recs) m.insert(r.bound);
  return m;
}

TEST_CASE("hyperplane-gin enumeration under the printed constraint set") {
  ConstraintSet C;
  C.uniform_position_max_degree = 2;  // linear + quadric constraints only
  auto recs = enumerate_hyperplane_gins_p4(11, C);
  CHECK(recs.size() == 11);
  for (const auto& r : recs) {
    CHECK(r.colength == 11);
    CHECK(r.regularity <= 5);
    CHECK(r.bound == r.cone_genus);
  }
  // eight verbatim matches; entries 2 and 7 of the reference table are
  // defective as printed (colengths 12 and 10)
  std::set<int> matched;
  for (const auto& r : recs)
    if (r.matches_reference) matched.insert(r.matches_reference);
  CHECK(matched == std::set<int>{1, 3, 4, 5, 6, 8, 9, 10});
  auto diffs = reference_diff(recs);
  REQUIRE(diffs.size() == 2);
  CHECK(diffs[0].first == 2);
  CHECK(diffs[1].first == 7);

  // the corrected one-quadric entry
  auto corrected = parse_ideal_literal("Borel(x2^4, x1^2*x2, x0*x2^2, x0^2)", 3);
  bool found = false;
  for (const auto& r : recs)
    if (r.ideal == corrected) {
      found = true;
      CHECK(r.cone_genus == 9);
      CHECK(r.regularity == 4);
    }
  CHECK(found);

  CHECK(bound_multiset(recs) ==
        std::multiset<long long>{8, 9, 10, 10, 10, 11, 11, 12, 12, 13, 13});
}

TEST_CASE("uniform-position bound prunes the two genus-13 entries") {
  ConstraintSet C;  // full bound h(t) >= min(11, 3t+1)
  auto recs = enumerate_hyperplane_gins_p4(11, C);
  CHECK(recs.size() == 9);
  CHECK(bound_multiset(recs) == std::multiset<long long>{8, 9, 10, 10, 10, 11, 11, 12, 12});
  for (const auto& r : recs)
    for (int t = 1; t <= 4; ++t)
      CHECK(point_hilbert(r.ideal, t) >= std::min<long long>(11, 3 * t + 1));
}

TEST_CASE("specific records and bounds") {
  ConstraintSet C;
  C.uniform_position_max_degree = 2;
  auto recs = enumerate_hyperplane_gins_p4(11, C);
  auto find = [&](const std::string& lit) -> const EnumerationRecord& {
    auto I = parse_ideal_literal(lit, 3);
    for (const auto& r : recs)
      if (r.ideal == I) return r;
    FAIL("record not found: " + lit);
    return recs.front();
  };
  CHECK(find("Borel(x2^4, x1*x2^2)").bound == 8);
  CHECK(find("Borel(x2^4, x0*x2)").bound == 11);
  CHECK(find("Borel(x2^5, x1*x2^2, x0^2)").bound == 10);
  // the genus 12/13 assignment comes out opposite to the printed bounds
  auto& r9 = find("Borel(x2^5, x1*x2^3, x1^3, x0*x2)");
  CHECK(r9.bound == 12);
  REQUIRE_FALSE(r9.notes.empty());
  auto& r10 = find("Borel(x2^5, x1^2*x2, x0*x2)");
  CHECK(r10.bound == 13);
  REQUIRE_FALSE(r10.notes.empty());
}

TEST_CASE("gplusi bound formula") {
  auto I = parse_ideal_literal("Borel(x2^5, x1*x2^2, x0^2)", 3);
  CHECK(gplusi_bound(I, colength(I)) == 10);
}

TEST_CASE("plane staircase enumeration") {
  auto sts = enumerate_hyperplane_gins_p3(11);
  REQUIRE(sts.size() == 2);
  CHECK(sts[0].staircase == StaircaseP3{{5, 3, 2, 1, 0}});
  CHECK(sts[0].cone_genus == 14);
  CHECK(sts[1].staircase == StaircaseP3{{5, 4, 2, 0}});
  CHECK(sts[1].cone_genus == 15);
  // tightening the regularity bound to 5 keeps both (each has regularity 5)
  auto tight = enumerate_hyperplane_gins_p3(11, 5);
  CHECK(tight.size() == 2);
}

TEST_CASE("curve-gin search from the no-quadric entry") {
  auto hyp = parse_ideal_literal("Borel(x2^4, x1*x2^2)", 3);
  ConstraintSet C;
  C.curve_max_regularity = 7;
  auto S = enumerate_curve_gins(hyp, 8, C, 2);
  CHECK(S.cone_genus == 8);
  CHECK(S.records.size() == 458);

  long long max_i = 0, max_gi = 0;
  for (const auto& r : S.records) {
    max_i = std::max(max_i, r.i);
    max_gi = std::max(max_gi, r.g + r.i);
    CHECK(r.g + r.i <= S.cone_genus);
    CHECK(is_borel_fixed(r.ideal));
    CHECK(is_saturated(r.ideal));
  }
  CHECK(max_i == 3);
  CHECK(max_gi == 8);  // attained by the cone itself

  auto disp = parse_ideal_literal("Borel(x2^4*x3^3, x2^5*x3, x1*x2^2*x3, x0*x2^2)", 5);
  bool found = false;
  for (const auto& r : S.records)
    if (r.ideal == disp) {
      found = true;
      CHECK(r.g == 1);
      CHECK(r.i == 1);  // so g + i = 2
      CHECK(r.rewrites == 7);
    }
  CHECK(found);

  // the zero-rewrite record is the cone
  bool cone_found = false;
  for (const auto& r : S.records)
    if (r.rewrites == 0) {
      cone_found = true;
      CHECK(r.g == 8);
      CHECK(r.i == 0);
    }
  CHECK(cone_found);
}

TEST_CASE("tree-count i agrees with the cohomology of the twisted ideal sheaf") {
  // h1(I_C(5)) = h0(I_C(5)) - chi(I_C(5)) with chi = binom(9,4) - (55 + 1 - g)
  auto hyp = parse_ideal_literal("Borel(x2^4, x1*x2^2)", 3);
  ConstraintSet C;
  C.curve_max_regularity = 7;
  auto S = enumerate_curve_gins(hyp, 8, C);
  size_t step = S.records.size() / 40 + 1;
  for (size_t k = 0; k < S.records.size(); k += step) {
    const auto& r = S.records[k];
    auto P = graded_profile(r.ideal, 7);
    long long h0 = P.inside[5];
    long long chi = binom(9, 4) - (55 + 1 - r.g);
    CHECK(h0 - chi == r.i);
    auto [d, g] = one_dim_degree_genus(r.ideal);
    CHECK(d == 11);
    CHECK(g == r.g);
  }
}

TEST_CASE("curve-gin search results are thread-count independent") {
  auto hyp = parse_ideal_literal("Borel(x2^4, x1^2*x2, x0*x2^2, x0^2)", 3);
  ConstraintSet C;
  C.curve_max_regularity = 7;
  auto S1 = enumerate_curve_gins(hyp, 6, C, 1);
  auto S3 = enumerate_curve_gins(hyp, 6, C, 3);
  REQUIRE(S1.records.size() == S3.records.size());
  for (size_t k = 0; k < S1.records.size(); ++k) {
    CHECK(S1.records[k].ideal == S3.records[k].ideal);
    CHECK(S1.records[k].rewrites == S3.records[k].rewrites);
  }
}

TEST_CASE("budget above the cone genus is rejected") {
  auto hyp = parse_ideal_literal("Borel(x2^4, x1*x2^2)", 3);
  ConstraintSet C;
  CHECK_THROWS_AS(enumerate_curve_gins(hyp, 9, C), ginwb_error);
}

TEST_CASE("key inference") {
  auto hyp = parse_ideal_literal("Borel(x2^4, x1*x2^2)", 3);
  ConstraintSet C;
  C.curve_max_regularity = 7;
  auto S = enumerate_curve_gins(hyp, 8, C);
  auto forb = parse_ideal_literal("Borel(x2^4*x3^3, x1*x2^2)", 5);
  bool found = false;
  for (const auto& r : S.records)
    if (r.ideal == forb) {
      found = true;
      CHECK(r.i == 3);
      CHECK_FALSE(r.key_inference_ok);
      auto H = S.history_of(r.ideal, cone_extend(hyp, 2));
      CHECK_FALSE(key_inference_admissible(H));
    }
  CHECK(found);

  RewriteHistory empty;
  empty.initial = cone_extend(hyp, 2);
  empty.final = empty.initial;
  CHECK(key_inference_admissible(empty));

  // with the filter and the cubic window the maximum drops to 2 (the
  // recorded prose claims 1 for this entry; the overall estimate of 2 is
  // what the search reproduces)
  CHECK(max_i_given(hyp, 7, 5, 7, true) == 2);
}

TEST_CASE("displayed case ideals have the recorded invariants") {
  auto gi = [](const std::string& lit) {
    auto I = parse_ideal_literal(lit, 5);
    auto [d, g] = one_dim_degree_genus(I);
    return std::tuple{d, g, curve_i(I)};
  };
  // one-quadric branch, after eight rewrites
  auto [d1, g1, i1] = gi("Borel(x0^2*x3, x0*x2^2, x1^2*x2*x3, x1*x2^3, x2^6, x2^4*x3^3)");
  CHECK(d1 == 11);
  CHECK(g1 == 1);
  CHECK(i1 == 2);
  // two-quadric branch (the recorded genus there is 1; the closure computes 0)
  auto [d2, g2, i2] = gi("Borel(x0*x1*x3, x0*x2^3, x1^2*x2*x3, x1*x2^3*x3, x2^4*x3^3, x2^6)");
  CHECK(d2 == 11);
  CHECK(g2 == 0);
  CHECK(i2 == 2);
  // the four exceptional no-quadric ideals: three have g+i = 2 as recorded,
  // the fourth is defective as printed (its closure has arithmetic genus -2)
  auto [d3, g3, i3] = gi("Borel(x2^4*x3^3, x2^5*x3, x1*x2^2*x3, x0*x2^2)");
  CHECK(std::tuple{d3, g3 + i3} == std::tuple{11LL, 2LL});
  auto [d4, g4, i4] =
      gi("Borel(x2^4*x3^3, x2^5*x3, x1*x2^2*x3, x1^3, x0*x2^2*x3, x0*x1*x2)");
  CHECK(std::tuple{d4, g4 + i4} == std::tuple{11LL, 2LL});
  auto [d5, g5, i5] = gi("Borel(x2^4*x3^3, x2^6, x1*x2^2*x3, x0*x2^2)");
  CHECK(std::tuple{d5, g5 + i5} == std::tuple{11LL, 2LL});
  auto [d6, g6, i6] = gi("Borel(x2^4*x3^3, x2^6, x1*x2^2*x3, x1^3, x0*x2^2*x3)");
  CHECK(g6 == -2);
  (void)d6;
  (void)i6;
}

TEST_CASE("one-quadric search reaches genus zero and the displayed ideal") {
  auto hyp = parse_ideal_literal("Borel(x2^4, x1^2*x2, x0*x2^2, x0^2)", 3);
  ConstraintSet C;
  C.curve_max_regularity = 8;
  auto S = enumerate_curve_gins(hyp, 9, C, 2);
  CHECK(S.cone_genus == 9);
  bool genus_zero = false, displayed = false;
  auto disp =
      parse_ideal_literal("Borel(x0^2*x3, x0*x2^2, x1^2*x2*x3, x1*x2^3, x2^6, x2^4*x3^3)", 5);
  for (const auto& r : S.records) {
    if (r.g == 0) genus_zero = true;
    if (r.ideal == disp) {
      displayed = true;
      CHECK(r.g == 1);
      CHECK(r.i == 2);
    }
  }
  CHECK(genus_zero);
  CHECK(displayed);
}

TEST_CASE("legality pruning loses no Borel-fixed states", "[completeness]") {
  // unrestricted rewrites reach non-Borel intermediates; every Borel-fixed
  // saturated state they reach must also be reached through legal steps only
  auto hyp = parse_ideal_literal("Borel(x2^4, x1*x2^2)", 3);
  ConstraintSet C;
  C.curve_max_regularity = 7;
  int budget = 6;
  auto S = enumerate_curve_gins(hyp, budget, C);
  std::set<MonomialIdeal> legal;
  for (const auto& r : S.records) legal.insert(r.ideal);

  std::set<MonomialIdeal> seen;
  MonomialIdeal start = cone_extend(hyp, 2);
  seen.insert(start);
  std::vector<MonomialIdeal> frontier = {start};
  for (int lev = 0; lev < budget; ++lev) {
    std::vector<MonomialIdeal> nxt;
    for (const auto& I : frontier) {
      for (const auto& leaf : I.generators()) {
        if (leaf.deg() + 1 > 7) continue;
        std::vector<Monomial> gens;
        for (const auto& g : I.generators())
          if (g != leaf) gens.push_back(g);
        for (const auto& c : rule_children(leaf, 4)) gens.push_back(c);
        MonomialIdeal J(5, gens);
        if (J.max_gen_degree() > 7) continue;
        if (seen.insert(J).second) nxt.push_back(J);
      }
    }
    frontier = std::move(nxt);
  }
  long long borel_states = 0;
  for (const auto& J : seen)
    if (is_borel_fixed(J)) {
      ++borel_states;
      CHECK(legal.count(J) == 1);
    }
  CHECK(borel_states == static_cast<long long>(legal.size()));
}

TEST_CASE("curve rules in the plane-spanning ambient") {
  // curves spanning a hyperplane live in four variables with a three-letter
  // alphabet; a single rewrite drops the cone genus to 13 and leaves the
  // ideal 6-regular with no rewrites above degree 5
  StaircaseP3 st{{5, 3, 2, 1, 0}};
  MonomialIdeal cone = cone_extend(st.ideal(), 2);  // x0..x3
  auto [d0, g0] = one_dim_degree_genus(cone);
  CHECK(d0 == 11);
  CHECK(g0 == 14);
  int legal = 0;
  for (const auto& leaf : cone.generators()) {
    auto J = try_apply_rule(cone, leaf, rule_index_for(leaf));
    if (!J) continue;
    ++legal;
    CHECK(J->max_gen_degree() <= 6);
    auto [d1, g1] = one_dim_degree_genus(*J);
    CHECK(d1 == 11);
    CHECK(g1 == 13);
    CHECK(g1 + curve_i(*J) <= 13);
  }
  CHECK(legal >= 1);
}

TEST_CASE("splitting strata for degree 11 rank 4") {
  auto strata = rtb_strata(11, 4);
  auto codim_of = [&](std::initializer_list<int> a) {
    SplittingType s{std::vector<int>(a)};
    for (auto& [t, c] : strata)
      if (t == s) return c;
    FAIL("stratum not found");
    return -1LL;
  };
  CHECK(codim_of({3, 3, 3, 2}) == 0);
  CHECK(codim_of({4, 3, 2, 2}) == 2);
  CHECK(codim_of({4, 4, 2, 1}) == 6);
  CHECK(codim_of({4, 3, 3, 1}) == 4);
  // (4,3,2,2) is the unique codimension-2 stratum
  int at2 = 0;
  for (auto& [t, c] : strata)
    if (c == 2) ++at2;
  CHECK(at2 == 1);
  // the minimum over the remaining strata with positive parts is 4, not 6
  long long min_other = 1 << 20;
  for (auto& [t, c] : rtb_strata(11, 4, 1))
    if (!(t == SplittingType{{3, 3, 3, 2}}) && !(t == SplittingType{{4, 3, 2, 2}}))
      min_other = std::min(min_other, c);
  CHECK(min_other == 4);
}

TEST_CASE("nonproblematic test") {
  CHECK(nonproblematic(0, 2, 3));
  CHECK(nonproblematic(5, 3, 0));  // 8 < min(10, 12)
  CHECK_FALSE(nonproblematic(0, 0, 0));
  CHECK_FALSE(nonproblematic(1, 2, 3));  // 3 > 3 fails, 3 < 2 fails
}

TEST_CASE("degree-six rewrite cap constrains the search") {
  auto hyp = parse_ideal_literal("Borel(x2^4, x1*x2^2)", 3);
  ConstraintSet C;
  C.curve_max_regularity = 7;
  C.max_deg6_rewrites = 1;
  auto S = enumerate_curve_gins(hyp, 8, C);
  for (const auto& r : S.records) CHECK(r.i <= 1);
  long long max_i = 0;
  for (const auto& r : S.records) max_i = std::max(max_i, r.i);
  CHECK(max_i == 1);
}
