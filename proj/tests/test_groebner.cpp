#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "ginwb/enumeration.hpp"
#include "ginwb/fixtures.hpp"
#include "ginwb/groebner.hpp"
#include "ginwb/syzygy.hpp"

using namespace ginwb;

TEST_CASE("normal form basics") {
  Ring R = Ring::grevlex({"x0", "x1", "x2"});
  Poly f = parse_poly("x0^2*x1 + 3*x1*x2 - 5", R);
  CHECK(normal_form(f, {f}, R).zero());
  Poly g = parse_poly("x0*x2 - x1^2", R);
  Poly h = parse_poly("x1^3 + x2", R);
  // linearity
  auto lhs = normal_form(add(f, h, R), {g}, R);
  auto rhs = add(normal_form(f, {g}, R), normal_form(h, {g}, R), R);
  CHECK(poly_str(lhs, R) == poly_str(rhs, R));
}

TEST_CASE("weighted homogeneity detection") {
  Ring R = elimination_ring(11, 32003);
  CHECK(parse_poly("x0 - t^11", R).homogeneous(R));
  CHECK_FALSE(parse_poly("x0 - t^10", R).homogeneous(R));
}

TEST_CASE("division in a substitution ring reproduces evaluation") {
  // with the x-block eliminated first, the remainder of x^2 modulo (x - t^2)
  // is the substituted form t^4
  Ring R;
  R.names = {"x", "t", "u"};
  R.weights = {2, 1, 1};
  R.order = TermOrderKind::BlockElim;
  R.elim_block = 1;
  Poly rel = parse_poly("x - t^2", R);
  Poly f = parse_poly("x^2", R);
  CHECK(poly_str(normal_form(f, {rel}, R), R) == "t^4");
}

TEST_CASE("reduced basis of simple ideals") {
  Ring R = Ring::grevlex({"x0", "x1", "x2"});
  auto single = groebner_basis({parse_poly("x0*x1^2", R)}, R);
  REQUIRE(single.size() == 1);
  CHECK(poly_str(single[0], R) == "x0*x1^2");
  auto principal = groebner_basis({parse_poly("7*x0^2 - 7*x1*x2", R)}, R);
  REQUIRE(principal.size() == 1);
  CHECK(poly_str(principal[0], R) == "x0^2 - x1*x2");  // monic
}

TEST_CASE("buchberger closure: S-polynomials reduce to zero") {
  Ring R = Ring::grevlex({"x0", "x1", "x2"});
  std::vector<Poly> gens = {parse_poly("x0^2 - x1*x2", R), parse_poly("x0*x1 - x2^2", R),
                            parse_poly("x1^3 - x0*x2^2 + x2", R)};
  auto G = groebner_basis(gens, R);
  for (size_t i = 0; i < G.size(); ++i)
    for (size_t j = i + 1; j < G.size(); ++j) {
      Monomial L = lcm(G[i].lead().m, G[j].lead().m);
      Poly s = axpy_sub(mul_term(G[i], L / G[i].lead().m, 1, R), 1, L / G[j].lead().m,
                        G[j], R);
      CHECK(normal_form(s, G, R).zero());
    }
  // generators reduce to zero against the basis
  for (const auto& f : gens) CHECK(normal_form(f, G, R).zero());
  // reduced: no lead term divides another, tails fully reduced, monic
  for (size_t i = 0; i < G.size(); ++i) {
    CHECK(G[i].lead().c == 1);
    for (size_t j = 0; j < G.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : G[i].t) CHECK_FALSE(G[j].lead().m.divides(t.m));
    }
  }
}

TEST_CASE("reduced basis is input-order independent") {
  Ring R = Ring::grevlex({"x0", "x1", "x2"});
  std::vector<Poly> gens = {parse_poly("x0^2 - x1*x2", R), parse_poly("x0*x1 - x2^2", R),
                            parse_poly("x1^2 - x0*x2", R)};
  auto G1 = groebner_basis(gens, R);
  std::reverse(gens.begin(), gens.end());
  auto G2 = groebner_basis(gens, R);
  REQUIRE(G1.size() == G2.size());
  for (size_t k = 0; k < G1.size(); ++k)
    CHECK(poly_str(G1[k], R) == poly_str(G2[k], R));
}

TEST_CASE("conic implicitization") {
  PrimeField F(32003);
  std::vector<Form2> gs = {parse_form("t^2", 2, F), parse_form("t*u", 2, F),
                           parse_form("u^2", 2, F), Form2(), Form2()};
  auto impl = implicitize(gs, 2, 32003, 4);
  bool has_conic = false;
  for (const auto& f : impl.kernel)
    if (poly_str(f, impl.ring) == "x1^2 - x0*x2") has_conic = true;
  CHECK(has_conic);
  auto [d, g] = image_degree_genus(impl);
  CHECK(d == 2);
  CHECK(g == 0);
}

TEST_CASE("base points are detected") {
  PrimeField F(32003);
  std::vector<Form2> gs = {parse_form("t^3", 3, F), parse_form("t^2*u", 3, F),
                           parse_form("t*u^2", 3, F), parse_form("t^3", 3, F),
                           parse_form("t^2*u", 3, F)};
  CHECK(common_factor_degree(gs, F) == 1);
  CHECK_THROWS_AS(implicitize(gs, 3, 32003, 3), ginwb_error);
}

TEST_CASE("degree-10 fixture: kernel generated through degree four") {
  PrimeField F(32003);
  auto gs = fixtures::fixture_forms("aux1", F);
  auto impl = implicitize(gs, 10, 32003, 6);
  CHECK(impl.initial_ideal.max_gen_degree() <= 4);
  auto [d, g] = image_degree_genus(impl);
  CHECK(d == 10);
  CHECK(g == 0);
  // dimension cross-check against the substitution-matrix rank
  auto P = graded_profile(impl.initial_ideal, 6);
  CHECK(P.inside[3] == 4);
  CHECK(P.inside[4] == 29);
  CHECK(kernel_dimension(gs, 10, 3, 32003) == 4);
  CHECK(kernel_dimension(gs, 10, 4, 32003) == 29);
}

TEST_CASE("first degree-11 fixture: kernel and syzygies") {
  PrimeField F(32003);
  auto gs = fixtures::fixture_forms("aux2", F);
  auto impl = implicitize(gs, 11, 32003, 6);
  CHECK(impl.initial_ideal == fixtures::aux2_initial_ideal());
  auto [d, g] = image_degree_genus(impl);
  CHECK(d == 11);
  CHECK(g == 0);
  auto sp = syzygy_splitting_type(gs, 11);
  CHECK(sp.record.syzygy_degrees == std::vector<int>{13, 13, 14, 15});
  CHECK(sp.splitting == std::vector<int>{4, 3, 2, 2});
  CHECK(betti_of(sp.record).str() ==
        "total: 1 5 4\n0: 1 . .\n1: . . .\n2: . . .\n3: . . .\n4: . . .\n5: . . .\n"
        "6: . . .\n7: . . .\n8: . . .\n9: . . .\n10: . 5 .\n11: . . 2\n12: . . 1\n"
        "13: . . 1\n");
}

TEST_CASE("second degree-11 fixture: non-Borel initial ideal, genus one") {
  PrimeField F(32003);
  auto gs = fixtures::fixture_forms("aux3", F);
  auto impl = implicitize(gs, 11, 32003, 7);
  CHECK(impl.initial_ideal == fixtures::aux3_initial_ideal());
  CHECK(impl.initial_ideal.generators().size() == 21);
  CHECK(impl.initial_ideal.max_gen_degree() <= 6);
  CHECK_FALSE(is_borel_fixed(impl.initial_ideal));
  // the published rendition differs in exactly one generator exponent
  CHECK_FALSE(impl.initial_ideal == fixtures::aux3_initial_ideal_printed());
  auto [d, g] = image_degree_genus(impl);
  CHECK(d == 11);
  CHECK(g == 1);
  auto sp = syzygy_splitting_type(gs, 11);
  CHECK(sp.record.syzygy_degrees == std::vector<int>{12, 13, 15, 15});
  CHECK(sp.splitting == std::vector<int>{4, 4, 2, 1});
  CHECK(betti_of(sp.record).str() ==
        "total: 1 5 4\n0: 1 . .\n1: . . .\n2: . . .\n3: . . .\n4: . . .\n5: . . .\n"
        "6: . . .\n7: . . .\n8: . . .\n9: . . .\n10: . 5 1\n11: . . 1\n12: . . .\n"
        "13: . . 2\n");
}

TEST_CASE("fixture splittings land in the expected strata") {
  PrimeField F(32003);
  auto s2 = syzygy_splitting_type(fixtures::fixture_forms("aux2", F), 11);
  CHECK(rtb_codimension(SplittingType{s2.splitting}) == 2);
  auto s3 = syzygy_splitting_type(fixtures::fixture_forms("aux3", F), 11);
  CHECK(rtb_codimension(SplittingType{s3.splitting}) == 6);
}

TEST_CASE("consecutive-monomial parameterization has balanced syzygies") {
  PrimeField F(32003);
  std::vector<Form2> gs;
  for (int j = 0; j <= 4; ++j) {
    Form2 f = Form2::of_degree(4);
    f.c[j] = 1;
    gs.push_back(f);
  }
  auto sp = syzygy_splitting_type(gs, 4);
  CHECK(sp.splitting == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("syzygy constraint systems") {
  PrimeField F(32003);
  for (const std::string name : {"aux2", "aux3"}) {
    auto rels = fixtures::fixture_relations(name, F);
    auto sol = solve_syzygy_constraints(rels, 11);
    CHECK(sol.rank == 59);
    CHECK(sol.nullity == 1);
    REQUIRE(sol.representatives.size() == 1);
    CHECK(proportional(sol.representatives[0], fixtures::fixture_forms(name, F), F));
  }
  auto empty = solve_syzygy_constraints({}, 11);
  CHECK(empty.rank == 0);
  CHECK(empty.nullity == 60);
}

TEST_CASE("parameterization files round-trip") {
  PrimeField F(32003);
  std::string path = "ginwb_param_test.tmp";
  {
    std::ofstream out(path);
    out << "# comment line\n";
    for (const auto& l : fixtures::aux2_lines()) out << l << "\n";
  }
  auto [forms, d] = fixtures::load_param_file(path, F);
  std::remove(path.c_str());
  CHECK(d == 11);
  REQUIRE(forms.size() == 5);
  auto ref = fixtures::fixture_forms("aux2", F);
  for (int i = 0; i < 5; ++i) CHECK(forms[i] == ref[i]);
}

TEST_CASE("second prime guards against unlucky characteristic") {
  PrimeField F(31991);
  auto gs = fixtures::fixture_forms("aux2", F);
  auto impl = implicitize(gs, 11, 31991, 5);
  CHECK(impl.initial_ideal.max_gen_degree() <= 4);
  auto sp = syzygy_splitting_type(gs, 11, 31991);
  CHECK(sp.splitting == std::vector<int>{4, 3, 2, 2});
  auto gs3 = fixtures::fixture_forms("aux3", F);
  auto sp3 = syzygy_splitting_type(gs3, 11, 31991);
  CHECK(sp3.splitting == std::vector<int>{4, 4, 2, 1});
  auto sol = solve_syzygy_constraints(fixtures::fixture_relations("aux3", F), 11, 31991);
  CHECK(sol.rank == 59);
  CHECK(sol.nullity == 1);
}

TEST_CASE("syzygy computation rejects base points") {
  PrimeField F(32003);
  std::vector<Form2> gs = {parse_form("t^3", 3, F), parse_form("t^2*u", 3, F),
                           parse_form("t*u^2", 3, F), parse_form("t^3+t^2*u", 3, F),
                           parse_form("t*u^2+t^3", 3, F)};
  CHECK_THROWS_AS(syzygy_degrees(gs, 3, F), ginwb_error);
}

TEST_CASE("relation systems with empty relations are rejected") {
  CHECK_THROWS_AS(solve_syzygy_constraints({SyzygyRelation{{Form2(), Form2(), Form2(),
                                                            Form2(), Form2()}}},
                                           11),
                  ginwb_error);
}
