#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nchodge/builtin_rings.hpp"
#include "nchodge/chern.hpp"
#include "nchodge/errors.hpp"
#include "nchodge/json_io.hpp"

#include <random>

using namespace nchodge;

namespace {

std::mt19937 rng(20260815);

CohClass basis_of(const RingPtr& r, const std::string& label) {
  auto idx = r->index_of(label);
  REQUIRE(idx.has_value());
  return r->basis_class(*idx);
}

Rational random_rational() {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  return Rational(num(rng), den(rng));
}

// Random diagonal classes make a random virtual bundle.
BundleData random_bundle(const RingPtr& r) {
  std::uniform_int_distribution<int> rank(-3, 5);
  std::vector<CohClass> chern;
  for (int k = 1; k <= r->dimension(); ++k) {
    std::map<int, TauScalar> coeffs;
    for (int i : r->indices_in(k, k))
      if (std::uniform_int_distribution<int>(0, 2)(rng) == 0)
        coeffs[i] = TauScalar(random_rational());
    chern.push_back(CohClass(r, std::move(coeffs)));
  }
  return make_bundle(r, rank(rng), std::move(chern));
}

CohClass random_unital(const RingPtr& r) {
  auto cls = r->one();
  for (size_t i = 0; i < r->size(); ++i) {
    const auto& b = r->basis_element(static_cast<int>(i));
    if (b.p != b.q || b.p == 0) continue;
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0)
      cls += TauScalar(random_rational()) * r->basis_class(static_cast<int>(i));
  }
  return cls;
}

}  // namespace

TEST_CASE("todd classes of projective spaces") {
  auto p1 = builtin::projective_space(1);
  auto p2 = builtin::projective_space(2);
  auto p3 = builtin::projective_space(3);

  CHECK(todd_class(p1) == p1->one() + basis_of(p1, "h"));
  CHECK(todd_class(p2) ==
        p2->one() + TauScalar(Rational(3, 2)) * basis_of(p2, "h") +
            basis_of(p2, "h^2"));
  CHECK(todd_class(p3) ==
        p3->one() + TauScalar(2) * basis_of(p3, "h") +
            TauScalar(Rational(11, 6)) * basis_of(p3, "h^2") +
            basis_of(p3, "h^3"));

  // arithmetic genus of projective space
  for (int n = 1; n <= 4; ++n) {
    auto pn = builtin::projective_space(n);
    CHECK(integrate(todd_class(pn), IntegrationMode::algebraic) ==
          TauScalar(1));
  }
}

TEST_CASE("todd classes of the Calabi-Yau builtins") {
  auto e = builtin::elliptic_curve();
  CHECK(todd_class(e) == e->one());
  CHECK(integrate(todd_class(e), IntegrationMode::algebraic).is_zero());

  auto k3 = builtin::k3();
  CHECK(todd_class(k3) == k3->one() + TauScalar(2) * basis_of(k3, "pt"));
  // cross-check against (c_1^2 + c_2)/12 assembled by hand
  auto c1 = k3->c1();
  auto byhand = TauScalar(Rational(1, 12)) *
                (cup(c1, c1) + k3->tangent_chern(2));
  CHECK(todd_class(k3) == k3->one() + byhand);
  CHECK(integrate(todd_class(k3), IntegrationMode::algebraic) == TauScalar(2));

  auto q = builtin::quintic_diamond();
  CHECK(todd_class(q) ==
        q->one() + TauScalar(Rational(5, 6)) * basis_of(q, "f"));
  CHECK(integrate(todd_class(q), IntegrationMode::algebraic).is_zero());
}

TEST_CASE("chern character hand values") {
  auto p2 = builtin::projective_space(2);
  auto o1 = line_bundle(basis_of(p2, "h"));
  CHECK(chern_character(o1) ==
        p2->one() + basis_of(p2, "h") +
            TauScalar(Rational(1, 2)) * basis_of(p2, "h^2"));

  auto p3 = builtin::projective_space(3);
  auto o2 = line_bundle(TauScalar(2) * basis_of(p3, "h"));
  CHECK(chern_character(o2) ==
        p3->one() + TauScalar(2) * basis_of(p3, "h") +
            TauScalar(2) * basis_of(p3, "h^2") +
            TauScalar(Rational(4, 3)) * basis_of(p3, "h^3"));

  auto p4 = builtin::projective_space(4);
  auto rank2 = make_bundle(
      p4, 2, {basis_of(p4, "h"), basis_of(p4, "h^2")});
  CHECK(chern_character(rank2) ==
        TauScalar(2) * p4->one() + basis_of(p4, "h") -
            TauScalar(Rational(1, 2)) * basis_of(p4, "h^2") -
            TauScalar(Rational(1, 3)) * basis_of(p4, "h^3") -
            TauScalar(Rational(1, 24)) * basis_of(p4, "h^4"));

  CHECK(chern_character(trivial_bundle(p4, 7)) == TauScalar(7) * p4->one());
}

TEST_CASE("chern character is additive on sums") {
  for (const auto& r : {builtin::projective_space(3),
                        builtin::projective_space(4), builtin::k3()}) {
    for (int trial = 0; trial < 10; ++trial) {
      auto e = random_bundle(r);
      auto f = random_bundle(r);
      auto sum = whitney_sum(e, f);
      CHECK(chern_character(sum) == chern_character(e) + chern_character(f));
    }
  }
}

TEST_CASE("genera are multiplicative on sums") {
  auto p3 = builtin::projective_space(3);
  auto td = todd_series(4);
  for (int trial = 0; trial < 10; ++trial) {
    auto e = random_bundle(p3);
    auto f = random_bundle(p3);
    CHECK(multiplicative_class(whitney_sum(e, f), td) ==
          cup(multiplicative_class(e, td), multiplicative_class(f, td)));
  }
}

TEST_CASE("duality commutes with the character") {
  for (const auto& r : {builtin::projective_space(4), builtin::k3()}) {
    for (int trial = 0; trial < 10; ++trial) {
      auto e = random_bundle(r);
      CHECK(chern_character(bundle_dual(e)) == ch_dual(chern_character(e)));
    }
  }
  auto e = builtin::elliptic_curve();
  CHECK_THROWS_WITH_AS(ch_dual(basis_of(e, "dz")),
                       doctest::Contains("ValidationError"), Error);
}

TEST_CASE("nc normalization") {
  auto p1 = builtin::projective_space(1);
  auto o1 = line_bundle(basis_of(p1, "h"));
  CHECK(nc_chern_character(o1) ==
        p1->one() + TauScalar::tau_power(-1, -1) * basis_of(p1, "h"));

  auto p2 = builtin::projective_space(2);
  auto o1b = line_bundle(basis_of(p2, "h"));
  CHECK(nc_chern_character(o1b) ==
        p2->one() + TauScalar::tau_power(-1, -1) * basis_of(p2, "h") +
            TauScalar::tau_power(-2, Rational(1, 2)) * basis_of(p2, "h^2"));

  // The normalization is a ring automorphism.
  auto q = builtin::quintic_diamond();
  std::uniform_int_distribution<int> pick(0, static_cast<int>(q->size()) - 1);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = TauScalar(random_rational()) * q->basis_class(pick(rng));
    auto b = TauScalar(random_rational()) * q->basis_class(pick(rng));
    CHECK(nc_normalize(cup(a, b)) == cup(nc_normalize(a), nc_normalize(b)));
  }
}

TEST_CASE("square roots") {
  auto p2 = builtin::projective_space(2);
  auto root = sqrt_class(p2->one() + basis_of(p2, "h"));
  CHECK(root == p2->one() + TauScalar(Rational(1, 2)) * basis_of(p2, "h") -
                    TauScalar(Rational(1, 8)) * basis_of(p2, "h^2"));

  for (const auto& r : {builtin::projective_space(3), builtin::k3(),
                        builtin::quintic_diamond()}) {
    for (int trial = 0; trial < 10; ++trial) {
      auto a = random_unital(r);
      auto s = sqrt_class(a);
      CHECK(cup(s, s) == a);
    }
  }

  auto k3 = builtin::k3();
  CHECK(sqrt_todd(k3) == k3->one() + basis_of(k3, "pt"));
  auto q = builtin::quintic_diamond();
  CHECK(sqrt_todd(q) ==
        q->one() + TauScalar(Rational(5, 12)) * basis_of(q, "f"));
}

TEST_CASE("inverses") {
  for (const auto& r : {builtin::projective_space(4), builtin::k3()}) {
    for (int trial = 0; trial < 10; ++trial) {
      auto a = random_unital(r);
      CHECK(cup(a, class_inverse(a)) == r->one());
    }
  }
}

TEST_CASE("modified todd class") {
  std::vector<RingPtr> rings = {
      builtin::projective_space(1), builtin::projective_space(2),
      builtin::projective_space(3), builtin::projective_space(4),
      builtin::elliptic_curve(),    builtin::k3(),
      builtin::quintic_diamond()};
  for (const auto& r : rings) {
    auto expected = cup(todd_class(r),
                        class_exp(TauScalar(Rational(-1, 2)) * r->c1()));
    CHECK(modified_todd_class(r) == expected);
  }

  auto p1 = builtin::projective_space(1);
  CHECK(modified_todd_class(p1) == p1->one());
  auto p2 = builtin::projective_space(2);
  CHECK(modified_todd_class(p2) ==
        p2->one() - TauScalar(Rational(1, 8)) * basis_of(p2, "h^2"));

  // On a Calabi-Yau the two Todd classes agree.
  for (const auto& r : {builtin::elliptic_curve(), builtin::k3(),
                        builtin::quintic_diamond()})
    CHECK(modified_todd_class(r) == todd_class(r));
}

TEST_CASE("bundle error kinds") {
  auto p2 = builtin::projective_space(2);
  auto p3 = builtin::projective_space(3);

  CHECK_THROWS_WITH_AS(line_bundle(basis_of(p2, "h^2")),
                       doctest::Contains("BadChernDegrees"), Error);
  CHECK_THROWS_WITH_AS(
      make_bundle(p2, 1, {basis_of(p2, "h"), basis_of(p2, "h^2"),
                          basis_of(p2, "h^2")}),
      doctest::Contains("BadChernDegrees"), Error);
  CHECK_THROWS_WITH_AS(
      whitney_sum(trivial_bundle(p2, 1), trivial_bundle(p3, 1)),
      doctest::Contains("RingMismatch"), Error);

  auto bundle = line_bundle(basis_of(p2, "h"));
  auto not_unital = CharSeries::variable(4);
  CHECK_THROWS_WITH_AS(multiplicative_class(bundle, not_unital),
                       doctest::Contains("SeriesNotUnital"), Error);
  CHECK_THROWS_WITH_AS(multiplicative_class(bundle, todd_series(2)),
                       doctest::Contains("OrderTooSmall"), Error);

  CHECK_THROWS_WITH_AS(sqrt_class(basis_of(p2, "h")),
                       doctest::Contains("NotUnital"), Error);
  CHECK_THROWS_WITH_AS(class_inverse(TauScalar(2) * p2->one()),
                       doctest::Contains("NotUnital"), Error);
  CHECK_THROWS_WITH_AS(class_exp(p2->one()),
                       doctest::Contains("NonzeroConstantTerm"), Error);

  RingBuilder b(1);
  b.add_basis("1", 0, 0);
  b.add_basis("x", 1, 1);
  b.set_top("x");
  auto bare = b.build();
  CHECK_THROWS_WITH_AS(tangent_bundle(bare),
                       doctest::Contains("MissingTangentData"), Error);
}

TEST_CASE("bundle json codec") {
  auto p3 = builtin::projective_space(3);
  for (int trial = 0; trial < 10; ++trial) {
    auto e = random_bundle(p3);
    auto back = bundle_from_json(p3, bundle_to_json(e));
    CHECK(back.rank == e.rank);
    REQUIRE(back.chern.size() == e.chern.size());
    for (size_t k = 0; k < e.chern.size(); ++k)
      CHECK(back.chern[k] == e.chern[k]);
  }
  nlohmann::json bad = {{"rank", 1},
                        {"chern", {{{"k", 9}, {"class", nlohmann::json::array()}}}}};
  CHECK_THROWS_WITH_AS(bundle_from_json(p3, bad),
                       doctest::Contains("ParseError"), Error);
}
