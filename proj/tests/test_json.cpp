#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nchodge/builtin_rings.hpp"
#include "nchodge/errors.hpp"
#include "nchodge/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <random>

using namespace nchodge;
using nlohmann::json;

namespace {

std::string fixture(const std::string& name) {
  return std::string(NCHODGE_FIXTURE_DIR) + "/" + name;
}

std::mt19937 rng(20260815);

TauScalar random_tau_scalar() {
  std::uniform_int_distribution<int> nterms(0, 3), exp(-3, 3), num(-9, 9),
      den(1, 9);
  TauScalar s;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i)
    s += TauScalar::tau_power(exp(rng), Rational(num(rng), den(rng)));
  return s;
}

void expect_same_ring(const RingPtr& a, const RingPtr& b) {
  REQUIRE(a->dimension() == b->dimension());
  REQUIRE(a->size() == b->size());
  for (size_t i = 0; i < a->size(); ++i) {
    const auto& ba = a->basis_element(static_cast<int>(i));
    const auto& bb = b->basis_element(static_cast<int>(i));
    CHECK(ba.label == bb.label);
    CHECK(ba.p == bb.p);
    CHECK(ba.q == bb.q);
  }
  CHECK(a->top_index() == b->top_index());
  CHECK(a->unit_index() == b->unit_index());
  for (size_t i = 0; i < a->size(); ++i)
    for (size_t j = 0; j < a->size(); ++j) {
      int ii = static_cast<int>(i), jj = static_cast<int>(j);
      CHECK(a->product_unavailable(ii, jj) == b->product_unavailable(ii, jj));
      std::map<int, TauScalar> ta, tb;
      if (const auto* t = a->product(ii, jj))
        for (const auto& [k, c] : *t) ta[k] = c;
      if (const auto* t = b->product(ii, jj))
        for (const auto& [k, c] : *t) tb[k] = c;
      CHECK(ta == tb);
    }
  CHECK(a->has_tangent_data() == b->has_tangent_data());
  if (a->has_tangent_data())
    for (int k = 1; k <= a->dimension(); ++k)
      CHECK(a->tangent_chern(k).coeffs() == b->tangent_chern(k).coeffs());
}

}  // namespace

TEST_CASE("tau scalar codec") {
  for (int trial = 0; trial < 200; ++trial) {
    TauScalar s = random_tau_scalar();
    CHECK(tau_from_json(tau_to_json(s)) == s);
  }
  CHECK(tau_from_json(json("3/2")) == TauScalar(Rational(3, 2)));
  CHECK(tau_from_json(json(-4)) == TauScalar(-4));
  CHECK(tau_from_json(json::array()).is_zero());
  auto term = json::array({{{"tau_exp", -2}, {"coeff", "1/3"}}});
  CHECK(tau_from_json(term) == TauScalar::tau_power(-2, Rational(1, 3)));

  CHECK_THROWS_WITH_AS(tau_from_json(json(0.5)),
                       doctest::Contains("ParseError"), Error);
  CHECK_THROWS_WITH_AS(tau_from_json(json("x")),
                       doctest::Contains("ParseError"), Error);
  CHECK_THROWS_WITH_AS(tau_from_json(json::array({{{"tau_exp", 1}}})),
                       doctest::Contains("ParseError"), Error);
}

TEST_CASE("class codec") {
  auto p2 = builtin::projective_space(2);
  auto h = p2->basis_class(*p2->index_of("h"));
  auto cls = (TauScalar(1) + TauScalar::tau_power(1, Rational(2))) * h +
             TauScalar(Rational(-5, 3)) * p2->basis_class(*p2->index_of("h^2"));
  CHECK(class_from_json(p2, class_to_json(cls)) == cls);
  CHECK(class_from_json(p2, json::array()).is_zero());

  auto bad_label = json::array({{{"label", "nope"}, {"coeff", "1"}}});
  CHECK_THROWS_WITH_AS(class_from_json(p2, bad_label),
                       doctest::Contains("ParseError"), Error);
  auto dup = json::array({{{"label", "h"}, {"coeff", "1"}},
                          {{"label", "h"}, {"coeff", "2"}}});
  CHECK_THROWS_WITH_AS(class_from_json(p2, dup),
                       doctest::Contains("ParseError"), Error);
}

TEST_CASE("ring round-trips") {
  std::map<std::pair<int, int>, int> quintic_shape{
      {{0, 0}, 1}, {{1, 1}, 1}, {{2, 2}, 1}, {{3, 3}, 1},
      {{3, 0}, 1}, {{0, 3}, 1}, {{2, 1}, 101}, {{1, 2}, 101}};
  std::vector<RingPtr> rings = {
      builtin::projective_space(1),
      builtin::projective_space(3),
      builtin::elliptic_curve(),
      builtin::k3(),
      builtin::quintic_diamond(),
      builtin::formal_cy(3, quintic_shape),
      builtin::product_ring(builtin::projective_space(1),
                            builtin::elliptic_curve())};
  for (const auto& r : rings) expect_same_ring(r, ring_from_json(ring_to_json(r)));
}

TEST_CASE("ring fixture loads") {
  auto p1 = load_ring(fixture("p1_ring.json"));
  auto rep = validate_ring(p1);
  INFO(rep.str());
  CHECK(rep.ok());
  CHECK(p1->dimension() == 1);
  auto h = p1->basis_class(*p1->index_of("h"));
  CHECK(cup(h, h).is_zero());
  CHECK(p1->c1() == TauScalar(2) * h);
  expect_same_ring(p1, ring_from_json(ring_to_json(p1)));
}

TEST_CASE("counterexample fixtures are rejected by name") {
  auto first_check = [](const std::string& name) {
    auto rep = validate_ring(load_ring(fixture(name)));
    CHECK(!rep.ok());
    return rep.first_failure();
  };
  CHECK(first_check("bad_grading_ring.json").rfind("grading:", 0) == 0);
  CHECK(first_check("bad_koszul_ring.json").rfind("commutativity:", 0) == 0);
  CHECK(first_check("bad_assoc_ring.json").rfind("associativity:", 0) == 0);
  CHECK(first_check("bad_missing_top.json").rfind("basis:", 0) == 0);
  CHECK(first_check("bad_unit_ring.json").rfind("unit:", 0) == 0);
  CHECK(first_check("bad_pairing_ring.json").rfind("poincare:", 0) == 0);
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_WITH_AS(load_ring(fixture("does_not_exist.json")),
                       doctest::Contains("ParseError"), Error);

  std::string tmp = "/tmp/nchodge_bad_doc.json";
  {
    std::ofstream out(tmp);
    out << "{ not json";
  }
  CHECK_THROWS_WITH_AS(load_json_file(tmp), doctest::Contains("ParseError"),
                       Error);
  std::remove(tmp.c_str());

  json missing_dim = {{"basis", json::array()}};
  CHECK_THROWS_WITH_AS(ring_from_json(missing_dim),
                       doctest::Contains("ParseError"), Error);

  json doc = ring_to_json(builtin::projective_space(2));
  doc["products"].push_back(doc["products"][0]);
  CHECK_THROWS_WITH_AS(ring_from_json(doc), doctest::Contains("ParseError"),
                       Error);

  json bad_top = ring_to_json(builtin::projective_space(1));
  bad_top["top"] = "missing";
  CHECK_THROWS_WITH_AS(ring_from_json(bad_top),
                       doctest::Contains("ParseError"), Error);

  json bad_product = ring_to_json(builtin::projective_space(2));
  bad_product["products"][0]["left"] = "nope";
  CHECK_THROWS_WITH_AS(ring_from_json(bad_product),
                       doctest::Contains("ParseError"), Error);
}

TEST_CASE("file round-trip") {
  std::string tmp = "/tmp/nchodge_ring_roundtrip.json";
  auto k3 = builtin::k3();
  save_ring(tmp, k3);
  expect_same_ring(k3, load_ring(tmp));
  std::remove(tmp.c_str());
}
