#include "nchodge/chern.hpp"

#include "nchodge/errors.hpp"
#include "nchodge/rational.hpp"

namespace nchodge {

namespace {

TauScalar inv_factorial(unsigned k) {
  return TauScalar(Rational(1) / Rational(factorial(k)));
}

// p_1..p_n from c_1..c_n: p_k = sum_{i<k} (-1)^{i-1} c_i p_{k-i}
//                               + (-1)^{k-1} k c_k
std::vector<CohClass> power_sums(const BundleData& e) {
  int n = e.ring->dimension();
  std::vector<CohClass> p;
  p.reserve(n);
  for (int k = 1; k <= n; ++k) {
    CohClass pk = e.ring->zero_class();
    for (int i = 1; i < k; ++i) {
      CohClass term = cup(e.chern_at(i), p[k - i - 1]);
      pk += (i % 2 == 1) ? term : -term;
    }
    CohClass tail = TauScalar(k) * e.chern_at(k);
    pk += (k % 2 == 1) ? tail : -tail;
    p.push_back(std::move(pk));
  }
  return p;
}

}  // namespace

CohClass BundleData::chern_at(int k) const {
  if (k < 1) fail("BadChernDegrees", "Chern degree must be positive");
  if (static_cast<size_t>(k) > chern.size()) return ring->zero_class();
  return chern[k - 1];
}

BundleData make_bundle(RingPtr ring, long rank, std::vector<CohClass> chern) {
  if (!ring) fail("ValidationError", "bundle needs a ring");
  int n = ring->dimension();
  if (chern.size() > static_cast<size_t>(n)) {
    for (size_t k = n; k < chern.size(); ++k)
      if (!chern[k].is_zero())
        fail("BadChernDegrees", "Chern class beyond the ring dimension");
    chern.resize(n, ring->zero_class());
  }
  for (size_t k = 0; k < chern.size(); ++k) {
    if (chern[k].ring() != ring)
      fail("RingMismatch", "Chern class lives in a different ring");
    for (const auto& [i, c] : chern[k].coeffs()) {
      const auto& b = ring->basis_element(i);
      if (b.p != static_cast<int>(k) + 1 || b.q != static_cast<int>(k) + 1)
        fail("BadChernDegrees",
             "c_" + std::to_string(k + 1) + " must sit in bidegree (" +
                 std::to_string(k + 1) + "," + std::to_string(k + 1) + ")");
    }
  }
  while (chern.size() < static_cast<size_t>(n))
    chern.push_back(ring->zero_class());
  return BundleData{std::move(ring), rank, std::move(chern)};
}

BundleData trivial_bundle(RingPtr ring, long rank) {
  return make_bundle(std::move(ring), rank, {});
}

BundleData line_bundle(const CohClass& c1) {
  return make_bundle(c1.ring(), 1, {c1});
}

BundleData tangent_bundle(const RingPtr& ring) {
  std::vector<CohClass> chern;
  for (int k = 1; k <= ring->dimension(); ++k)
    chern.push_back(ring->tangent_chern(k));
  return make_bundle(ring, ring->dimension(), std::move(chern));
}

BundleData bundle_dual(const BundleData& e) {
  std::vector<CohClass> chern;
  for (size_t k = 0; k < e.chern.size(); ++k)
    chern.push_back(k % 2 == 0 ? -e.chern[k] : e.chern[k]);
  return make_bundle(e.ring, e.rank, std::move(chern));
}

BundleData whitney_sum(const BundleData& e, const BundleData& f) {
  if (e.ring != f.ring) fail("RingMismatch", "bundles on different rings");
  int n = e.ring->dimension();
  std::vector<CohClass> chern;
  for (int k = 1; k <= n; ++k) {
    CohClass ck = e.chern_at(k) + f.chern_at(k);
    for (int i = 1; i < k; ++i) ck += cup(e.chern_at(i), f.chern_at(k - i));
    chern.push_back(std::move(ck));
  }
  return make_bundle(e.ring, e.rank + f.rank, std::move(chern));
}

CohClass chern_character(const BundleData& e) {
  CohClass ch = TauScalar(e.rank) * e.ring->one();
  auto p = power_sums(e);
  for (size_t k = 1; k <= p.size(); ++k)
    ch += inv_factorial(static_cast<unsigned>(k)) * p[k - 1];
  return ch;
}

CohClass nc_normalize(const CohClass& a) {
  std::map<int, TauScalar> out;
  for (const auto& [i, c] : a.coeffs()) {
    int p = a.ring()->basis_element(i).p;
    TauScalar factor = TauScalar::tau_power(-p, p % 2 ? Rational(-1) : Rational(1));
    out[i] = factor * c;
  }
  return CohClass(a.ring(), std::move(out));
}

CohClass nc_chern_character(const BundleData& e) {
  return nc_normalize(chern_character(e));
}

CohClass ch_dual(const CohClass& a) {
  std::map<int, TauScalar> out;
  for (const auto& [i, c] : a.coeffs()) {
    const auto& b = a.ring()->basis_element(i);
    if (b.p != b.q)
      fail("ValidationError", "degreewise dual needs a diagonal class");
    out[i] = b.p % 2 ? -c : c;
  }
  return CohClass(a.ring(), std::move(out));
}

CohClass class_exp(const CohClass& a) {
  int u = a.ring()->unit_index();
  if (u >= 0 && !a.coeff(u).is_zero())
    fail("NonzeroConstantTerm", "exp needs a class without (0,0) part");
  int n = a.ring()->dimension();
  CohClass result = a.ring()->one();
  CohClass power = a.ring()->one();
  for (int k = 1; k <= 2 * n && !power.is_zero(); ++k) {
    power = cup(power, a);
    result += inv_factorial(static_cast<unsigned>(k)) * power;
  }
  return result;
}

CohClass class_inverse(const CohClass& a) {
  int u = a.ring()->unit_index();
  if (u < 0 || a.coeff(u) != TauScalar(1))
    fail("NotUnital", "inverse needs a unital class");
  CohClass nil = a - a.ring()->one();
  int n = a.ring()->dimension();
  CohClass result = a.ring()->one();
  CohClass power = a.ring()->one();
  for (int k = 1; k <= 2 * n && !power.is_zero(); ++k) {
    power = cup(power, nil);
    result += (k % 2 ? TauScalar(-1) : TauScalar(1)) * power;
  }
  return result;
}

CohClass sqrt_class(const CohClass& a) {
  int u = a.ring()->unit_index();
  if (u < 0 || a.coeff(u) != TauScalar(1))
    fail("NotUnital", "square root needs a unital class");
  CohClass nil = a - a.ring()->one();
  int n = a.ring()->dimension();
  CohClass result = a.ring()->one();
  CohClass power = a.ring()->one();
  for (int k = 1; k <= 2 * n && !power.is_zero(); ++k) {
    power = cup(power, nil);
    result += TauScalar(binomial(Rational(1, 2), static_cast<unsigned>(k))) *
              power;
  }
  return result;
}

CohClass multiplicative_class(const BundleData& e, const CharSeries& f) {
  if (f.coeff(0) != TauScalar(1))
    fail("SeriesNotUnital", "genus series needs constant term 1");
  int n = e.ring->dimension();
  if (f.order() < n + 1)
    fail("OrderTooSmall", "genus series carries fewer than " +
                              std::to_string(n + 1) + " coefficients");
  CharSeries l = log(f);
  auto p = power_sums(e);
  CohClass exponent = e.ring->zero_class();
  for (int k = 1; k <= n; ++k) exponent += l.coeff(k) * p[k - 1];
  return class_exp(exponent);
}

CohClass todd_class(const RingPtr& ring) {
  return multiplicative_class(tangent_bundle(ring),
                              todd_series(ring->dimension() + 1));
}

CohClass modified_todd_class(const RingPtr& ring) {
  return multiplicative_class(tangent_bundle(ring),
                              modified_todd_series(ring->dimension() + 1));
}

CohClass sqrt_todd(const RingPtr& ring) {
  return sqrt_class(todd_class(ring));
}

}  // namespace nchodge
