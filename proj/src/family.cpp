#include "nchodge/family.hpp"

#include "nchodge/builtin_rings.hpp"
#include "nchodge/errors.hpp"

#include <algorithm>
#include <tuple>

namespace nchodge {

DeformationSpec::DeformationSpec(RingPtr ring,
                                 std::vector<std::map<int, CohClass>> kappa,
                                 int t_order, int u_headroom)
    : ring_(std::move(ring)),
      kappa_(std::move(kappa)),
      t_order_(t_order),
      u_headroom_(u_headroom),
      commuting_(true) {
  if (!ring_) fail("ValidationError", "deformation needs a ring");
  if (kappa_.empty())
    fail("ValidationError", "deformation needs at least one direction");
  if (t_order_ < 0) fail("ValidationError", "t_order must be >= 0");
  if (u_headroom_ < 1)
    fail("ValidationError", "sections need at least one unit of u-headroom");

  int size = static_cast<int>(ring_->size());
  for (const auto& k : kappa_)
    for (const auto& [i, v] : k) {
      if (i < 0 || i >= size)
        fail("ValidationError", "kappa acts on an unknown basis index");
      if (v.ring() != ring_)
        fail("RingMismatch", "kappa value lives over a different ring");
      const BasisElement& b = ring_->basis_element(i);
      if (!(v == v.component(b.p - 1, b.q + 1)))
        fail("ValidationError",
             "kappa must shift bidegree by (-1,+1): the value on '" +
                 b.label + "' strays outside (" + std::to_string(b.p - 1) +
                 "," + std::to_string(b.q + 1) + ")");
    }

  // The contraction is a derivation: kappa(xy) = kappa(x) y + x kappa(y) on
  // every basis pair the model can multiply.
  for (int j = 0; j < mu(); ++j)
    for (int x = 0; x < size; ++x)
      for (int y = 0; y < size; ++y) {
        if (ring_->product_unavailable(x, y)) continue;
        CohClass cx = ring_->basis_class(x);
        CohClass cy = ring_->basis_class(y);
        CohClass lhs = ring_->zero_class();
        CohClass rhs = ring_->zero_class();
        try {
          lhs = apply(j, cup(cx, cy));
          rhs = cup(apply(j, cx), cy) + cup(cx, apply(j, cy));
        } catch (const Error& err) {
          if (err.kind == "ProductUnavailable") continue;
          throw;
        }
        if (!(lhs == rhs))
          fail("ValidationError",
               "kappa violates the Leibniz rule on " +
                   ring_->basis_element(x).label + " cup " +
                   ring_->basis_element(y).label);
      }

  for (int a = 0; a < mu() && commuting_; ++a)
    for (int b = a + 1; b < mu() && commuting_; ++b)
      for (int i = 0; i < size; ++i) {
        CohClass ab = apply(a, apply(b, ring_->basis_class(i)));
        CohClass ba = apply(b, apply(a, ring_->basis_class(i)));
        if (!(ab == ba)) {
          commuting_ = false;
          break;
        }
      }
}

const std::map<int, CohClass>& DeformationSpec::kappa(int j) const {
  if (j < 0 || j >= mu())
    fail("ValidationError", "direction index out of range");
  return kappa_[static_cast<size_t>(j)];
}

CohClass DeformationSpec::apply(int j, const CohClass& a) const {
  if (j < 0 || j >= mu())
    fail("ValidationError", "direction index out of range");
  if (a.ring() != ring_)
    fail("RingMismatch", "class lives over a different ring");
  CohClass out = ring_->zero_class();
  const auto& k = kappa_[static_cast<size_t>(j)];
  for (const auto& [i, c] : a.coeffs()) {
    auto it = k.find(i);
    if (it != k.end()) out += c * it->second;
  }
  return out;
}

bool mc_check(const DeformationSpec& d) { return d.commuting(); }

FamilySection::FamilySection(RingPtr ring, int mu, int t_order,
                             int u_headroom, int u_order)
    : ring_(std::move(ring)),
      mu_(mu),
      t_order_(t_order),
      u_lo_(-u_headroom),
      u_hi_(u_order) {
  if (!ring_) fail("ValidationError", "section needs a ring");
  if (mu_ < 1) fail("ValidationError", "section needs at least one parameter");
  if (t_order_ < 0) fail("ValidationError", "t_order must be >= 0");
  if (u_headroom < 0) fail("ValidationError", "u-headroom must be >= 0");
  if (u_order < 0) fail("ValidationError", "u_order must be >= 0");
}

void FamilySection::check_key(int basis_index, const TMulti& t) const {
  if (basis_index < 0 || basis_index >= static_cast<int>(ring_->size()))
    fail("ValidationError", "basis index out of range");
  if (static_cast<int>(t.size()) != mu_)
    fail("ValidationError", "t-monomial has the wrong number of parameters");
  int total = 0;
  for (int e : t) {
    if (e < 0) fail("ValidationError", "t-exponents must be >= 0");
    total += e;
  }
  if (total > t_order_)
    fail("ValidationError", "t-monomial exceeds the truncation order");
}

const TauScalar& FamilySection::coeff(int basis_index, const TMulti& t,
                                      int u_exp) const {
  static const TauScalar zero;
  check_key(basis_index, t);
  if (u_exp < u_lo_ || u_exp > u_hi_)
    fail("ValidationError", "u-exponent outside the stored window");
  auto it = data_.find({basis_index, t});
  if (it == data_.end()) return zero;
  auto uit = it->second.find(u_exp);
  return uit == it->second.end() ? zero : uit->second;
}

void FamilySection::set_coeff(int basis_index, const TMulti& t, int u_exp,
                              const TauScalar& value) {
  if (u_exp < 0)
    fail("ValidationError",
         "sections are built u-regular; negative powers only arise from "
         "the connection");
  if (u_exp > u_hi_)
    fail("ValidationError", "u-exponent outside the stored window");
  check_key(basis_index, t);
  raw_set(basis_index, t, u_exp, value);
}

void FamilySection::raw_set(int basis_index, const TMulti& t, int u_exp,
                            const TauScalar& value) {
  auto key = std::make_pair(basis_index, t);
  if (value.is_zero()) {
    auto it = data_.find(key);
    if (it != data_.end()) {
      it->second.erase(u_exp);
      if (it->second.empty()) data_.erase(it);
    }
    return;
  }
  data_[key][u_exp] = value;
}

void FamilySection::raw_add(int basis_index, const TMulti& t, int u_exp,
                            const TauScalar& value) {
  if (value.is_zero()) return;
  auto key = std::make_pair(basis_index, t);
  auto& slot = data_[key][u_exp];
  slot += value;
  if (slot.is_zero()) {
    data_[key].erase(u_exp);
    if (data_[key].empty()) data_.erase(key);
  }
}

bool FamilySection::is_zero() const { return data_.empty(); }

std::optional<int> FamilySection::u_valuation() const {
  std::optional<int> best;
  for (const auto& [key, useries] : data_) {
    int lead = useries.begin()->first;
    if (!best || lead < *best) best = lead;
  }
  return best;
}

std::vector<std::tuple<int, FamilySection::TMulti, int>>
FamilySection::support() const {
  std::vector<std::tuple<int, TMulti, int>> out;
  for (const auto& [key, useries] : data_)
    for (const auto& [u, c] : useries)
      out.emplace_back(key.first, key.second, u);
  return out;
}

FamilySection FamilySection::t_derivative(int j) const {
  if (j < 0 || j >= mu_)
    fail("ValidationError", "direction index out of range");
  FamilySection r(ring_, mu_, t_order_, -u_lo_, u_hi_);
  for (const auto& [key, useries] : data_) {
    const TMulti& t = key.second;
    int e = t[static_cast<size_t>(j)];
    if (e == 0) continue;
    TMulti lower = t;
    --lower[static_cast<size_t>(j)];
    for (const auto& [u, c] : useries)
      r.raw_add(key.first, lower, u, TauScalar(e) * c);
  }
  return r;
}

FamilySection FamilySection::mul_u_pow(int k) const {
  FamilySection r(ring_, mu_, t_order_, -u_lo_, u_hi_);
  for (const auto& [key, useries] : data_)
    for (const auto& [u, c] : useries) {
      int shifted = u + k;
      if (shifted > u_hi_) continue;
      if (shifted < u_lo_)
        fail("UHeadroomExhausted",
             "u^" + std::to_string(k) + " pushes a coefficient below u^" +
                 std::to_string(u_lo_));
      r.raw_set(key.first, key.second, shifted, c);
    }
  return r;
}

namespace {

void check_shape(const FamilySection& a, const FamilySection& b) {
  if (a.ring() != b.ring())
    fail("RingMismatch", "sections live over different rings");
  if (a.mu() != b.mu() || a.t_order() != b.t_order() ||
      a.u_min() != b.u_min() || a.u_max() != b.u_max())
    fail("OrderMismatch", "section truncation shapes differ");
}

}  // namespace

FamilySection& FamilySection::operator+=(const FamilySection& o) {
  check_shape(*this, o);
  for (const auto& [key, useries] : o.data_)
    for (const auto& [u, c] : useries) raw_add(key.first, key.second, u, c);
  return *this;
}

FamilySection& FamilySection::operator-=(const FamilySection& o) {
  check_shape(*this, o);
  for (const auto& [key, useries] : o.data_)
    for (const auto& [u, c] : useries) raw_add(key.first, key.second, u, -c);
  return *this;
}

FamilySection operator+(FamilySection a, const FamilySection& b) {
  return a += b;
}

FamilySection operator-(FamilySection a, const FamilySection& b) {
  return a -= b;
}

FamilySection FamilySection::operator-() const {
  FamilySection r(ring_, mu_, t_order_, -u_lo_, u_hi_);
  for (const auto& [key, useries] : data_)
    for (const auto& [u, c] : useries)
      r.raw_set(key.first, key.second, u, -c);
  return r;
}

FamilySection operator*(const TauScalar& c, FamilySection s) {
  if (c.is_zero()) {
    s.data_.clear();
    return s;
  }
  for (auto& [key, useries] : s.data_)
    for (auto& [u, v] : useries) v = c * v;
  return s;
}

bool FamilySection::operator==(const FamilySection& o) const {
  return ring_ == o.ring_ && mu_ == o.mu_ && t_order_ == o.t_order_ &&
         u_lo_ == o.u_lo_ && u_hi_ == o.u_hi_ && data_ == o.data_;
}

FamilySection constant_section(const DeformationSpec& d, const CohClass& a,
                               int u_order) {
  if (a.ring() != d.ring())
    fail("RingMismatch", "class lives over a different ring");
  FamilySection s(d.ring(), d.mu(), d.t_order(), d.u_headroom(), u_order);
  FamilySection::TMulti origin(static_cast<size_t>(d.mu()), 0);
  for (const auto& [i, c] : a.coeffs()) s.set_coeff(i, origin, 0, c);
  return s;
}

FamilySection cup_section(const CohClass& t, const FamilySection& s) {
  if (t.ring() != s.ring())
    fail("RingMismatch", "twist class lives over a different ring");
  FamilySection r(s.ring_, s.mu_, s.t_order_, -s.u_lo_, s.u_hi_);
  std::map<int, CohClass> cupped;  // basis index -> t cup x_i
  for (const auto& [key, useries] : s.data_) {
    auto it = cupped.find(key.first);
    if (it == cupped.end())
      it = cupped.emplace(key.first,
                          cup(t, s.ring_->basis_class(key.first)))
               .first;
    for (const auto& [k, ck] : it->second.coeffs())
      for (const auto& [u, c] : useries)
        r.raw_add(k, key.second, u, ck * c);
  }
  return r;
}

FamilySection apply_kappa(const DeformationSpec& d, int j,
                          const FamilySection& s) {
  if (d.ring() != s.ring())
    fail("RingMismatch", "section lives over a different ring");
  FamilySection r(s.ring_, s.mu_, s.t_order_, -s.u_lo_, s.u_hi_);
  const auto& k = d.kappa(j);
  for (const auto& [key, useries] : s.data_) {
    auto it = k.find(key.first);
    if (it == k.end()) continue;
    for (const auto& [idx, ck] : it->second.coeffs())
      for (const auto& [u, c] : useries)
        r.raw_add(idx, key.second, u, ck * c);
  }
  return r;
}

FamilySection connect(const FamilySection& s, int j,
                      const DeformationSpec& d) {
  if (d.ring() != s.ring())
    fail("RingMismatch", "section lives over a different ring");
  if (s.mu() != d.mu())
    fail("OrderMismatch", "section and spec disagree on the parameter count");
  return s.t_derivative(j) - apply_kappa(d, j, s).mul_u_pow(-1);
}

ValidationReport transversality_check(
    const DeformationSpec& d, const std::vector<FamilySection>& corpus) {
  ValidationReport rep;
  bool pre = mc_check(d);
  rep.checks.push_back(
      {"precondition", pre,
       pre ? "" : "mc_check fails: the kappa operators do not commute"});
  if (!pre) return rep;

  bool ok = true;
  std::string detail;
  for (size_t si = 0; si < corpus.size() && ok; ++si) {
    const FamilySection& s = corpus[si];
    auto val = s.u_valuation();
    if (val && *val < 0) continue;  // only the non-negative lattice is claimed
    for (int j = 0; j < d.mu() && ok; ++j) {
      auto moved = connect(s, j, d).mul_u_pow(1).u_valuation();
      if (moved && *moved < 0) {
        ok = false;
        detail = "u * connect leaves the non-negative lattice on corpus "
                 "section " +
                 std::to_string(si) + ", direction " + std::to_string(j);
      }
    }
  }
  rep.checks.push_back({"transversality", ok, detail});
  return rep;
}

ValidationReport flatness_check(const DeformationSpec& d) {
  ValidationReport rep;
  bool pre = mc_check(d);
  rep.checks.push_back(
      {"precondition", pre,
       pre ? "" : "mc_check fails: the kappa operators do not commute, so "
                  "the connection has no reason to be flat"});
  if (!pre) return rep;

  // Spanning corpus: every basis element as a constant section and behind
  // each parameter monomial t_a. Two units of headroom absorb the double
  // 1/u action.
  std::vector<FamilySection> corpus;
  for (int i = 0; i < static_cast<int>(d.ring()->size()); ++i) {
    FamilySection s(d.ring(), d.mu(), d.t_order(), 2, 1);
    FamilySection::TMulti origin(static_cast<size_t>(d.mu()), 0);
    s.set_coeff(i, origin, 0, TauScalar(1));
    corpus.push_back(s);
    if (d.t_order() >= 1)
      for (int a = 0; a < d.mu(); ++a) {
        FamilySection m(d.ring(), d.mu(), d.t_order(), 2, 1);
        FamilySection::TMulti mono(static_cast<size_t>(d.mu()), 0);
        mono[static_cast<size_t>(a)] = 1;
        m.set_coeff(i, mono, 0, TauScalar(1));
        corpus.push_back(m);
      }
  }

  bool ok = true;
  std::string detail;
  for (size_t si = 0; si < corpus.size() && ok; ++si)
    for (int i = 0; i < d.mu() && ok; ++i)
      for (int j = i + 1; j < d.mu() && ok; ++j) {
        FamilySection lhs = connect(connect(corpus[si], j, d), i, d);
        FamilySection rhs = connect(connect(corpus[si], i, d), j, d);
        if (!(lhs == rhs)) {
          ok = false;
          detail = "[nabla_" + std::to_string(i) + ", nabla_" +
                   std::to_string(j) + "] != 0 on corpus section " +
                   std::to_string(si);
        }
      }
  rep.checks.push_back({"flatness", ok, detail});
  return rep;
}

FamilySection intertwining_defect(const CohClass& t, const FamilySection& s,
                                  int j, const DeformationSpec& d) {
  if (t.ring() != s.ring() || d.ring() != s.ring())
    fail("RingMismatch", "twist, section, and spec must share a ring");
  if (!t.is_unital()) fail("TNotUnital", "twist class needs unit term 1");

  FamilySection lhs =
      connect(cup_section(t, s), j, d) - cup_section(t, connect(s, j, d));
  FamilySection rhs = -cup_section(d.apply(j, t), s).mul_u_pow(-1);
  if (!(lhs == rhs))
    fail("ValidationError",
         "defect formula violated: the connection defect is not "
         "-u^{-1} (kappa T) cup s");
  return lhs;
}

FamilySection intertwining_defect(const FamilySection& t,
                                  const FamilySection& s, int j,
                                  const DeformationSpec& d) {
  FamilySection::TMulti origin(static_cast<size_t>(t.mu()), 0);
  std::map<int, TauScalar> coeffs;
  for (const auto& [idx, mono, u] : t.support()) {
    if (mono != origin || u != 0)
      fail("TNotConstant", "twist section must be constant in t and u");
    coeffs[idx] = t.coeff(idx, mono, u);
  }
  return intertwining_defect(CohClass(t.ring(), std::move(coeffs)), s, j, d);
}

namespace builtin {

DeformationSpec elliptic_family(int t_order) {
  auto r = elliptic_curve();
  std::map<int, CohClass> k;
  k.emplace(*r->index_of("dz"), r->basis_class(*r->index_of("dzbar")));
  return DeformationSpec(r, {std::move(k)}, t_order);
}

DeformationSpec k3_family(int mu, int t_order) {
  if (mu < 1 || mu > 2)
    fail("ValidationError", "the K3 family model carries mu in {1, 2}");
  auto r = k3();
  std::vector<std::map<int, CohClass>> kappa;
  for (int j = 1; j <= mu; ++j) {
    std::string w = "w" + std::to_string(j);
    std::map<int, CohClass> k;
    k.emplace(*r->index_of("sigma"), r->basis_class(*r->index_of(w)));
    k.emplace(*r->index_of(w),
              -r->basis_class(*r->index_of("sigmabar")));
    kappa.push_back(std::move(k));
  }
  return DeformationSpec(r, std::move(kappa), t_order);
}

DeformationSpec quintic_family(int t_order) {
  auto r = quintic_diamond();
  std::map<int, CohClass> k;
  k.emplace(*r->index_of("omega"), r->basis_class(*r->index_of("a1")));
  k.emplace(*r->index_of("a1"), r->basis_class(*r->index_of("b1")));
  k.emplace(*r->index_of("b1"),
            -r->basis_class(*r->index_of("omegabar")));
  return DeformationSpec(r, {std::move(k)}, t_order);
}

}  // namespace builtin

}  // namespace nchodge
