#include "nchodge/hp_lattice.hpp"

#include "nchodge/errors.hpp"

#include <algorithm>
#include <mutex>

namespace nchodge {

namespace {

void check_same(const HPElement& a, const HPElement& b) {
  if (a.ring() != b.ring())
    fail("RingMismatch", "lattice elements live over different rings");
  if (a.u_order() != b.u_order())
    fail("OrderMismatch", "u-truncation orders differ: " +
                              std::to_string(a.u_order()) + " vs " +
                              std::to_string(b.u_order()));
}

}  // namespace

HPElement::HPElement(RingPtr ring, int u_order)
    : ring_(std::move(ring)), u_order_(u_order) {
  if (!ring_) fail("ValidationError", "lattice element needs a ring");
  if (u_order_ < 0) fail("ValidationError", "u_order must be >= 0");
}

const TauScalar& HPElement::coeff(int basis_index, int u_exp) const {
  static const TauScalar zero;
  if (basis_index < 0 || basis_index >= static_cast<int>(ring_->size()))
    fail("ValidationError", "basis index out of range");
  if (u_exp < 0 || u_exp > u_order_)
    fail("ValidationError", "u-exponent out of range");
  auto it = comp_.find(basis_index);
  if (it == comp_.end()) return zero;
  return it->second[static_cast<size_t>(u_exp)];
}

void HPElement::set_coeff(int basis_index, int u_exp, const TauScalar& value) {
  if (basis_index < 0 || basis_index >= static_cast<int>(ring_->size()))
    fail("ValidationError", "basis index out of range");
  if (u_exp < 0 || u_exp > u_order_)
    fail("ValidationError", "u-exponent out of range");
  auto& series = comp_[basis_index];
  if (series.empty()) series.resize(static_cast<size_t>(u_order_) + 1);
  series[static_cast<size_t>(u_exp)] = value;
  prune(basis_index);
}

void HPElement::prune(int basis_index) {
  auto it = comp_.find(basis_index);
  if (it == comp_.end()) return;
  bool live = std::any_of(it->second.begin(), it->second.end(),
                          [](const TauScalar& c) { return !c.is_zero(); });
  if (!live) comp_.erase(it);
}

CohClass HPElement::slice(int u_exp) const {
  if (u_exp < 0 || u_exp > u_order_)
    fail("ValidationError", "u-exponent out of range");
  std::map<int, TauScalar> coeffs;
  for (const auto& [idx, series] : comp_) {
    const TauScalar& c = series[static_cast<size_t>(u_exp)];
    if (!c.is_zero()) coeffs[idx] = c;
  }
  return CohClass(ring_, std::move(coeffs));
}

std::vector<int> HPElement::support() const {
  std::vector<int> out;
  out.reserve(comp_.size());
  for (const auto& [idx, series] : comp_) out.push_back(idx);
  return out;
}

bool HPElement::is_zero() const { return comp_.empty(); }

Parity HPElement::parity() const {
  bool even = false, odd = false;
  for (const auto& [idx, series] : comp_) {
    const BasisElement& b = ring_->basis_element(idx);
    (((b.p + b.q) % 2 == 0) ? even : odd) = true;
  }
  if (even && odd) return Parity::mixed;
  return odd ? Parity::odd : Parity::even;
}

HPElement& HPElement::operator+=(const HPElement& o) {
  check_same(*this, o);
  for (const auto& [idx, series] : o.comp_) {
    auto& mine = comp_[idx];
    if (mine.empty()) mine.resize(static_cast<size_t>(u_order_) + 1);
    for (size_t k = 0; k < series.size(); ++k) mine[k] += series[k];
    prune(idx);
  }
  return *this;
}

HPElement& HPElement::operator-=(const HPElement& o) {
  check_same(*this, o);
  for (const auto& [idx, series] : o.comp_) {
    auto& mine = comp_[idx];
    if (mine.empty()) mine.resize(static_cast<size_t>(u_order_) + 1);
    for (size_t k = 0; k < series.size(); ++k) mine[k] -= series[k];
    prune(idx);
  }
  return *this;
}

HPElement operator+(HPElement a, const HPElement& b) { return a += b; }
HPElement operator-(HPElement a, const HPElement& b) { return a -= b; }

HPElement HPElement::operator-() const {
  HPElement r(ring_, u_order_);
  for (const auto& [idx, series] : comp_) {
    auto& mine = r.comp_[idx];
    mine.resize(series.size());
    for (size_t k = 0; k < series.size(); ++k) mine[k] = -series[k];
  }
  return r;
}

HPElement operator*(const TauScalar& c, HPElement x) {
  if (c.is_zero()) return HPElement(x.ring_, x.u_order_);
  for (auto& [idx, series] : x.comp_)
    for (auto& coeff : series) coeff = c * coeff;
  return x;
}

bool HPElement::operator==(const HPElement& o) const {
  return ring_ == o.ring_ && u_order_ == o.u_order_ && comp_ == o.comp_;
}

HPElement hkr_embed(const CohClass& a, int u_order) {
  HPElement x(a.ring(), u_order);
  for (const auto& [idx, c] : a.coeffs()) x.set_coeff(idx, 0, c);
  return x;
}

HPElement u_mul(const HPElement& x, int k) {
  if (k < 0) fail("ValidationError", "u_mul wants a nonnegative power");
  HPElement r(x.ring(), x.u_order());
  for (int u = 0; u + k <= x.u_order(); ++u) {
    CohClass s = x.slice(u);
    for (const auto& [idx, c] : s.coeffs()) r.set_coeff(idx, u + k, c);
  }
  return r;
}

CohClass twist_class(const RingPtr& ring, TwistKind which) {
  // Pairing sweeps hit this once per twist application, so the square roots
  // are cached per ring. Each cached class holds its RingPtr, which pins the
  // ring alive and keeps the raw-pointer key from ever being reused.
  static std::mutex guard;
  static std::map<std::pair<const CohRing*, TwistKind>, CohClass> cache;
  std::lock_guard<std::mutex> lock(guard);
  auto key = std::make_pair(ring.get(), which);
  auto it = cache.find(key);
  if (it == cache.end()) {
    CohClass t = which == TwistKind::J
                     ? sqrt_todd(ring)
                     : sqrt_class(modified_todd_class(ring));
    it = cache.emplace(key, std::move(t)).first;
  }
  return it->second;
}

namespace {

HPElement cup_each_slice(const HPElement& x, const CohClass& t) {
  HPElement r(x.ring(), x.u_order());
  for (int u = 0; u <= x.u_order(); ++u) {
    CohClass s = cup(x.slice(u), t);
    for (const auto& [idx, c] : s.coeffs()) r.set_coeff(idx, u, c);
  }
  return r;
}

}  // namespace

HPElement twist(const HPElement& x, TwistKind which) {
  return cup_each_slice(x, twist_class(x.ring(), which));
}

HPElement untwist(const HPElement& x, TwistKind which) {
  return cup_each_slice(x, class_inverse(twist_class(x.ring(), which)));
}

HPElement vee(const HPElement& x) {
  HPElement r(x.ring(), x.u_order());
  for (int u = 0; u <= x.u_order(); ++u) {
    CohClass s = x.slice(u);
    for (const auto& [idx, c] : s.coeffs()) {
      const BasisElement& b = x.ring()->basis_element(idx);
      r.set_coeff(idx, u, (b.p % 2 == 0) ? c : -c);
    }
  }
  return r;
}

std::optional<int> u_valuation(const HPElement& x) {
  for (int u = 0; u <= x.u_order(); ++u)
    if (!x.slice(u).is_zero()) return u;
  return std::nullopt;
}

bool rational_check(const HPElement& x) {
  for (int idx : x.support()) {
    int p = x.ring()->basis_element(idx).p;
    for (int u = 0; u <= x.u_order(); ++u) {
      const TauScalar& c = x.coeff(idx, u);
      if (c.is_zero()) continue;
      if (c.min_exp() < -p || c.max_exp() > 0) return false;
    }
  }
  return true;
}

}  // namespace nchodge
