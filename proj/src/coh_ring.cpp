#include "nchodge/coh_ring.hpp"

#include "nchodge/errors.hpp"

#include <algorithm>
#include <sstream>

namespace nchodge {

std::string ValidationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.ok) return c.name + ": " + c.detail;
  return "";
}

std::string ValidationReport::str() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << c.name << ": " << (c.ok ? "pass" : "FAIL");
    if (!c.ok && !c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  }
  return out.str();
}

std::optional<int> CohRing::index_of(const std::string& label) const {
  for (size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].label == label) return static_cast<int>(i);
  return std::nullopt;
}

const CohRing::ProductTerms* CohRing::product(int i, int j) const {
  auto it = products_.find({i, j});
  return it == products_.end() ? nullptr : &it->second;
}

CohClass CohRing::tangent_chern(int k) const {
  if (!has_tangent_data())
    fail("MissingTangentData", "ring has no tangent Chern classes");
  if (k < 1 || k > n_)
    fail("BadChernDegrees", "tangent Chern degree out of range");
  std::map<int, TauScalar> c;
  if (static_cast<size_t>(k) <= tangent_chern_.size())
    c = tangent_chern_[k - 1];
  return CohClass(shared_from_this(), std::move(c));
}

CohClass CohRing::c1() const { return tangent_chern(1); }

std::vector<int> CohRing::indices_in(int p, int q) const {
  std::vector<int> out;
  for (size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].p == p && basis_[i].q == q) out.push_back(static_cast<int>(i));
  return out;
}

std::map<std::pair<int, int>, int> CohRing::hodge_numbers() const {
  std::map<std::pair<int, int>, int> h;
  for (const auto& b : basis_) ++h[{b.p, b.q}];
  return h;
}

CohClass CohRing::zero_class() const { return CohClass(shared_from_this(), {}); }

CohClass CohRing::one() const {
  if (unit_ < 0) fail("ValidationError", "ring has no unit basis element");
  return basis_class(unit_);
}

CohClass CohRing::basis_class(int i) const {
  if (i < 0 || static_cast<size_t>(i) >= basis_.size())
    fail("ValidationError", "basis index out of range");
  return CohClass(shared_from_this(), {{i, TauScalar(1)}});
}

RingBuilder::RingBuilder(int dimension) : ring_(new CohRing()) {
  if (dimension < 0) fail("ValidationError", "negative ring dimension");
  ring_->n_ = dimension;
}

int RingBuilder::add_basis(const std::string& label, int p, int q) {
  ring_->basis_.push_back({label, p, q});
  return static_cast<int>(ring_->basis_.size()) - 1;
}

void RingBuilder::set_top(const std::string& label) { top_label_ = label; }

void RingBuilder::set_product(int i, int j, CohRing::ProductTerms terms) {
  auto in_range = [&](int k) {
    return k >= 0 && static_cast<size_t>(k) < ring_->basis_.size();
  };
  if (!in_range(i) || !in_range(j))
    fail("ValidationError", "product index out of range");
  CohRing::ProductTerms cleaned;
  for (auto& [r, c] : terms) {
    if (!in_range(r)) fail("ValidationError", "product target out of range");
    if (!c.is_zero()) cleaned.emplace_back(r, c);
  }
  ring_->products_[{i, j}] = std::move(cleaned);
}

void RingBuilder::set_unavailable(int i, int j) {
  ring_->unavailable_.insert({i, j});
}

void RingBuilder::set_tangent(std::vector<std::map<int, TauScalar>> chern) {
  ring_->tangent_chern_ = std::move(chern);
  if (ring_->tangent_chern_.empty()) ring_->tangent_chern_.resize(1);
}

RingPtr RingBuilder::build() {
  if (built_) fail("ValidationError", "builder already consumed");
  built_ = true;
  auto& r = *ring_;
  if (!top_label_.empty()) {
    for (size_t i = 0; i < r.basis_.size(); ++i)
      if (r.basis_[i].label == top_label_) r.top_ = static_cast<int>(i);
  }
  int unit = -1;
  int count = 0;
  for (size_t i = 0; i < r.basis_.size(); ++i)
    if (r.basis_[i].p == 0 && r.basis_[i].q == 0) {
      unit = static_cast<int>(i);
      ++count;
    }
  if (count == 1) {
    r.unit_ = unit;
    for (size_t i = 0; i < r.basis_.size(); ++i) {
      int ii = static_cast<int>(i);
      CohRing::ProductTerms identity{{ii, TauScalar(1)}};
      if (!r.products_.count({unit, ii})) r.products_[{unit, ii}] = identity;
      if (!r.products_.count({ii, unit})) r.products_[{ii, unit}] = identity;
    }
  }
  return ring_;
}

CohClass::CohClass(RingPtr ring, std::map<int, TauScalar> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (!ring_) fail("ValidationError", "class needs a ring");
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->first < 0 || static_cast<size_t>(it->first) >= ring_->size())
      fail("ValidationError", "class index out of range");
    it = it->second.is_zero() ? coeffs_.erase(it) : std::next(it);
  }
}

TauScalar CohClass::coeff(int i) const {
  auto it = coeffs_.find(i);
  return it == coeffs_.end() ? TauScalar() : it->second;
}

bool CohClass::is_unital() const {
  int u = ring_->unit_index();
  return u >= 0 && coeff(u) == TauScalar(1);
}

CohClass CohClass::component(int p, int q) const {
  std::map<int, TauScalar> out;
  for (const auto& [i, c] : coeffs_) {
    const auto& b = ring_->basis_element(i);
    if (b.p == p && b.q == q) out.emplace(i, c);
  }
  return CohClass(ring_, std::move(out));
}

static void require_same_ring(const CohClass& a, const CohClass& b) {
  if (a.ring() != b.ring())
    fail("RingMismatch", "classes live in different rings");
}

CohClass& CohClass::operator+=(const CohClass& o) {
  require_same_ring(*this, o);
  for (const auto& [i, c] : o.coeffs_) {
    auto it = coeffs_.find(i);
    if (it == coeffs_.end()) {
      coeffs_.emplace(i, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }
  return *this;
}

CohClass& CohClass::operator-=(const CohClass& o) {
  require_same_ring(*this, o);
  for (const auto& [i, c] : o.coeffs_) {
    auto it = coeffs_.find(i);
    if (it == coeffs_.end()) {
      coeffs_.emplace(i, -c);
    } else {
      it->second -= c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }
  return *this;
}

CohClass CohClass::operator-() const {
  std::map<int, TauScalar> out;
  for (const auto& [i, c] : coeffs_) out.emplace(i, -c);
  return CohClass(ring_, std::move(out));
}

CohClass operator*(const TauScalar& s, const CohClass& a) {
  std::map<int, TauScalar> out;
  if (!s.is_zero())
    for (const auto& [i, c] : a.coeffs()) out.emplace(i, s * c);
  return CohClass(a.ring(), std::move(out));
}

bool CohClass::operator==(const CohClass& o) const {
  return ring_ == o.ring_ && coeffs_ == o.coeffs_;
}

CohClass cup(const CohClass& a, const CohClass& b) {
  require_same_ring(a, b);
  const auto& ring = a.ring();
  std::map<int, TauScalar> out;
  for (const auto& [i, ci] : a.coeffs())
    for (const auto& [j, cj] : b.coeffs()) {
      if (ring->product_unavailable(i, j))
        fail("ProductUnavailable",
             "product of '" + ring->basis_element(i).label + "' and '" +
                 ring->basis_element(j).label + "' is not part of this model");
      const auto* terms = ring->product(i, j);
      if (!terms) continue;
      TauScalar f = ci * cj;
      for (const auto& [r, s] : *terms) {
        auto it = out.find(r);
        if (it == out.end()) {
          out.emplace(r, f * s);
        } else {
          it->second += f * s;
        }
      }
    }
  return CohClass(ring, std::move(out));
}

TauScalar integrate(const CohClass& a, IntegrationMode mode) {
  int top = a.ring()->top_index();
  if (top < 0) fail("ValidationError", "ring has no top class");
  TauScalar v = a.coeff(top);
  if (mode == IntegrationMode::algebraic) return v;
  int n = a.ring()->dimension();
  int sign = (n * (n - 1) / 2) % 2 ? -1 : 1;
  return TauScalar::tau_power(n, sign) * v;
}

int koszul_sign(const BasisElement& a, const BasisElement& b) {
  return ((a.p + a.q) * (b.p + b.q)) % 2 ? -1 : 1;
}

namespace {

// Exact nondegeneracy test for a matrix of TauScalars: the determinant is a
// Laurent polynomial in tau, so it vanishes identically iff it vanishes at
// more positive rational points than its exponent span.
bool nondegenerate(const std::vector<std::vector<TauScalar>>& m) {
  size_t dim = m.size();
  if (dim == 0) return true;
  int lo = 0, hi = 0;
  for (const auto& row : m)
    for (const auto& e : row)
      if (!e.is_zero()) {
        lo = std::min(lo, e.min_exp());
        hi = std::max(hi, e.max_exp());
      }
  int span = static_cast<int>(dim) * (hi - lo) + 1;
  for (int sample = 1; sample <= span; ++sample) {
    std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(dim));
    for (size_t i = 0; i < dim; ++i)
      for (size_t j = 0; j < dim; ++j)
        a[i][j] = m[i][j].eval(Rational(sample));
    // Gaussian elimination over the rationals
    bool singular = false;
    for (size_t col = 0; col < dim && !singular; ++col) {
      size_t piv = col;
      while (piv < dim && a[piv][col] == 0) ++piv;
      if (piv == dim) {
        singular = true;
        break;
      }
      std::swap(a[piv], a[col]);
      for (size_t r = col + 1; r < dim; ++r) {
        if (a[r][col] == 0) continue;
        Rational f = a[r][col] / a[col][col];
        for (size_t c = col; c < dim; ++c) a[r][c] -= f * a[col][c];
      }
    }
    if (!singular) return true;
  }
  return false;
}

std::string pair_label(const CohRing& r, int i, int j) {
  return "(" + r.basis_element(i).label + ", " + r.basis_element(j).label + ")";
}

}  // namespace

ValidationReport validate_ring(const RingPtr& ring) {
  ValidationReport rep;
  const auto& r = *ring;
  int n = r.dimension();

  {
    bool ok = true;
    std::string detail;
    std::set<std::string> labels;
    for (const auto& b : r.basis()) {
      if (b.p < 0 || b.p > n || b.q < 0 || b.q > n) {
        ok = false;
        detail = "bidegree of '" + b.label + "' outside 0.." + std::to_string(n);
        break;
      }
      if (!labels.insert(b.label).second) {
        ok = false;
        detail = "duplicate label '" + b.label + "'";
        break;
      }
    }
    if (ok && r.unit_index() < 0) {
      ok = false;
      detail = "no unique basis element in bidegree (0,0)";
    }
    if (ok && r.top_index() < 0) {
      ok = false;
      detail = "missing top class";
    }
    if (ok) {
      const auto& t = r.basis_element(r.top_index());
      if (t.p != n || t.q != n) {
        ok = false;
        detail = "top class not in bidegree (n,n)";
      }
    }
    rep.checks.push_back({"basis", ok, detail});
    if (!ok) return rep;
  }

  size_t sz = r.size();
  {
    bool ok = true;
    std::string detail;
    for (size_t i = 0; i < sz && ok; ++i)
      for (size_t j = 0; j < sz && ok; ++j) {
        const auto* terms = r.product(static_cast<int>(i), static_cast<int>(j));
        if (!terms) continue;
        const auto& bi = r.basis_element(static_cast<int>(i));
        const auto& bj = r.basis_element(static_cast<int>(j));
        for (const auto& [t, c] : *terms) {
          const auto& bt = r.basis_element(t);
          if (bt.p != bi.p + bj.p || bt.q != bi.q + bj.q) {
            ok = false;
            detail = "product " + pair_label(r, i, j) + " has a term '" +
                     bt.label + "' off bidegree (" +
                     std::to_string(bi.p + bj.p) + "," +
                     std::to_string(bi.q + bj.q) + ")";
            break;
          }
        }
      }
    rep.checks.push_back({"grading", ok, detail});
  }

  {
    bool ok = true;
    std::string detail;
    for (size_t i = 0; i < sz && ok; ++i)
      for (size_t j = i; j < sz && ok; ++j) {
        int ii = static_cast<int>(i), jj = static_cast<int>(j);
        bool ua = r.product_unavailable(ii, jj),
             ub = r.product_unavailable(jj, ii);
        if (ua != ub) {
          ok = false;
          detail = "availability of " + pair_label(r, ii, jj) + " is one-sided";
          break;
        }
        if (ua) continue;
        std::map<int, TauScalar> lhs, rhs;
        if (const auto* t = r.product(ii, jj))
          for (const auto& [k, c] : *t) lhs[k] = c;
        int sign = koszul_sign(r.basis_element(ii), r.basis_element(jj));
        if (const auto* t = r.product(jj, ii))
          for (const auto& [k, c] : *t) rhs[k] = sign < 0 ? -c : c;
        if (lhs != rhs) {
          ok = false;
          detail = "products " + pair_label(r, ii, jj) +
                   " violate the Koszul sign rule";
        }
      }
    rep.checks.push_back({"commutativity", ok, detail});
  }

  {
    bool ok = true;
    std::string detail;
    auto mul_basis = [&](int i, int j) {
      std::map<int, TauScalar> out;
      if (const auto* t = r.product(i, j))
        for (const auto& [k, c] : *t) out[k] = c;
      return out;
    };
    auto mul_class = [&](const std::map<int, TauScalar>& a, int k,
                         bool left) -> std::optional<std::map<int, TauScalar>> {
      std::map<int, TauScalar> out;
      for (const auto& [i, ci] : a) {
        int x = left ? k : i, y = left ? i : k;
        if (r.product_unavailable(x, y)) return std::nullopt;
        if (const auto* t = r.product(x, y))
          for (const auto& [tt, c] : *t) {
            out[tt] += ci * c;
            if (out[tt].is_zero()) out.erase(tt);
          }
      }
      return out;
    };
    for (size_t i = 0; i < sz && ok; ++i) {
      const auto& bi = r.basis_element(static_cast<int>(i));
      for (size_t j = 0; j < sz && ok; ++j) {
        const auto& bj = r.basis_element(static_cast<int>(j));
        if (bi.p + bj.p > n || bi.q + bj.q > n) continue;
        for (size_t k = 0; k < sz && ok; ++k) {
          const auto& bk = r.basis_element(static_cast<int>(k));
          if (bi.p + bj.p + bk.p > n || bi.q + bj.q + bk.q > n) continue;
          int ii = static_cast<int>(i), jj = static_cast<int>(j),
              kk = static_cast<int>(k);
          if (r.product_unavailable(ii, jj) || r.product_unavailable(jj, kk))
            continue;
          auto left = mul_class(mul_basis(ii, jj), kk, false);
          auto right = mul_class(mul_basis(jj, kk), ii, true);
          if (!left || !right) continue;
          if (*left != *right) {
            ok = false;
            detail = "(" + bi.label + " " + bj.label + ") " + bk.label +
                     " != " + bi.label + " (" + bj.label + " " + bk.label + ")";
          }
        }
      }
    }
    rep.checks.push_back({"associativity", ok, detail});
  }

  {
    bool ok = true;
    std::string detail;
    int u = r.unit_index();
    for (size_t i = 0; i < sz && ok; ++i) {
      int ii = static_cast<int>(i);
      for (bool left : {true, false}) {
        const auto* t = left ? r.product(u, ii) : r.product(ii, u);
        bool good = t && t->size() == 1 && (*t)[0].first == ii &&
                    (*t)[0].second == TauScalar(1);
        if (!good) {
          ok = false;
          detail = "unit does not act as identity on '" +
                   r.basis_element(ii).label + "'";
          break;
        }
      }
    }
    rep.checks.push_back({"unit", ok, detail});
  }

  {
    bool ok = true;
    std::string detail;
    int top = r.top_index();
    auto pairing = [&](int i, int j) {
      TauScalar v;
      if (const auto* t = r.product(i, j))
        for (const auto& [k, c] : *t)
          if (k == top) v += c;
      return v;
    };
    std::set<std::pair<int, int>> seen;
    for (const auto& [pq, count] : r.hodge_numbers()) {
      auto [p, q] = pq;
      std::pair<int, int> comp{n - p, n - q};
      if (seen.count(pq)) continue;
      seen.insert(pq);
      seen.insert(comp);
      auto rows = r.indices_in(p, q);
      auto cols = r.indices_in(comp.first, comp.second);
      if (rows.size() != cols.size()) {
        ok = false;
        detail = "bidegree (" + std::to_string(p) + "," + std::to_string(q) +
                 ") has no complementary block of equal rank";
        break;
      }
      std::vector<std::vector<TauScalar>> m(rows.size(),
                                            std::vector<TauScalar>(cols.size()));
      for (size_t a = 0; a < rows.size(); ++a)
        for (size_t b = 0; b < cols.size(); ++b)
          m[a][b] = pairing(rows[a], cols[b]);
      if (!nondegenerate(m)) {
        ok = false;
        detail = "Poincare pairing degenerate on bidegree (" +
                 std::to_string(p) + "," + std::to_string(q) + ")";
        break;
      }
    }
    rep.checks.push_back({"poincare", ok, detail});
  }

  return rep;
}

std::string CohClass::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  int unit = ring_->unit_index();
  for (const auto& [i, c] : coeffs_) {
    std::string cs = c.str();
    bool negative = false;
    if (c.terms().size() == 1) {
      if (cs[0] == '-') {
        negative = true;
        cs = cs.substr(1);
      }
    } else {
      cs = "(" + cs + ")";
    }
    std::string body =
        (i == unit) ? cs : cs + " " + ring_->basis_element(i).label;
    if (first) {
      out << (negative ? "-" : "") << body;
      first = false;
    } else {
      out << (negative ? " - " : " + ") << body;
    }
  }
  return out.str();
}

}  // namespace nchodge
