#include "nchodge/builtin_rings.hpp"

#include "nchodge/errors.hpp"
#include "nchodge/rational.hpp"

namespace nchodge::builtin {

RingPtr projective_space(int n) {
  if (n < 1) fail("ValidationError", "projective space needs n >= 1");
  RingBuilder b(n);
  for (int k = 0; k <= n; ++k) {
    std::string label = k == 0 ? "1" : (k == 1 ? "h" : "h^" + std::to_string(k));
    b.add_basis(label, k, k);
  }
  b.set_top(n == 1 ? "h" : "h^" + std::to_string(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i + j <= n) b.set_product(i, j, {{i + j, TauScalar(1)}});
  std::vector<std::map<int, TauScalar>> chern(n);
  for (int k = 1; k <= n; ++k)
    chern[k - 1] = {{k, TauScalar(binomial(Rational(n + 1), k))}};
  b.set_tangent(std::move(chern));
  return b.build();
}

RingPtr elliptic_curve() {
  RingBuilder b(1);
  b.add_basis("1", 0, 0);
  int dz = b.add_basis("dz", 1, 0);
  int dzb = b.add_basis("dzbar", 0, 1);
  int pt = b.add_basis("pt", 1, 1);
  b.set_top("pt");
  b.set_product(dz, dzb, {{pt, TauScalar(1)}});
  b.set_product(dzb, dz, {{pt, TauScalar(-1)}});
  b.set_tangent({{}});  // c_1 = 0
  return b.build();
}

RingPtr k3() {
  RingBuilder b(2);
  b.add_basis("1", 0, 0);
  int sigma = b.add_basis("sigma", 2, 0);
  int sigmabar = b.add_basis("sigmabar", 0, 2);
  std::vector<int> w(20);
  for (int i = 0; i < 20; ++i)
    w[i] = b.add_basis("w" + std::to_string(i + 1), 1, 1);
  int pt = b.add_basis("pt", 2, 2);
  b.set_top("pt");
  b.set_product(sigma, sigmabar, {{pt, TauScalar(1)}});
  b.set_product(sigmabar, sigma, {{pt, TauScalar(1)}});
  for (int i = 0; i < 20; ++i) b.set_product(w[i], w[i], {{pt, TauScalar(1)}});
  b.set_tangent({{}, {{pt, TauScalar(24)}}});
  return b.build();
}

RingPtr quintic_diamond() {
  RingBuilder b(3);
  b.add_basis("1", 0, 0);
  int e = b.add_basis("e", 1, 1);
  int f = b.add_basis("f", 2, 2);
  int pt = b.add_basis("pt", 3, 3);
  int omega = b.add_basis("omega", 3, 0);
  int omegabar = b.add_basis("omegabar", 0, 3);
  std::vector<int> a(101), bb(101);
  for (int i = 0; i < 101; ++i) a[i] = b.add_basis("a" + std::to_string(i + 1), 2, 1);
  for (int i = 0; i < 101; ++i) bb[i] = b.add_basis("b" + std::to_string(i + 1), 1, 2);
  b.set_top("pt");
  b.set_product(e, e, {{f, TauScalar(1)}});
  b.set_product(e, f, {{pt, TauScalar(5)}});
  b.set_product(f, e, {{pt, TauScalar(5)}});
  b.set_product(omega, omegabar, {{pt, TauScalar(1)}});
  b.set_product(omegabar, omega, {{pt, TauScalar(-1)}});
  for (int i = 0; i < 101; ++i) {
    b.set_product(a[i], bb[i], {{pt, TauScalar(1)}});
    b.set_product(bb[i], a[i], {{pt, TauScalar(-1)}});
  }
  b.set_tangent({{}, {{f, TauScalar(10)}}, {{pt, TauScalar(-200)}}});
  return b.build();
}

RingPtr formal_cy(int n, const std::map<std::pair<int, int>, int>& diamond) {
  if (n < 1) fail("BadDiamond", "dimension must be positive");
  auto h = [&](int p, int q) {
    auto it = diamond.find({p, q});
    return it == diamond.end() ? 0 : it->second;
  };
  for (const auto& [pq, count] : diamond) {
    auto [p, q] = pq;
    if (count < 0 || p < 0 || q < 0 || p > n || q > n)
      fail("BadDiamond", "invalid diamond entry");
    if (count != h(q, p) || count != h(n - p, n - q))
      fail("BadDiamond", "diamond is not symmetric");
  }
  if (h(0, 0) != 1 || h(n, n) != 1)
    fail("BadDiamond", "diamond needs one-dimensional (0,0) and (n,n) slots");

  RingBuilder b(n);
  std::map<std::pair<int, int>, std::vector<int>> slots;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      int count = h(p, q);
      for (int i = 0; i < count; ++i) {
        std::string label;
        if (p == 0 && q == 0)
          label = "1";
        else if (p == n && q == n)
          label = "pt";
        else
          label = "x" + std::to_string(p) + "_" + std::to_string(q) + "_" +
                  std::to_string(i + 1);
        slots[{p, q}].push_back(b.add_basis(label, p, q));
      }
    }
  b.set_top("pt");

  // Poincare pairing products between complementary slots. The slot with the
  // larger holomorphic degree carries the positive orientation.
  for (const auto& [pq, rows] : slots) {
    auto [p, q] = pq;
    if (p == 0 && q == 0) continue;
    std::pair<int, int> comp{n - p, n - q};
    if (comp.first == 0 && comp.second == 0) continue;
    if (pq < comp) continue;
    const auto& cols = slots.at(comp);
    int top = slots.at({n, n})[0];
    int sign = ((p + q) * (comp.first + comp.second)) % 2 ? -1 : 1;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (pq == comp) {
        b.set_product(rows[i], rows[i], {{top, TauScalar(1)}});
      } else {
        b.set_product(rows[i], cols[i], {{top, TauScalar(1)}});
        b.set_product(cols[i], rows[i], {{top, TauScalar(sign)}});
      }
    }
  }

  // Everything else that would land in a populated slot is out of model.
  for (const auto& [pq1, rows] : slots)
    for (const auto& [pq2, cols] : slots) {
      auto [p1, q1] = pq1;
      auto [p2, q2] = pq2;
      if ((p1 == 0 && q1 == 0) || (p2 == 0 && q2 == 0)) continue;
      int P = p1 + p2, Q = q1 + q2;
      if (P > n || Q > n || h(P, Q) == 0) continue;
      bool complementary = (P == n && Q == n);
      if (complementary) continue;
      for (int i : rows)
        for (int j : cols) b.set_unavailable(i, j);
    }

  std::vector<std::map<int, TauScalar>> chern(n);
  b.set_tangent(std::move(chern));
  return b.build();
}

RingPtr product_ring(const RingPtr& x, const RingPtr& y) {
  if (x->has_unavailable_products() || y->has_unavailable_products())
    fail("ProductUnavailable", "cannot form products of partial rings");
  int n = x->dimension() + y->dimension();
  RingBuilder b(n);
  size_t sx = x->size(), sy = y->size();
  auto id = [&](size_t i, size_t j) { return static_cast<int>(i * sy + j); };
  for (size_t i = 0; i < sx; ++i)
    for (size_t j = 0; j < sy; ++j) {
      const auto& bi = x->basis_element(static_cast<int>(i));
      const auto& bj = y->basis_element(static_cast<int>(j));
      b.add_basis(bi.label + "|" + bj.label, bi.p + bj.p, bi.q + bj.q);
    }
  const auto& topx = x->basis_element(x->top_index());
  const auto& topy = y->basis_element(y->top_index());
  b.set_top(topx.label + "|" + topy.label);

  for (size_t i1 = 0; i1 < sx; ++i1)
    for (size_t j1 = 0; j1 < sy; ++j1)
      for (size_t i2 = 0; i2 < sx; ++i2)
        for (size_t j2 = 0; j2 < sy; ++j2) {
          const auto* px = x->product(static_cast<int>(i1), static_cast<int>(i2));
          const auto* py = y->product(static_cast<int>(j1), static_cast<int>(j2));
          if (!px || !py || px->empty() || py->empty()) continue;
          const auto& bj1 = y->basis_element(static_cast<int>(j1));
          const auto& bi2 = x->basis_element(static_cast<int>(i2));
          int sign = koszul_sign(bj1, bi2);
          CohRing::ProductTerms terms;
          for (const auto& [rx, cx] : *px)
            for (const auto& [ry, cy] : *py) {
              TauScalar c = cx * cy;
              if (sign < 0) c = -c;
              terms.emplace_back(id(rx, ry), c);
            }
          b.set_product(id(i1, j1), id(i2, j2), std::move(terms));
        }

  if (x->has_tangent_data() && y->has_tangent_data()) {
    int nx = x->dimension(), ny = y->dimension();
    auto cx = [&](int k) -> std::map<int, TauScalar> {
      if (k == 0) return {{x->unit_index(), TauScalar(1)}};
      if (k > nx) return {};
      CohClass cls = x->tangent_chern(k);
      return cls.coeffs();
    };
    auto cy = [&](int k) -> std::map<int, TauScalar> {
      if (k == 0) return {{y->unit_index(), TauScalar(1)}};
      if (k > ny) return {};
      CohClass cls = y->tangent_chern(k);
      return cls.coeffs();
    };
    std::vector<std::map<int, TauScalar>> chern(n);
    for (int k = 1; k <= n; ++k) {
      std::map<int, TauScalar> ck;
      for (int i = 0; i <= k; ++i) {
        auto a = cx(i), bb = cy(k - i);
        for (const auto& [ia, ca] : a)
          for (const auto& [jb, cb] : bb) {
            int t = id(ia, jb);
            ck[t] += ca * cb;
            if (ck[t].is_zero()) ck.erase(t);
          }
      }
      chern[k - 1] = std::move(ck);
    }
    b.set_tangent(std::move(chern));
  }
  return b.build();
}

RingPtr by_uri(const std::string& uri) {
  std::string name = uri;
  if (name.rfind("builtin:", 0) == 0) name = name.substr(8);
  if (name == "p1") return projective_space(1);
  if (name == "p2") return projective_space(2);
  if (name == "p3") return projective_space(3);
  if (name == "p4") return projective_space(4);
  if (name == "e") return elliptic_curve();
  if (name == "k3") return k3();
  if (name == "quintic-diamond") return quintic_diamond();
  fail("ParseError", "unknown builtin ring '" + uri + "'");
}

}  // namespace nchodge::builtin
