#include "nchodge/pairing.hpp"

#include "nchodge/errors.hpp"

#include <algorithm>

namespace nchodge {

int residue_sign(int n) { return (n * (n + 1) / 2) % 2 == 0 ? 1 : -1; }

namespace {

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a != b) fail("RingMismatch", "pairing arguments live over different rings");
}

void require_homogeneous(const HPElement& x, const char* slot) {
  if (x.parity() == Parity::mixed)
    fail("MixedParity", std::string("pairing ") + slot +
                            " argument mixes even and odd total degrees");
}

// sign * sum_m u^m sum_{i+j=m} (-1)^j integral_alg(a_i cup b_j [cup extra]).
PairingValue collect(const HPElement& a, const HPElement& b,
                     const CohClass* extra, int sign) {
  int order = std::min(a.u_order(), b.u_order());
  PairingValue out(order);
  for (int m = 0; m <= order; ++m) {
    TauScalar c;
    for (int i = 0; i <= m; ++i) {
      int j = m - i;
      CohClass prod = cup(a.slice(i), b.slice(j));
      if (extra) prod = cup(prod, *extra);
      TauScalar v = integrate(prod, IntegrationMode::algebraic);
      c += (j % 2 == 0) ? v : -v;
    }
    if (sign < 0) c = -c;
    if (!c.is_zero()) out.set_coeff(m, c);
  }
  return out;
}

}  // namespace

PairingValue higher_residue(const HPElement& a, const HPElement& b) {
  require_same_ring(a.ring(), b.ring());
  require_homogeneous(a, "first");
  require_homogeneous(b, "second");
  HPElement ja = twist(a, TwistKind::J);
  HPElement jvb = twist(vee(b), TwistKind::J);
  return collect(ja, jvb, nullptr, residue_sign(a.ring()->dimension()));
}

PairingValue canonical_pairing(const HPElement& a, const HPElement& b) {
  require_same_ring(a.ring(), b.ring());
  CohClass td = todd_class(a.ring());
  return collect(a, b, &td, residue_sign(a.ring()->dimension()));
}

TauScalar mukai_pairing(const BundleData& e, const BundleData& f) {
  require_same_ring(e.ring, f.ring);
  CohClass integrand =
      cup(cup(ch_dual(chern_character(e)), chern_character(f)),
          todd_class(e.ring));
  return integrate(integrand, IntegrationMode::algebraic);
}

TauScalar hrr_chi(const BundleData& e, const BundleData& f) {
  TauScalar classical = mukai_pairing(e, f);

  const RingPtr& r = e.ring;
  CohClass integrand = cup(cup(nc_chern_character(bundle_dual(e)),
                               nc_chern_character(f)),
                           nc_normalize(todd_class(r)));
  TauScalar normalized = integrate(integrand, IntegrationMode::analytic);
  if (residue_sign(r->dimension()) < 0) normalized = -normalized;

  if (!(classical == normalized))
    fail("RouteMismatch", "chi routes disagree: classical " + classical.str() +
                              " vs normalized " + normalized.str());
  return classical;
}

PairingValue symmetry_defect(const HPElement& a, const HPElement& b) {
  require_same_ring(a.ring(), b.ring());
  if (!a.ring()->c1().is_zero())
    fail("NotCalabiYau", "residue-pairing symmetry is only asserted at c_1 = 0");
  require_homogeneous(a, "first");
  require_homogeneous(b, "second");
  PairingValue fwd = higher_residue(a, b);
  PairingValue bwd = higher_residue(b, a);
  int n = a.ring()->dimension();
  int pa = a.parity() == Parity::odd ? 1 : 0;
  int pb = b.parity() == Parity::odd ? 1 : 0;
  bool flip = (n + pa * pb) % 2 != 0;
  return flip ? fwd + bwd : fwd - bwd;
}

}  // namespace nchodge
