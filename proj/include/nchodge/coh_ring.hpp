#pragma once

#include "nchodge/tau_scalar.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace nchodge {

struct BasisElement {
  std::string label;
  int p = 0;
  int q = 0;
};

struct ValidationReport {
  struct Check {
    std::string name;
    bool ok;
    std::string detail;
  };
  std::vector<Check> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
  // "name: detail" of the first failing check, empty when all pass.
  std::string first_failure() const;
  std::string str() const;
};

class CohClass;

// Bigraded cohomology ring with exact structure constants. Instances are
// immutable after construction and shared through shared_ptr; class-level
// operations compare ring identity by pointer. A product entry may be marked
// "unavailable" (partial Hodge-diamond models); cup then refuses with
// ProductUnavailable instead of silently returning zero.
class CohRing : public std::enable_shared_from_this<CohRing> {
 public:
  using ProductTerms = std::vector<std::pair<int, TauScalar>>;

  int dimension() const { return n_; }
  size_t size() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const BasisElement& basis_element(int i) const { return basis_.at(i); }
  int top_index() const { return top_; }
  int unit_index() const { return unit_; }
  std::optional<int> index_of(const std::string& label) const;

  // nullptr means the product is zero (or unavailable; check separately).
  const ProductTerms* product(int i, int j) const;
  bool product_unavailable(int i, int j) const {
    return unavailable_.count({i, j}) > 0;
  }
  bool has_unavailable_products() const { return !unavailable_.empty(); }

  bool has_tangent_data() const { return !tangent_chern_.empty(); }
  // c_k of the tangent bundle, k = 1..dimension.
  CohClass tangent_chern(int k) const;
  CohClass c1() const;

  std::vector<int> indices_in(int p, int q) const;
  std::map<std::pair<int, int>, int> hodge_numbers() const;

  CohClass zero_class() const;
  CohClass one() const;
  CohClass basis_class(int i) const;

  friend class RingBuilder;

 private:
  CohRing() = default;
  int n_ = 0;
  std::vector<BasisElement> basis_;
  int top_ = -1;
  int unit_ = -1;
  std::map<std::pair<int, int>, ProductTerms> products_;
  std::set<std::pair<int, int>> unavailable_;
  // tangent_chern_[k-1] holds c_k as basis-index -> coefficient; an empty
  // vector means no tangent data at all.
  std::vector<std::map<int, TauScalar>> tangent_chern_;
};

using RingPtr = std::shared_ptr<const CohRing>;

class RingBuilder {
 public:
  explicit RingBuilder(int dimension);
  int add_basis(const std::string& label, int p, int q);
  void set_top(const std::string& label);
  void set_product(int i, int j, CohRing::ProductTerms terms);
  void set_unavailable(int i, int j);
  // chern[k-1] = c_k as index -> coefficient map; pass a vector of empty maps
  // for a bundle with vanishing Chern classes (still counts as tangent data).
  void set_tangent(std::vector<std::map<int, TauScalar>> chern);
  // Finalizes the ring: resolves the unit (unique (0,0) element, if any) and
  // fills in the implied unit products. No validation happens here.
  RingPtr build();

 private:
  std::shared_ptr<CohRing> ring_;
  std::string top_label_;
  bool built_ = false;
};

class CohClass {
 public:
  CohClass(RingPtr ring, std::map<int, TauScalar> coeffs);

  const RingPtr& ring() const { return ring_; }
  const std::map<int, TauScalar>& coeffs() const { return coeffs_; }
  TauScalar coeff(int i) const;
  bool is_zero() const { return coeffs_.empty(); }
  // Coefficient of the unit equals 1 (other components unconstrained).
  bool is_unital() const;

  // Component in bidegree (p,q), and the diagonal truncation helpers.
  CohClass component(int p, int q) const;

  CohClass& operator+=(const CohClass& o);
  CohClass& operator-=(const CohClass& o);
  friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
  friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
  CohClass operator-() const;
  friend CohClass operator*(const TauScalar& s, const CohClass& a);
  bool operator==(const CohClass& o) const;
  bool operator!=(const CohClass& o) const { return !(*this == o); }

  std::string str() const;

 private:
  RingPtr ring_;
  std::map<int, TauScalar> coeffs_;
};

// Bilinear extension of the structure constants. Errors: RingMismatch when
// the arguments live in different rings, ProductUnavailable when a needed
// entry is declared unavailable.
CohClass cup(const CohClass& a, const CohClass& b);

enum class IntegrationMode { algebraic, analytic };

// Algebraic: coefficient of the top basis element (normalized so that the
// top class integrates to 1). Analytic: (-1)^{n(n-1)/2} tau^n times that.
TauScalar integrate(const CohClass& a, IntegrationMode mode);

// Checks grading, graded commutativity, associativity, unit behaviour, and
// blockwise Poincare nondegeneracy of (a,b) -> integrate_alg(cup(a,b)).
ValidationReport validate_ring(const RingPtr& ring);

int koszul_sign(const BasisElement& a, const BasisElement& b);

}  // namespace nchodge
