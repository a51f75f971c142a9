// Finite complete lattices with join-preserving maps: the non-linear backend.
// The tensor of two lattices is the lattice of bi-ideals (down-closed subsets
// of the product, closed under coordinatewise joins) enumerated directly, and
// both internal homs coincide with the pointwise-ordered lattice of
// join-preserving maps, so the model is a symmetric r-category whose duality
// is order reversal. Quantales (lattice-carried algebras) get a dedicated
// bimodule category with elementwise action tables: routing their hom actions
// through tensors of hom objects would blow up even at carrier size four.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gvforge/category.hpp"

namespace gvforge::suplat {

// a construction would produce a lattice past the configured bound
struct SizeExceeded : cat::EngineError {
  using cat::EngineError::EngineError;
};

struct FinLattice {
  int n = 0;
  std::vector<std::uint8_t> leq;  // n x n row-major: leq[a*n+b] = (a <= b)
  std::vector<int> join;          // n x n join table
  int bot = 0, top = 0;
  std::string key;

  bool le(int a, int b) const { return leq[a * n + b] != 0; }
  int v(int a, int b) const { return join[a * n + b]; }
  int vee(const std::vector<int>& s) const;  // join of a set; bottom when empty
  int meet(int a, int b) const;
  std::vector<int> irreducibles() const;  // join-irreducible elements, ascending
};

// validating constructor: partial order, binary joins, bottom
FinLattice make_lattice(int n, std::vector<std::uint8_t> leq);
FinLattice chain(int k);
FinLattice powerset(int k);             // subsets of {0..k-1} as bitmasks
FinLattice diamond(int atoms);          // bounds over an antichain
FinLattice op_dual(const FinLattice&);  // order reversal; an involution

bool is_sup_map(const FinLattice& s, const FinLattice& t, const std::vector<int>& img);
// every join-preserving image table s -> t, deterministically ordered; the cap
// bounds the assignment search space
std::vector<std::vector<int>> sup_maps(const FinLattice& s, const FinLattice& t,
                                       int cap = 1 << 20);

struct SupOb final : cat::ObData {
  FinLattice lat;
  std::string key() const override { return lat.key; }
  int dim() const override { return lat.n; }
};

class SupLatModel final : public cat::Model {
 public:
  explicit SupLatModel(int max_size = 4096);

  std::string name() const override;
  cat::Ob mk_ob(FinLattice) const;
  const FinLattice& data(const cat::Ob&) const;

  cat::Ob unit() const override;  // the two-element chain
  cat::Ob tensor_ob(const cat::Ob&, const cat::Ob&) const override;
  cat::Ob homl_ob(const cat::Ob& x, const cat::Ob& y) const override;
  cat::Ob homr_ob(const cat::Ob& y, const cat::Ob& x) const override;

  cat::Mor id(const cat::Ob&) const override;
  cat::Mor compose(const cat::Mor& g, const cat::Mor& f) const override;
  cat::Mor tensor_mor(const cat::Mor&, const cat::Mor&) const override;

  cat::Mor alpha(const cat::Ob&, const cat::Ob&, const cat::Ob&) const override;
  cat::Mor alpha_inv(const cat::Ob&, const cat::Ob&, const cat::Ob&) const override;
  cat::Mor lunit(const cat::Ob&) const override;
  cat::Mor lunit_inv(const cat::Ob&) const override;
  cat::Mor runit(const cat::Ob&) const override;
  cat::Mor runit_inv(const cat::Ob&) const override;

  cat::Mor transpose_l(const cat::Ob&, const cat::Ob&, const cat::Ob&,
                       const cat::Mor&) const override;
  cat::Mor untranspose_l(const cat::Ob&, const cat::Ob&, const cat::Ob&,
                         const cat::Mor&) const override;
  cat::Mor transpose_r(const cat::Ob&, const cat::Ob&, const cat::Ob&,
                       const cat::Mor&) const override;
  cat::Mor untranspose_r(const cat::Ob&, const cat::Ob&, const cat::Ob&,
                         const cat::Mor&) const override;

  bool has_braiding() const override { return true; }
  cat::Mor braid(const cat::Ob&, const cat::Ob&) const override;

  // hom functoriality and reshuffles act on the stored tables directly; the
  // generic tensor-and-transpose route would materialize bi-ideal lattices
  // that blow past the size cap as soon as the hom carriers grow
  cat::Mor homl_mor(const cat::Ob& x, const cat::Mor& g) const override;
  cat::Mor homl_mor_contra(const cat::Mor& f, const cat::Ob& z) const override;
  cat::Mor homr_mor(const cat::Mor& g, const cat::Ob& x) const override;
  cat::Mor homr_mor_contra(const cat::Ob& z, const cat::Mor& f) const override;
  cat::Mor beta(const cat::Ob& x, const cat::Ob& y, const cat::Ob& z) const override;
  cat::Mor betabar(const cat::Ob& x, const cat::Ob& y, const cat::Ob& z) const override;
  cat::Mor iota(const cat::Ob& x, const cat::Ob& y, const cat::Ob& z) const override;

  Sub equalizer(const cat::Mor& f, const cat::Mor& g) const override;
  Quot coequalizer(const cat::Mor& f, const cat::Mor& g) const override;
  cat::Mor solve_through_epi(const cat::Mor& e, const cat::Mor& f) const override;
  cat::Mor solve_through_mono(const cat::Mor& m, const cat::Mor& f) const override;

  std::vector<cat::Mor> hom_basis(const cat::Ob& x, const cat::Ob& y) const override;

  // plumbing shared with the quantale layer and with tests
  int pure_index(const cat::Ob& x, const cat::Ob& y, int a, int b) const;
  const std::vector<std::pair<int, int>>& tensor_gens(const cat::Ob& x, const cat::Ob& y,
                                                      int e) const;
  const std::vector<int>& hom_table(const cat::Ob& x, const cat::Ob& y, int e) const;
  int hom_index(const cat::Ob& x, const cat::Ob& y, const std::vector<int>& tab) const;

 private:
  struct TensData {
    cat::Ob ob;
    std::vector<int> pure;                              // pure[a*ny+b] -> element
    std::vector<std::vector<std::pair<int, int>>> gens;  // bi-ideal members per element
  };
  struct HomData {
    cat::Ob ob;
    std::vector<std::vector<int>> tab;
    std::map<std::vector<int>, int> index;
  };

  int max_size_;
  cat::Ob unit_;
  mutable std::map<std::string, TensData> tens_;
  mutable std::map<std::string, HomData> homs_;

  const FinLattice& cast(const cat::Ob&, const char* who) const;
  const TensData& tens(const cat::Ob&, const cat::Ob&) const;
  const HomData& hom(const cat::Ob&, const cat::Ob&) const;
};

// lattice-carried algebra: associative join-bilinear product with unit element
struct Quantale {
  FinLattice lat;
  std::vector<int> prod;  // n x n
  int unit = 0;
  std::string key;

  int mul(int a, int b) const { return prod[a * lat.n + b]; }
};
Quantale make_quantale(FinLattice lat, std::vector<int> prod, int unit);
// subsets of a finite group under elementwise products; mult is the group table
Quantale group_powerset(const std::vector<std::vector<int>>& mult);
// meets as product, top as unit; rejects lattices where meet is not join-bilinear
Quantale meet_quantale(const FinLattice& lat);

struct QBimodule {
  FinLattice lat;
  std::vector<int> l;  // l[q*lat.n+m]: left action
  std::vector<int> r;  // r[m*qn+q]: right action
};
QBimodule make_qbimodule(const Quantale&, FinLattice lat, std::vector<int> l,
                         std::vector<int> r);
QBimodule regular(const Quantale&);
// the opposite lattice with residual actions: the dualizing candidate
QBimodule dual_regular(const Quantale&);

struct QBimodOb final : cat::ObData {
  QBimodule b;
  std::string k;
  std::string key() const override { return k; }
  int dim() const override { return b.lat.n; }
};

// bimodules over a quantale: tensor over the quantale is the quotient of the
// lattice tensor by the congruence generated by the pure relators
// (m.q, n) ~ (m, q.n); both internal homs are the sublattices of one-sidedly
// linear maps, carrying the precomposition/postcomposition actions
class QuantaleBimod final : public cat::Model {
 public:
  explicit QuantaleBimod(Quantale q, int max_size = 4096);

  std::string name() const override;
  const Quantale& quantale() const { return q_; }
  cat::Ob mk_ob(QBimodule) const;  // validates the action laws
  const QBimodule& data(const cat::Ob&) const;
  cat::Ob dualizing() const;

  cat::Ob unit() const override;  // the regular bimodule
  cat::Ob tensor_ob(const cat::Ob&, const cat::Ob&) const override;
  cat::Ob homl_ob(const cat::Ob& x, const cat::Ob& y) const override;
  cat::Ob homr_ob(const cat::Ob& y, const cat::Ob& x) const override;

  cat::Mor id(const cat::Ob&) const override;
  cat::Mor compose(const cat::Mor& g, const cat::Mor& f) const override;
  cat::Mor tensor_mor(const cat::Mor&, const cat::Mor&) const override;

  cat::Mor alpha(const cat::Ob&, const cat::Ob&, const cat::Ob&) const override;
  cat::Mor alpha_inv(const cat::Ob&, const cat::Ob&, const cat::Ob&) const override;
  cat::Mor lunit(const cat::Ob&) const override;
  cat::Mor lunit_inv(const cat::Ob&) const override;
  cat::Mor runit(const cat::Ob&) const override;
  cat::Mor runit_inv(const cat::Ob&) const override;

  cat::Mor transpose_l(const cat::Ob&, const cat::Ob&, const cat::Ob&,
                       const cat::Mor&) const override;
  cat::Mor untranspose_l(const cat::Ob&, const cat::Ob&, const cat::Ob&,
                         const cat::Mor&) const override;
  cat::Mor transpose_r(const cat::Ob&, const cat::Ob&, const cat::Ob&,
                       const cat::Mor&) const override;
  cat::Mor untranspose_r(const cat::Ob&, const cat::Ob&, const cat::Ob&,
                         const cat::Mor&) const override;

  Sub equalizer(const cat::Mor& f, const cat::Mor& g) const override;
  Quot coequalizer(const cat::Mor& f, const cat::Mor& g) const override;
  cat::Mor solve_through_epi(const cat::Mor& e, const cat::Mor& f) const override;
  cat::Mor solve_through_mono(const cat::Mor& m, const cat::Mor& f) const override;

  std::vector<cat::Mor> hom_basis(const cat::Ob& x, const cat::Ob& y) const override;

  // class of the pure tensor m (x) n in x tensor-over-Q y
  int pure_index(const cat::Ob& x, const cat::Ob& y, int m, int n) const;

 private:
  struct QTens {
    cat::Ob ob;
    std::vector<int> pure;
    std::vector<std::vector<std::pair<int, int>>> gens;
  };
  struct QHom {
    cat::Ob ob;
    std::vector<std::vector<int>> tab;
    std::map<std::vector<int>, int> index;
  };

  Quantale q_;
  SupLatModel base_;
  cat::Ob unit_;
  mutable std::map<std::string, QTens> tens_;
  mutable std::map<std::string, QHom> homl_, homr_;

  const QBimodule& cast(const cat::Ob&, const char* who) const;
  const QTens& tens(const cat::Ob&, const cat::Ob&) const;
  const QHom& homl(const cat::Ob&, const cat::Ob&) const;
  const QHom& homr(const cat::Ob&, const cat::Ob&) const;
};

}  // namespace gvforge::suplat
