// Bimodules over an algebra internal to a linear closed monoidal model, and
// the monoidal category they form: tensor over the algebra by coequalizer
// descent, internal homs by equalizer restriction, structure maps obtained by
// factoring base composites through the canonical projections/inclusions.
// Every factorization is solved exactly and re-checked, so an ill-defined
// descent throws instead of producing a wrong matrix.
//
// Also here: the coalgebra structures carried by the duals of the algebra,
// the comparison isomorphisms (braided or supplied) that turn the dual into a
// dualizing bimodule, and the lax forgetful functor with its form.
#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "gvforge/canon.hpp"
#include "gvforge/category.hpp"
#include "gvforge/gv.hpp"

namespace gvforge::bimod {

using cat::Mor;
using cat::Ob;

// f : D'(A) → D(A) fails to intertwine the dual comultiplications
struct ComultiplicativityFailed : cat::EngineError {
  using EngineError::EngineError;
};

struct Algebra {
  const cat::Model* base = nullptr;
  Ob a;
  Mor mu;   // a⊗a → a
  Mor eta;  // 1 → a
  bool commutative = false;
};
// checks associativity, both unit laws, and (when flagged) μ∘c = μ
Algebra make_algebra(const cat::Model&, Ob a, Mor mu, Mor eta, bool commutative = false);

struct Bimodule {
  Ob ob;
  Mor l;  // a⊗m → m
  Mor r;  // m⊗a → m
};
// checks both action laws and that the two actions commute
Bimodule make_bimodule(const Algebra&, Ob m, Mor l, Mor r);
Bimodule regular(const Algebra&);  // (a, μ, μ)

struct LeftModule {
  Ob ob;
  Mor l;
};
LeftModule make_left_module(const Algebra&, Ob m, Mor l);

// the action is invariant under the double braiding: l = l∘c_{M,A}∘c_{A,M}
bool is_local(const Algebra&, const LeftModule&);

// right action grafted on through the braiding: r := l∘c±_{M,A}
Bimodule embed_left(const Algebra&, const LeftModule&, bool plus);

// algebra maps into the internal endomorphism objects of a bimodule
Mor r_underline(const Algebra&, const Bimodule& m);  // A → (M⊸M), from r^M
Mor l_underline(const Algebra&, const Bimodule& m);  // A → (M⟜M), from l^M

// bimodule structures on the internal homs of the base, via internal
// composition with the maps above
Bimodule induced_hom_actions(const Algebra&, const Bimodule& m,
                             const Bimodule& n);  // on M⊸N
Bimodule induced_homr_actions(const Algebra&, const Bimodule& m,
                              const Bimodule& n);  // on N⟜M

class BimodCategory final : public cat::Model {
 public:
  explicit BimodCategory(Algebra a);
  // descends the base braiding c± onto the tensor over the algebra; requires
  // a commutative algebra in a braided base
  BimodCategory(Algebra a, bool braided, bool plus);

  std::string name() const override;
  std::uint32_t prime() const override { return base().prime(); }

  const Algebra& algebra() const { return a_; }
  const cat::Model& base() const { return *a_.base; }

  cat::Ob mk_ob(const Bimodule&) const;
  const Bimodule& data(const cat::Ob&) const;

  // base-level projection M⊗N ↠ M⊗_A N and hom-equalizer inclusions
  Mor proj(const cat::Ob& x, const cat::Ob& y) const;
  Mor incl_l(const cat::Ob& x, const cat::Ob& y) const;  // (x⊸_A y) ↪ (X⊸Y)
  Mor incl_r(const cat::Ob& y, const cat::Ob& x) const;  // (y⟜_A x) ↪ (Y⟜X)

  cat::Ob unit() const override;
  cat::Ob tensor_ob(const cat::Ob&, const cat::Ob&) const override;
  cat::Ob homl_ob(const cat::Ob& x, const cat::Ob& y) const override;
  cat::Ob homr_ob(const cat::Ob& y, const cat::Ob& x) const override;

  Mor id(const cat::Ob&) const override;
  Mor compose(const Mor& g, const Mor& f) const override;
  Mor tensor_mor(const Mor&, const Mor&) const override;

  Mor alpha(const cat::Ob&, const cat::Ob&, const cat::Ob&) const override;
  Mor alpha_inv(const cat::Ob&, const cat::Ob&, const cat::Ob&) const override;
  Mor lunit(const cat::Ob&) const override;
  Mor lunit_inv(const cat::Ob&) const override;
  Mor runit(const cat::Ob&) const override;
  Mor runit_inv(const cat::Ob&) const override;

  Mor transpose_l(const cat::Ob&, const cat::Ob&, const cat::Ob&,
                  const Mor&) const override;
  Mor untranspose_l(const cat::Ob&, const cat::Ob&, const cat::Ob&,
                    const Mor&) const override;
  Mor transpose_r(const cat::Ob&, const cat::Ob&, const cat::Ob&,
                  const Mor&) const override;
  Mor untranspose_r(const cat::Ob&, const cat::Ob&, const cat::Ob&,
                    const Mor&) const override;

  bool has_braiding() const override { return braided_; }
  Mor braid(const cat::Ob&, const cat::Ob&) const override;

  Sub equalizer(const Mor& f, const Mor& g) const override;
  Quot coequalizer(const Mor& f, const Mor& g) const override;
  Mor solve_through_epi(const Mor& e, const Mor& f) const override;
  Mor solve_through_mono(const Mor& m, const Mor& f) const override;

  std::vector<Mor> hom_basis(const cat::Ob& x, const cat::Ob& y) const override;

 private:
  struct Tens {
    Quot q;       // base-level coequalizer of the action difference
    cat::Ob ob;   // the bimodule object on q.ob
  };
  struct Homs {
    Sub s;        // base-level equalizer of the action comparison pair
    cat::Ob ob;   // the bimodule object on s.ob
  };
  const Tens& tens(const cat::Ob& x, const cat::Ob& y) const;
  const Homs& homl(const cat::Ob& x, const cat::Ob& y) const;
  const Homs& homr(const cat::Ob& y, const cat::Ob& x) const;
  Mor lower(const Mor& f) const;  // same carrier, base endpoints
  static Mor raise(const cat::Ob& src, const cat::Ob& tgt, const Mor& f);

  Algebra a_;
  bool braided_ = false;
  bool plus_ = true;
  std::string alg_tag_;
  cat::Ob unit_;
  mutable std::unordered_map<std::string, Tens> tcache_;
  mutable std::unordered_map<std::string, Homs> hcache_, gcache_;
};

// coalgebra carried by a dual of the algebra
struct DualCoalgebra {
  Ob ob;
  Mor delta;  // ob → ob⅋ob
  Mor eps;    // ob → K
};
DualCoalgebra dual_algebra_coalgebra(const gv::Duality&, const Algebra&);    // on D(A)
DualCoalgebra codual_algebra_coalgebra(const gv::Duality&, const Algebra&);  // on D'(A)

// D'(A) with its multiplication-induced left action and the right action
// pulled back along f : D'(A) → D(A); throws ComultiplicativityFailed when f
// does not intertwine the dual comultiplications
Bimodule bimodule_from_coalgebra_iso(const gv::Duality&, const Algebra&, const Mor& f);

// braided comparison maps φ± = c̃±_{A,K} : D'(A) → D(A), the two right actions
// on D'(A) they compare, the reference right action on D(A), and the exact
// intertwining verdicts φ±∘r± = r_dual∘(φ±⊗A)
struct PhiPM {
  Mor plus, minus;
  Mor r_plus, r_minus;
  Mor r_dual;
  bool intertwines_plus = false;
  bool intertwines_minus = false;
};
PhiPM phi_pm_algebra(const gv::Duality&, const Algebra&);

// forgetful functor to the base with its lax structure (unit map, projections)
gv::LaxFunctor forgetful(const BimodCategory&);
// the same functor with the form γ_K∘D'(η) on a dualizing bimodule whose
// carrier is D'(A)
gv::FormFunctor forgetful_form(const BimodCategory&, const gv::Duality& base,
                               const gv::Duality& lifted);

}  // namespace gvforge::bimod
