// Duality engine attached to a model with a chosen dualizing object K: the two
// contravariant dual functors D = K⟜(−) and D' = (−)⊸K, the double-dual
// comparison maps, the derived multiplicative disjunction ⅋ with its
// associator/unitors/distributors, one-sided duals, braided comparison maps,
// and the functor-level transformations used by the lifting checks.
//
// Everything here is a finite composite of model primitives and exact carrier
// inversions; there are no approximations. Composites that require an inverse
// throw cat::NotInvertible when the underlying carrier is singular, which the
// verify_* entry points convert into a negative verdict.
#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gvforge/canon.hpp"
#include "gvforge/category.hpp"

namespace gvforge::gv {

using cat::Mor;
using cat::Ob;

class Duality {
 public:
  Duality(const cat::Model& m, Ob k);

  const cat::Model& model() const { return *m_; }
  const Ob& k() const { return k_; }

  // contravariant dual functors
  Ob D(const Ob& x) const;   // K ⟜ x
  Ob Dp(const Ob& x) const;  // x ⊸ K
  Mor D_mor(const Mor& f) const;   // D f : D(tgt f) → D(src f)
  Mor Dp_mor(const Mor& f) const;  // D' f : D'(tgt f) → D'(src f)

  // double-dual comparison maps; K is dualizing iff they are invertible
  Mor d(const Ob& x) const;       // x → D'D x
  Mor dtilde(const Ob& x) const;  // x → DD' x
  Mor d_inv(const Ob& x) const;
  Mor dtilde_inv(const Ob& x) const;
  bool verify_dualizer(const std::vector<Ob>& probes, std::string* why = nullptr) const;

  // multiplicative disjunction x ⅋ y := D(D'y ⊗ D'x)
  Ob par_ob(const Ob& x, const Ob& y) const;
  Mor par_mor(const Mor& f, const Mor& g) const;
  Mor alpha_par(const Ob& x, const Ob& y, const Ob& z) const;  // (x⅋y)⅋z → x⅋(y⅋z)
  Mor alpha_par_inv(const Ob& x, const Ob& y, const Ob& z) const;
  Mor u() const;       // 1 → D K
  Mor uprime() const;  // 1 → D' K
  Mor lpar(const Ob& x) const;  // K⅋x → x
  Mor lpar_inv(const Ob& x) const;
  Mor rpar(const Ob& x) const;  // x⅋K → x
  Mor rpar_inv(const Ob& x) const;

  // identifications of ⅋ with the one-sided homs
  Mor par_from_homr(const Ob& x, const Ob& y) const;  // (x ⟜ D'y) → x⅋y
  Mor par_from_homl(const Ob& x, const Ob& y) const;  // (Dx ⊸ y) → x⅋y

  // distributors of ⊗ over ⅋
  Mor distl(const Ob& x, const Ob& y, const Ob& z) const;  // x⊗(y⅋z) → (x⊗y)⅋z
  Mor distr(const Ob& x, const Ob& y, const Ob& z) const;  // (x⅋y)⊗z → x⅋(y⊗z)

  // one-sided duals against ⅋: D'x is a right dual, Dx a left dual
  Mor eps_r(const Ob& x) const;  // x ⊗ D'x → K
  Mor eta_r(const Ob& x) const;  // 1 → D'x ⅋ x
  Mor eps_l(const Ob& x) const;  // Dx ⊗ x → K
  Mor eta_l(const Ob& x) const;  // 1 → x ⅋ Dx

  // braided comparison maps (model must carry a braiding; plus picks c or c⁻¹)
  Mor par_braid(bool plus, const Ob& x, const Ob& y) const;  // x⅋y → y⅋x
  Mor drinfeld(bool plus, const Ob& x) const;                // D'x → Dx

  // round-trip comparison: ⅋ rebuilt from its own one-sided duals. The pairing
  // below exhibits D'y⊗D'x as a right dual of x⅋y; roundtrip() is the induced
  // endomorphism of x⅋y, an isomorphism exactly when the rebuild agrees.
  Mor roundtrip_eps(const Ob& x, const Ob& y) const;  // (x⅋y)⊗(D'y⊗D'x) → K
  Mor roundtrip_eta(const Ob& x, const Ob& y) const;  // 1 → (D'y⊗D'x)⅋(x⅋y)
  Mor roundtrip(const Ob& x, const Ob& y) const;      // x⅋y → x⅋y

 private:
  const Mor& memo(const std::string& key, const std::function<Mor()>& make) const;

  const cat::Model* m_;
  Ob k_;
  mutable std::unordered_map<std::string, Mor> cache_;
};

// Lax monoidal functor between models, given pointwise.
// phi0 : 1 → F(1),  phi2(x,y) : F(x)⊗F(y) → F(x⊗y).
struct LaxFunctor {
  const cat::Model* src = nullptr;
  const cat::Model* tgt = nullptr;
  std::string label;
  std::function<Ob(const Ob&)> ob;
  std::function<Mor(const Mor&)> mor;
  std::function<Mor()> phi0;
  std::function<Mor(const Ob&, const Ob&)> phi2;
};

// comparison maps of a lax functor against the internal homs
Mor tau_l(const LaxFunctor& F, const Ob& x, const Ob& y);  // F(x⊸y) → Fx ⊸ Fy
Mor tau_r(const LaxFunctor& F, const Ob& y, const Ob& x);  // F(y⟜x) → Fy ⟜ Fx

// lax functor between duality-equipped models, plus a form on the dualizing
// object; the form is Frobenius when both induced comparison maps below are
// invertible on every object
struct FormFunctor {
  LaxFunctor F;
  const Duality* src = nullptr;
  const Duality* tgt = nullptr;
  Mor v0;  // F(K_src) → K_tgt
};

Mor xi_l(const FormFunctor&, const Ob& x);  // F(D'x) → D'(Fx)
Mor xi_r(const FormFunctor&, const Ob& x);  // F(Dx) → D(Fx)
bool is_frobenius_form(const FormFunctor&, const std::vector<Ob>& probes,
                       std::string* why = nullptr);

// the lifting mechanism: double-dual maps of the source are invertible and the
// comparison maps intertwine them with the target's double-dual maps
bool verify_lifting(const FormFunctor&, const std::vector<Ob>& probes,
                    std::string* why = nullptr);

// induced oplax structure on ⅋ and the D'-preservation isomorphism
Mor upsilon2(const FormFunctor&, const Ob& x, const Ob& y);  // F(x⅋y) → Fx ⅋ Fy
Mor chi_l(const FormFunctor&, const Ob& x);  // F(D'x) → D'(Fx), via its
                                             // characterizing equation
Mor upsilon_l(const FormFunctor&, const Ob& x, const Ob& y);  // F(D'x⅋y) → D'Fx ⅋ Fy

// canonical identification (x⊸y) → D'x ⅋ y used to compare tau with upsilon
Mor hom_to_par(const Duality&, const Ob& x, const Ob& y);

// a natural family f_X : F(X) → G(X) between two form functors
struct FunctorMorphism {
  const FormFunctor* F = nullptr;
  const FormFunctor* G = nullptr;
  std::function<Mor(const Ob&)> at;
};

// monoidality, form compatibility, intertwining of the right comparison maps,
// naturality on the supplied test morphisms, and invertibility with the
// closed-form inverse
bool check_functor_morphism(const FunctorMorphism&, const std::vector<Ob>& obs,
                            const std::vector<Mor>& test_mors, std::string* why = nullptr);

}  // namespace gvforge::gv
