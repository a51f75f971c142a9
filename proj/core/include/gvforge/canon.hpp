// Canonical morphisms every closed monoidal model carries, derived once from
// the currying bijections. Internal-hom evaluation is the only primitive used,
// so these work uniformly across backends.
#pragma once

#include "gvforge/category.hpp"

namespace gvforge::canon {

using cat::Mor;
using cat::Ob;

// covariant / contravariant actions of the two internal homs
Mor homl_mor(const cat::Model&, const Ob& x, const Mor& g);        // x⊸g : (x⊸y)→(x⊸y')
Mor homl_mor_contra(const cat::Model&, const Mor& f, const Ob& z); // f⊸z : (y⊸z)→(x⊸z)
Mor homr_mor(const cat::Model&, const Mor& g, const Ob& x);        // g⟜x : (y⟜x)→(y'⟜x)
Mor homr_mor_contra(const cat::Model&, const Ob& z, const Mor& f); // z⟜f : (z⟜y)→(z⟜x)

// currying isomorphisms between iterated homs
Mor beta(const cat::Model&, const Ob& x, const Ob& y, const Ob& z);     // (x⊗y)⊸z → y⊸(x⊸z)
Mor betabar(const cat::Model&, const Ob& x, const Ob& y, const Ob& z);  // z⟜(x⊗y) → (z⟜y)⟜x
Mor iota(const cat::Model&, const Ob& x, const Ob& y, const Ob& z);     // (x⊸y)⟜z → x⊸(y⟜z)

// hom out of / into the unit
Mor gamma(const cat::Model&, const Ob& x);      // 1⊸x → x
Mor gamma_inv(const cat::Model&, const Ob& x);  // x → 1⊸x
Mor gammabar(const cat::Model&, const Ob& x);     // x⟜1 → x
Mor gammabar_inv(const cat::Model&, const Ob& x); // x → x⟜1

// names of identities
Mor unit_e(const cat::Model&, const Ob& x);     // 1 → x⊸x
Mor unit_ebar(const cat::Model&, const Ob& x);  // 1 → x⟜x

// internal composition
Mor comp_l(const cat::Model&, const Ob& x, const Ob& y, const Ob& z);  // (x⊸y)⊗(y⊸z) → x⊸z
Mor comp_r(const cat::Model&, const Ob& x, const Ob& y, const Ob& z);  // (z⟜y)⊗(y⟜x) → z⟜x

// functoriality of ⊗ against the homs
Mor tensorality(const cat::Model&, const Ob& x, const Ob& y,
                const Ob& z);  // (y⊸z) → (x⊗y)⊸(x⊗z)
Mor tensorality_r(const cat::Model&, const Ob& x, const Ob& y,
                  const Ob& z);  // (y⟜z) → (y⊗x)⟜(z⊗x)

// half-distributors of ⊗ over the homs
Mor distl_tilde(const cat::Model&, const Ob& x, const Ob& y,
                const Ob& z);  // x⊗(y⟜z) → (x⊗y)⟜z
Mor distr_tilde(const cat::Model&, const Ob& x, const Ob& y,
                const Ob& z);  // (x⊸y)⊗z → x⊸(y⊗z)

// braided comparison of the two homs (needs a braiding; plus = c, minus = c⁻¹)
Mor braid_of(const cat::Model&, bool plus, const Ob& x, const Ob& y);  // x⊗y → y⊗x
Mor c_tilde(const cat::Model&, bool plus, const Ob& x, const Ob& y);   // x⊸y → y⟜x

}  // namespace gvforge::canon
