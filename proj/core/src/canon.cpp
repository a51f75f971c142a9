#include "gvforge/canon.hpp"

namespace gvforge::canon {

using cat::Model;

Mor homl_mor(const Model& m, const Ob& x, const Mor& g) { return m.homl_mor(x, g); }

Mor homl_mor_contra(const Model& m, const Mor& f, const Ob& z) {
  return m.homl_mor_contra(f, z);
}

Mor homr_mor(const Model& m, const Mor& g, const Ob& x) { return m.homr_mor(g, x); }

Mor homr_mor_contra(const Model& m, const Ob& z, const Mor& f) {
  return m.homr_mor_contra(z, f);
}

Mor beta(const Model& m, const Ob& x, const Ob& y, const Ob& z) { return m.beta(x, y, z); }

Mor betabar(const Model& m, const Ob& x, const Ob& y, const Ob& z) {
  return m.betabar(x, y, z);
}

Mor iota(const Model& m, const Ob& x, const Ob& y, const Ob& z) { return m.iota(x, y, z); }

Mor gamma(const Model& m, const Ob& x) {
  return m.compose(m.ev_l(m.unit(), x), m.lunit_inv(m.homl_ob(m.unit(), x)));
}

Mor gamma_inv(const Model& m, const Ob& x) {
  return m.transpose_l(m.unit(), x, x, m.lunit(x));
}

Mor gammabar(const Model& m, const Ob& x) {
  return m.compose(m.ev_r(m.unit(), x), m.runit_inv(m.homr_ob(x, m.unit())));
}

Mor gammabar_inv(const Model& m, const Ob& x) {
  return m.transpose_r(m.unit(), x, x, m.runit(x));
}

Mor unit_e(const Model& m, const Ob& x) {
  return m.transpose_l(x, m.unit(), x, m.runit(x));
}

Mor unit_ebar(const Model& m, const Ob& x) {
  return m.transpose_r(x, m.unit(), x, m.lunit(x));
}

Mor comp_l(const Model& m, const Ob& x, const Ob& y, const Ob& z) {
  Ob hxy = m.homl_ob(x, y), hyz = m.homl_ob(y, z);
  Ob h = m.tensor_ob(hxy, hyz);
  Mor f = o(m, {m.ev_l(y, z), m.tensor_mor(m.ev_l(x, y), m.id(hyz)), m.alpha_inv(x, hxy, hyz)});
  return m.transpose_l(x, h, z, f);
}

Mor comp_r(const Model& m, const Ob& x, const Ob& y, const Ob& z) {
  Ob hzy = m.homr_ob(z, y), hyx = m.homr_ob(y, x);
  Ob h = m.tensor_ob(hzy, hyx);
  Mor f = o(m, {m.ev_r(y, z), m.tensor_mor(m.id(hzy), m.ev_r(x, y)), m.alpha(hzy, hyx, x)});
  return m.transpose_r(x, h, z, f);
}

Mor tensorality(const Model& m, const Ob& x, const Ob& y, const Ob& z) {
  Ob h = m.homl_ob(y, z);
  Mor f = m.compose(m.tensor_mor(m.id(x), m.ev_l(y, z)), m.alpha(x, y, h));
  return m.transpose_l(m.tensor_ob(x, y), h, m.tensor_ob(x, z), f);
}

Mor tensorality_r(const Model& m, const Ob& x, const Ob& y, const Ob& z) {
  Ob h = m.homr_ob(y, z);
  Mor f = m.compose(m.tensor_mor(m.ev_r(z, y), m.id(x)), m.alpha_inv(h, z, x));
  return m.transpose_r(m.tensor_ob(z, x), h, m.tensor_ob(y, x), f);
}

Mor distl_tilde(const Model& m, const Ob& x, const Ob& y, const Ob& z) {
  Ob h = m.homr_ob(y, z);
  Mor f = m.compose(m.tensor_mor(m.id(x), m.ev_r(z, y)), m.alpha(x, h, z));
  return m.transpose_r(z, m.tensor_ob(x, h), m.tensor_ob(x, y), f);
}

Mor distr_tilde(const Model& m, const Ob& x, const Ob& y, const Ob& z) {
  Ob h = m.homl_ob(x, y);
  Mor f = m.compose(m.tensor_mor(m.ev_l(x, y), m.id(z)), m.alpha_inv(x, h, z));
  return m.transpose_l(x, m.tensor_ob(h, z), m.tensor_ob(y, z), f);
}

Mor braid_of(const Model& m, bool plus, const Ob& x, const Ob& y) {
  return plus ? m.braid(x, y) : cat::invert(m.braid(y, x));
}

Mor c_tilde(const Model& m, bool plus, const Ob& x, const Ob& y) {
  Ob h = m.homl_ob(x, y);
  Mor f = m.compose(m.ev_l(x, y), braid_of(m, plus, h, x));
  return m.transpose_r(x, h, y, f);
}

}  // namespace gvforge::canon
