#include "gvforge/gv.hpp"

#include <utility>

namespace gvforge::gv {

using cat::invert;
using cat::lin;
using cat::Mismatch;
using cat::Model;
using cat::NotInvertible;
using cat::o;

Duality::Duality(const Model& m, Ob k) : m_(&m), k_(std::move(k)) {}

const Mor& Duality::memo(const std::string& key, const std::function<Mor()>& make) const {
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  Mor v = make();
  return cache_.emplace(key, std::move(v)).first->second;
}

Ob Duality::D(const Ob& x) const { return m_->homr_ob(k_, x); }
Ob Duality::Dp(const Ob& x) const { return m_->homl_ob(x, k_); }

Mor Duality::D_mor(const Mor& f) const { return m_->homr_mor_contra(k_, f); }

Mor Duality::Dp_mor(const Mor& f) const { return m_->homl_mor_contra(f, k_); }

Mor Duality::d(const Ob& x) const {
  return memo("d|" + x->key(),
              [&] { return m_->transpose_l(D(x), x, k_, m_->ev_r(x, k_)); });
}

Mor Duality::dtilde(const Ob& x) const {
  return memo("dt|" + x->key(),
              [&] { return m_->transpose_r(Dp(x), x, k_, m_->ev_l(x, k_)); });
}

Mor Duality::d_inv(const Ob& x) const {
  return memo("di|" + x->key(), [&] { return invert(d(x)); });
}

Mor Duality::dtilde_inv(const Ob& x) const {
  return memo("dti|" + x->key(), [&] { return invert(dtilde(x)); });
}

bool Duality::verify_dualizer(const std::vector<Ob>& probes, std::string* why) const {
  for (const Ob& x : probes) {
    try {
      (void)d_inv(x);
    } catch (const NotInvertible&) {
      if (why) *why = "double-dual map x -> D'Dx is singular at " + x->key();
      return false;
    }
    try {
      (void)dtilde_inv(x);
    } catch (const NotInvertible&) {
      if (why) *why = "double-dual map x -> DD'x is singular at " + x->key();
      return false;
    }
  }
  return true;
}

Ob Duality::par_ob(const Ob& x, const Ob& y) const {
  return D(m_->tensor_ob(Dp(y), Dp(x)));
}

Mor Duality::par_mor(const Mor& f, const Mor& g) const {
  return D_mor(m_->tensor_mor(Dp_mor(g), Dp_mor(f)));
}

Mor Duality::alpha_par(const Ob& x, const Ob& y, const Ob& z) const {
  return memo("ap|" + x->key() + "|" + y->key() + "|" + z->key(), [&] {
    Ob wxy = m_->tensor_ob(Dp(y), Dp(x));
    Ob wyz = m_->tensor_ob(Dp(z), Dp(y));
    Mor leg1 = D_mor(m_->tensor_mor(m_->id(Dp(z)), d(wxy)));
    Mor leg2 = D_mor(m_->alpha(Dp(z), Dp(y), Dp(x)));
    Mor leg3 = D_mor(m_->tensor_mor(d_inv(wyz), m_->id(Dp(x))));
    return o(*m_, {leg3, leg2, leg1});
  });
}

Mor Duality::alpha_par_inv(const Ob& x, const Ob& y, const Ob& z) const {
  return memo("api|" + x->key() + "|" + y->key() + "|" + z->key(),
              [&] { return invert(alpha_par(x, y, z)); });
}

Mor Duality::u() const {
  return memo("u|", [&] {
    return m_->compose(D_mor(canon::gamma_inv(*m_, k_)), dtilde(m_->unit()));
  });
}

Mor Duality::uprime() const {
  return memo("up|", [&] {
    return m_->compose(Dp_mor(canon::gammabar_inv(*m_, k_)), d(m_->unit()));
  });
}

Mor Duality::lpar(const Ob& x) const {
  return memo("lp|" + x->key(), [&] {
    Mor leg1 = D_mor(m_->tensor_mor(m_->id(Dp(x)), uprime()));
    Mor leg2 = D_mor(m_->runit_inv(Dp(x)));
    return o(*m_, {dtilde_inv(x), leg2, leg1});
  });
}

Mor Duality::lpar_inv(const Ob& x) const {
  return memo("lpi|" + x->key(), [&] { return invert(lpar(x)); });
}

Mor Duality::rpar(const Ob& x) const {
  return memo("rp|" + x->key(), [&] {
    Mor leg1 = D_mor(m_->tensor_mor(uprime(), m_->id(Dp(x))));
    Mor leg2 = D_mor(m_->lunit_inv(Dp(x)));
    return o(*m_, {dtilde_inv(x), leg2, leg1});
  });
}

Mor Duality::rpar_inv(const Ob& x) const {
  return memo("rpi|" + x->key(), [&] { return invert(rpar(x)); });
}

Mor Duality::par_from_homr(const Ob& x, const Ob& y) const {
  return memo("pfr|" + x->key() + "|" + y->key(), [&] {
    // w = x⅋y = K⟜(D'y⊗D'x) curried one slot, then the double-dual collapsed
    Mor u1 = m_->betabar(Dp(y), Dp(x), k_);       // w → (K⟜D'x)⟜D'y
    Mor u2 = m_->homr_mor(dtilde_inv(x), Dp(y));  // → x⟜D'y
    return invert(m_->compose(u2, u1));
  });
}

Mor Duality::par_from_homl(const Ob& x, const Ob& y) const {
  return memo("pfl|" + x->key() + "|" + y->key(), [&] {
    Mor u1 = m_->betabar(Dp(y), Dp(x), k_);  // w → (K⟜D'x)⟜D'y
    Mor u2 = m_->homr_mor(m_->compose(d(x), dtilde_inv(x)), Dp(y));  // → (Dx⊸K)⟜D'y
    Mor u3 = m_->iota(D(x), k_, Dp(y));                              // → Dx⊸(K⟜D'y)
    Mor u4 = m_->homl_mor(D(x), dtilde_inv(y));                      // → Dx⊸y
    return invert(o(*m_, {u4, u3, u2, u1}));
  });
}

Mor Duality::distl(const Ob& x, const Ob& y, const Ob& z) const {
  return memo("dl|" + x->key() + "|" + y->key() + "|" + z->key(), [&] {
    Mor into = m_->tensor_mor(m_->id(x), invert(par_from_homr(y, z)));
    Mor mid = canon::distl_tilde(*m_, x, y, Dp(z));
    Mor outof = par_from_homr(m_->tensor_ob(x, y), z);
    return o(*m_, {outof, mid, into});
  });
}

Mor Duality::distr(const Ob& x, const Ob& y, const Ob& z) const {
  return memo("dr|" + x->key() + "|" + y->key() + "|" + z->key(), [&] {
    Mor into = m_->tensor_mor(invert(par_from_homl(x, y)), m_->id(z));
    Mor mid = canon::distr_tilde(*m_, D(x), y, z);
    Mor outof = par_from_homl(x, m_->tensor_ob(y, z));
    return o(*m_, {outof, mid, into});
  });
}

Mor Duality::eps_r(const Ob& x) const { return m_->ev_l(x, k_); }

Mor Duality::eta_r(const Ob& x) const {
  return m_->compose(par_from_homr(Dp(x), x), canon::unit_ebar(*m_, Dp(x)));
}

Mor Duality::eps_l(const Ob& x) const { return m_->ev_r(x, k_); }

Mor Duality::eta_l(const Ob& x) const {
  return m_->compose(par_from_homl(x, D(x)), canon::unit_e(*m_, D(x)));
}

Mor Duality::par_braid(bool plus, const Ob& x, const Ob& y) const {
  return D_mor(canon::braid_of(*m_, plus, Dp(x), Dp(y)));
}

Mor Duality::drinfeld(bool plus, const Ob& x) const {
  return canon::c_tilde(*m_, plus, x, k_);
}

Mor Duality::roundtrip_eps(const Ob& x, const Ob& y) const {
  Ob xy = par_ob(x, y);
  Mor inner = o(*m_, {rpar(x), par_mor(m_->id(x), eps_r(y)), distr(x, y, Dp(y))});
  return o(*m_, {eps_r(x), m_->tensor_mor(inner, m_->id(Dp(x))),
                 m_->alpha_inv(xy, Dp(y), Dp(x))});
}

Mor Duality::roundtrip_eta(const Ob& x, const Ob& y) const {
  Ob w = m_->tensor_ob(Dp(y), Dp(x));
  Mor g = o(*m_, {distl(Dp(y), Dp(x), x), m_->tensor_mor(m_->id(Dp(y)), eta_r(x)),
                  m_->runit_inv(Dp(y))});
  return o(*m_, {alpha_par(w, x, y), par_mor(g, m_->id(y)), eta_r(y)});
}

Mor Duality::roundtrip(const Ob& x, const Ob& y) const {
  Ob xy = par_ob(x, y);
  Ob w = m_->tensor_ob(Dp(y), Dp(x));
  return o(*m_, {lpar(xy), par_mor(roundtrip_eps(x, y), m_->id(xy)), distl(xy, w, xy),
                 m_->tensor_mor(m_->id(xy), eta_l(w)), m_->runit_inv(xy)});
}

Mor tau_l(const LaxFunctor& F, const Ob& x, const Ob& y) {
  const Model& s = *F.src;
  const Model& t = *F.tgt;
  Ob h = s.homl_ob(x, y);
  Mor body = t.compose(F.mor(s.ev_l(x, y)), F.phi2(x, h));
  return t.transpose_l(F.ob(x), F.ob(h), F.ob(y), body);
}

Mor tau_r(const LaxFunctor& F, const Ob& y, const Ob& x) {
  const Model& s = *F.src;
  const Model& t = *F.tgt;
  Ob h = s.homr_ob(y, x);
  Mor body = t.compose(F.mor(s.ev_r(x, y)), F.phi2(h, x));
  return t.transpose_r(F.ob(x), F.ob(h), F.ob(y), body);
}

Mor xi_l(const FormFunctor& ff, const Ob& x) {
  const Model& t = ff.tgt->model();
  Mor tl = tau_l(ff.F, x, ff.src->k());
  return t.compose(canon::homl_mor(t, ff.F.ob(x), ff.v0), tl);
}

Mor xi_r(const FormFunctor& ff, const Ob& x) {
  const Model& t = ff.tgt->model();
  Mor tr = tau_r(ff.F, ff.src->k(), x);
  return t.compose(canon::homr_mor(t, ff.v0, ff.F.ob(x)), tr);
}

bool is_frobenius_form(const FormFunctor& ff, const std::vector<Ob>& probes,
                       std::string* why) {
  for (const Ob& x : probes) {
    try {
      (void)invert(xi_l(ff, x));
    } catch (const NotInvertible&) {
      if (why) *why = "left comparison map F(D'x) -> D'(Fx) is singular at " + x->key();
      return false;
    }
    try {
      (void)invert(xi_r(ff, x));
    } catch (const NotInvertible&) {
      if (why) *why = "right comparison map F(Dx) -> D(Fx) is singular at " + x->key();
      return false;
    }
  }
  return true;
}

bool verify_lifting(const FormFunctor& ff, const std::vector<Ob>& probes,
                    std::string* why) {
  const Duality& s = *ff.src;
  const Duality& t = *ff.tgt;
  const Model& tm = t.model();
  if (!s.verify_dualizer(probes, why)) return false;
  if (!is_frobenius_form(ff, probes, why)) return false;
  for (const Ob& x : probes) {
    Mor lhs1 = tm.compose(xi_r(ff, s.Dp(x)), ff.F.mor(s.dtilde(x)));
    Mor rhs1 = tm.compose(t.D_mor(xi_l(ff, x)), t.dtilde(ff.F.ob(x)));
    if (!(lhs1 == rhs1)) {
      if (why) *why = "comparison maps do not intertwine x -> DD'x at " + x->key();
      return false;
    }
    Mor lhs2 = tm.compose(xi_l(ff, s.D(x)), ff.F.mor(s.d(x)));
    Mor rhs2 = tm.compose(t.Dp_mor(xi_r(ff, x)), t.d(ff.F.ob(x)));
    if (!(lhs2 == rhs2)) {
      if (why) *why = "comparison maps do not intertwine x -> D'Dx at " + x->key();
      return false;
    }
  }
  return true;
}

Mor upsilon2(const FormFunctor& ff, const Ob& x, const Ob& y) {
  const Duality& s = *ff.src;
  const Duality& t = *ff.tgt;
  const Model& sm = s.model();
  const Model& tm = t.model();
  Ob w = sm.tensor_ob(s.Dp(y), s.Dp(x));
  Mor leg1 = xi_r(ff, w);
  Mor leg2 = t.D_mor(ff.F.phi2(s.Dp(y), s.Dp(x)));
  Mor leg3 = t.D_mor(tm.tensor_mor(invert(xi_l(ff, y)), invert(xi_l(ff, x))));
  return o(tm, {leg3, leg2, leg1});
}

Mor chi_l(const FormFunctor& ff, const Ob& x) {
  const Duality& s = *ff.src;
  const Duality& t = *ff.tgt;
  const Model& tm = t.model();
  Ob fx = ff.F.ob(x);
  Ob from = ff.F.ob(s.Dp(x));
  Ob to = t.Dp(fx);
  Mor etat = o(tm, {upsilon2(ff, s.Dp(x), x), ff.F.mor(s.eta_r(x)), ff.F.phi0()});
  Mor target = t.eta_r(fx);
  std::vector<Mor> basis = tm.hom_basis(from, to);
  if (basis.empty()) throw cat::EngineError("chi: empty hom space " + from->key() + " -> " + to->key());
  const std::uint32_t p = basis.front().mat().p;
  std::vector<fp::Mat> images;
  images.reserve(basis.size());
  for (const Mor& b : basis)
    images.push_back(tm.compose(t.par_mor(b, tm.id(fx)), etat).mat());
  const int n = static_cast<int>(images.front().a.size());
  fp::Mat A(p, n, static_cast<int>(basis.size()));
  for (int j = 0; j < A.cols; ++j)
    for (int i = 0; i < n; ++i) A.at(i, j) = images[static_cast<std::size_t>(j)].a[static_cast<std::size_t>(i)];
  fp::Mat b(p, n, 1);
  for (int i = 0; i < n; ++i) b.at(i, 0) = target.mat().a[static_cast<std::size_t>(i)];
  if (fp::kernel_basis(A).cols != 0)
    throw cat::EngineError("chi: characterizing equation has multiple solutions at " + x->key());
  auto sol = fp::solve_right(A, b);
  if (!sol) throw cat::EngineError("chi: characterizing equation has no solution at " + x->key());
  fp::Mat out = fp::zero(p, basis.front().mat().rows, basis.front().mat().cols);
  for (std::size_t j = 0; j < basis.size(); ++j)
    out = fp::add(out, fp::scale(sol->at(static_cast<int>(j), 0), basis[j].mat()));
  return lin(from, to, std::move(out));
}

Mor upsilon_l(const FormFunctor& ff, const Ob& x, const Ob& y) {
  const Duality& t = *ff.tgt;
  const Model& tm = t.model();
  Mor up2 = upsilon2(ff, ff.src->Dp(x), y);
  return tm.compose(t.par_mor(chi_l(ff, x), tm.id(ff.F.ob(y))), up2);
}

Mor hom_to_par(const Duality& g, const Ob& x, const Ob& y) {
  const Model& m = g.model();
  Mor reindex = canon::homl_mor_contra(m, g.dtilde_inv(x), y);
  return m.compose(g.par_from_homl(g.Dp(x), y), reindex);
}

bool check_functor_morphism(const FunctorMorphism& nat, const std::vector<Ob>& obs,
                            const std::vector<Mor>& test_mors, std::string* why) {
  const FormFunctor& F = *nat.F;
  const FormFunctor& G = *nat.G;
  const Duality& s = *F.src;
  const Duality& t = *F.tgt;
  const Model& sm = s.model();
  const Model& tm = t.model();
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };

  Mor fk = nat.at(s.k());
  if (!(F.v0 == tm.compose(G.v0, fk))) return fail("forms differ across the morphism");
  Mor f1 = nat.at(sm.unit());
  if (!(tm.compose(f1, F.F.phi0()) == G.F.phi0())) return fail("unit laxity not preserved");

  for (const Ob& x : obs) {
    Mor fx = nat.at(x);
    if (!(xi_r(F, x) == o(tm, {t.D_mor(fx), xi_r(G, x), nat.at(s.D(x))})))
      return fail("right comparison maps not intertwined at " + x->key());
    Mor via_duals = o(tm, {invert(F.F.mor(s.dtilde(x))), invert(xi_r(F, s.Dp(x))),
                           t.D_mor(nat.at(s.Dp(x))), xi_r(G, s.Dp(x)),
                           G.F.mor(s.dtilde(x))});
    Mor fx_inv;
    try {
      fx_inv = invert(fx);
    } catch (const NotInvertible&) {
      return fail("component not invertible at " + x->key());
    }
    if (!(fx_inv == via_duals)) return fail("closed-form inverse mismatch at " + x->key());
    for (const Ob& y : obs) {
      Mor lhs = tm.compose(nat.at(sm.tensor_ob(x, y)), F.F.phi2(x, y));
      Mor rhs = tm.compose(G.F.phi2(x, y), tm.tensor_mor(fx, nat.at(y)));
      if (!(lhs == rhs)) return fail("binary laxity not preserved at " + x->key() + ", " + y->key());
    }
  }
  for (const Mor& h : test_mors) {
    Mor lhs = tm.compose(nat.at(h.tgt), F.F.mor(h));
    Mor rhs = tm.compose(G.F.mor(h), nat.at(h.src));
    if (!(lhs == rhs)) return fail("not natural at a test morphism " + h.src->key() + " -> " + h.tgt->key());
  }
  return true;
}

}  // namespace gvforge::gv
