#include "gvforge/coherence.hpp"

#include <array>
#include <chrono>
#include <map>
#include <memory>
#include <random>
#include <utility>

#include "gvforge/canon.hpp"

namespace gvforge::coh {
namespace {

using cat::Mismatch;
using cat::Unsupported;

// ---------------------------------------------------------------------------
// templates are data: object terms over tuple slots, morphism terms over the
// named structure morphisms, one (lhs, rhs) tree pair per axiom

struct OT;
using OP = std::shared_ptr<const OT>;
struct OT {
  enum K { Var, Unit, Kay, Ten, Par, HomL, HomR, Dual, Codual, FOb } k;
  int idx = 0;
  OP a, b;
};

OP onode(OT::K k, OP a = nullptr, OP b = nullptr, int idx = 0) {
  auto t = std::make_shared<OT>();
  t->k = k;
  t->idx = idx;
  t->a = std::move(a);
  t->b = std::move(b);
  return t;
}
OP V(int i) { return onode(OT::Var, nullptr, nullptr, i); }
OP UNIT() { return onode(OT::Unit); }
OP KAY() { return onode(OT::Kay); }
OP Ten(OP a, OP b) { return onode(OT::Ten, std::move(a), std::move(b)); }
OP Par(OP a, OP b) { return onode(OT::Par, std::move(a), std::move(b)); }
OP Du(OP a) { return onode(OT::Dual, std::move(a)); }
OP Fo(OP a) { return onode(OT::FOb, std::move(a)); }

struct MT;
using MP = std::shared_ptr<const MT>;
struct MT {
  enum K {
    Comp, Id, TenM, ParM, Inv,
    Alpha, Lunit, Runit, APar, LPar, RPar, Distl, Distr,
    EpsL, EtaL, Braid, ParBraid, Pivot,
    Beta, Betabar, Iota, Gamma, Gammabar, Uu, Uup,
    HomlM, HomlC, HomrM, HomrC,
    Fmor, Phi2, Ups2, DualM, CodualM,
  } k;
  std::vector<MP> ms;
  std::vector<OP> obs;
  bool samesign = true;  // signed nodes: use the context sign (or its opposite)
};

MP mnode(MT::K k, std::vector<MP> ms = {}, std::vector<OP> obs = {}) {
  auto t = std::make_shared<MT>();
  t->k = k;
  t->ms = std::move(ms);
  t->obs = std::move(obs);
  return t;
}
MP cm(std::vector<MP> fs) { return mnode(MT::Comp, std::move(fs)); }
MP im(OP a) { return mnode(MT::Id, {}, {std::move(a)}); }
MP tn(MP f, MP g) { return mnode(MT::TenM, {std::move(f), std::move(g)}); }
MP pr(MP f, MP g) { return mnode(MT::ParM, {std::move(f), std::move(g)}); }
MP iv(MP f) { return mnode(MT::Inv, {std::move(f)}); }
MP alf(OP a, OP b, OP c) { return mnode(MT::Alpha, {}, {std::move(a), std::move(b), std::move(c)}); }
MP lun(OP a) { return mnode(MT::Lunit, {}, {std::move(a)}); }
MP run(OP a) { return mnode(MT::Runit, {}, {std::move(a)}); }
MP apr(OP a, OP b, OP c) { return mnode(MT::APar, {}, {std::move(a), std::move(b), std::move(c)}); }
MP lpa(OP a) { return mnode(MT::LPar, {}, {std::move(a)}); }
MP rpa(OP a) { return mnode(MT::RPar, {}, {std::move(a)}); }
MP dsl(OP a, OP b, OP c) { return mnode(MT::Distl, {}, {std::move(a), std::move(b), std::move(c)}); }
MP dsr(OP a, OP b, OP c) { return mnode(MT::Distr, {}, {std::move(a), std::move(b), std::move(c)}); }
MP epl(OP a) { return mnode(MT::EpsL, {}, {std::move(a)}); }
MP etl(OP a) { return mnode(MT::EtaL, {}, {std::move(a)}); }
MP cbr(OP a, OP b) { return mnode(MT::Braid, {}, {std::move(a), std::move(b)}); }
MP cpb(OP a, OP b) { return mnode(MT::ParBraid, {}, {std::move(a), std::move(b)}); }
MP piv(OP a) { return mnode(MT::Pivot, {}, {std::move(a)}); }
MP bet(OP a, OP b, OP c) { return mnode(MT::Beta, {}, {std::move(a), std::move(b), std::move(c)}); }
MP beb(OP a, OP b, OP c) { return mnode(MT::Betabar, {}, {std::move(a), std::move(b), std::move(c)}); }
MP iot(OP a, OP b, OP c) { return mnode(MT::Iota, {}, {std::move(a), std::move(b), std::move(c)}); }
MP gma(OP a) { return mnode(MT::Gamma, {}, {std::move(a)}); }
MP gmb(OP a) { return mnode(MT::Gammabar, {}, {std::move(a)}); }
MP uu() { return mnode(MT::Uu); }
MP uup() { return mnode(MT::Uup); }
MP hlm(OP a, MP f) { return mnode(MT::HomlM, {std::move(f)}, {std::move(a)}); }
MP hlc(MP f, OP b) { return mnode(MT::HomlC, {std::move(f)}, {std::move(b)}); }
MP hrm(MP f, OP b) { return mnode(MT::HomrM, {std::move(f)}, {std::move(b)}); }
MP hrc(OP a, MP f) { return mnode(MT::HomrC, {std::move(f)}, {std::move(a)}); }
MP fmo(MP f) { return mnode(MT::Fmor, {std::move(f)}); }
MP ph2(OP a, OP b) { return mnode(MT::Phi2, {}, {std::move(a), std::move(b)}); }
MP up2(OP a, OP b) { return mnode(MT::Ups2, {}, {std::move(a), std::move(b)}); }
MP dum(MP f) { return mnode(MT::DualM, {std::move(f)}); }
MP dpm(MP f) { return mnode(MT::CodualM, {std::move(f)}); }

constexpr unsigned kBraiding = 1, kFunctor = 2, kPivot = 4, kNat = 8;

struct AxiomTemplate {
  int arity = 0;
  unsigned needs = 0;
  MP lhs, rhs;  // null for the delegated battery
};

AxiomTemplate make_template(AxiomId id) {
  OP w = V(0), x = V(0), y = V(1), z = V(2);
  switch (id) {
    case AxiomId::A1:
      return {2, 0, cm({pr(lun(x), im(y)), dsl(UNIT(), x, y)}), lun(Par(x, y))};
    case AxiomId::A2:
      return {2, 0, cm({pr(im(x), run(y)), dsr(x, y, UNIT())}), run(Par(x, y))};
    case AxiomId::A3:
      return {2, 0, cm({lpa(Ten(x, y)), dsr(KAY(), x, y)}), tn(lpa(x), im(y))};
    case AxiomId::A4:
      return {2, 0, cm({rpa(Ten(x, y)), dsl(x, y, KAY())}), tn(im(x), rpa(y))};
    default:
      break;
  }
  x = V(1), y = V(2), z = V(3);  // four-slot axioms use w,x,y,z
  switch (id) {
    case AxiomId::A5:
      return {4, 0, cm({dsl(Ten(w, x), y, z), iv(alf(w, x, Par(y, z)))}),
              cm({pr(iv(alf(w, x, y)), im(z)), dsl(w, Ten(x, y), z), tn(im(w), dsl(x, y, z))})};
    case AxiomId::A6:
      return {4, 0, cm({pr(im(w), iv(alf(x, y, z))), dsr(w, x, Ten(y, z))}),
              cm({dsr(w, Ten(x, y), z), tn(dsr(w, x, y), im(z)), iv(alf(Par(w, x), y, z))})};
    case AxiomId::A7:
      return {4, 0, cm({dsr(Par(w, x), y, z), tn(iv(apr(w, x, y)), im(z))}),
              cm({iv(apr(w, x, Ten(y, z))), pr(im(w), dsr(x, y, z)), dsr(w, Par(x, y), z)})};
    case AxiomId::A8:
      return {4, 0, cm({iv(apr(Ten(w, x), y, z)), dsl(w, x, Par(y, z))}),
              cm({pr(dsl(w, x, y), im(z)), dsl(w, Par(x, y), z), tn(im(w), iv(apr(x, y, z)))})};
    case AxiomId::A9:
      return {4, 0, cm({dsl(w, x, Ten(y, z)), tn(im(w), dsr(x, y, z))}),
              cm({dsr(Ten(w, x), y, z), tn(dsl(w, x, y), im(z)), iv(alf(w, Par(x, y), z))})};
    case AxiomId::A10:
      return {4, 0, cm({pr(dsr(w, x, y), im(z)), dsl(Par(w, x), y, z)}),
              cm({iv(apr(w, Ten(x, y), z)), pr(im(w), dsl(x, y, z)), dsr(w, x, Par(y, z))})};
    case AxiomId::PENT:
      return {4, 0, cm({alf(w, x, Ten(y, z)), alf(Ten(w, x), y, z)}),
              cm({tn(im(w), alf(x, y, z)), alf(w, Ten(x, y), z), tn(alf(w, x, y), im(z))})};
    default:
      break;
  }
  x = V(0), y = V(1), z = V(2);
  switch (id) {
    case AxiomId::S1:
      return {1, 0,
              cm({pr(epl(x), im(Du(x))), dsl(Du(x), x, Du(x)), tn(im(Du(x)), etl(x))}),
              cm({iv(lpa(Du(x))), run(Du(x))})};
    case AxiomId::S2:
      return {1, 0, cm({pr(im(x), epl(x)), dsr(x, Du(x), x), tn(etl(x), im(x))}),
              cm({iv(rpa(x)), lun(x)})};
    case AxiomId::F1:
      return {3, kFunctor,
              cm({up2(Ten(x, y), z), fmo(dsl(x, y, z)), ph2(x, Par(y, z))}),
              cm({pr(ph2(x, y), im(Fo(z))), dsl(Fo(x), Fo(y), Fo(z)), tn(im(Fo(x)), up2(y, z))})};
    case AxiomId::F2:
      return {3, kFunctor,
              cm({up2(x, Ten(y, z)), fmo(dsr(x, y, z)), ph2(Par(x, y), z)}),
              cm({pr(im(Fo(x)), ph2(y, z)), dsr(Fo(x), Fo(y), Fo(z)), tn(up2(x, y), im(Fo(z)))})};
    case AxiomId::H1:
      return {3, kBraiding,
              cm({pr(cbr(x, y), im(z)), dsl(x, y, z), tn(im(x), iv(cpb(y, z)))}),
              cm({iv(cpb(Ten(y, x), z)), dsr(z, y, x), cbr(x, Par(z, y))})};
    case AxiomId::H2:
      return {3, kBraiding,
              cm({pr(im(x), cbr(y, z)), dsr(x, y, z), tn(iv(cpb(x, y)), im(z))}),
              cm({iv(cpb(x, Ten(z, y))), dsl(z, y, x), cbr(Par(y, x), z)})};
    case AxiomId::TRI:
      return {2, 0, cm({tn(im(x), lun(y)), alf(x, UNIT(), y)}), tn(run(x), im(y))};
    case AxiomId::HEX1:
      return {3, kBraiding, cm({alf(y, z, x), cbr(x, Ten(y, z)), alf(x, y, z)}),
              cm({tn(im(y), cbr(x, z)), alf(y, x, z), tn(cbr(x, y), im(z))})};
    case AxiomId::HEX2:
      return {3, kBraiding, cm({iv(alf(z, x, y)), cbr(Ten(x, y), z), iv(alf(x, y, z))}),
              cm({tn(cbr(x, z), im(y)), iv(alf(x, z, y)), tn(im(x), cbr(y, z))})};
    case AxiomId::GVMOR:
      return {2, kNat, nullptr, nullptr};
    case AxiomId::PIV1:
      return {2, kPivot, cm({bet(x, y, KAY()), piv(Ten(x, y))}),
              cm({hlm(y, piv(x)), iot(y, KAY(), x), hrm(piv(y), x), beb(x, y, KAY())})};
    case AxiomId::PIV2:
      return {0, kPivot, cm({gma(KAY()), piv(UNIT())}), gmb(KAY())};
    case AxiomId::PIV3:
      return {0, kPivot, dum(gma(KAY())),
              cm({hrc(KAY(), gma(KAY())), uu(), iv(uup()), hlc(iv(gmb(KAY())), KAY()),
                  dpm(gmb(KAY())), piv(KAY())})};
    default:
      throw Mismatch("make_template: unknown axiom");
  }
}

const AxiomTemplate& template_of(AxiomId id) {
  static const std::map<AxiomId, AxiomTemplate> table = [] {
    std::map<AxiomId, AxiomTemplate> t;
    for (AxiomId a : all_axioms()) t.emplace(a, make_template(a));
    return t;
  }();
  return table.at(id);
}

// ---------------------------------------------------------------------------
// evaluation: checks without a functor run entirely in the source model; F1/F2
// evaluate outside in the target, with Fmor/FOb/φ²/υ² bridging from the source

enum class World { Src, Tgt };

struct Ev {
  const CheckContext& cx;
  const std::vector<Ob>& tup;

  const gv::Duality& du(World w) const {
    if (w == World::Tgt) {
      if (cx.tgt) return *cx.tgt;
      if (cx.fn && cx.fn->tgt) return *cx.fn->tgt;
    }
    return *cx.src;
  }
  const cat::Model& mo(World w) const { return du(w).model(); }
  const gv::FormFunctor& fn() const {
    if (!cx.fn) throw Unsupported("axiom needs a lax functor but none was supplied");
    return *cx.fn;
  }

  Ob ob(const OP& t, World w) const {
    switch (t->k) {
      case OT::Var:
        if (w == World::Tgt) throw Mismatch("template: raw tuple slot in target world");
        return tup.at(static_cast<std::size_t>(t->idx));
      case OT::Unit: return mo(w).unit();
      case OT::Kay: return du(w).k();
      case OT::Ten: return mo(w).tensor_ob(ob(t->a, w), ob(t->b, w));
      case OT::Par: return du(w).par_ob(ob(t->a, w), ob(t->b, w));
      case OT::HomL: return mo(w).homl_ob(ob(t->a, w), ob(t->b, w));
      case OT::HomR: return mo(w).homr_ob(ob(t->a, w), ob(t->b, w));
      case OT::Dual: return du(w).D(ob(t->a, w));
      case OT::Codual: return du(w).Dp(ob(t->a, w));
      case OT::FOb: return fn().F.ob(ob(t->a, World::Src));
    }
    throw Mismatch("template: bad object node");
  }

  Mor mor(const MP& t, World w) const {
    const cat::Model& m = mo(w);
    auto O = [&](int i) { return ob(t->obs[static_cast<std::size_t>(i)], w); };
    auto M = [&](int i) { return mor(t->ms[static_cast<std::size_t>(i)], w); };
    bool eff = t->samesign ? cx.plus : !cx.plus;
    switch (t->k) {
      case MT::Comp: {
        std::vector<Mor> fs;
        fs.reserve(t->ms.size());
        for (const MP& f : t->ms) fs.push_back(mor(f, w));
        return cat::o(m, fs);
      }
      case MT::Id: return m.id(O(0));
      case MT::TenM: return m.tensor_mor(M(0), M(1));
      case MT::ParM: return du(w).par_mor(M(0), M(1));
      case MT::Inv: return cat::invert(M(0));
      case MT::Alpha: return m.alpha(O(0), O(1), O(2));
      case MT::Lunit: return m.lunit(O(0));
      case MT::Runit: return m.runit(O(0));
      case MT::APar: return du(w).alpha_par(O(0), O(1), O(2));
      case MT::LPar: return du(w).lpar(O(0));
      case MT::RPar: return du(w).rpar(O(0));
      case MT::Distl: return du(w).distl(O(0), O(1), O(2));
      case MT::Distr: return du(w).distr(O(0), O(1), O(2));
      case MT::EpsL: return du(w).eps_l(O(0));
      case MT::EtaL: return du(w).eta_l(O(0));
      case MT::Braid: return canon::braid_of(m, eff, O(0), O(1));
      case MT::ParBraid: return du(w).par_braid(eff, O(0), O(1));
      case MT::Pivot:
        if (!cx.pivot) throw Unsupported("axiom needs a pivotal family but none was supplied");
        return cx.pivot(O(0));
      case MT::Beta: return canon::beta(m, O(0), O(1), O(2));
      case MT::Betabar: return canon::betabar(m, O(0), O(1), O(2));
      case MT::Iota: return canon::iota(m, O(0), O(1), O(2));
      case MT::Gamma: return canon::gamma(m, O(0));
      case MT::Gammabar: return canon::gammabar(m, O(0));
      case MT::Uu: return du(w).u();
      case MT::Uup: return du(w).uprime();
      case MT::HomlM: return canon::homl_mor(m, O(0), M(0));
      case MT::HomlC: return canon::homl_mor_contra(m, M(0), O(0));
      case MT::HomrM: return canon::homr_mor(m, M(0), O(0));
      case MT::HomrC: return canon::homr_mor_contra(m, O(0), M(0));
      case MT::Fmor: return fn().F.mor(mor(t->ms[0], World::Src));
      case MT::Phi2: return fn().F.phi2(ob(t->obs[0], World::Src), ob(t->obs[1], World::Src));
      case MT::Ups2: return gv::upsilon2(fn(), ob(t->obs[0], World::Src), ob(t->obs[1], World::Src));
      case MT::DualM: return du(w).D_mor(M(0));
      case MT::CodualM: return du(w).Dp_mor(M(0));
    }
    throw Mismatch("template: bad morphism node");
  }
};

// ---------------------------------------------------------------------------
// printing: the listed equation shapes are rendered from the same trees the
// checker evaluates

std::string pob(const OP& t);

std::string pob_operand(const OP& t) {
  switch (t->k) {
    case OT::Ten:
    case OT::Par:
    case OT::HomL:
    case OT::HomR: return "(" + pob(t) + ")";
    default: return pob(t);
  }
}

std::string pob(const OP& t) {
  switch (t->k) {
    case OT::Var: return std::string(1, static_cast<char>('A' + t->idx));
    case OT::Unit: return "1";
    case OT::Kay: return "K";
    case OT::Ten: return pob_operand(t->a) + "⊗" + pob_operand(t->b);
    case OT::Par: return pob_operand(t->a) + "⅋" + pob_operand(t->b);
    case OT::HomL: return pob_operand(t->a) + "⊸" + pob_operand(t->b);
    case OT::HomR: return pob_operand(t->a) + "⟜" + pob_operand(t->b);
    case OT::Dual: return "D(" + pob(t->a) + ")";
    case OT::Codual: return "D'(" + pob(t->a) + ")";
    case OT::FOb: return "F(" + pob(t->a) + ")";
  }
  return "?";
}

std::string pmor(const MP& t) {
  auto o3 = [&] { return pob(t->obs[0]) + "," + pob(t->obs[1]) + "," + pob(t->obs[2]); };
  auto o2 = [&] { return pob(t->obs[0]) + "," + pob(t->obs[1]); };
  auto sg = [&] { return t->samesign ? std::string("±") : std::string("∓"); };
  switch (t->k) {
    case MT::Comp: {
      std::string s;
      for (std::size_t i = 0; i < t->ms.size(); ++i)
        s += (i ? "∘" : "") + pmor(t->ms[i]);
      return s;
    }
    case MT::Id: return "id_" + pob_operand(t->obs[0]);
    case MT::TenM: return "(" + pmor(t->ms[0]) + " ⊗ " + pmor(t->ms[1]) + ")";
    case MT::ParM: return "(" + pmor(t->ms[0]) + " ⅋ " + pmor(t->ms[1]) + ")";
    case MT::Inv: {
      std::string s = pmor(t->ms[0]);
      if (t->ms[0]->k == MT::Comp) s = "(" + s + ")";
      return s + "⁻¹";
    }
    case MT::Alpha: return "α(" + o3() + ")";
    case MT::Lunit: return "λ(" + pob(t->obs[0]) + ")";
    case MT::Runit: return "ρ(" + pob(t->obs[0]) + ")";
    case MT::APar: return "α⅋(" + o3() + ")";
    case MT::LPar: return "λ⅋(" + pob(t->obs[0]) + ")";
    case MT::RPar: return "ρ⅋(" + pob(t->obs[0]) + ")";
    case MT::Distl: return "distl(" + o3() + ")";
    case MT::Distr: return "distr(" + o3() + ")";
    case MT::EpsL: return "ε̲(" + pob(t->obs[0]) + ")";
    case MT::EtaL: return "η̲(" + pob(t->obs[0]) + ")";
    case MT::Braid: return "c" + sg() + "(" + o2() + ")";
    case MT::ParBraid: return "c̄" + sg() + "(" + o2() + ")";
    case MT::Pivot: return "π(" + pob(t->obs[0]) + ")";
    case MT::Beta: return "β(" + o3() + ")";
    case MT::Betabar: return "β̄(" + o3() + ")";
    case MT::Iota: return "ι(" + o3() + ")";
    case MT::Gamma: return "γ(" + pob(t->obs[0]) + ")";
    case MT::Gammabar: return "γ̄(" + pob(t->obs[0]) + ")";
    case MT::Uu: return "u";
    case MT::Uup: return "u'";
    case MT::HomlM: return "(" + pob_operand(t->obs[0]) + "⊸" + pmor(t->ms[0]) + ")";
    case MT::HomlC: return "(" + pmor(t->ms[0]) + "⊸" + pob_operand(t->obs[0]) + ")";
    case MT::HomrM: return "(" + pmor(t->ms[0]) + "⟜" + pob_operand(t->obs[0]) + ")";
    case MT::HomrC: return "(" + pob_operand(t->obs[0]) + "⟜" + pmor(t->ms[0]) + ")";
    case MT::Fmor: return "F(" + pmor(t->ms[0]) + ")";
    case MT::Phi2: return "φ²(" + o2() + ")";
    case MT::Ups2: return "υ²(" + o2() + ")";
    case MT::DualM: return "D(" + pmor(t->ms[0]) + ")";
    case MT::CodualM: return "D'(" + pmor(t->ms[0]) + ")";
  }
  return "?";
}

// a seeded invertible non-identity endomorphism composed onto f; prefers the
// target side, falls back to the source when F_2 leaves no room there
Mor twisted(const cat::Model& m, const Mor& f, std::uint64_t seed) {
  if (!f.is_lin()) throw Unsupported("perturbation: linear carriers only");
  std::mt19937_64 rng(seed);
  std::uint32_t p = m.prime();
  auto room = [&](int n) { return n > 1 || (n == 1 && p > 2); };
  if (room(f.tgt->dim()))
    return m.compose(cat::lin(f.tgt, f.tgt, fp::random_invertible(rng, p, f.tgt->dim())), f);
  if (room(f.src->dim()))
    return m.compose(f, cat::lin(f.src, f.src, fp::random_invertible(rng, p, f.src->dim())));
  throw Unsupported("perturbation: no non-identity twist exists at this payload");
}

}  // namespace

// ---------------------------------------------------------------------------

std::string axiom_name(AxiomId id) {
  switch (id) {
    case AxiomId::A1: return "A1";
    case AxiomId::A2: return "A2";
    case AxiomId::A3: return "A3";
    case AxiomId::A4: return "A4";
    case AxiomId::A5: return "A5";
    case AxiomId::A6: return "A6";
    case AxiomId::A7: return "A7";
    case AxiomId::A8: return "A8";
    case AxiomId::A9: return "A9";
    case AxiomId::A10: return "A10";
    case AxiomId::S1: return "S1";
    case AxiomId::S2: return "S2";
    case AxiomId::F1: return "F1";
    case AxiomId::F2: return "F2";
    case AxiomId::H1: return "H1";
    case AxiomId::H2: return "H2";
    case AxiomId::PENT: return "PENT";
    case AxiomId::TRI: return "TRI";
    case AxiomId::HEX1: return "HEX1";
    case AxiomId::HEX2: return "HEX2";
    case AxiomId::GVMOR: return "GVMOR";
    case AxiomId::PIV1: return "PIV1";
    case AxiomId::PIV2: return "PIV2";
    case AxiomId::PIV3: return "PIV3";
  }
  return "?";
}

std::optional<AxiomId> axiom_from_name(const std::string& s) {
  for (AxiomId a : all_axioms())
    if (axiom_name(a) == s) return a;
  return std::nullopt;
}

std::vector<AxiomId> all_axioms() {
  using A = AxiomId;
  return {A::A1, A::A2, A::A3, A::A4, A::A5,   A::A6,  A::A7,   A::A8,   A::A9,  A::A10,
          A::S1, A::S2, A::F1, A::F2, A::H1,   A::H2,  A::PENT, A::TRI,  A::HEX1, A::HEX2,
          A::GVMOR, A::PIV1, A::PIV2, A::PIV3};
}

int arity(AxiomId id) { return template_of(id).arity; }

std::string equation_shape(AxiomId id) {
  if (id == AxiomId::GVMOR)
    return "υ⁰∘f(K) = υ⁰ ∧ f(1)∘φ⁰ = φ⁰ ∧ ξʳ∘f(D A) = D(f(A))∘ξʳ ∧ binary laxity ∧ "
           "naturality ∧ f invertible";
  const AxiomTemplate& T = template_of(id);
  return pmor(T.lhs) + " = " + pmor(T.rhs);
}

CheckReport check(AxiomId id, const CheckContext& cx, const std::vector<Ob>& objects) {
  if (!cx.src) throw Unsupported("check: context has no duality data");
  const AxiomTemplate& T = template_of(id);
  if (static_cast<int>(objects.size()) != T.arity)
    throw Mismatch("check: " + axiom_name(id) + " takes " + std::to_string(T.arity) +
                   " objects, got " + std::to_string(objects.size()));
  if ((T.needs & kBraiding) && !cx.src->model().has_braiding())
    throw Unsupported(axiom_name(id) + ": model has no braiding");
  if ((T.needs & kFunctor) && !cx.fn)
    throw Unsupported(axiom_name(id) + ": no lax functor supplied");
  if ((T.needs & kPivot) && !cx.pivot)
    throw Unsupported(axiom_name(id) + ": no pivotal family supplied");
  if ((T.needs & kNat) && !cx.nat)
    throw Unsupported(axiom_name(id) + ": no functor morphism supplied");

  CheckReport r;
  r.axiom = id;
  for (const Ob& o : objects) r.tuple.push_back(o->key());

  if (id == AxiomId::GVMOR) {
    std::string why;
    r.pass = gv::check_functor_morphism(*cx.nat, objects, cx.test_mors, &why);
    r.detail = why;
    return r;
  }

  World w = (T.needs & kFunctor) ? World::Tgt : World::Src;
  Ev ev{cx, objects};
  try {
    Mor L = ev.mor(T.lhs, w), R = ev.mor(T.rhs, w);
    r.lhs = L;
    r.rhs = R;
    if (!cat::same_ob(L.src, R.src) || !cat::same_ob(L.tgt, R.tgt)) {
      r.pass = false;
      r.detail = "payload mismatch: lhs " + L.src->key() + " -> " + L.tgt->key() + ", rhs " +
                 R.src->key() + " -> " + R.tgt->key();
    } else if (!(L == R)) {
      r.pass = false;
      r.detail = "carriers differ";
    } else {
      r.pass = true;
      r.lhs.reset();
      r.rhs.reset();
    }
  } catch (const Unsupported&) {
    throw;
  } catch (const cat::EngineError& e) {
    r.pass = false;
    r.detail = std::string("evaluation failed: ") + e.what();
  }
  return r;
}

std::vector<CheckReport> batch(const CheckContext& cx, const std::vector<PlanItem>& plan,
                               std::uint64_t seed, int budget_ms) {
  std::mt19937_64 rng(seed);
  auto t0 = std::chrono::steady_clock::now();
  auto over = [&] {
    if (budget_ms < 0) return false;
    auto el = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    return el.count() > budget_ms;
  };
  std::vector<CheckReport> out;
  for (const PlanItem& it : plan) {
    for (const auto& tup : it.tuples) {
      if (over()) return out;
      out.push_back(check(it.axiom, cx, tup));
    }
    if (it.random_draws <= 0) continue;
    if (it.pool.empty()) throw Mismatch("batch: random draws need a non-empty pool");
    int ar = arity(it.axiom);
    std::uniform_int_distribution<std::size_t> pick(0, it.pool.size() - 1);
    for (int d = 0; d < it.random_draws; ++d) {
      if (over()) return out;
      std::vector<Ob> tup;
      bool ok = false;
      for (int att = 0; att < 64 && !ok; ++att) {
        tup.clear();
        long long prod = 1;
        for (int i = 0; i < ar; ++i) {
          tup.push_back(it.pool[pick(rng)]);
          prod *= std::max(1, tup.back()->dim());
        }
        ok = prod <= it.max_dim_product;
      }
      if (!ok) continue;  // pool has no tuple under the cap on these draws
      out.push_back(check(it.axiom, cx, tup));
    }
  }
  return out;
}

bool all_pass(const std::vector<CheckReport>& rs) {
  for (const auto& r : rs)
    if (!r.pass) return false;
  return true;
}

// ---------------------------------------------------------------------------

PerturbedModel::PerturbedModel(const cat::Model& base, Perturbation p)
    : base_(base), p_(std::move(p)) {}

std::string PerturbedModel::name() const { return base_.name() + "+twist(" + p_.hook + ")"; }

bool PerturbedModel::hit(const std::string& hook, std::initializer_list<Ob> args) const {
  if (hook != p_.hook || args.size() != p_.at.size()) return false;
  auto it = p_.at.begin();
  for (const Ob& o : args)
    if (o->key() != *it++) return false;
  return true;
}

Mor PerturbedModel::twist(const Mor& m) const {
  if (!cached_) cached_ = twisted(base_, m, p_.seed);
  return *cached_;
}

Mor PerturbedModel::alpha(const Ob& x, const Ob& y, const Ob& z) const {
  Mor m = base_.alpha(x, y, z);
  return hit("alpha", {x, y, z}) ? twist(m) : m;
}
Mor PerturbedModel::alpha_inv(const Ob& x, const Ob& y, const Ob& z) const {
  Mor m = base_.alpha_inv(x, y, z);
  return hit("alpha_inv", {x, y, z}) ? twist(m) : m;
}
Mor PerturbedModel::lunit(const Ob& x) const {
  Mor m = base_.lunit(x);
  return hit("lunit", {x}) ? twist(m) : m;
}
Mor PerturbedModel::lunit_inv(const Ob& x) const {
  Mor m = base_.lunit_inv(x);
  return hit("lunit_inv", {x}) ? twist(m) : m;
}
Mor PerturbedModel::runit(const Ob& x) const {
  Mor m = base_.runit(x);
  return hit("runit", {x}) ? twist(m) : m;
}
Mor PerturbedModel::runit_inv(const Ob& x) const {
  Mor m = base_.runit_inv(x);
  return hit("runit_inv", {x}) ? twist(m) : m;
}
Mor PerturbedModel::ev_l(const Ob& x, const Ob& y) const {
  Mor m = base_.ev_l(x, y);
  return hit("ev_l", {x, y}) ? twist(m) : m;
}
Mor PerturbedModel::coev_l(const Ob& x, const Ob& y) const {
  Mor m = base_.coev_l(x, y);
  return hit("coev_l", {x, y}) ? twist(m) : m;
}
Mor PerturbedModel::ev_r(const Ob& x, const Ob& y) const {
  Mor m = base_.ev_r(x, y);
  return hit("ev_r", {x, y}) ? twist(m) : m;
}
Mor PerturbedModel::coev_r(const Ob& x, const Ob& y) const {
  Mor m = base_.coev_r(x, y);
  return hit("coev_r", {x, y}) ? twist(m) : m;
}
Mor PerturbedModel::braid(const Ob& x, const Ob& y) const {
  Mor m = base_.braid(x, y);
  return hit("braid", {x, y}) ? twist(m) : m;
}

gv::LaxFunctor perturb_phi2(const gv::LaxFunctor& F, const Ob& x, const Ob& y,
                            std::uint64_t seed) {
  gv::LaxFunctor G = F;
  G.label = F.label + "+twist(phi2)";
  auto base = F.phi2;
  auto cache = std::make_shared<std::optional<Mor>>();
  const cat::Model* tm = F.tgt;
  std::string kx = x->key(), ky = y->key();
  G.phi2 = [base, cache, tm, kx, ky, seed](const Ob& a, const Ob& b) -> Mor {
    Mor m = base(a, b);
    if (a->key() != kx || b->key() != ky) return m;
    if (!*cache) *cache = twisted(*tm, m, seed);
    return **cache;
  };
  return G;
}

}  // namespace gvforge::coh
