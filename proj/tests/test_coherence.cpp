#include "doctest.h"
#include "gvforge/coherence.hpp"
#include "gvforge/graded.hpp"

#include <string>
#include <vector>

using namespace gvforge;
using cat::Mor;
using cat::Ob;
using coh::AxiomId;

namespace {

// dims 1 and 2, so every exhaustive tuple stays within dimension product 16
std::vector<Ob> small_pool(const graded::GradedModel& m) {
  if (m.ctx()->gsize > 1) return {m.mk_ob({0}), m.mk_ob({0, 1})};
  return {m.mk_ob({0}), m.mk_ob({0, 0})};
}

std::vector<std::vector<Ob>> exhaustive(const std::vector<Ob>& pool, int ar) {
  std::vector<std::vector<Ob>> out;
  int n = static_cast<int>(pool.size()), total = 1;
  for (int i = 0; i < ar; ++i) total *= n;
  for (int code = 0; code < total; ++code) {
    std::vector<Ob> t;
    for (int i = 0, c = code; i < ar; ++i, c /= n) t.push_back(pool[c % n]);
    out.push_back(t);
  }
  return out;
}

// every axiom that needs no functor data, exhaustively over the small pool
void battery_green(const graded::GradedModel& m) {
  gv::Duality g(m, m.unit());
  coh::CheckContext cx;
  cx.src = &g;
  cx.pivot = [&](const Ob& a) { return cat::invert(g.drinfeld(true, a)); };
  auto pool = small_pool(m);
  for (AxiomId id : coh::all_axioms()) {
    if (id == AxiomId::F1 || id == AxiomId::F2 || id == AxiomId::GVMOR) continue;
    for (const auto& tup : exhaustive(pool, coh::arity(id))) {
      auto r = coh::check(id, cx, tup);
      CHECK_MESSAGE(r.pass, coh::axiom_name(id) << " at " << (tup.empty() ? "()" : tup[0]->key())
                                                << ": " << r.detail);
    }
  }
}

// parity-forgetting functor sVec(p) → Vec(p): strong monoidal, form = id
struct Forget {
  graded::GradedModel sv;
  graded::GradedModel v;
  gv::Duality gs;
  gv::Duality gt;
  gv::LaxFunctor F;
  gv::FormFunctor ff;

  explicit Forget(std::uint32_t p)
      : sv(graded::GradedModel::svec(p)), v(graded::GradedModel::vec(p)),
        gs(sv, sv.unit()), gt(v, v.unit()) {
    F.src = &sv;
    F.tgt = &v;
    F.label = "forget";
    F.ob = [this](const Ob& x) { return v.mk_ob(std::vector<int>(x->dim(), 0)); };
    F.mor = [this](const Mor& f) { return cat::lin(F.ob(f.src), F.ob(f.tgt), f.mat()); };
    F.phi0 = [this] { return v.id(v.unit()); };
    F.phi2 = [this](const Ob& x, const Ob& y) {
      return v.id(F.ob(sv.tensor_ob(x, y)));
    };
    ff.F = F;
    ff.src = &gs;
    ff.tgt = &gt;
    ff.v0 = v.id(v.unit());
  }
};

}  // namespace

TEST_CASE("axiom catalog: names round-trip, shapes render from the templates") {
  for (AxiomId id : coh::all_axioms()) {
    CHECK(coh::axiom_from_name(coh::axiom_name(id)) == id);
    CHECK(coh::arity(id) >= 0);
    CHECK(coh::arity(id) <= 4);
    CHECK(!coh::equation_shape(id).empty());
  }
  CHECK(!coh::axiom_from_name("A11").has_value());
  CHECK(coh::equation_shape(AxiomId::A1) == "(λ(A) ⅋ id_B)∘distl(1,A,B) = λ(A⅋B)");
  CHECK(coh::equation_shape(AxiomId::PENT).find("α(A⊗B,C,D)") != std::string::npos);
  CHECK(coh::equation_shape(AxiomId::S1).find("η̲(A)") != std::string::npos);
  CHECK(coh::equation_shape(AxiomId::F1).find("υ²(A⊗B,C)") != std::string::npos);
  CHECK(coh::equation_shape(AxiomId::PIV3).find("u'") != std::string::npos);
}

TEST_CASE("full battery passes on Vec(F_2), Vec(F_3), sVec(F_3)") {
  battery_green(graded::GradedModel::vec(2));
  battery_green(graded::GradedModel::vec(3));
  battery_green(graded::GradedModel::svec(3));
}

TEST_CASE("functor axioms pass for the parity-forgetting functor") {
  Forget E(3);
  coh::CheckContext cx;
  cx.src = &E.gs;
  cx.tgt = &E.gt;
  cx.fn = &E.ff;
  std::vector<Ob> pool{E.sv.mk_ob({0}), E.sv.mk_ob({1}), E.sv.mk_ob({0, 1})};
  for (const auto& tup : exhaustive(pool, 3)) {
    CHECK(coh::check(AxiomId::F1, cx, tup).pass);
    CHECK(coh::check(AxiomId::F2, cx, tup).pass);
  }

  gv::FunctorMorphism nat{&E.ff, &E.ff,
                          [&](const Ob& x) { return E.v.id(E.ff.F.ob(x)); }};
  cx.nat = &nat;
  for (const Ob& x : pool)
    for (const Ob& y : pool) {
      auto hb = E.sv.hom_basis(x, y);
      if (!hb.empty()) cx.test_mors.push_back(hb.front());
    }
  for (const Ob& x : pool)
    for (const Ob& y : pool) {
      auto r = coh::check(AxiomId::GVMOR, cx, {x, y});
      CHECK_MESSAGE(r.pass, r.detail);
    }
}

TEST_CASE("missing structure throws instead of mis-evaluating") {
  auto v = graded::GradedModel::vec(2);
  gv::Duality g(v, v.unit());
  coh::CheckContext cx;
  cx.src = &g;
  Ob a = v.mk_ob({0});
  CHECK_THROWS_AS((void)coh::check(AxiomId::PIV1, cx, {a, a}), cat::Unsupported);
  CHECK_THROWS_AS((void)coh::check(AxiomId::F1, cx, {a, a, a}), cat::Unsupported);
  CHECK_THROWS_AS((void)coh::check(AxiomId::GVMOR, cx, {a, a}), cat::Unsupported);
  CHECK_THROWS_AS((void)coh::check(AxiomId::A1, cx, {a}), cat::Mismatch);
}

TEST_CASE("sides landing on different payloads fail the check") {
  auto v = graded::GradedModel::vec(2);
  gv::Duality g(v, v.unit());
  coh::CheckContext cx;
  cx.src = &g;
  // misshapen pivotal family: composes with γ but starts at the wrong object
  Ob a2 = v.mk_ob({0, 0});
  Ob hk = v.homl_ob(v.unit(), g.k());
  cx.pivot = [&](const Ob&) { return cat::lin(a2, hk, fp::Mat(2, hk->dim(), a2->dim())); };
  auto r = coh::check(AxiomId::PIV2, cx, {});
  CHECK(!r.pass);
  CHECK(r.detail.rfind("payload mismatch", 0) == 0);
  CHECK(r.lhs.has_value());
  CHECK(r.rhs.has_value());
}

TEST_CASE("batch: empty plan, declared tuples, deterministic random draws") {
  auto v = graded::GradedModel::vec(2);
  gv::Duality g(v, v.unit());
  coh::CheckContext cx;
  cx.src = &g;
  CHECK(coh::batch(cx, {}, 7).empty());

  auto pool = small_pool(v);
  std::vector<coh::PlanItem> plan;
  plan.push_back({AxiomId::S1, {{pool[0]}, {pool[1]}}, 0, {}, 16});
  plan.push_back({AxiomId::A5, {}, 6, pool, 16});
  plan.push_back({AxiomId::PENT, {}, 4, pool, 16});
  auto r1 = coh::batch(cx, plan, 42);
  auto r2 = coh::batch(cx, plan, 42);
  CHECK(r1.size() == 12);
  REQUIRE(r1.size() == r2.size());
  for (std::size_t i = 0; i < r1.size(); ++i) {
    CHECK(r1[i].axiom == r2[i].axiom);
    CHECK(r1[i].tuple == r2[i].tuple);
    CHECK(r1[i].pass == r2[i].pass);
    CHECK(r1[i].pass);
  }
  CHECK(coh::all_pass(r1));
}

TEST_CASE("a twisted associator breaks the pentagon and is reported with witnesses") {
  auto v = graded::GradedModel::vec(2);
  Ob a2 = v.mk_ob({0, 0});
  coh::PerturbedModel pm(v, {"alpha", {a2->key(), a2->key(), a2->key()}, 5});
  gv::Duality g(pm, pm.unit());
  coh::CheckContext cx;
  cx.src = &g;
  auto r = coh::check(AxiomId::PENT, cx, {a2, a2, a2, a2});
  CHECK(!r.pass);
  CHECK(!r.detail.empty());
  CHECK(r.lhs.has_value());
  CHECK(r.rhs.has_value());

  // the same report reproduces on a re-run
  auto r2 = coh::check(AxiomId::PENT, cx, {a2, a2, a2, a2});
  CHECK(r2.pass == r.pass);
  CHECK(r2.detail == r.detail);
  CHECK(*r2.lhs == *r.lhs);
  CHECK(*r2.rhs == *r.rhs);

  // control: the unperturbed model passes the same instance
  gv::Duality g0(v, v.unit());
  coh::CheckContext cx0;
  cx0.src = &g0;
  CHECK(coh::check(AxiomId::PENT, cx0, {a2, a2, a2, a2}).pass);
}

TEST_CASE("a twisted evaluation breaks a snake") {
  auto v = graded::GradedModel::vec(2);
  Ob a2 = v.mk_ob({0, 0});
  coh::PerturbedModel pm(v, {"ev_r", {a2->key(), v.unit()->key()}, 6});
  gv::Duality g(pm, pm.unit());
  coh::CheckContext cx;
  cx.src = &g;
  std::vector<coh::CheckReport> rs{coh::check(AxiomId::S1, cx, {a2}),
                                   coh::check(AxiomId::S2, cx, {a2})};
  CHECK(!coh::all_pass(rs));
}

TEST_CASE("a twisted binary laxity breaks the oplax comparison") {
  Forget E(3);
  Ob x = E.sv.mk_ob({0, 1}), y = E.sv.mk_ob({1}), z = E.sv.mk_ob({0, 1});
  gv::LaxFunctor Fz = coh::perturb_phi2(E.F, x, y, 9);
  gv::FormFunctor ffz{Fz, &E.gs, &E.gt, E.v.id(E.v.unit())};
  coh::CheckContext cx;
  cx.src = &E.gs;
  cx.tgt = &E.gt;
  cx.fn = &ffz;
  auto r = coh::check(AxiomId::F1, cx, {x, y, z});
  CHECK(!r.pass);

  coh::CheckContext cx0 = cx;
  cx0.fn = &E.ff;
  CHECK(coh::check(AxiomId::F1, cx0, {x, y, z}).pass);
}
