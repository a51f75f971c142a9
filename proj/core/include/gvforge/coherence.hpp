#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gvforge/gv.hpp"

namespace gvforge::coh {

using cat::Mor;
using cat::Ob;

// the axiom catalog; every id names one equation template instantiated at an
// object tuple of fixed arity (GVMOR delegates to the functor-morphism battery)
enum class AxiomId {
  A1, A2, A3, A4, A5, A6, A7, A8, A9, A10,  // linear distributivity
  S1, S2,                                   // one-sided dual snakes
  F1, F2,                                   // oplax ⅋ vs distributors
  H1, H2,                                   // braiding vs lifted ⅋-braiding
  PENT, TRI, HEX1, HEX2,                    // monoidal / braided base
  GVMOR,                                    // duality-form morphism battery
  PIV1, PIV2, PIV3,                         // pivotal family
};

std::string axiom_name(AxiomId);
std::optional<AxiomId> axiom_from_name(const std::string&);
std::vector<AxiomId> all_axioms();
int arity(AxiomId);

// rendered from the template tree itself, with tuple slots A,B,C,D
std::string equation_shape(AxiomId);

// everything a template may reference; src is mandatory, tgt defaults to src,
// the rest only when an axiom needs it (F*/GVMOR: fn resp. nat; PIV*: pivot)
struct CheckContext {
  const gv::Duality* src = nullptr;
  const gv::Duality* tgt = nullptr;
  const gv::FormFunctor* fn = nullptr;
  const gv::FunctorMorphism* nat = nullptr;
  std::function<Mor(const Ob&)> pivot;
  std::vector<Mor> test_mors;  // naturality probes for GVMOR
  bool plus = true;            // braiding sign threaded through signed nodes
};

struct CheckReport {
  AxiomId axiom{};
  std::vector<std::string> tuple;  // payload keys of the instantiating objects
  bool pass = false;
  std::string detail;              // empty on pass
  std::optional<Mor> lhs, rhs;     // evaluated sides, kept on failure
};

// evaluate both sides of the template at the tuple and compare; a source or
// target payload mismatch between the sides is itself a failure; throws
// cat::Unsupported when the context lacks a structure the axiom needs
CheckReport check(AxiomId, const CheckContext&, const std::vector<Ob>& objects);

// one batch entry: explicit tuples plus optionally some random draws from pool
// (draws whose total dimension product exceeds max_dim_product are skipped)
struct PlanItem {
  AxiomId axiom{};
  std::vector<std::vector<Ob>> tuples;
  int random_draws = 0;
  std::vector<Ob> pool;
  int max_dim_product = 16;
};

// deterministic for a fixed plan and seed; budget_ms < 0 means unlimited,
// otherwise no new tuple is started once the budget has elapsed
std::vector<CheckReport> batch(const CheckContext&, const std::vector<PlanItem>& plan,
                               std::uint64_t seed, int budget_ms = -1);

bool all_pass(const std::vector<CheckReport>&);

// wraps a model and post-composes exactly one structure morphism, at exactly
// one payload tuple, with a seeded random invertible non-identity twist; hooks:
// alpha alpha_inv lunit lunit_inv runit runit_inv ev_l coev_l ev_r coev_r braid
struct Perturbation {
  std::string hook;
  std::vector<std::string> at;  // payload keys the hook arguments must match
  std::uint64_t seed = 1;
};

class PerturbedModel final : public cat::Model {
 public:
  PerturbedModel(const cat::Model& base, Perturbation p);

  std::string name() const override;
  std::uint32_t prime() const override { return base_.prime(); }
  Ob unit() const override { return base_.unit(); }
  Ob tensor_ob(const Ob& x, const Ob& y) const override { return base_.tensor_ob(x, y); }
  Ob homl_ob(const Ob& x, const Ob& y) const override { return base_.homl_ob(x, y); }
  Ob homr_ob(const Ob& y, const Ob& x) const override { return base_.homr_ob(y, x); }

  Mor id(const Ob& x) const override { return base_.id(x); }
  Mor compose(const Mor& g, const Mor& f) const override { return base_.compose(g, f); }
  Mor tensor_mor(const Mor& f, const Mor& g) const override { return base_.tensor_mor(f, g); }

  Mor alpha(const Ob& x, const Ob& y, const Ob& z) const override;
  Mor alpha_inv(const Ob& x, const Ob& y, const Ob& z) const override;
  Mor lunit(const Ob& x) const override;
  Mor lunit_inv(const Ob& x) const override;
  Mor runit(const Ob& x) const override;
  Mor runit_inv(const Ob& x) const override;

  Mor transpose_l(const Ob& x, const Ob& y, const Ob& z, const Mor& f) const override {
    return base_.transpose_l(x, y, z, f);
  }
  Mor untranspose_l(const Ob& x, const Ob& y, const Ob& z, const Mor& g) const override {
    return base_.untranspose_l(x, y, z, g);
  }
  Mor transpose_r(const Ob& x, const Ob& y, const Ob& z, const Mor& f) const override {
    return base_.transpose_r(x, y, z, f);
  }
  Mor untranspose_r(const Ob& x, const Ob& y, const Ob& z, const Mor& g) const override {
    return base_.untranspose_r(x, y, z, g);
  }

  Mor ev_l(const Ob& x, const Ob& y) const override;
  Mor coev_l(const Ob& x, const Ob& y) const override;
  Mor ev_r(const Ob& x, const Ob& y) const override;
  Mor coev_r(const Ob& x, const Ob& y) const override;

  bool has_braiding() const override { return base_.has_braiding(); }
  Mor braid(const Ob& x, const Ob& y) const override;

  Sub equalizer(const Mor& f, const Mor& g) const override { return base_.equalizer(f, g); }
  Quot coequalizer(const Mor& f, const Mor& g) const override {
    return base_.coequalizer(f, g);
  }
  Mor solve_through_epi(const Mor& e, const Mor& f) const override {
    return base_.solve_through_epi(e, f);
  }
  Mor solve_through_mono(const Mor& m, const Mor& f) const override {
    return base_.solve_through_mono(m, f);
  }
  std::vector<Mor> hom_basis(const Ob& x, const Ob& y) const override {
    return base_.hom_basis(x, y);
  }

 private:
  bool hit(const std::string& hook, std::initializer_list<Ob> args) const;
  Mor twist(const Mor& m) const;

  const cat::Model& base_;
  Perturbation p_;
  mutable std::optional<Mor> cached_;
};

// same idea for the binary laxity of a functor: the returned copy twists
// phi2 at exactly the pair (x, y)
gv::LaxFunctor perturb_phi2(const gv::LaxFunctor& F, const Ob& x, const Ob& y,
                            std::uint64_t seed = 1);

}  // namespace gvforge::coh
