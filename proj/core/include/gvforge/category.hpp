// Objects, morphisms, and the abstract model interface every backend implements.
// A model is a monoidal category with both internal homs, presented through
// finite carriers: F_p matrices or finite-lattice join maps. Object identity
// is payload identity (equal key strings), so structurally equal objects
// compare equal even when built along different routes.
#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gvforge/fp.hpp"

namespace gvforge::cat {

struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// requested structure the backend does not carry (braiding, hom bases, ...)
struct Unsupported : EngineError {
  using EngineError::EngineError;
};
// a map that should factor through an epi/mono does not
struct DescentFailed : EngineError {
  using EngineError::EngineError;
};
// a comparison map that should be invertible is not
struct NotInvertible : EngineError {
  using EngineError::EngineError;
};
// endpoints or carriers do not line up
struct Mismatch : EngineError {
  using EngineError::EngineError;
};

struct ObData {
  virtual ~ObData() = default;
  virtual std::string key() const = 0;  // payload identity
  virtual int dim() const = 0;          // carrier size
};

using Ob = std::shared_ptr<const ObData>;

inline bool same_ob(const Ob& a, const Ob& b) { return a->key() == b->key(); }

// carrier of a morphism between finite suplattices: element-wise image table
struct JoinTable {
  int src_n = 0, tgt_n = 0;
  std::vector<int> img;
  bool operator==(const JoinTable&) const = default;
};

struct Mor {
  Ob src, tgt;
  std::variant<fp::Mat, JoinTable> car;

  const fp::Mat& mat() const;
  const JoinTable& jt() const;
  bool is_lin() const { return std::holds_alternative<fp::Mat>(car); }
  bool operator==(const Mor& o) const {
    return src->key() == o.src->key() && tgt->key() == o.tgt->key() && car == o.car;
  }
};

// linear morphism with shape checks; columns index src, rows index tgt
Mor lin(Ob src, Ob tgt, fp::Mat m);
// suplattice morphism with shape checks
Mor jmap(Ob src, Ob tgt, JoinTable t);

class Model {
 public:
  virtual ~Model() = default;
  virtual std::string name() const = 0;
  virtual std::uint32_t prime() const { return 0; }  // 0: carriers not F_p-linear

  virtual Ob unit() const = 0;
  virtual Ob tensor_ob(const Ob&, const Ob&) const = 0;
  virtual Ob homl_ob(const Ob& x, const Ob& y) const = 0;  // x ⊸ y
  virtual Ob homr_ob(const Ob& y, const Ob& x) const = 0;  // y ⟜ x

  virtual Mor id(const Ob&) const = 0;
  virtual Mor compose(const Mor& g, const Mor& f) const = 0;  // g∘f
  virtual Mor tensor_mor(const Mor&, const Mor&) const = 0;

  virtual Mor alpha(const Ob&, const Ob&, const Ob&) const = 0;  // (x⊗y)⊗z → x⊗(y⊗z)
  virtual Mor alpha_inv(const Ob&, const Ob&, const Ob&) const = 0;
  virtual Mor lunit(const Ob&) const = 0;  // 1⊗x → x
  virtual Mor lunit_inv(const Ob&) const = 0;
  virtual Mor runit(const Ob&) const = 0;  // x⊗1 → x
  virtual Mor runit_inv(const Ob&) const = 0;

  // currying bijections of the two internal homs
  virtual Mor transpose_l(const Ob& x, const Ob& y, const Ob& z,
                          const Mor& f) const = 0;  // f: x⊗y→z  ⟼  y→(x⊸z)
  virtual Mor untranspose_l(const Ob& x, const Ob& y, const Ob& z, const Mor& g) const = 0;
  virtual Mor transpose_r(const Ob& x, const Ob& y, const Ob& z,
                          const Mor& f) const = 0;  // f: y⊗x→z  ⟼  y→(z⟜x)
  virtual Mor untranspose_r(const Ob& x, const Ob& y, const Ob& z, const Mor& g) const = 0;

  // evaluation/coevaluation, derived from the currying bijections once and for
  // all; virtual so instrumented wrappers can interpose
  virtual Mor ev_l(const Ob& x, const Ob& y) const;    // x⊗(x⊸y) → y
  virtual Mor coev_l(const Ob& x, const Ob& y) const;  // y → x⊸(x⊗y)
  virtual Mor ev_r(const Ob& x, const Ob& y) const;    // (y⟜x)⊗x → y
  virtual Mor coev_r(const Ob& x, const Ob& y) const;  // y → (y⊗x)⟜x

  virtual bool has_braiding() const { return false; }
  virtual Mor braid(const Ob& x, const Ob& y) const;  // x⊗y → y⊗x

  // hom functoriality and iterated-hom reshuffles, derived from the currying
  // bijections; virtual because the generic route tensors a hom carrier with
  // its argument, which table-carried backends can do far more cheaply by
  // acting on the tables directly
  virtual Mor homl_mor(const Ob& x, const Mor& g) const;         // x⊸g : (x⊸y)→(x⊸y')
  virtual Mor homl_mor_contra(const Mor& f, const Ob& z) const;  // f⊸z : (y⊸z)→(x⊸z)
  virtual Mor homr_mor(const Mor& g, const Ob& x) const;         // g⟜x : (y⟜x)→(y'⟜x)
  virtual Mor homr_mor_contra(const Ob& z, const Mor& f) const;  // z⟜f : (z⟜y)→(z⟜x)
  virtual Mor beta(const Ob& x, const Ob& y, const Ob& z) const;     // (x⊗y)⊸z → y⊸(x⊸z)
  virtual Mor betabar(const Ob& x, const Ob& y, const Ob& z) const;  // z⟜(x⊗y) → (z⟜y)⟜x
  virtual Mor iota(const Ob& x, const Ob& y, const Ob& z) const;     // (x⊸y)⟜z → x⊸(y⟜z)

  struct Sub {
    Ob ob;
    Mor incl;
  };
  struct Quot {
    Ob ob;
    Mor proj;
  };
  virtual Sub equalizer(const Mor& f, const Mor& g) const;
  virtual Quot coequalizer(const Mor& f, const Mor& g) const;
  // the unique g with g∘e = f (e a regular epi) resp. m∘g = f (m a regular mono)
  virtual Mor solve_through_epi(const Mor& e, const Mor& f) const;
  virtual Mor solve_through_mono(const Mor& m, const Mor& f) const;

  // basis of Hom(x,y) as morphisms, for linear backends
  virtual std::vector<Mor> hom_basis(const Ob& x, const Ob& y) const;
};

// right-to-left composite: o(M, {h, g, f}) = h∘g∘f
Mor o(const Model& m, std::initializer_list<Mor> fs);
Mor o(const Model& m, const std::vector<Mor>& fs);

// carrier-level inverse; throws NotInvertible
Mor invert(const Mor& f);

// shared implementation for backends whose carriers are F_p matrices
class LinearModel : public Model {
 public:
  Mor id(const Ob&) const override;
  Mor compose(const Mor& g, const Mor& f) const override;
  Mor tensor_mor(const Mor&, const Mor&) const override;
  Mor solve_through_epi(const Mor& e, const Mor& f) const override;
  Mor solve_through_mono(const Mor& m, const Mor& f) const override;
};

}  // namespace gvforge::cat
