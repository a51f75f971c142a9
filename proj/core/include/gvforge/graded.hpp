// Finite-dimensional vector spaces over F_p graded by a finite abelian group
// (a product of cyclic factors), with braiding given by a bicharacter table.
// The ungraded case is the trivial group. Objects carry an ordered list of
// basis degrees; degree addition is strict, so associators and unitors are
// identity matrices between payload-equal objects.
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gvforge/category.hpp"

namespace gvforge::graded {

struct GradingCtx {
  std::uint32_t p = 2;
  std::vector<int> factors;  // cyclic orders; empty = trivial group
  int gsize = 1;
  fp::Mat chi;               // gsize x gsize bicharacter values in F_p
  std::string ctx_key;

  int add(int a, int b) const;
  int neg(int a) const;
  int sub(int a, int b) const { return add(a, neg(b)); }
};

using Ctx = std::shared_ptr<const GradingCtx>;

struct GVecOb final : cat::ObData {
  Ctx ctx;
  std::vector<int> degs;

  std::string key() const override;
  int dim() const override { return static_cast<int>(degs.size()); }
};

class GradedModel final : public cat::LinearModel {
 public:
  // chi must satisfy the bicharacter laws for the given factors
  GradedModel(std::uint32_t p, std::vector<int> factors, fp::Mat chi);

  static GradedModel vec(std::uint32_t p);   // trivial grading, symmetric swap
  static GradedModel svec(std::uint32_t p);  // Z/2 grading, sign braiding (p odd)

  std::string name() const override;
  std::uint32_t prime() const override { return ctx_->p; }
  const Ctx& ctx() const { return ctx_; }

  cat::Ob mk_ob(std::vector<int> degs) const;

  cat::Ob unit() const override;
  cat::Ob tensor_ob(const cat::Ob&, const cat::Ob&) const override;
  cat::Ob homl_ob(const cat::Ob& x, const cat::Ob& y) const override;
  cat::Ob homr_ob(const cat::Ob& y, const cat::Ob& x) const override;

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

  Sub equalizer(const cat::Mor& f, const cat::Mor& g) const override;
  Quot coequalizer(const cat::Mor& f, const cat::Mor& g) const override;

  std::vector<cat::Mor> hom_basis(const cat::Ob& x, const cat::Ob& y) const override;

 private:
  Ctx ctx_;
  const GVecOb& cast(const cat::Ob&, const char* who) const;
};

}  // namespace gvforge::graded
