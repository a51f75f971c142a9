#include "gvforge/graded.hpp"

#include <sstream>

namespace gvforge::graded {

using cat::Mismatch;
using cat::Mor;
using cat::Ob;

namespace {

std::vector<int> decompose(const std::vector<int>& factors, int d) {
  std::vector<int> c(factors.size());
  for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
    c[i] = d % factors[i];
    d /= factors[i];
  }
  return c;
}

int recompose(const std::vector<int>& factors, const std::vector<int>& c) {
  int d = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) d = d * factors[i] + c[i];
  return d;
}

}  // namespace

int GradingCtx::add(int a, int b) const {
  auto ca = decompose(factors, a), cb = decompose(factors, b);
  for (std::size_t i = 0; i < factors.size(); ++i) ca[i] = (ca[i] + cb[i]) % factors[i];
  return recompose(factors, ca);
}

int GradingCtx::neg(int a) const {
  auto c = decompose(factors, a);
  for (std::size_t i = 0; i < factors.size(); ++i) c[i] = (factors[i] - c[i]) % factors[i];
  return recompose(factors, c);
}

std::string GVecOb::key() const {
  std::ostringstream os;
  os << "gr[" << ctx->ctx_key << ";d=";
  for (std::size_t i = 0; i < degs.size(); ++i) os << (i ? "," : "") << degs[i];
  os << "]";
  return os.str();
}

GradedModel::GradedModel(std::uint32_t p, std::vector<int> factors, fp::Mat chi) {
  if (!fp::is_prime(p)) throw Mismatch("graded model: p must be prime");
  int gsize = 1;
  for (int f : factors) {
    if (f < 1) throw Mismatch("graded model: cyclic factors must be positive");
    gsize *= f;
  }
  if (chi.p != p || chi.rows != gsize || chi.cols != gsize)
    throw Mismatch("graded model: bicharacter table shape mismatch");
  auto c = std::make_shared<GradingCtx>();
  c->p = p;
  c->factors = factors;
  c->gsize = gsize;
  c->chi = std::move(chi);
  std::ostringstream os;
  os << "p=" << p << ";G=";
  for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "x" : "") << factors[i];
  c->ctx_key = os.str();
  for (int a = 0; a < gsize; ++a)
    for (int b = 0; b < gsize; ++b) {
      if (c->chi.at(a, b) == 0) throw Mismatch("graded model: bicharacter value 0");
      for (int d = 0; d < gsize; ++d) {
        if (c->chi.at(c->add(a, b), d) !=
            fp::mul_mod(c->chi.at(a, d), c->chi.at(b, d), p))
          throw Mismatch("graded model: not a bicharacter (left law)");
        if (c->chi.at(d, c->add(a, b)) !=
            fp::mul_mod(c->chi.at(d, a), c->chi.at(d, b), p))
          throw Mismatch("graded model: not a bicharacter (right law)");
      }
    }
  ctx_ = std::move(c);
}

GradedModel GradedModel::vec(std::uint32_t p) {
  fp::Mat chi(p, 1, 1);
  chi.at(0, 0) = 1;
  return GradedModel(p, {}, std::move(chi));
}

GradedModel GradedModel::svec(std::uint32_t p) {
  fp::Mat chi(p, 2, 2);
  chi.at(0, 0) = chi.at(0, 1) = chi.at(1, 0) = 1;
  chi.at(1, 1) = p - 1;
  return GradedModel(p, {2}, std::move(chi));
}

std::string GradedModel::name() const { return "gvec(" + ctx_->ctx_key + ")"; }

const GVecOb& GradedModel::cast(const Ob& x, const char* who) const {
  auto* g = dynamic_cast<const GVecOb*>(x.get());
  if (!g || g->ctx->ctx_key != ctx_->ctx_key)
    throw Mismatch(std::string(who) + ": foreign object " + x->key());
  return *g;
}

Ob GradedModel::mk_ob(std::vector<int> degs) const {
  for (int d : degs)
    if (d < 0 || d >= ctx_->gsize) throw Mismatch("mk_ob: degree out of range");
  auto ob = std::make_shared<GVecOb>();
  ob->ctx = ctx_;
  ob->degs = std::move(degs);
  return ob;
}

Ob GradedModel::unit() const { return mk_ob({0}); }

Ob GradedModel::tensor_ob(const Ob& x, const Ob& y) const {
  const auto& a = cast(x, "tensor_ob");
  const auto& b = cast(y, "tensor_ob");
  std::vector<int> degs;
  degs.reserve(a.degs.size() * b.degs.size());
  for (int di : a.degs)
    for (int dj : b.degs) degs.push_back(ctx_->add(di, dj));
  return mk_ob(std::move(degs));
}

Ob GradedModel::homl_ob(const Ob& x, const Ob& y) const {
  const auto& a = cast(x, "homl_ob");
  const auto& b = cast(y, "homl_ob");
  std::vector<int> degs;
  degs.reserve(a.degs.size() * b.degs.size());
  for (int di : a.degs)
    for (int dj : b.degs) degs.push_back(ctx_->sub(dj, di));
  return mk_ob(std::move(degs));
}

Ob GradedModel::homr_ob(const Ob& y, const Ob& x) const {
  const auto& b = cast(y, "homr_ob");
  const auto& a = cast(x, "homr_ob");
  std::vector<int> degs;
  degs.reserve(a.degs.size() * b.degs.size());
  for (int dj : b.degs)
    for (int di : a.degs) degs.push_back(ctx_->sub(dj, di));
  return mk_ob(std::move(degs));
}

Mor GradedModel::alpha(const Ob& x, const Ob& y, const Ob& z) const {
  Ob s = tensor_ob(tensor_ob(x, y), z), t = tensor_ob(x, tensor_ob(y, z));
  return cat::lin(s, t, fp::eye(prime(), s->dim()));
}

Mor GradedModel::alpha_inv(const Ob& x, const Ob& y, const Ob& z) const {
  Ob s = tensor_ob(x, tensor_ob(y, z)), t = tensor_ob(tensor_ob(x, y), z);
  return cat::lin(s, t, fp::eye(prime(), s->dim()));
}

Mor GradedModel::lunit(const Ob& x) const {
  return cat::lin(tensor_ob(unit(), x), x, fp::eye(prime(), x->dim()));
}

Mor GradedModel::lunit_inv(const Ob& x) const {
  return cat::lin(x, tensor_ob(unit(), x), fp::eye(prime(), x->dim()));
}

Mor GradedModel::runit(const Ob& x) const {
  return cat::lin(tensor_ob(x, unit()), x, fp::eye(prime(), x->dim()));
}

Mor GradedModel::runit_inv(const Ob& x) const {
  return cat::lin(x, tensor_ob(x, unit()), fp::eye(prime(), x->dim()));
}

Mor GradedModel::transpose_l(const Ob& x, const Ob& y, const Ob& z, const Mor& f) const {
  if (!same_ob(f.src, tensor_ob(x, y)) || !same_ob(f.tgt, z))
    throw Mismatch("transpose_l: endpoint mismatch");
  int dx = x->dim(), dy = y->dim(), dz = z->dim();
  fp::Mat g(prime(), dx * dz, dy);
  for (int i = 0; i < dx; ++i)
    for (int k = 0; k < dz; ++k)
      for (int j = 0; j < dy; ++j) g.at(i * dz + k, j) = f.mat().at(k, i * dy + j);
  return cat::lin(y, homl_ob(x, z), std::move(g));
}

Mor GradedModel::untranspose_l(const Ob& x, const Ob& y, const Ob& z, const Mor& g) const {
  if (!same_ob(g.src, y) || !same_ob(g.tgt, homl_ob(x, z)))
    throw Mismatch("untranspose_l: endpoint mismatch");
  int dx = x->dim(), dy = y->dim(), dz = z->dim();
  fp::Mat f(prime(), dz, dx * dy);
  for (int i = 0; i < dx; ++i)
    for (int k = 0; k < dz; ++k)
      for (int j = 0; j < dy; ++j) f.at(k, i * dy + j) = g.mat().at(i * dz + k, j);
  return cat::lin(tensor_ob(x, y), z, std::move(f));
}

Mor GradedModel::transpose_r(const Ob& x, const Ob& y, const Ob& z, const Mor& f) const {
  if (!same_ob(f.src, tensor_ob(y, x)) || !same_ob(f.tgt, z))
    throw Mismatch("transpose_r: endpoint mismatch");
  int dx = x->dim(), dy = y->dim(), dz = z->dim();
  fp::Mat g(prime(), dz * dx, dy);
  for (int k = 0; k < dz; ++k)
    for (int i = 0; i < dx; ++i)
      for (int j = 0; j < dy; ++j) g.at(k * dx + i, j) = f.mat().at(k, j * dx + i);
  return cat::lin(y, homr_ob(z, x), std::move(g));
}

Mor GradedModel::untranspose_r(const Ob& x, const Ob& y, const Ob& z, const Mor& g) const {
  if (!same_ob(g.src, y) || !same_ob(g.tgt, homr_ob(z, x)))
    throw Mismatch("untranspose_r: endpoint mismatch");
  int dx = x->dim(), dy = y->dim(), dz = z->dim();
  fp::Mat f(prime(), dz, dy * dx);
  for (int k = 0; k < dz; ++k)
    for (int i = 0; i < dx; ++i)
      for (int j = 0; j < dy; ++j) f.at(k, j * dx + i) = g.mat().at(k * dx + i, j);
  return cat::lin(tensor_ob(y, x), z, std::move(f));
}

Mor GradedModel::braid(const Ob& x, const Ob& y) const {
  const auto& a = cast(x, "braid");
  const auto& b = cast(y, "braid");
  int dx = a.dim(), dy = b.dim();
  fp::Mat c(prime(), dy * dx, dx * dy);
  for (int i = 0; i < dx; ++i)
    for (int j = 0; j < dy; ++j)
      c.at(j * dx + i, i * dy + j) = ctx_->chi.at(a.degs[i], b.degs[j]);
  return cat::lin(tensor_ob(x, y), tensor_ob(y, x), std::move(c));
}

GradedModel::Sub GradedModel::equalizer(const Mor& f, const Mor& g) const {
  if (!same_ob(f.src, g.src) || !same_ob(f.tgt, g.tgt))
    throw Mismatch("equalizer: parallel pair expected");
  const auto& sx = cast(f.src, "equalizer");
  fp::Mat m = fp::sub(f.mat(), g.mat());
  std::vector<int> piv;
  fp::rref(m, &piv);
  std::vector<bool> is_piv(m.cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<int> degs;
  for (int c = 0; c < m.cols; ++c)
    if (!is_piv[c]) degs.push_back(sx.degs[c]);
  Ob e = mk_ob(std::move(degs));
  return Sub{e, cat::lin(e, f.src, fp::kernel_basis(m))};
}

GradedModel::Quot GradedModel::coequalizer(const Mor& f, const Mor& g) const {
  if (!same_ob(f.src, g.src) || !same_ob(f.tgt, g.tgt))
    throw Mismatch("coequalizer: parallel pair expected");
  const auto& ty = cast(f.tgt, "coequalizer");
  fp::Mat m = fp::sub(f.mat(), g.mat());
  std::vector<int> pivT;
  fp::rref(fp::transpose(m), &pivT);
  std::vector<bool> is_piv(m.rows, false);
  for (int r : pivT) is_piv[r] = true;
  std::vector<int> degs;
  for (int r = 0; r < m.rows; ++r)
    if (!is_piv[r]) degs.push_back(ty.degs[r]);
  fp::Coker ck = fp::cokernel(m);
  Ob q = mk_ob(std::move(degs));
  return Quot{q, cat::lin(f.tgt, q, std::move(ck.proj))};
}

std::vector<Mor> GradedModel::hom_basis(const Ob& x, const Ob& y) const {
  const auto& a = cast(x, "hom_basis");
  const auto& b = cast(y, "hom_basis");
  std::vector<Mor> out;
  for (int i = 0; i < a.dim(); ++i)
    for (int k = 0; k < b.dim(); ++k) {
      if (a.degs[i] != b.degs[k]) continue;
      fp::Mat e(prime(), b.dim(), a.dim());
      e.at(k, i) = 1;
      out.push_back(cat::lin(x, y, std::move(e)));
    }
  return out;
}

}  // namespace gvforge::graded
