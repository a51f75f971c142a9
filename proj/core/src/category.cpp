#include "gvforge/category.hpp"

namespace gvforge::cat {

const fp::Mat& Mor::mat() const {
  if (!is_lin()) throw Mismatch("morphism carrier is not a matrix");
  return std::get<fp::Mat>(car);
}

const JoinTable& Mor::jt() const {
  if (is_lin()) throw Mismatch("morphism carrier is not a join table");
  return std::get<JoinTable>(car);
}

Mor lin(Ob src, Ob tgt, fp::Mat m) {
  if (m.rows != tgt->dim() || m.cols != src->dim())
    throw Mismatch("lin: carrier shape " + std::to_string(m.rows) + "x" + std::to_string(m.cols) +
                   " does not fit " + src->key() + " -> " + tgt->key());
  return Mor{std::move(src), std::move(tgt), std::move(m)};
}

Mor jmap(Ob src, Ob tgt, JoinTable t) {
  if (t.src_n != src->dim() || t.tgt_n != tgt->dim() ||
      static_cast<int>(t.img.size()) != t.src_n)
    throw Mismatch("jmap: table shape does not fit " + src->key() + " -> " + tgt->key());
  for (int v : t.img)
    if (v < 0 || v >= t.tgt_n) throw Mismatch("jmap: image out of range");
  return Mor{std::move(src), std::move(tgt), std::move(t)};
}

Mor Model::ev_l(const Ob& x, const Ob& y) const {
  Ob h = homl_ob(x, y);
  return untranspose_l(x, h, y, id(h));
}

Mor Model::coev_l(const Ob& x, const Ob& y) const {
  Ob xy = tensor_ob(x, y);
  return transpose_l(x, y, xy, id(xy));
}

Mor Model::ev_r(const Ob& x, const Ob& y) const {
  Ob h = homr_ob(y, x);
  return untranspose_r(x, h, y, id(h));
}

Mor Model::coev_r(const Ob& x, const Ob& y) const {
  Ob yx = tensor_ob(y, x);
  return transpose_r(x, y, yx, id(yx));
}

Mor Model::braid(const Ob&, const Ob&) const {
  throw Unsupported(name() + ": no braiding");
}

Mor Model::homl_mor(const Ob& x, const Mor& g) const {
  return transpose_l(x, homl_ob(x, g.src), g.tgt, compose(g, ev_l(x, g.src)));
}

Mor Model::homl_mor_contra(const Mor& f, const Ob& z) const {
  Ob h = homl_ob(f.tgt, z);
  return transpose_l(f.src, h, z, compose(ev_l(f.tgt, z), tensor_mor(f, id(h))));
}

Mor Model::homr_mor(const Mor& g, const Ob& x) const {
  return transpose_r(x, homr_ob(g.src, x), g.tgt, compose(g, ev_r(x, g.src)));
}

Mor Model::homr_mor_contra(const Ob& z, const Mor& f) const {
  Ob h = homr_ob(z, f.tgt);
  return transpose_r(f.src, h, z, compose(ev_r(f.tgt, z), tensor_mor(id(h), f)));
}

Mor Model::beta(const Ob& x, const Ob& y, const Ob& z) const {
  Ob xy = tensor_ob(x, y);
  Ob w = homl_ob(xy, z);
  Mor u = compose(ev_l(xy, z), alpha_inv(x, y, w));
  Mor v = transpose_l(x, tensor_ob(y, w), z, u);
  return transpose_l(y, w, homl_ob(x, z), v);
}

Mor Model::betabar(const Ob& x, const Ob& y, const Ob& z) const {
  Ob xy = tensor_ob(x, y);
  Ob w = homr_ob(z, xy);
  Mor u = compose(ev_r(xy, z), alpha(w, x, y));
  Mor v = transpose_r(y, tensor_ob(w, x), z, u);
  return transpose_r(x, w, homr_ob(z, y), v);
}

Mor Model::iota(const Ob& x, const Ob& y, const Ob& z) const {
  Ob h = homl_ob(x, y);
  Ob w = homr_ob(h, z);
  Mor u = untranspose_l(x, tensor_ob(w, z), y, ev_r(z, h));
  Mor v = transpose_r(z, tensor_ob(x, w), y, compose(u, alpha(x, w, z)));
  return transpose_l(x, w, homr_ob(y, z), v);
}

Model::Sub Model::equalizer(const Mor&, const Mor&) const {
  throw Unsupported(name() + ": no equalizers");
}

Model::Quot Model::coequalizer(const Mor&, const Mor&) const {
  throw Unsupported(name() + ": no coequalizers");
}

Mor Model::solve_through_epi(const Mor&, const Mor&) const {
  throw Unsupported(name() + ": no epi descent");
}

Mor Model::solve_through_mono(const Mor&, const Mor&) const {
  throw Unsupported(name() + ": no mono descent");
}

std::vector<Mor> Model::hom_basis(const Ob&, const Ob&) const {
  throw Unsupported(name() + ": no hom bases");
}

Mor o(const Model& m, std::initializer_list<Mor> fs) {
  return o(m, std::vector<Mor>(fs));
}

Mor o(const Model& m, const std::vector<Mor>& fs) {
  if (fs.empty()) throw Mismatch("o: empty composite");
  Mor acc = fs.back();
  for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) acc = m.compose(*it, acc);
  return acc;
}

Mor invert(const Mor& f) {
  if (f.is_lin()) {
    auto inv = fp::invert(f.mat());
    if (!inv) throw NotInvertible("invert: " + f.src->key() + " -> " + f.tgt->key());
    return lin(f.tgt, f.src, *inv);
  }
  const JoinTable& t = f.jt();
  if (t.src_n != t.tgt_n) throw NotInvertible("invert: join table not square");
  JoinTable r{t.tgt_n, t.src_n, std::vector<int>(t.tgt_n, -1)};
  for (int i = 0; i < t.src_n; ++i) {
    if (r.img[t.img[i]] != -1) throw NotInvertible("invert: join table not injective");
    r.img[t.img[i]] = i;
  }
  return jmap(f.tgt, f.src, std::move(r));
}

Mor LinearModel::id(const Ob& x) const { return lin(x, x, fp::eye(prime(), x->dim())); }

Mor LinearModel::compose(const Mor& g, const Mor& f) const {
  if (!same_ob(f.tgt, g.src))
    throw Mismatch("compose: " + f.tgt->key() + " != " + g.src->key());
  return lin(f.src, g.tgt, fp::mul(g.mat(), f.mat()));
}

Mor LinearModel::tensor_mor(const Mor& f, const Mor& g) const {
  return lin(tensor_ob(f.src, g.src), tensor_ob(f.tgt, g.tgt),
             fp::kronecker(f.mat(), g.mat()));
}

Mor LinearModel::solve_through_epi(const Mor& e, const Mor& f) const {
  if (!same_ob(e.src, f.src)) throw Mismatch("solve_through_epi: source mismatch");
  auto g = fp::solve_left(e.mat(), f.mat());
  if (!g) throw DescentFailed("solve_through_epi: no factorization through " + e.tgt->key());
  return lin(e.tgt, f.tgt, *g);
}

Mor LinearModel::solve_through_mono(const Mor& m, const Mor& f) const {
  if (!same_ob(m.tgt, f.tgt)) throw Mismatch("solve_through_mono: target mismatch");
  auto g = fp::solve_right(m.mat(), f.mat());
  if (!g) throw DescentFailed("solve_through_mono: no factorization through " + m.src->key());
  return lin(f.src, m.src, *g);
}

}  // namespace gvforge::cat
