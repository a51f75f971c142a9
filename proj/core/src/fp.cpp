#include "gvforge/fp.hpp"

#include <sstream>
#include <stdexcept>

namespace gvforge::fp {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = static_cast<std::uint64_t>(a) + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t neg_mod(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw std::invalid_argument("inv_mod: zero has no inverse");
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  std::int64_t res = t % p;
  if (res < 0) res += p;
  return static_cast<std::uint32_t>(res);
}

Mat::Mat(std::uint32_t p_, int rows_, int cols_)
    : p(p_), rows(rows_), cols(cols_), a(static_cast<std::size_t>(rows_) * cols_, 0) {
  if (rows_ < 0 || cols_ < 0) throw std::invalid_argument("Mat: negative shape");
}

std::string Mat::str() const {
  std::ostringstream os;
  os << "F" << p << " " << rows << "x" << cols << ":";
  for (int r = 0; r < rows; ++r) {
    os << (r == 0 ? " " : " / ");
    for (int c = 0; c < cols; ++c) os << (c ? " " : "") << at(r, c);
  }
  return os.str();
}

Mat eye(std::uint32_t p, int n) {
  Mat I(p, n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

Mat zero(std::uint32_t p, int rows, int cols) { return Mat(p, rows, cols); }

static void check_field(const Mat& A, const Mat& B, const char* who) {
  if (A.p != B.p) throw std::invalid_argument(std::string(who) + ": field mismatch");
}

Mat mul(const Mat& A, const Mat& B) {
  check_field(A, B, "mul");
  if (A.cols != B.rows) throw std::invalid_argument("mul: dimension mismatch");
  Mat C(A.p, A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      std::uint32_t aik = A.at(i, k);
      if (!aik) continue;
      for (int j = 0; j < B.cols; ++j)
        C.at(i, j) = add_mod(C.at(i, j), mul_mod(aik, B.at(k, j), A.p), A.p);
    }
  return C;
}

Mat add(const Mat& A, const Mat& B) {
  check_field(A, B, "add");
  if (A.rows != B.rows || A.cols != B.cols) throw std::invalid_argument("add: shape mismatch");
  Mat C = A;
  for (std::size_t i = 0; i < C.a.size(); ++i) C.a[i] = add_mod(C.a[i], B.a[i], A.p);
  return C;
}

Mat sub(const Mat& A, const Mat& B) {
  check_field(A, B, "sub");
  if (A.rows != B.rows || A.cols != B.cols) throw std::invalid_argument("sub: shape mismatch");
  Mat C = A;
  for (std::size_t i = 0; i < C.a.size(); ++i) C.a[i] = sub_mod(C.a[i], B.a[i], A.p);
  return C;
}

Mat scale(std::uint32_t s, const Mat& A) {
  Mat C = A;
  for (auto& x : C.a) x = mul_mod(s % A.p, x, A.p);
  return C;
}

Mat transpose(const Mat& A) {
  Mat T(A.p, A.cols, A.rows);
  for (int r = 0; r < A.rows; ++r)
    for (int c = 0; c < A.cols; ++c) T.at(c, r) = A.at(r, c);
  return T;
}

Mat hstack(const Mat& A, const Mat& B) {
  check_field(A, B, "hstack");
  if (A.rows != B.rows) throw std::invalid_argument("hstack: row mismatch");
  Mat C(A.p, A.rows, A.cols + B.cols);
  for (int r = 0; r < A.rows; ++r) {
    for (int c = 0; c < A.cols; ++c) C.at(r, c) = A.at(r, c);
    for (int c = 0; c < B.cols; ++c) C.at(r, A.cols + c) = B.at(r, c);
  }
  return C;
}

Mat kronecker(const Mat& A, const Mat& B) {
  check_field(A, B, "kronecker");
  Mat C(A.p, A.rows * B.rows, A.cols * B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) {
      std::uint32_t aij = A.at(i, j);
      if (!aij) continue;
      for (int k = 0; k < B.rows; ++k)
        for (int l = 0; l < B.cols; ++l)
          C.at(i * B.rows + k, j * B.cols + l) = mul_mod(aij, B.at(k, l), A.p);
    }
  return C;
}

Mat rref(Mat A, std::vector<int>* pivots) {
  if (pivots) pivots->clear();
  int pr = 0;
  for (int c = 0; c < A.cols && pr < A.rows; ++c) {
    int sel = -1;
    for (int r = pr; r < A.rows; ++r)
      if (A.at(r, c)) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != pr)
      for (int j = 0; j < A.cols; ++j) std::swap(A.at(sel, j), A.at(pr, j));
    std::uint32_t piv_inv = inv_mod(A.at(pr, c), A.p);
    for (int j = 0; j < A.cols; ++j) A.at(pr, j) = mul_mod(A.at(pr, j), piv_inv, A.p);
    for (int r = 0; r < A.rows; ++r) {
      if (r == pr) continue;
      std::uint32_t f = A.at(r, c);
      if (!f) continue;
      for (int j = 0; j < A.cols; ++j)
        A.at(r, j) = sub_mod(A.at(r, j), mul_mod(f, A.at(pr, j), A.p), A.p);
    }
    if (pivots) pivots->push_back(c);
    ++pr;
  }
  return A;
}

int rank(const Mat& A) {
  std::vector<int> piv;
  rref(A, &piv);
  return static_cast<int>(piv.size());
}

Mat kernel_basis(const Mat& A) {
  std::vector<int> piv;
  Mat R = rref(A, &piv);
  std::vector<bool> is_pivot(A.cols, false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < A.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat K(A.p, A.cols, static_cast<int>(free_cols.size()));
  for (int j = 0; j < static_cast<int>(free_cols.size()); ++j) {
    int f = free_cols[j];
    K.at(f, j) = 1;
    for (int i = 0; i < static_cast<int>(piv.size()); ++i)
      K.at(piv[i], j) = neg_mod(R.at(i, f), A.p);
  }
  return K;
}

Coker cokernel(const Mat& A) {
  // column-reduce the image: pivot rows get eliminated from the quotient basis
  Mat R = transpose(rref(transpose(A)));
  int n = A.rows;
  std::vector<bool> pivot_row(n, false);
  std::vector<std::pair<int, int>> piv_cols;  // (pivot row, column)
  for (int c = 0; c < R.cols; ++c) {
    int pr = -1;
    for (int r = 0; r < n; ++r)
      if (R.at(r, c)) {
        pr = r;
        break;
      }
    if (pr >= 0) {
      pivot_row[pr] = true;
      piv_cols.emplace_back(pr, c);
    }
  }
  Mat M = eye(A.p, n);
  for (auto [pr, c] : piv_cols)
    for (int i = 0; i < n; ++i) M.at(i, pr) = sub_mod(M.at(i, pr), R.at(i, c), A.p);
  std::vector<int> keep;
  for (int r = 0; r < n; ++r)
    if (!pivot_row[r]) keep.push_back(r);
  Coker out;
  out.dim = static_cast<int>(keep.size());
  out.proj = Mat(A.p, out.dim, n);
  for (int i = 0; i < out.dim; ++i)
    for (int c = 0; c < n; ++c) out.proj.at(i, c) = M.at(keep[i], c);
  return out;
}

std::optional<Mat> invert(const Mat& A) {
  if (A.rows != A.cols) return std::nullopt;
  auto X = solve_right(A, eye(A.p, A.rows));
  if (!X) return std::nullopt;
  if (mul(*X, A) != eye(A.p, A.rows)) return std::nullopt;
  return X;
}

std::optional<Mat> solve_right(const Mat& A, const Mat& B) {
  check_field(A, B, "solve_right");
  if (A.rows != B.rows) throw std::invalid_argument("solve_right: row mismatch");
  std::vector<int> piv;
  Mat R = rref(hstack(A, B), &piv);
  Mat X(A.p, A.cols, B.cols);
  for (int i = 0; i < static_cast<int>(piv.size()); ++i) {
    if (piv[i] >= A.cols) return std::nullopt;  // pivot in the augmented block
    for (int j = 0; j < B.cols; ++j) X.at(piv[i], j) = R.at(i, A.cols + j);
  }
  if (mul(A, X) != B) return std::nullopt;
  return X;
}

std::optional<Mat> solve_left(const Mat& A, const Mat& B) {
  auto Xt = solve_right(transpose(A), transpose(B));
  if (!Xt) return std::nullopt;
  return transpose(*Xt);
}

Mat random_mat(std::mt19937_64& rng, std::uint32_t p, int rows, int cols) {
  Mat A(p, rows, cols);
  for (auto& x : A.a) x = static_cast<std::uint32_t>(rng() % p);
  return A;
}

Mat random_invertible(std::mt19937_64& rng, std::uint32_t p, int n) {
  if (n == 0 || (n == 1 && p == 2))
    throw std::invalid_argument("random_invertible: no non-identity unit exists");
  for (;;) {
    Mat A = random_mat(rng, p, n, n);
    if (A == eye(p, n)) continue;
    if (invert(A)) return A;
  }
}

}  // namespace gvforge::fp
