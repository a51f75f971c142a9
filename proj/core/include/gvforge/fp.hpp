#pragma once
// Exact dense linear algebra over prime fields F_p.
//
// Every kernel/cokernel/solve routine picks its basis deterministically
// (echelon pivots, free indices in ascending order): downstream morphism
// equality is exact matrix equality, so reproducibility is load-bearing.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace gvforge::fp {

bool is_prime(std::uint32_t p);

std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t neg_mod(std::uint32_t a, std::uint32_t p);
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);  // a != 0

struct Mat {
  std::uint32_t p = 2;
  int rows = 0;
  int cols = 0;
  std::vector<std::uint32_t> a;  // row-major, entries in [0, p)

  Mat() = default;
  Mat(std::uint32_t p, int rows, int cols);

  std::uint32_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  std::uint32_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  bool operator==(const Mat&) const = default;

  std::string str() const;  // compact dump for failure witnesses
};

Mat eye(std::uint32_t p, int n);
Mat zero(std::uint32_t p, int rows, int cols);

Mat mul(const Mat& A, const Mat& B);
Mat add(const Mat& A, const Mat& B);
Mat sub(const Mat& A, const Mat& B);
Mat scale(std::uint32_t s, const Mat& A);
Mat transpose(const Mat& A);
Mat hstack(const Mat& A, const Mat& B);

// (A⊗B)[(i,k),(j,l)] = A[i,j]·B[k,l]; flattening is lexicographic, left factor major.
Mat kronecker(const Mat& A, const Mat& B);

// Row-reduced echelon form; if pivots != nullptr it receives the pivot column
// of each pivot row, in row order.
Mat rref(Mat A, std::vector<int>* pivots = nullptr);
int rank(const Mat& A);

// Columns form the reduced-echelon basis of {v : Av = 0}; one column per free
// column of rref(A), in ascending free-column order.
Mat kernel_basis(const Mat& A);

struct Coker {
  Mat proj;  // quotient projection, ker(proj) = im(A)
  int dim = 0;
};
// Quotient basis = non-pivot rows of the column-reduced image, ascending.
Coker cokernel(const Mat& A);

// nullopt = not invertible; a *result* (e.g. dualizer checks), not a fault.
std::optional<Mat> invert(const Mat& A);

// X with A·X = B (free variables zeroed), or nullopt if inconsistent.
std::optional<Mat> solve_right(const Mat& A, const Mat& B);
// X with X·A = B, or nullopt if inconsistent.
std::optional<Mat> solve_left(const Mat& A, const Mat& B);

Mat random_mat(std::mt19937_64& rng, std::uint32_t p, int rows, int cols);
// Invertible and distinct from the identity (requires n >= 2 or p >= 3).
Mat random_invertible(std::mt19937_64& rng, std::uint32_t p, int n);

}  // namespace gvforge::fp
