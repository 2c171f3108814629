#pragma once
// Dense matrices over F_p and deterministic Gaussian elimination.
//
// Every routine here is a function of its input matrix alone: the reduced row
// echelon form is the unique RREF (pivots in the leftmost possible columns,
// pivot entries 1, pivot columns cleared), kernel and solution bases are read
// off the RREF by fixed rules, so repeated runs produce identical bases.
// Row operations accumulate in 64-bit buffers and reduce mod p lazily.

#include <cstdint>
#include <optional>
#include <vector>

#include "gkoszul/fp.hpp"

namespace gkoszul {

class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols)
      : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

  int rows() const { return r_; }
  int cols() const { return c_; }
  uint32_t& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  uint32_t at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }
  uint32_t* row(int i) { return a_.data() + static_cast<size_t>(i) * c_; }
  const uint32_t* row(int i) const { return a_.data() + static_cast<size_t>(i) * c_; }

  bool operator==(const Mat&) const = default;

  static Mat identity(int n);
  bool is_zero() const;

 private:
  int r_ = 0, c_ = 0;
  std::vector<uint32_t> a_;
};

// Unique reduced row echelon form; zero rows are dropped.
struct Rref {
  Mat m;                   // rank x cols
  std::vector<int> pivot;  // pivot column of each row, strictly increasing
  int rank() const { return static_cast<int>(pivot.size()); }
};

Rref rref(const Mat& a, const Fp& F);
int rank_of(const Mat& a, const Fp& F);

Mat add(const Mat& a, const Mat& b, const Fp& F);
Mat sub(const Mat& a, const Mat& b, const Fp& F);
Mat mul(const Mat& a, const Mat& b, const Fp& F);
Mat scale(const Mat& a, uint32_t c, const Fp& F);
Mat transpose(const Mat& a);
Mat vstack(const Mat& a, const Mat& b);
Mat hstack(const Mat& a, const Mat& b);
// Apply to a single vector (v has a.cols() entries, result a.rows()).
std::vector<uint32_t> apply(const Mat& a, const std::vector<uint32_t>& v, const Fp& F);

// Columns form the canonical kernel basis of {x : a x = 0}: one column per
// free column cf of the RREF, with entry 1 at cf and the negated RREF column
// above the pivots.
Mat kernel_basis(const Mat& a, const Fp& F);

// Solve a X = b for all columns of b at once (free variables set to 0).
// Returns nullopt if any column is inconsistent.
std::optional<Mat> solve(const Mat& a, const Mat& b, const Fp& F);

// Extend span(rows of w) to span(rows of w) + span(rows of z).  The returned
// rows are elements of span(w, z): each is a z-row reduced against everything
// accepted so far, normalized to leading coefficient 1, so together with w
// they span the total and their classes form a basis of the quotient.
Mat complement_basis(const Mat& w, const Mat& z, const Fp& F);

}  // namespace gkoszul
