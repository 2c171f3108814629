#include "gkoszul/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace gkoszul {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](uint32_t x) { return x == 0; });
}

namespace {

// Left-looking echelon state.  Stored rows are forward-reduced only (each row
// had zero entries at the pivots known when it was inserted) and have pivot
// entry 1.  Rows are applied to a 64-bit accumulation buffer in insertion
// order, which reproduces plain Gaussian reduction; the buffer is reduced mod
// p whenever enough multiply-adds have piled up to risk overflow.
class Eliminator {
 public:
  Eliminator(int cols, const Fp& F)
      : F_(F),
        cols_(cols),
        buf_(cols),
        per_((uint64_t)(F.p() - 1) * (F.p() - 1)),
        budget_(per_ ? UINT64_MAX / per_ : UINT64_MAX) {}

  // Load v (cols_ entries) into the buffer and reduce against all stored
  // rows.  Afterwards the buffer holds the fully reduced row, entries < p.
  void reduce(const uint32_t* v) {
    const uint32_t p = F_.p();
    for (int j = 0; j < cols_; ++j) buf_[j] = v[j];
    uint64_t used = 0;
    for (size_t k = 0; k < rows_.size(); ++k) {
      int c = pivot_[k];
      uint32_t f = static_cast<uint32_t>(buf_[c] % p);
      if (f == 0) continue;
      uint32_t g = p - f;
      const uint32_t* r = rows_[k].data();
      uint64_t* b = buf_.data();
      for (int j = c; j < cols_; ++j) b[j] += (uint64_t)g * r[j];
      if (++used >= budget_) {
        for (int j = 0; j < cols_; ++j) buf_[j] %= p;
        used = 0;
      }
    }
    for (int j = 0; j < cols_; ++j) buf_[j] %= p;
  }

  // After reduce(): insert the buffer as a new echelon row if nonzero.
  // Returns the pivot column, or -1 if the row reduced to zero.
  int insert() {
    const uint32_t p = F_.p();
    int c = -1;
    for (int j = 0; j < cols_; ++j)
      if (buf_[j] % p != 0) {
        c = j;
        break;
      }
    if (c < 0) return -1;
    std::vector<uint32_t> row(cols_, 0);
    uint32_t lead = static_cast<uint32_t>(buf_[c] % p);
    uint32_t s = F_.inv(lead);
    for (int j = c; j < cols_; ++j)
      row[j] = F_.mul(static_cast<uint32_t>(buf_[j] % p), s);
    rows_.push_back(std::move(row));
    pivot_.push_back(c);
    return c;
  }

  // The most recently inserted (normalized) echelon row.
  const std::vector<uint32_t>& last_row() const { return rows_.back(); }

  int rank() const { return static_cast<int>(rows_.size()); }

  // Finish into the unique RREF: order rows by pivot column and clear every
  // pivot column in the other rows.
  Rref finish() {
    const uint32_t p = F_.p();
    int n = rank();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return pivot_[a] < pivot_[b]; });

    Rref out;
    out.m = Mat(n, cols_);
    out.pivot.resize(n);
    for (int i = 0; i < n; ++i) out.pivot[i] = pivot_[order[i]];
    // Back-substitute from the row with the rightmost pivot upwards.  A
    // finalized row has 1 at its own pivot and 0 at all other pivots, so the
    // factors below can be read in any order.
    for (int i = n - 1; i >= 0; --i) {
      const std::vector<uint32_t>& src = rows_[order[i]];
      for (int j = 0; j < cols_; ++j) buf_[j] = src[j];
      uint64_t used = 0;
      for (int k = i + 1; k < n; ++k) {
        int c = out.pivot[k];
        uint32_t f = static_cast<uint32_t>(buf_[c] % p);
        if (f == 0) continue;
        uint32_t g = p - f;
        const uint32_t* r = out.m.row(k);
        uint64_t* b = buf_.data();
        for (int j = c; j < cols_; ++j) b[j] += (uint64_t)g * r[j];
        if (++used >= budget_) {
          for (int j = 0; j < cols_; ++j) buf_[j] %= p;
          used = 0;
        }
      }
      uint32_t* dst = out.m.row(i);
      for (int j = 0; j < cols_; ++j)
        dst[j] = static_cast<uint32_t>(buf_[j] % p);
    }
    return out;
  }

 private:
  const Fp& F_;
  int cols_;
  std::vector<uint64_t> buf_;
  uint64_t per_, budget_;
  std::vector<std::vector<uint32_t>> rows_;
  std::vector<int> pivot_;
};

}  // namespace

Rref rref(const Mat& a, const Fp& F) {
  Eliminator e(a.cols(), F);
  for (int i = 0; i < a.rows(); ++i) {
    e.reduce(a.row(i));
    e.insert();
  }
  return e.finish();
}

int rank_of(const Mat& a, const Fp& F) {
  Eliminator e(a.cols(), F);
  for (int i = 0; i < a.rows(); ++i) {
    e.reduce(a.row(i));
    e.insert();
  }
  return e.rank();
}

Mat add(const Mat& a, const Mat& b, const Fp& F) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  Mat out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = F.add(a.at(i, j), b.at(i, j));
  return out;
}

Mat sub(const Mat& a, const Mat& b, const Fp& F) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  Mat out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = F.sub(a.at(i, j), b.at(i, j));
  return out;
}

Mat scale(const Mat& a, uint32_t c, const Fp& F) {
  Mat out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = F.mul(a.at(i, j), c);
  return out;
}

Mat mul(const Mat& a, const Mat& b, const Fp& F) {
  assert(a.cols() == b.rows());
  const uint32_t p = F.p();
  uint64_t per = (uint64_t)(p - 1) * (p - 1);
  uint64_t budget = per ? UINT64_MAX / per : UINT64_MAX;
  Mat out(a.rows(), b.cols());
  std::vector<uint64_t> buf(b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    std::fill(buf.begin(), buf.end(), 0);
    uint64_t used = 0;
    for (int k = 0; k < a.cols(); ++k) {
      uint32_t f = a.at(i, k);
      if (f == 0) continue;
      const uint32_t* r = b.row(k);
      for (int j = 0; j < b.cols(); ++j) buf[j] += (uint64_t)f * r[j];
      if (++used >= budget) {
        for (int j = 0; j < b.cols(); ++j) buf[j] %= p;
        used = 0;
      }
    }
    for (int j = 0; j < b.cols(); ++j)
      out.at(i, j) = static_cast<uint32_t>(buf[j] % p);
  }
  return out;
}

Mat transpose(const Mat& a) {
  Mat out(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(j, i) = a.at(i, j);
  return out;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  assert(a.cols() == b.cols());
  Mat out(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    std::copy(a.row(i), a.row(i) + a.cols(), out.row(i));
  for (int i = 0; i < b.rows(); ++i)
    std::copy(b.row(i), b.row(i) + b.cols(), out.row(a.rows() + i));
  return out;
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  assert(a.rows() == b.rows());
  Mat out(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    std::copy(a.row(i), a.row(i) + a.cols(), out.row(i));
    std::copy(b.row(i), b.row(i) + b.cols(), out.row(i) + a.cols());
  }
  return out;
}

std::vector<uint32_t> apply(const Mat& a, const std::vector<uint32_t>& v, const Fp& F) {
  assert(static_cast<int>(v.size()) == a.cols());
  const uint32_t p = F.p();
  std::vector<uint32_t> out(a.rows(), 0);
  for (int i = 0; i < a.rows(); ++i) {
    uint64_t acc = 0;
    const uint32_t* r = a.row(i);
    for (int j = 0; j < a.cols(); ++j) {
      acc += (uint64_t)r[j] * v[j];
      if ((j & 1023) == 1023) acc %= p;
    }
    out[i] = static_cast<uint32_t>(acc % p);
  }
  return out;
}

Mat kernel_basis(const Mat& a, const Fp& F) {
  Rref r = rref(a, F);
  int n = a.cols();
  std::vector<char> is_pivot(n, 0);
  for (int c : r.pivot) is_pivot[c] = 1;
  int free_count = n - r.rank();
  Mat k(n, free_count);
  int col = 0;
  for (int cf = 0; cf < n; ++cf) {
    if (is_pivot[cf]) continue;
    k.at(cf, col) = 1;
    for (int i = 0; i < r.rank(); ++i)
      k.at(r.pivot[i], col) = F.neg(r.m.at(i, cf));
    ++col;
  }
  return k;
}

std::optional<Mat> solve(const Mat& a, const Mat& b, const Fp& F) {
  assert(a.rows() == b.rows());
  Rref r = rref(hstack(a, b), F);
  int n = a.cols();
  for (int c : r.pivot)
    if (c >= n) return std::nullopt;
  Mat x(n, b.cols());
  for (int i = 0; i < r.rank(); ++i)
    for (int j = 0; j < b.cols(); ++j) x.at(r.pivot[i], j) = r.m.at(i, n + j);
  return x;
}

Mat complement_basis(const Mat& w, const Mat& z, const Fp& F) {
  assert(w.rows() == 0 || z.rows() == 0 || w.cols() == z.cols());
  int cols = z.cols() ? z.cols() : w.cols();
  Eliminator e(cols, F);
  for (int i = 0; i < w.rows(); ++i) {
    e.reduce(w.row(i));
    e.insert();
  }
  std::vector<std::vector<uint32_t>> picked;
  for (int i = 0; i < z.rows(); ++i) {
    e.reduce(z.row(i));
    if (e.insert() >= 0) picked.push_back(e.last_row());
  }
  Mat out(static_cast<int>(picked.size()), cols);
  for (size_t i = 0; i < picked.size(); ++i)
    std::copy(picked[i].begin(), picked[i].end(), out.row(static_cast<int>(i)));
  return out;
}

}  // namespace gkoszul
