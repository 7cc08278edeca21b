#include "finspace/smith.hpp"

#include <climits>
#include <cstdint>
#include <optional>

namespace finspace {

namespace {

struct Overflow {};

// 64-bit integer that throws Overflow instead of wrapping.
class Checked {
 public:
  Checked() = default;
  Checked(long long v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  long long value() const { return v_; }

  friend Checked operator+(Checked a, Checked b) {
    long long r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return r;
  }
  friend Checked operator-(Checked a, Checked b) {
    long long r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return r;
  }
  friend Checked operator*(Checked a, Checked b) {
    long long r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return r;
  }
  friend Checked operator/(Checked a, Checked b) {
    if (a.v_ == LLONG_MIN && b.v_ == -1) throw Overflow{};
    return a.v_ / b.v_;
  }
  friend Checked operator%(Checked a, Checked b) {
    if (b.v_ == -1) return 0;
    return a.v_ % b.v_;
  }
  Checked operator-() const {
    if (v_ == LLONG_MIN) throw Overflow{};
    return -v_;
  }
  Checked& operator+=(Checked b) { return *this = *this + b; }
  Checked& operator-=(Checked b) { return *this = *this - b; }

  friend bool operator==(Checked a, Checked b) { return a.v_ == b.v_; }
  friend bool operator!=(Checked a, Checked b) { return a.v_ != b.v_; }
  friend bool operator<(Checked a, Checked b) { return a.v_ < b.v_; }

 private:
  long long v_ = 0;
};

Checked magnitude(Checked x) { return x < 0 ? -x : x; }
Integer magnitude(const Integer& x) { return x < 0 ? Integer(-x) : x; }

template <typename T>
struct Reduction {
  Matrix<T> S, U, V, U_inv, V_inv;
  std::size_t rank = 0;

  explicit Reduction(Matrix<T> m)
      : S(std::move(m)),
        U(Matrix<T>::identity(S.rows())),
        V(Matrix<T>::identity(S.cols())),
        U_inv(Matrix<T>::identity(S.rows())),
        V_inv(Matrix<T>::identity(S.cols())) {}

  // row[i] += k * row[j]
  void row_add(std::size_t i, std::size_t j, const T& k) {
    S.add_row(i, j, k);
    U.add_row(i, j, k);
    U_inv.add_col(j, i, -k);
  }
  // col[i] += k * col[j]
  void col_add(std::size_t i, std::size_t j, const T& k) {
    S.add_col(i, j, k);
    V.add_col(i, j, k);
    V_inv.add_row(j, i, -k);
  }
  void row_swap(std::size_t i, std::size_t j) {
    S.swap_rows(i, j);
    U.swap_rows(i, j);
    U_inv.swap_cols(i, j);
  }
  void col_swap(std::size_t i, std::size_t j) {
    S.swap_cols(i, j);
    V.swap_cols(i, j);
    V_inv.swap_rows(i, j);
  }
  void row_negate(std::size_t i) {
    S.negate_row(i);
    U.negate_row(i);
    U_inv.negate_col(i);
  }

  // Smallest nonzero |entry| in the trailing block starting at (t, t).
  std::optional<std::pair<std::size_t, std::size_t>> smallest_in_block(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    T best_abs(0);
    for (std::size_t i = t; i < S.rows(); ++i) {
      for (std::size_t j = t; j < S.cols(); ++j) {
        if (S(i, j) == 0) continue;
        T a = magnitude(S(i, j));
        if (!best || a < best_abs) {
          best = {i, j};
          best_abs = a;
          if (a == 1) return best;
        }
      }
    }
    return best;
  }

  // Smallest nonzero |entry| in row t and column t, at or after the pivot.
  std::pair<std::size_t, std::size_t> smallest_in_cross(std::size_t t) const {
    std::pair<std::size_t, std::size_t> best{t, t};
    T best_abs = magnitude(S(t, t));
    for (std::size_t i = t + 1; i < S.rows(); ++i) {
      if (S(i, t) != 0 && (best_abs == 0 || magnitude(S(i, t)) < best_abs)) {
        best = {i, t};
        best_abs = magnitude(S(i, t));
      }
    }
    for (std::size_t j = t + 1; j < S.cols(); ++j) {
      if (S(t, j) != 0 && (best_abs == 0 || magnitude(S(t, j)) < best_abs)) {
        best = {t, j};
        best_abs = magnitude(S(t, j));
      }
    }
    return best;
  }

  void run() {
    const std::size_t limit = std::min(S.rows(), S.cols());
    std::size_t t = 0;
    while (t < limit) {
      auto pivot = smallest_in_block(t);
      if (!pivot) break;
      row_swap(t, pivot->first);
      col_swap(t, pivot->second);

      while (true) {
        bool clean = true;
        for (std::size_t i = t + 1; i < S.rows(); ++i) {
          if (S(i, t) == 0) continue;
          row_add(i, t, -(S(i, t) / S(t, t)));
          if (S(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < S.cols(); ++j) {
          if (S(t, j) == 0) continue;
          col_add(j, t, -(S(t, j) / S(t, t)));
          if (S(t, j) != 0) clean = false;
        }
        if (!clean) {
          const auto [pi, pj] = smallest_in_cross(t);
          row_swap(t, pi);
          col_swap(t, pj);
          continue;
        }
        // The pivot must divide the rest of the block; otherwise pull an
        // offending row in and reduce again, which shrinks the pivot.
        std::optional<std::size_t> bad_row;
        for (std::size_t i = t + 1; i < S.rows() && !bad_row; ++i) {
          for (std::size_t j = t + 1; j < S.cols(); ++j) {
            if (S(i, j) % S(t, t) != 0) {
              bad_row = i;
              break;
            }
          }
        }
        if (!bad_row) break;
        row_add(t, *bad_row, T(1));
      }
      if (S(t, t) < 0) row_negate(t);
      ++t;
    }
    rank = t;
  }
};

Matrix<Checked> to_checked(const IntMatrix& m) {
  Matrix<Checked> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Integer& v = m(i, j);
      if (v > Integer(LLONG_MAX) || v < Integer(LLONG_MIN)) throw Overflow{};
      out(i, j) = static_cast<long long>(v);
    }
  }
  return out;
}

IntMatrix to_integer(const Matrix<Checked>& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).value();
  }
  return out;
}

}  // namespace

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(S(i, i));
  return out;
}

SmithForm smith_normal_form_exact(const IntMatrix& m) {
  Reduction<Integer> r(m);
  r.run();
  return {std::move(r.S), std::move(r.U), std::move(r.V), std::move(r.U_inv), std::move(r.V_inv), r.rank};
}

SmithForm smith_normal_form(const IntMatrix& m) {
  try {
    Reduction<Checked> r(to_checked(m));
    r.run();
    return {to_integer(r.S), to_integer(r.U), to_integer(r.V), to_integer(r.U_inv), to_integer(r.V_inv),
            r.rank};
  } catch (const Overflow&) {
    return smith_normal_form_exact(m);
  }
}

namespace {

// Fraction-free Gaussian elimination. Returns the rank and, for square
// input, the determinant.
std::pair<std::size_t, Integer> bareiss(IntMatrix a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  Integer prev = 1;
  Integer sign = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != rank) {
      a.swap_rows(p, rank);
      sign = -sign;
    }
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a(i, j) = (a(i, j) * a(rank, c) - a(i, c) * a(rank, j)) / prev;
      }
      a(i, c) = 0;
    }
    prev = a(rank, c);
    ++rank;
  }
  Integer det = 0;
  if (rows == cols && rank == rows) det = rows == 0 ? Integer(1) : Integer(sign * a(rows - 1, cols - 1));
  return {rank, det};
}

}  // namespace

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  return bareiss(m).second;
}

std::size_t rational_rank(const IntMatrix& m) { return bareiss(m).first; }

}  // namespace finspace
