#include "cclosure/int_math.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <utility>

#include "cclosure/errors.hpp"

namespace cclosure {

namespace {

[[noreturn]] void overflow() {
  throw ResourceLimit("integer overflow in exact arithmetic (input beyond desk scale)");
}

Int narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) overflow();
  return static_cast<Int>(v);
}

}  // namespace

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) overflow();
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) overflow();
  return r;
}

Int checked_neg(Int a) {
  if (a == INT64_MIN) overflow();
  return -a;
}

Int dot(const IntVector& a, const IntVector& b) {
  __int128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
  return narrow(s);
}

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  Int g = gcd(a, b);
  return checked_mul(std::abs(a) / g, std::abs(b));
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int ceil_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

Int floor_mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Int content(const IntVector& v) {
  Int g = 0;
  for (Int x : v) g = gcd(g, x);
  return g;
}

IntVector primitive(IntVector v) {
  Int g = content(v);
  if (g > 1)
    for (Int& x : v) x /= g;
  return v;
}

Int determinant(const IntMatrix& square) {
  const std::size_t n = square.size();
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = square[i][j];
  // Bareiss fraction-free elimination.
  int sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        __int128 v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        v /= prev;
        narrow(v);
        a[i][j] = v;
      }
    }
    prev = a[k][k];
  }
  return narrow(sign * a[n - 1][n - 1]);
}

namespace {

// Row echelon basis maintained with gcd-normalised integer rows.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t cols) : cols_(cols) {}

  bool insert(IntVector row) {
    for (const auto& [pivot, b] : rows_) {
      if (row[pivot] == 0) continue;
      Int f = row[pivot], g = b[pivot];
      Int d = gcd(f, g);
      Int mr = g / d, mb = f / d;
      for (std::size_t j = 0; j < cols_; ++j)
        row[j] = checked_add(checked_mul(row[j], mr), checked_neg(checked_mul(b[j], mb)));
      row = primitive(std::move(row));
    }
    auto it = std::find_if(row.begin(), row.end(), [](Int x) { return x != 0; });
    if (it == row.end()) return false;
    rows_.emplace_back(static_cast<std::size_t>(it - row.begin()), std::move(row));
    return true;
  }
  std::size_t size() const { return rows_.size(); }

 private:
  std::size_t cols_;
  std::vector<std::pair<std::size_t, IntVector>> rows_;
};

}  // namespace

std::vector<std::size_t> independent_rows(const IntMatrix& m) {
  std::vector<std::size_t> out;
  if (m.empty()) return out;
  EchelonBasis basis(m.front().size());
  for (std::size_t i = 0; i < m.size(); ++i)
    if (basis.insert(m[i])) out.push_back(i);
  return out;
}

std::size_t rank(const IntMatrix& m) { return independent_rows(m).size(); }

IntMatrix transpose(const IntMatrix& m) {
  if (m.empty()) return {};
  IntMatrix t(m.front().size(), IntVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

IntMatrix adjugate(const IntMatrix& square) {
  const std::size_t n = square.size();
  IntMatrix adj(n, IntVector(n, 0));
  if (n == 1) {
    adj[0][0] = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        IntVector row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != j) row.push_back(square[r][c]);
        minor.push_back(std::move(row));
      }
      Int cof = determinant(minor);
      if ((i + j) % 2) cof = checked_neg(cof);
      adj[j][i] = cof;
    }
  }
  return adj;
}

std::vector<IntVector> integer_kernel(const IntMatrix& m, std::size_t columns) {
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::cpp_rational;
  const std::size_t n = columns;
  std::vector<std::vector<cpp_rational>> a;
  for (const auto& row : m) {
    std::vector<cpp_rational> r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = row[j];
    a.push_back(std::move(r));
  }
  // Reduced row echelon form.
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    cpp_rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      cpp_rational f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<IntVector> kernel;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    std::vector<cpp_rational> y(n, 0);
    y[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) y[pivot_cols[i]] = -a[i][free];
    cpp_int den = 1;
    for (const auto& q : y) den = boost::multiprecision::lcm(den, denominator(q));
    IntVector out(n);
    for (std::size_t j = 0; j < n; ++j) {
      cpp_int v = numerator(y[j]) * (den / denominator(y[j]));
      if (v > INT64_MAX || v < INT64_MIN) overflow();
      out[j] = static_cast<Int>(v);
    }
    kernel.push_back(primitive(std::move(out)));
  }
  return kernel;
}

}  // namespace cclosure
