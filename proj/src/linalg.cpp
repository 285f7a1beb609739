#include "quiverkit/linalg.hpp"

#include <limits>

namespace quiverkit {

namespace {

using I128 = __int128;

I128 mul128(I128 a, I128 b) {
  I128 r;
  if (__builtin_mul_overflow(a, b, &r))
    fail(Err::Overflow, "integer overflow in exact elimination");
  return r;
}

I128 sub128(I128 a, I128 b) {
  I128 r;
  if (__builtin_sub_overflow(a, b, &r))
    fail(Err::Overflow, "integer overflow in exact elimination");
  return r;
}

// Fraction-free (Bareiss) forward elimination.  Returns the pivot positions;
// after the call, `m` is upper triangular on the pivot columns and every
// division performed was exact.
std::vector<std::pair<int, int>> eliminate(std::vector<std::vector<I128>>& m, int cols) {
  std::vector<std::pair<int, int>> pivots;
  const int rows = static_cast<int>(m.size());
  const int width = rows == 0 ? 0 : static_cast<int>(m[0].size());
  I128 prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[r], m[sel]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < width; ++j)
        m[i][j] = sub128(mul128(m[i][j], m[r][c]), mul128(m[i][c], m[r][j])) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivots.emplace_back(r, c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<Int> solve_nonneg_integer(const std::vector<DimVector>& cols,
                                      const std::vector<Int>& target,
                                      const char* what) {
  const int k = static_cast<int>(cols.size());
  const int n = static_cast<int>(target.size());
  for (const auto& c : cols)
    if (static_cast<int>(c.size()) != n)
      fail(Err::Internal, std::string(what) + ": column length mismatch");
  if (k == 0) {
    for (Int x : target)
      if (x != 0)
        fail(Err::NonIntegerExpansion,
             std::string(what) + ": nonzero vector over an empty root list");
    return {};
  }
  std::vector<std::vector<I128>> m(n, std::vector<I128>(k + 1, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) m[i][j] = cols[j][i];
    m[i][k] = target[i];
  }
  auto pivots = eliminate(m, k);
  if (static_cast<int>(pivots.size()) != k)
    fail(Err::Internal, std::string(what) + ": roots are linearly dependent");
  // Rows below the last pivot must be identically zero, or the target is
  // outside the span.
  for (int i = k; i < n; ++i)
    if (m[i][k] != 0)
      fail(Err::NonIntegerExpansion,
           std::string(what) + ": not expressible over the given roots");
  std::vector<I128> x(k, 0);
  for (int t = k - 1; t >= 0; --t) {
    auto [r, c] = pivots[t];
    I128 num = m[r][k];
    for (int j = c + 1; j < k; ++j) num = sub128(num, mul128(m[r][j], x[j]));
    if (num % m[r][c] != 0)
      fail(Err::NonIntegerExpansion,
           std::string(what) + ": expansion is not integral");
    x[c] = num / m[r][c];
  }
  std::vector<Int> result(k);
  for (int j = 0; j < k; ++j) {
    if (x[j] < 0)
      fail(Err::NegativeExpansion,
           std::string(what) + ": expansion has a negative coefficient");
    if (x[j] > std::numeric_limits<Int>::max())
      fail(Err::Overflow, std::string(what) + ": expansion coefficient overflows");
    result[j] = static_cast<Int>(x[j]);
  }
  return result;
}

int integer_rank(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) return 0;
  const int width = static_cast<int>(rows[0].size());
  std::vector<std::vector<I128>> m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != width)
      fail(Err::Internal, "rank: ragged row lengths");
    m.emplace_back(r.begin(), r.end());
  }
  return static_cast<int>(eliminate(m, width).size());
}

}  // namespace quiverkit
