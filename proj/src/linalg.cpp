#include "monodepth/linalg.hpp"

#include <gmpxx.h>

#include <stdexcept>
#include <utility>

namespace monodepth {

Field Field::prime(std::uint64_t p) {
  if (p < 2 || p >= (1ULL << 31)) throw std::invalid_argument("field characteristic out of range");
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument(std::to_string(p) + " is not prime");
  Field f;
  f.p_ = p;
  return f;
}

Field Field::parse(const std::string& text) {
  if (text == "q" || text == "Q" || text == "0") return rationals();
  if (text.rfind("fp:", 0) == 0) {
    std::size_t used = 0;
    const std::string digits = text.substr(3);
    std::uint64_t p = 0;
    try {
      p = std::stoull(digits, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != digits.size())
      throw std::invalid_argument("malformed field '" + text + "'");
    return prime(p);
  }
  throw std::invalid_argument("unknown field '" + text + "' (expected q or fp:<p>)");
}

std::string Field::to_string() const { return p_ == 0 ? "q" : "fp:" + std::to_string(p_); }

namespace {

std::size_t rank_rational(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = static_cast<long>(m(r, c));

  // Bareiss: after step k every entry of the trailing block is a (k+1)-minor,
  // so the division by the previous pivot is exact.
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const mpz_class& p = a[rank][c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const mpz_class f = a[r][c];
      for (std::size_t cc = c + 1; cc < cols; ++cc) {
        a[r][cc] = p * a[r][cc] - f * a[rank][cc];
        mpz_divexact(a[r][cc].get_mpz_t(), a[r][cc].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) result = result * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return result;
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  const auto sp = static_cast<std::int64_t>(p);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      a[r][c] = static_cast<std::uint64_t>(((m(r, c) % sp) + sp) % sp);

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const std::uint64_t inv = inverse_mod(a[rank][c], p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      const std::uint64_t f = a[r][c] * inv % p;
      for (std::size_t cc = c; cc < cols; ++cc)
        a[r][cc] = (a[r][cc] + (p - f) * a[rank][cc]) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank(const IntMatrix& m, Field field) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return field.is_rational() ? rank_rational(m) : rank_mod_p(m, field.characteristic());
}

}  // namespace monodepth
