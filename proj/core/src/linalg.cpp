#include "nil/linalg.hpp"

#include <algorithm>
#include <utility>

#include "nil/error.hpp"

namespace nil {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

std::size_t BitMatrix::eliminate() {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < rows_ && !(data_[pivot * words_ + w] & mask)) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank) {
      std::swap_ranges(data_.begin() + pivot * words_, data_.begin() + (pivot + 1) * words_,
                       data_.begin() + rank * words_);
    }
    const std::uint64_t* src = &data_[rank * words_];
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      std::uint64_t* dst = &data_[r * words_];
      if (dst[w] & mask) {
        for (std::size_t k = w; k < words_; ++k) dst[k] ^= src[k];
      }
    }
    ++rank;
  }
  return rank;
}

namespace {

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

ModMatrix::ModMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {
  if (p >= (std::uint32_t{1} << 31) || !is_prime(p)) {
    throw ParameterError("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }
}

void ModMatrix::set(std::size_t r, std::size_t c, std::int64_t value) {
  std::int64_t m = value % static_cast<std::int64_t>(p_);
  if (m < 0) m += p_;
  data_[r * cols_ + c] = static_cast<std::uint32_t>(m);
}

std::size_t ModMatrix::eliminate() {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows_ && data_[pivot * cols_ + c] == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank) {
      std::swap_ranges(data_.begin() + pivot * cols_, data_.begin() + (pivot + 1) * cols_,
                       data_.begin() + rank * cols_);
    }
    std::uint32_t* src = &data_[rank * cols_];
    const std::uint64_t inv = pow_mod(src[c], p_ - 2, p_);
    for (std::size_t k = c; k < cols_; ++k) src[k] = static_cast<std::uint32_t>(src[k] * inv % p_);
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      std::uint32_t* dst = &data_[r * cols_];
      const std::uint64_t factor = dst[c];
      if (factor == 0) continue;
      const std::uint64_t neg = p_ - factor;
      for (std::size_t k = c; k < cols_; ++k) {
        if (src[k] != 0) dst[k] = static_cast<std::uint32_t>((dst[k] + neg * src[k]) % p_);
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_p(std::size_t rows, std::size_t cols, const std::vector<Entry>& entries,
                       std::uint32_t p) {
  if (rows == 0 || cols == 0) {
    if (!is_prime(p)) throw ParameterError("field characteristic " + std::to_string(p) + " is not prime");
    return 0;
  }
  if (p == 2) {
    BitMatrix m(rows, cols);
    for (const Entry& e : entries) {
      if (e.value % 2 != 0) m.flip(e.row, e.col);
    }
    return m.eliminate();
  }
  ModMatrix m(rows, cols, p);
  for (const Entry& e : entries) {
    m.set(e.row, e.col, static_cast<std::int64_t>(m.get(e.row, e.col)) + e.value);
  }
  return m.eliminate();
}

}  // namespace nil
