#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace nil {

bool is_prime(std::uint64_t p);

/// Dense matrix over GF(2), rows packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void set(std::size_t r, std::size_t c) { data_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64); }
  void flip(std::size_t r, std::size_t c) { data_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }
  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * words_ + c / 64] >> (c % 64)) & 1U;
  }

  /// Rank by Gaussian elimination; destroys the contents.
  std::size_t eliminate();

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t words_;
  std::vector<std::uint64_t> data_;
};

/// Dense matrix over GF(p) for a prime p < 2^31.
class ModMatrix {
 public:
  ModMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t modulus() const { return p_; }

  std::uint32_t get(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Stores value mod p; negative values wrap.
  void set(std::size_t r, std::size_t c, std::int64_t value);

  /// Rank by Gaussian elimination; destroys the contents.
  std::size_t eliminate();

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::uint32_t p_;
  std::vector<std::uint32_t> data_;
};

/// Rank over GF(p) of a matrix given as signed entries (row, col, value).
struct Entry {
  std::uint32_t row;
  std::uint32_t col;
  int value;
};

std::size_t rank_mod_p(std::size_t rows, std::size_t cols, const std::vector<Entry>& entries,
                       std::uint32_t p);

}  // namespace nil
