#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "walshsum/step_function.hpp"

namespace walshsum {

// Sign of w_k on cell i: (-1)^(sum_j k_j x_j). With x_0 stored as the most
// significant index bit, the mask pairing digit k_j with coordinate x_j is
// the bit-reversal of k.
inline int walsh_sign(std::uint32_t k, std::uint64_t cell, int rank) {
  std::uint64_t mask = bit_reverse(k, rank);
  return (std::popcount(mask & cell) & 1) ? -1 : 1;
}

// Incremental integer tables of the Walsh kernels at a fixed rank:
//   dirichlet  = cell values of D_n
//   fejer_sum  = cell values of A_n := sum_{k=1}^n D_k = n * K_n
// Both are integer-valued, so kernel identities with rational constants
// reduce to integer array identities. Values stay well inside int64 for
// every rank/n this library uses (|A_n| <= n(n+1)/2).
class KernelTable {
 public:
  explicit KernelTable(int rank)
      : rank_(rank), cells_(std::size_t{1} << rank), n_(0),
        dirichlet_(cells_, 0), fejer_sum_(cells_, 0) {
    if (rank < 0 || rank > 24) throw std::invalid_argument("KernelTable: bad rank");
  }

  int rank() const { return rank_; }
  std::size_t cells() const { return cells_; }
  std::uint32_t n() const { return n_; }

  // Steps to n+1: D_{n+1} = D_n + w_n, A_{n+1} = A_n + D_{n+1}.
  void advance() {
    std::uint64_t mask = bit_reverse(n_, rank_);
    if (n_ >= (std::uint64_t{1} << rank_)) {
      throw std::invalid_argument("KernelTable::advance: w_n not constant at this rank");
    }
    for (std::size_t i = 0; i < cells_; ++i) {
      dirichlet_[i] += (std::popcount(mask & i) & 1) ? -1 : 1;
      fejer_sum_[i] += dirichlet_[i];
    }
    ++n_;
  }

  void advance_to(std::uint32_t n) {
    while (n_ < n) advance();
  }

  const std::vector<std::int64_t>& dirichlet() const { return dirichlet_; }  // D_n
  const std::vector<std::int64_t>& fejer_sum() const { return fejer_sum_; }  // n * K_n

 private:
  int rank_;
  std::size_t cells_;
  std::uint32_t n_;
  std::vector<std::int64_t> dirichlet_;
  std::vector<std::int64_t> fejer_sum_;
};

// Snapshot store: D_k and A_k = k*K_k for all k <= n_max at one rank.
// Used by the identity grids, which revisit many indices.
class KernelStore {
 public:
  KernelStore(int rank, std::uint32_t n_max) : rank_(rank) {
    KernelTable t(rank);
    dirichlet_.reserve(n_max + 1);
    fejer_sum_.reserve(n_max + 1);
    dirichlet_.push_back(t.dirichlet());  // D_0 = 0
    fejer_sum_.push_back(t.fejer_sum());  // A_0 = 0
    for (std::uint32_t k = 1; k <= n_max; ++k) {
      t.advance();
      dirichlet_.push_back(t.dirichlet());
      fejer_sum_.push_back(t.fejer_sum());
    }
  }

  int rank() const { return rank_; }
  std::uint32_t n_max() const { return static_cast<std::uint32_t>(dirichlet_.size()) - 1; }
  const std::vector<std::int64_t>& dirichlet(std::uint32_t k) const { return dirichlet_.at(k); }
  const std::vector<std::int64_t>& fejer_sum(std::uint32_t k) const { return fejer_sum_.at(k); }

 private:
  int rank_;
  std::vector<std::vector<std::int64_t>> dirichlet_;
  std::vector<std::vector<std::int64_t>> fejer_sum_;
};

// |n| = position of the highest set bit; 2^|n| <= n < 2^(|n|+1).
inline int order_of(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("order_of: n >= 1 required");
  return 31 - std::countl_zero(n);
}

}  // namespace walshsum
