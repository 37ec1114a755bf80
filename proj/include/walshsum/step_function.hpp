#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "walshsum/scalar.hpp"

namespace walshsum {

// A point of the dyadic group, truncated to its first `rank` coordinates.
// The index encodes x_0..x_{rank-1} as a binary integer with x_0 the most
// significant bit, so group addition is XOR of indices.
struct DyadicPoint {
  int rank = 0;
  std::uint64_t index = 0;

  // e_t: coordinate t set, all others zero.
  static DyadicPoint unit(int t, int rank) {
    if (t < 0 || t >= rank) throw std::invalid_argument("DyadicPoint::unit: t out of range");
    return DyadicPoint{rank, std::uint64_t{1} << (rank - 1 - t)};
  }
};

// |t| = sum t_i / 2^(i+1); with the index encoding this is index / 2^rank.
inline Rational dyadic_abs(const DyadicPoint& t) {
  return rat_u64(t.index) / pow2(t.rank);
}

inline std::uint64_t bit_reverse(std::uint64_t x, int bits) {
  std::uint64_t out = 0;
  for (int i = 0; i < bits; ++i) {
    out = (out << 1) | ((x >> i) & 1u);
  }
  return out;
}

namespace detail {

template <class S>
S cell_count_scalar(int rank) {
  S c(1);
  for (int i = 0; i < rank; ++i) c += c;
  return c;
}

}  // namespace detail

// A function on the dyadic group that is constant on rank-N cells.
// values[i] is the value on the cell whose first N coordinates, read with
// x_0 most significant, form the integer i. Refining to a larger rank
// duplicates values and represents the same function.
template <class S>
class StepFunction {
 public:
  StepFunction(int rank, std::vector<S> values) : rank_(rank), values_(std::move(values)) {
    if (rank_ < 0 || rank_ > 30) throw std::invalid_argument("StepFunction: bad rank");
    if (values_.size() != (std::size_t{1} << rank_)) {
      throw std::invalid_argument("StepFunction: values size must be 2^rank");
    }
  }

  static StepFunction constant(int rank, const S& c) {
    return StepFunction(rank, std::vector<S>(std::size_t{1} << rank, c));
  }
  static StepFunction zero(int rank) { return constant(rank, S(0)); }

  int rank() const { return rank_; }
  std::size_t cells() const { return values_.size(); }
  const std::vector<S>& values() const { return values_; }
  const S& operator[](std::size_t i) const { return values_[i]; }
  S& at(std::size_t i) { return values_[i]; }

  StepFunction refined(int new_rank) const {
    if (new_rank < rank_) throw std::invalid_argument("refined: cannot coarsen");
    if (new_rank == rank_) return *this;
    int shift = new_rank - rank_;
    std::vector<S> out(std::size_t{1} << new_rank);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = values_[i >> shift];
    return StepFunction(new_rank, std::move(out));
  }

  friend StepFunction operator+(const StepFunction& a, const StepFunction& b) {
    auto [x, y] = reconcile(a, b);
    for (std::size_t i = 0; i < x.values_.size(); ++i) x.values_[i] += y.values_[i];
    return x;
  }
  friend StepFunction operator-(const StepFunction& a, const StepFunction& b) {
    auto [x, y] = reconcile(a, b);
    for (std::size_t i = 0; i < x.values_.size(); ++i) x.values_[i] -= y.values_[i];
    return x;
  }
  friend StepFunction operator*(const S& c, StepFunction f) {
    for (auto& v : f.values_) v *= c;
    return f;
  }
  // Pointwise product.
  friend StepFunction operator*(const StepFunction& a, const StepFunction& b) {
    auto [x, y] = reconcile(a, b);
    for (std::size_t i = 0; i < x.values_.size(); ++i) x.values_[i] *= y.values_[i];
    return x;
  }

  bool operator==(const StepFunction& other) const {
    auto [x, y] = reconcile(*this, other);
    return x.values_ == y.values_;
  }

  static std::pair<StepFunction, StepFunction> reconcile(const StepFunction& a,
                                                         const StepFunction& b) {
    int r = std::max(a.rank_, b.rank_);
    return {a.refined(r), b.refined(r)};
  }

 private:
  int rank_;
  std::vector<S> values_;
};

// g(x) = f(x + t). Requires t.rank <= f.rank; t embeds by zero-padding the
// coordinates beyond its rank.
template <class S>
StepFunction<S> translate(const StepFunction<S>& f, const DyadicPoint& t) {
  if (t.rank > f.rank()) throw std::invalid_argument("translate: t.rank > f.rank");
  std::uint64_t mask = t.index << (f.rank() - t.rank);
  std::vector<S> out(f.cells());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f[i ^ mask];
  return StepFunction<S>(f.rank(), std::move(out));
}

// Integral against the normalized Haar measure: the mean of the cell values.
template <class S>
S integrate(const StepFunction<S>& f) {
  S acc(0);
  for (const auto& v : f.values()) acc += v;
  return acc / detail::cell_count_scalar<S>(f.rank());
}

namespace detail {

template <class S>
typename scalar_traits<S>::norm_type lp_norm_of_values(const std::vector<S>& values,
                                                       const LpExponent& p) {
  using T = scalar_traits<S>;
  if (p.is_infinity()) {
    S best(0);
    for (const auto& v : values) {
      S a = T::abs(v);
      if (best < a) best = a;
    }
    if constexpr (T::exact) {
      return RootValue::from_rational(best);
    } else {
      return best;
    }
  }
  if constexpr (T::exact) {
    // Exact mode supports integer p: the norm is then the exact p-th root
    // of a rational. Non-integer p has no exact representation here.
    if (!p.is_integer()) {
      throw std::invalid_argument("lp_norm: exact mode requires integer p or infinity");
    }
    unsigned long e = p.integer_value();
    Rational acc(0);
    for (const auto& v : values) acc += rat_pow(::abs(v), e);
    acc /= rat_u64(values.size());
    return RootValue(acc, static_cast<unsigned>(e));
  } else {
    double pe = rat_to_double(p.value());
    double acc = 0;
    for (double v : values) acc += std::pow(std::fabs(v), pe);
    acc /= static_cast<double>(values.size());
    return std::pow(acc, 1.0 / pe);
  }
}

}  // namespace detail

// (2^-N sum |values|^p)^(1/p); max |values| for p = infinity.
template <class S>
typename scalar_traits<S>::norm_type lp_norm(const StepFunction<S>& f, const LpExponent& p) {
  return detail::lp_norm_of_values(f.values(), p);
}

// In-place unnormalized Walsh-Hadamard butterfly; self-inverse up to 2^N.
template <class S>
void fwht_in_place(std::vector<S>& v) {
  std::size_t n = v.size();
  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t i = 0; i < n; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        S x = v[j];
        S y = v[j + h];
        v[j] = x + y;
        v[j + h] = x - y;
      }
    }
  }
}

// Walsh-Paley coefficients f^(j) = integral f * w_j, j < 2^N.
// The butterfly produces coefficients in Hadamard (index-mask) order; the
// Paley index j corresponds to the bit-reversed mask, hence the permutation.
template <class S>
std::vector<S> walsh_coefficients(const StepFunction<S>& f) {
  std::vector<S> h = f.values();
  fwht_in_place(h);
  std::vector<S> out(h.size());
  S cells = detail::cell_count_scalar<S>(f.rank());
  for (std::size_t j = 0; j < h.size(); ++j) {
    out[j] = h[bit_reverse(j, f.rank())] / cells;
  }
  return out;
}

template <class S>
StepFunction<S> from_walsh_coefficients(int rank, const std::vector<S>& coeffs) {
  if (coeffs.size() != (std::size_t{1} << rank)) {
    throw std::invalid_argument("from_walsh_coefficients: size mismatch");
  }
  std::vector<S> g(coeffs.size());
  for (std::size_t j = 0; j < g.size(); ++j) g[j] = coeffs[bit_reverse(j, rank)];
  fwht_in_place(g);
  return StepFunction<S>(rank, std::move(g));
}

// (f * g)(x) = integral f(x+u) g(u) dmu(u). Diagonalized by the transform:
// Walsh coefficients multiply.
template <class S>
StepFunction<S> dyadic_convolve(const StepFunction<S>& f, const StepFunction<S>& g) {
  auto [a, b] = StepFunction<S>::reconcile(f, g);
  std::vector<S> va = a.values();
  std::vector<S> vb = b.values();
  fwht_in_place(va);
  fwht_in_place(vb);
  S cells = detail::cell_count_scalar<S>(a.rank());
  S cells_sq = cells * cells;
  for (std::size_t i = 0; i < va.size(); ++i) va[i] *= vb[i];
  fwht_in_place(va);
  for (auto& v : va) v /= cells_sq;
  return StepFunction<S>(a.rank(), std::move(va));
}

// omega_p(f, 2^-j): max over translations t with the first j coordinates
// zero of ||f(.+t) - f||_p. At rank N those t are exactly the points with
// |t| < 2^-j. Requires j <= f.rank.
template <class S>
typename scalar_traits<S>::norm_type modulus_of_continuity(const StepFunction<S>& f, int j,
                                                           const LpExponent& p) {
  using T = scalar_traits<S>;
  if (j < 0 || j > f.rank()) {
    throw std::invalid_argument("modulus_of_continuity: requires 0 <= j <= rank");
  }
  std::size_t shifts = std::size_t{1} << (f.rank() - j);
  std::vector<S> diff(f.cells());
  typename T::norm_type best{};
  if constexpr (T::exact) {
    best = RootValue::from_rational(Rational(0));
  } else {
    best = 0.0;
  }
  for (std::size_t t = 1; t < shifts; ++t) {
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = f[i ^ t] - f[i];
    auto nrm = detail::lp_norm_of_values(diff, p);
    if constexpr (T::exact) {
      // Same degree throughout: compare radicands.
      if (best.radicand < nrm.radicand) best = nrm;
    } else {
      if (best < nrm) best = nrm;
    }
  }
  return best;
}

}  // namespace walshsum
