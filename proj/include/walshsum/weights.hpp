#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "walshsum/scalar.hpp"

namespace walshsum {

// One row {t_{k,n} : 1 <= k <= n} of a triangular summation matrix.
// Weights are non-negative; monotonicity flags and the row sum are computed
// from the weights at construction, never taken from the caller.
template <class S>
struct TriangularRow {
  std::uint32_t n = 0;
  std::vector<S> weights;  // weights[k-1] = t_{k,n}
  bool non_increasing = false;
  bool non_decreasing = false;
  S sum = S(0);

  static TriangularRow from_weights(std::uint32_t n, std::vector<S> w) {
    if (n == 0 || w.size() != n) {
      throw std::invalid_argument("TriangularRow: weights size must equal n >= 1");
    }
    TriangularRow row;
    row.n = n;
    row.weights = std::move(w);
    row.non_increasing = true;
    row.non_decreasing = true;
    for (std::uint32_t k = 0; k < n; ++k) {
      if (row.weights[k] < S(0)) {
        throw std::invalid_argument("TriangularRow: negative weight");
      }
      row.sum += row.weights[k];
      if (k > 0) {
        if (row.weights[k - 1] < row.weights[k]) row.non_increasing = false;
        if (row.weights[k] < row.weights[k - 1]) row.non_decreasing = false;
      }
    }
    return row;
  }

  // t_{k,n}, 1-indexed; t_{n+1,n} := 0.
  const S& t(std::uint32_t k) const {
    static const S zero(0);
    if (k < 1 || k > n + 1) throw std::invalid_argument("TriangularRow::t: k out of range");
    return k == n + 1 ? zero : weights[k - 1];
  }

  // Delta t_{k,n} = t_{k,n} - t_{k+1,n}.
  S delta(std::uint32_t k) const { return t(k) - t(k + 1); }
};

struct RowClass {
  bool non_increasing;
  bool non_decreasing;
  bool normalized;
};

template <class S>
RowClass classify_row(const TriangularRow<S>& row) {
  return RowClass{row.non_increasing, row.non_decreasing,
                  scalar_traits<S>::eq(row.sum, S(1))};
}

// Generator of triangular rows. Norlund-like kinds (norlund, cesaro,
// logarithmic) carry a sequence q_0, q_1, ... with q_0 > 0 and build
// t_{k,n} = q_{n-k}/Q_n; the weighted kind carries p_1, p_2, ... with
// p_1 > 0 and builds t_{k,n} = p_k/P_n; explicit rows are given verbatim.
template <class S>
class WeightScheme {
 public:
  enum class Kind { Norlund, Weighted, Cesaro, Logarithmic, Explicit };

  static WeightScheme fejer() {
    return norlund("fejer", [](std::uint32_t) { return S(1); });
  }
  static WeightScheme norlund(std::string label, std::function<S(std::uint32_t)> q) {
    WeightScheme s(Kind::Norlund, std::move(label));
    s.coeff_ = std::move(q);
    return s;
  }
  static WeightScheme weighted(std::string label, std::function<S(std::uint32_t)> p) {
    WeightScheme s(Kind::Weighted, std::move(label));
    s.coeff_ = std::move(p);
    return s;
  }
  static WeightScheme logarithmic() {
    WeightScheme s(Kind::Logarithmic, "norlund:log");
    s.coeff_ = [](std::uint32_t k) {
      return scalar_traits<S>::from_rational(rat(1, static_cast<long>(k) + 1));
    };
    return s;
  }
  // q_k = C(k + alpha - 1, k) via q_0 = 1, q_k = q_{k-1} (k + alpha - 1)/k.
  static WeightScheme cesaro(const Rational& alpha) {
    if (alpha <= 0) throw std::invalid_argument("cesaro: requires alpha > 0");
    WeightScheme s(Kind::Cesaro, "cesaro:" + rat_str(alpha));
    auto cache = std::make_shared<std::vector<S>>(1, S(1));
    S a = scalar_traits<S>::from_rational(alpha);
    s.coeff_ = [cache, a](std::uint32_t k) {
      while (cache->size() <= k) {
        std::uint32_t m = static_cast<std::uint32_t>(cache->size());
        S km = S(static_cast<long>(m));
        cache->push_back(cache->back() * (km + a - S(1)) / km);
      }
      return (*cache)[k];
    };
    return s;
  }
  static WeightScheme explicit_rows(std::string label,
                                    std::vector<std::vector<S>> rows) {
    WeightScheme s(Kind::Explicit, std::move(label));
    s.rows_ = std::move(rows);
    return s;
  }

  Kind kind() const { return kind_; }
  const std::string& label() const { return label_; }

  // True for every kind generated by a Norlund sequence {q_k}.
  bool is_norlund() const {
    return kind_ == Kind::Norlund || kind_ == Kind::Cesaro || kind_ == Kind::Logarithmic;
  }
  bool is_weighted() const { return kind_ == Kind::Weighted; }

  S q(std::uint32_t k) const {
    if (!is_norlund()) throw std::invalid_argument("WeightScheme::q: not a Norlund scheme");
    S v = coeff_(k);
    if (v < S(0)) throw std::invalid_argument("WeightScheme: q_k must be >= 0");
    if (k == 0 && !(S(0) < v)) throw std::invalid_argument("WeightScheme: requires q_0 > 0");
    return v;
  }
  // Q_n = sum_{k=0}^{n-1} q_k; Q_m = 0 for m <= 0.
  S Q(std::int64_t n) const {
    if (n <= 0) return S(0);
    S acc(0);
    for (std::int64_t k = 0; k < n; ++k) acc += q(static_cast<std::uint32_t>(k));
    return acc;
  }
  S p(std::uint32_t k) const {
    if (!is_weighted()) throw std::invalid_argument("WeightScheme::p: not a weighted scheme");
    if (k < 1) throw std::invalid_argument("WeightScheme::p: index starts at 1");
    S v = coeff_(k);
    if (v < S(0)) throw std::invalid_argument("WeightScheme: p_k must be >= 0");
    if (k == 1 && !(S(0) < v)) throw std::invalid_argument("WeightScheme: requires p_1 > 0");
    return v;
  }
  S P(std::uint32_t n) const {
    S acc(0);
    for (std::uint32_t k = 1; k <= n; ++k) acc += p(k);
    return acc;
  }

  const std::vector<std::vector<S>>& rows() const { return rows_; }

 private:
  WeightScheme(Kind kind, std::string label) : kind_(kind), label_(std::move(label)) {}

  Kind kind_;
  std::string label_;
  std::function<S(std::uint32_t)> coeff_;
  std::vector<std::vector<S>> rows_;
};

template <class S>
TriangularRow<S> build_row(const WeightScheme<S>& scheme, std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("build_row: n >= 1 required");
  std::vector<S> w(n);
  if (scheme.is_norlund()) {
    S qn = scheme.Q(n);
    if (!(S(0) < qn)) throw std::invalid_argument("build_row: degenerate scheme, Q_n = 0");
    for (std::uint32_t k = 1; k <= n; ++k) w[k - 1] = scheme.q(n - k) / qn;
  } else if (scheme.is_weighted()) {
    S pn = scheme.P(n);
    if (!(S(0) < pn)) throw std::invalid_argument("build_row: degenerate scheme, P_n = 0");
    for (std::uint32_t k = 1; k <= n; ++k) w[k - 1] = scheme.p(k) / pn;
  } else {
    const auto& rows = scheme.rows();
    if (n > rows.size() || rows[n - 1].size() != n) {
      throw std::invalid_argument("build_row: explicit scheme has no row for n");
    }
    w = rows[n - 1];
  }
  return TriangularRow<S>::from_weights(n, std::move(w));
}

// Parses a scheme spec: "fejer", "norlund:ones", "norlund:k+1", "norlund:log",
// "cesaro:<alpha>", "weighted:k", "weighted:1/k", "weighted:ones".
template <class S>
WeightScheme<S> parse_scheme(const std::string& spec);

}  // namespace walshsum
