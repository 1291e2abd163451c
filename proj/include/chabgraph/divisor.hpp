#pragma once

#include <functional>
#include <vector>

#include "chabgraph/checked.hpp"
#include "chabgraph/multigraph.hpp"

namespace chabgraph {

/// An integer-valued function on the vertices of a fixed multigraph, stored
/// densely in vertex declaration order. Divisors only make sense relative to
/// a graph; operations check that sizes agree.
class Divisor {
  public:
    explicit Divisor(int n) : coeffs_(static_cast<size_t>(n), 0) {}
    explicit Divisor(std::vector<i64> coeffs) : coeffs_(std::move(coeffs)) {}

    int size() const { return static_cast<int>(coeffs_.size()); }
    i64 operator[](int v) const { return coeffs_[static_cast<size_t>(v)]; }
    i64& operator[](int v) { return coeffs_[static_cast<size_t>(v)]; }
    const std::vector<i64>& coeffs() const { return coeffs_; }

    i64 degree() const;
    bool is_effective() const;
    bool is_zero() const;

    Divisor operator+(const Divisor& other) const;
    Divisor operator-(const Divisor& other) const;

    bool operator==(const Divisor& other) const { return coeffs_ == other.coeffs_; }
    bool operator!=(const Divisor& other) const { return !(*this == other); }

  private:
    std::vector<i64> coeffs_;
};

/// An integer function on vertices modulo constants, canonically normalized
/// so its maximum value is 0. Two raw value maps that differ by a constant
/// construct the same Twist.
class Twist {
  public:
    explicit Twist(int n) : values_(static_cast<size_t>(n), 0) {}
    explicit Twist(std::vector<i64> raw_values);

    int size() const { return static_cast<int>(values_.size()); }
    i64 operator[](int v) const { return values_[static_cast<size_t>(v)]; }
    const std::vector<i64>& values() const { return values_; }

    Twist operator+(const Twist& other) const;
    Twist operator-(const Twist& other) const;

    bool operator==(const Twist& other) const { return values_ == other.values_; }
    bool operator!=(const Twist& other) const { return !(*this == other); }
    bool operator<(const Twist& other) const { return values_ < other.values_; }

  private:
    std::vector<i64> values_;
};

/// Visits every effective multidegree (componentwise >= 0) of the given total
/// degree on n vertices, in colexicographic order. The visitor returns false
/// to stop early; the function returns false iff it was stopped.
bool for_each_effective_multidegree(int n, i64 degree,
                                    const std::function<bool(const std::vector<i64>&)>& visit);

} // namespace chabgraph
