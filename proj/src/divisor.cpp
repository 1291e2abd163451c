#include "chabgraph/divisor.hpp"

#include <algorithm>

#include "chabgraph/errors.hpp"

namespace chabgraph {

namespace {

void require_same_size(int a, int b) {
    if (a != b) {
        throw InternalError("divisor size mismatch");
    }
}

} // namespace

i64 Divisor::degree() const {
    i64 total = 0;
    for (const i64 c : coeffs_) {
        total = checked::add(total, c);
    }
    return total;
}

bool Divisor::is_effective() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](i64 c) { return c >= 0; });
}

bool Divisor::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](i64 c) { return c == 0; });
}

Divisor Divisor::operator+(const Divisor& other) const {
    require_same_size(size(), other.size());
    Divisor out(size());
    for (int v = 0; v < size(); ++v) {
        out[v] = checked::add((*this)[v], other[v]);
    }
    return out;
}

Divisor Divisor::operator-(const Divisor& other) const {
    require_same_size(size(), other.size());
    Divisor out(size());
    for (int v = 0; v < size(); ++v) {
        out[v] = checked::sub((*this)[v], other[v]);
    }
    return out;
}

Twist::Twist(std::vector<i64> raw_values) : values_(std::move(raw_values)) {
    if (values_.empty()) {
        throw InternalError("twist on empty vertex set");
    }
    const i64 top = *std::max_element(values_.begin(), values_.end());
    for (i64& v : values_) {
        v = checked::sub(v, top);
    }
}

Twist Twist::operator+(const Twist& other) const {
    require_same_size(size(), other.size());
    std::vector<i64> raw(values_);
    for (int v = 0; v < size(); ++v) {
        raw[static_cast<size_t>(v)] = checked::add(raw[static_cast<size_t>(v)], other[v]);
    }
    return Twist(std::move(raw));
}

Twist Twist::operator-(const Twist& other) const {
    require_same_size(size(), other.size());
    std::vector<i64> raw(values_);
    for (int v = 0; v < size(); ++v) {
        raw[static_cast<size_t>(v)] = checked::sub(raw[static_cast<size_t>(v)], other[v]);
    }
    return Twist(std::move(raw));
}

namespace {

bool walk_multidegrees(std::vector<i64>& current, int idx, i64 remaining,
                       const std::function<bool(const std::vector<i64>&)>& visit) {
    if (idx == 0) {
        current[0] = remaining;
        return visit(current);
    }
    for (i64 value = 0; value <= remaining; ++value) {
        current[static_cast<size_t>(idx)] = value;
        if (!walk_multidegrees(current, idx - 1, remaining - value, visit)) {
            return false;
        }
    }
    return true;
}

} // namespace

bool for_each_effective_multidegree(int n, i64 degree,
                                    const std::function<bool(const std::vector<i64>&)>& visit) {
    if (degree < 0) {
        return true; // nothing to visit
    }
    std::vector<i64> current(static_cast<size_t>(n), 0);
    return walk_multidegrees(current, n - 1, degree, visit);
}

} // namespace chabgraph
