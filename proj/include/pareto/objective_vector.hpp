#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace pareto {

/// Raised for caller mistakes: dimension mismatch, non-finite input, bad configuration.
class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Opaque tag carried alongside a stored point. Never inspected by the archives.
using Payload = std::optional<std::uint64_t>;

template <typename Scalar>
using Coords = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// A point in objective space (minimization). Always has at least two
/// coordinates, all of them finite; construction enforces both.
template <typename Scalar = double>
class ObjectiveVector {
public:
    using scalar_type = Scalar;

    template <typename Derived>
    explicit ObjectiveVector(const Eigen::MatrixBase<Derived>& coords) : coords_(coords) {
        validate();
    }

    ObjectiveVector(std::initializer_list<Scalar> values)
        : coords_(static_cast<Eigen::Index>(values.size())) {
        Eigen::Index i = 0;
        for (Scalar v : values) coords_[i++] = v;
        validate();
    }

    Eigen::Index dimension() const { return coords_.size(); }
    const Coords<Scalar>& coords() const { return coords_; }
    Scalar operator[](Eigen::Index k) const { return coords_[k]; }

    friend bool operator==(const ObjectiveVector& a, const ObjectiveVector& b) {
        return a.coords_.size() == b.coords_.size() && a.coords_ == b.coords_;
    }

    /// Lexicographic order; used for set comparisons in tests and tools.
    friend bool operator<(const ObjectiveVector& a, const ObjectiveVector& b) {
        const Eigen::Index n = std::min(a.dimension(), b.dimension());
        for (Eigen::Index k = 0; k < n; ++k) {
            if (a.coords_[k] < b.coords_[k]) return true;
            if (b.coords_[k] < a.coords_[k]) return false;
        }
        return a.dimension() < b.dimension();
    }

private:
    void validate() const {
        if (coords_.size() < 2)
            throw usage_error("objective vector needs at least 2 coordinates, got " +
                              std::to_string(coords_.size()));
        for (Eigen::Index k = 0; k < coords_.size(); ++k) {
            if (!std::isfinite(static_cast<double>(coords_[k])))
                throw usage_error("objective vector coordinate " + std::to_string(k) +
                                  " is not finite");
        }
    }

    Coords<Scalar> coords_;
};

template <typename Derived>
ObjectiveVector(const Eigen::MatrixBase<Derived>&) -> ObjectiveVector<typename Derived::Scalar>;

}  // namespace pareto
