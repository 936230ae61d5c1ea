#pragma once

#include <cassert>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "pareto/archive.hpp"

namespace pareto {

/// Contiguous column-major storage for a set of m-dimensional points: one
/// column per point, amortized O(1) append, O(m) swap-with-last removal.
template <typename Scalar>
class PointBlock {
public:
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

    PointBlock() = default;
    explicit PointBlock(Eigen::Index dimension, Eigen::Index reserve = 0)
        : data_(dimension, reserve) {
        payloads_.reserve(static_cast<std::size_t>(reserve));
    }

    Eigen::Index dimension() const { return data_.rows(); }
    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    auto point(std::size_t i) const { return data_.col(static_cast<Eigen::Index>(i)); }
    const Payload& payload(std::size_t i) const { return payloads_[i]; }

    /// The occupied columns as one dense block expression.
    auto points() const { return data_.leftCols(static_cast<Eigen::Index>(size_)); }

    template <typename Derived>
    void append(const Eigen::MatrixBase<Derived>& p, Payload payload) {
        if (static_cast<Eigen::Index>(size_) == data_.cols()) grow();
        data_.col(static_cast<Eigen::Index>(size_)) = p;
        payloads_.push_back(std::move(payload));
        ++size_;
    }

    /// Overwrites slot i with the last point and shrinks by one.
    void swap_remove(std::size_t i) {
        assert(i < size_);
        const std::size_t last = size_ - 1;
        if (i != last) {
            data_.col(static_cast<Eigen::Index>(i)) = data_.col(static_cast<Eigen::Index>(last));
            payloads_[i] = std::move(payloads_[last]);
        }
        payloads_.pop_back();
        --size_;
    }

    void clear() {
        size_ = 0;
        payloads_.clear();
    }

    Entry<Scalar> entry(std::size_t i) const { return {ObjectiveVector<Scalar>(point(i)), payloads_[i]}; }

private:
    void grow() {
        const Eigen::Index cap = std::max<Eigen::Index>(4, 2 * data_.cols());
        Matrix bigger(data_.rows(), cap);
        bigger.leftCols(static_cast<Eigen::Index>(size_)) = points();
        data_.swap(bigger);
    }

    Matrix data_;
    std::vector<Payload> payloads_;
    std::size_t size_ = 0;
};

}  // namespace pareto
