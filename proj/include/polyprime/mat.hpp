#pragma once

#include <vector>

#include "polyprime/field.hpp"

namespace polyprime {

/// Dense matrix of field elements, row-major.
class Mat {
public:
    Mat() : f_(nullptr), rows_(0), cols_(0) {}
    Mat(FieldPtr f, int rows, int cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
    }

    static Mat identity(FieldPtr f, int n) {
        Mat m(std::move(f), n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = m.f_->one();
        return m;
    }

    const FieldPtr& field() const { return f_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    uint32_t& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    uint32_t at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Mat transpose() const;
    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;

    int rank() const;
    uint32_t det() const;
    Mat inverse() const;  // throws on singular
    bool is_zero() const;

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    /// Fills entries from a flat index in [0, q^(rows*cols)); used by the
    /// exhaustive censuses to walk every matrix exactly once.
    void assign_from_index(uint64_t idx);

private:
    FieldPtr f_;
    int rows_, cols_;
    std::vector<uint32_t> a_;
};

}  // namespace polyprime
