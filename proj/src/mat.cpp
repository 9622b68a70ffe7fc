#include "polyprime/mat.hpp"

namespace polyprime {

Mat Mat::transpose() const {
    Mat m(f_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch in matrix product");
    Mat m(f_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            uint32_t v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                m.at(i, j) = f_->add(m.at(i, j), f_->mul(v, o.at(k, j)));
        }
    return m;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch");
    Mat m(f_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = f_->add(a_[i], o.a_[i]);
    return m;
}

int Mat::rank() const {
    Mat w = *this;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int piv = -1;
        for (int i = r; i < rows_; ++i)
            if (w.at(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols_; ++j) std::swap(w.at(piv, j), w.at(r, j));
        uint32_t inv = f_->inv(w.at(r, c));
        for (int i = r + 1; i < rows_; ++i) {
            uint32_t factor = f_->mul(w.at(i, c), inv);
            if (factor == 0) continue;
            for (int j = c; j < cols_; ++j)
                w.at(i, j) = f_->sub(w.at(i, j), f_->mul(factor, w.at(r, j)));
        }
        ++r;
    }
    return r;
}

uint32_t Mat::det() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    if (rows_ == 0) return f_ ? f_->one() : 1;
    Mat w = *this;
    uint32_t d = f_->one();
    for (int c = 0; c < cols_; ++c) {
        int piv = -1;
        for (int i = c; i < rows_; ++i)
            if (w.at(i, c) != 0) { piv = i; break; }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int j = 0; j < cols_; ++j) std::swap(w.at(piv, j), w.at(c, j));
            d = f_->neg(d);
        }
        d = f_->mul(d, w.at(c, c));
        uint32_t inv = f_->inv(w.at(c, c));
        for (int i = c + 1; i < rows_; ++i) {
            uint32_t factor = f_->mul(w.at(i, c), inv);
            if (factor == 0) continue;
            for (int j = c; j < cols_; ++j)
                w.at(i, j) = f_->sub(w.at(i, j), f_->mul(factor, w.at(c, j)));
        }
    }
    return d;
}

Mat Mat::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    Mat w = *this;
    Mat inv = identity(f_, rows_);
    for (int c = 0; c < cols_; ++c) {
        int piv = -1;
        for (int i = c; i < rows_; ++i)
            if (w.at(i, c) != 0) { piv = i; break; }
        if (piv < 0) throw std::domain_error("singular matrix");
        if (piv != c)
            for (int j = 0; j < cols_; ++j) {
                std::swap(w.at(piv, j), w.at(c, j));
                std::swap(inv.at(piv, j), inv.at(c, j));
            }
        uint32_t s = f_->inv(w.at(c, c));
        for (int j = 0; j < cols_; ++j) {
            w.at(c, j) = f_->mul(w.at(c, j), s);
            inv.at(c, j) = f_->mul(inv.at(c, j), s);
        }
        for (int i = 0; i < rows_; ++i) {
            if (i == c || w.at(i, c) == 0) continue;
            uint32_t factor = w.at(i, c);
            for (int j = 0; j < cols_; ++j) {
                w.at(i, j) = f_->sub(w.at(i, j), f_->mul(factor, w.at(c, j)));
                inv.at(i, j) = f_->sub(inv.at(i, j), f_->mul(factor, inv.at(c, j)));
            }
        }
    }
    return inv;
}

bool Mat::is_zero() const {
    for (auto v : a_)
        if (v != 0) return false;
    return true;
}

void Mat::assign_from_index(uint64_t idx) {
    uint64_t q = f_->size();
    for (auto& v : a_) {
        v = static_cast<uint32_t>(idx % q);
        idx /= q;
    }
}

}  // namespace polyprime
