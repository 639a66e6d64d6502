#include "coxaff/matrix.hpp"

#include <sstream>

namespace coxaff {

GMatrix::GMatrix(std::initializer_list<std::initializer_list<Golden>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("GMatrix: ragged initializer");
        for (const auto& v : r) e_.push_back(v);
    }
}

GMatrix GMatrix::identity(std::size_t n) {
    GMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Golden(1);
    return m;
}

GMatrix GMatrix::operator*(const GMatrix& o) const {
    if (cols_ != o.rows_)
        throw std::invalid_argument("GMatrix: shape mismatch in product");
    GMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Golden& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

GMatrix GMatrix::operator+(const GMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("GMatrix: shape mismatch in sum");
    GMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

GMatrix GMatrix::operator-(const GMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("GMatrix: shape mismatch in difference");
    GMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

GMatrix GMatrix::scaled(const Golden& s) const {
    GMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
    return r;
}

GMatrix GMatrix::transpose() const {
    GMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool GMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool GMatrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? Golden(1) : Golden(0))) return false;
    return true;
}

Golden GMatrix::det() const {
    if (!is_square())
        throw std::invalid_argument("GMatrix: determinant of non-square matrix");
    std::size_t n = rows_;
    GMatrix w = *this;
    Golden result(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && w.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return Golden(0);
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(w.at(pivot, j), w.at(col, j));
            result = -result;
        }
        const Golden p = w.at(col, col);
        result *= p;
        Golden pinv = p.inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (w.at(i, col).is_zero()) continue;
            Golden f = w.at(i, col) * pinv;
            for (std::size_t j = col; j < n; ++j)
                w.at(i, j) -= f * w.at(col, j);
        }
    }
    return result;
}

GMatrix GMatrix::inverse() const {
    if (!is_square())
        throw std::invalid_argument("GMatrix: inverse of non-square matrix");
    std::size_t n = rows_;
    GMatrix w = *this;
    GMatrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && w.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw std::domain_error("GMatrix: singular matrix");
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(w.at(pivot, j), w.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Golden pinv = w.at(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            w.at(col, j) *= pinv;
            inv.at(col, j) *= pinv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || w.at(i, col).is_zero()) continue;
            Golden f = w.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                w.at(i, j) -= f * w.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::vector<Golden> GMatrix::leading_minors() const {
    if (!is_square())
        throw std::invalid_argument("GMatrix: minors of non-square matrix");
    std::vector<Golden> out;
    for (std::size_t k = 1; k <= rows_; ++k) {
        GMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = at(i, j);
        out.push_back(sub.det());
    }
    return out;
}

GMatrix GMatrix::minor_matrix(std::size_t row, std::size_t col) const {
    GMatrix r(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, ri = 0; i < rows_; ++i) {
        if (i == row) continue;
        for (std::size_t j = 0, rj = 0; j < cols_; ++j) {
            if (j == col) continue;
            r.at(ri, rj) = at(i, j);
            ++rj;
        }
        ++ri;
    }
    return r;
}

std::string GMatrix::key() const {
    std::string k;
    k.reserve(e_.size() * 6);
    for (const auto& v : e_) {
        k += v.str();
        k += ';';
    }
    return k;
}

std::string GMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "\n[" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? ", " : "") << at(i, j).str();
        os << "]";
    }
    return os.str();
}

std::vector<Golden> GMatrix::apply(const std::vector<Golden>& v) const {
    if (cols_ != v.size())
        throw std::invalid_argument("GMatrix: shape mismatch in apply");
    std::vector<Golden> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            r[i] += at(i, j) * v[j];
    return r;
}

}  // namespace coxaff
