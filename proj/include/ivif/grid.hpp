#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ivif/error.hpp"

namespace ivif {

/// Dense row-major matrix. Rows are alternatives, columns attributes.
template <typename T>
class Grid {
public:
    Grid() = default;
    Grid(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Grid from_rows(const std::vector<std::vector<T>>& rows) {
        Grid g;
        g.rows_ = rows.size();
        g.cols_ = rows.empty() ? 0 : rows.front().size();
        g.data_.reserve(g.rows_ * g.cols_);
        for (const auto& row : rows) {
            if (row.size() != g.cols_) throw ShapeError("ragged rows: matrix is not rectangular");
            g.data_.insert(g.data_.end(), row.begin(), row.end());
        }
        return g;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::vector<T> column(std::size_t c) const {
        std::vector<T> out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
        return out;
    }

    const std::vector<T>& data() const noexcept { return data_; }

    bool same_shape(std::size_t rows, std::size_t cols) const noexcept {
        return rows_ == rows && cols_ == cols;
    }

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

}  // namespace ivif
