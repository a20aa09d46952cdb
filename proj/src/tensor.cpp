#include "horpca/tensor.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace horpca {

namespace {

// Row/column position of each element of the mode-d unfolding (0-based d),
// walked in storage order with amortized O(1) index updates.
struct UnfoldWalker {
    const std::vector<Index>& dims;
    int mode0;
    std::vector<Index> idx;
    std::vector<Index> cstride;  // column stride per dim (0 for the mode itself)
    Index row = 0;
    Index col = 0;

    UnfoldWalker(const Shape& shape, int mode0_)
        : dims(shape.dims), mode0(mode0_), idx(dims.size(), 0), cstride(dims.size(), 0) {
        // Last remaining index varies fastest within a column block.
        Index acc = 1;
        for (int d = static_cast<int>(dims.size()) - 1; d >= 0; --d) {
            if (d == mode0) continue;
            cstride[static_cast<std::size_t>(d)] = acc;
            acc *= dims[static_cast<std::size_t>(d)];
        }
    }

    void advance() {
        for (std::size_t d = 0; d < dims.size(); ++d) {
            ++idx[d];
            if (static_cast<int>(d) == mode0)
                ++row;
            else
                col += cstride[d];
            if (idx[d] < dims[d]) return;
            idx[d] = 0;
            if (static_cast<int>(d) == mode0)
                row -= dims[d];
            else
                col -= dims[d] * cstride[d];
        }
    }
};

void check_mode(const Shape& shape, int mode) {
    if (mode < 1 || mode > shape.order())
        throw std::invalid_argument("mode " + std::to_string(mode) + " out of range for order " +
                                    std::to_string(shape.order()));
}

}  // namespace

Shape::Shape(std::vector<Index> d) : dims(std::move(d)) {
    if (dims.empty()) throw std::invalid_argument("shape must have at least one mode");
    for (Index e : dims)
        if (e < 1) throw std::invalid_argument("shape extents must be positive");
}

Index Shape::count() const {
    Index n = 1;
    for (Index e : dims) n *= e;
    return n;
}

DenseTensor::DenseTensor(Shape s, Vector v) : shape(std::move(s)), values(std::move(v)) {
    if (values.size() != shape.count())
        throw std::invalid_argument("value count does not match shape");
}

double DenseTensor::at(std::initializer_list<Index> idx) const {
    return const_cast<DenseTensor*>(this)->at(idx);
}

double& DenseTensor::at(std::initializer_list<Index> idx) {
    if (static_cast<int>(idx.size()) != order())
        throw std::invalid_argument("index order mismatch");
    Index lin = 0, stride = 1;
    int d = 0;
    for (Index i : idx) {
        if (i < 0 || i >= shape[d]) throw std::out_of_range("tensor index out of range");
        lin += i * stride;
        stride *= shape[d];
        ++d;
    }
    return values[lin];
}

TensorArray::TensorArray(std::vector<DenseTensor> c) : components(std::move(c)) {
    if (components.empty()) throw std::invalid_argument("tensor array needs at least one component");
    for (const auto& t : components)
        if (!(t.shape == components.front().shape))
            throw std::invalid_argument("tensor array components must share one shape");
}

TensorArray TensorArray::zeros(int n, const Shape& s) {
    if (n < 1) throw std::invalid_argument("tensor array needs at least one component");
    TensorArray a;
    a.components.assign(static_cast<std::size_t>(n), DenseTensor(s));
    return a;
}

Matrix unfold(const DenseTensor& x, int mode) {
    check_mode(x.shape, mode);
    const Index rows = x.shape[mode - 1];
    const Index cols = x.size() / rows;
    Matrix m(rows, cols);
    UnfoldWalker w(x.shape, mode - 1);
    for (Index lin = 0; lin < x.size(); ++lin) {
        m(w.row, w.col) = x.values[lin];
        w.advance();
    }
    return m;
}

DenseTensor fold(const Matrix& m, int mode, const Shape& shape) {
    check_mode(shape, mode);
    const Index rows = shape[mode - 1];
    const Index cols = shape.count() / rows;
    if (m.rows() != rows || m.cols() != cols)
        throw std::invalid_argument("matrix dimensions do not match the mode unfolding");
    DenseTensor x(shape);
    UnfoldWalker w(shape, mode - 1);
    for (Index lin = 0; lin < x.size(); ++lin) {
        x.values[lin] = m(w.row, w.col);
        w.advance();
    }
    return x;
}

DenseTensor mode_multiply(const DenseTensor& x, const Matrix& a, int mode) {
    check_mode(x.shape, mode);
    if (a.cols() != x.shape[mode - 1])
        throw std::invalid_argument("inner dimensions do not match for mode product");
    Shape out = x.shape;
    out.dims[static_cast<std::size_t>(mode - 1)] = a.rows();
    return fold(a * unfold(x, mode), mode, out);
}

double inner(const DenseTensor& x, const DenseTensor& y) {
    if (!(x.shape == y.shape)) throw std::invalid_argument("inner product requires matching shapes");
    return x.values.dot(y.values);
}

double fro_norm(const DenseTensor& x) { return x.values.norm(); }

double l1_norm(const DenseTensor& x) { return x.values.lpNorm<1>(); }

DenseTensor sum_components(const TensorArray& xs) {
    if (xs.empty()) throw std::invalid_argument("empty tensor array");
    DenseTensor out = xs[0];
    for (int i = 1; i < xs.count(); ++i) out.values += xs[i].values;
    return out;
}

TensorArray replicate(const DenseTensor& x, int n) {
    if (n < 1) throw std::invalid_argument("replicate needs n >= 1");
    TensorArray a;
    a.components.assign(static_cast<std::size_t>(n), x);
    return a;
}

}  // namespace horpca
