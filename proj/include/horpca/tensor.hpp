#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace horpca {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = std::int64_t;

/// Extents I_1..I_N of an N-way tensor. Every extent is >= 1.
struct Shape {
    std::vector<Index> dims;

    Shape() = default;
    explicit Shape(std::vector<Index> d);
    Shape(std::initializer_list<Index> d) : Shape(std::vector<Index>(d)) {}

    int order() const { return static_cast<int>(dims.size()); }
    Index count() const;
    Index operator[](int i) const { return dims[static_cast<std::size_t>(i)]; }
    bool operator==(const Shape&) const = default;
};

/// Dense N-way array of doubles, linearized with the first index varying
/// fastest (generalized column-major).
struct DenseTensor {
    Shape shape;
    Vector values;

    DenseTensor() = default;
    explicit DenseTensor(Shape s) : shape(std::move(s)) {
        values = Vector::Zero(shape.count());
    }
    DenseTensor(Shape s, Vector v);

    Index size() const { return values.size(); }
    int order() const { return shape.order(); }

    double at(std::initializer_list<Index> idx) const;
    double& at(std::initializer_list<Index> idx);
};

/// Stack of same-shape tensors (the paper-style homogeneous tensor array).
struct TensorArray {
    std::vector<DenseTensor> components;

    TensorArray() = default;
    explicit TensorArray(std::vector<DenseTensor> c);
    /// n zero tensors of the given shape.
    static TensorArray zeros(int n, const Shape& s);

    int count() const { return static_cast<int>(components.size()); }
    bool empty() const { return components.empty(); }
    const Shape& component_shape() const { return components.front().shape; }
    DenseTensor& operator[](int i) { return components[static_cast<std::size_t>(i)]; }
    const DenseTensor& operator[](int i) const { return components[static_cast<std::size_t>(i)]; }
};

/// Mode-i matricization (1-based mode). Rows are the mode-i fibers; columns
/// are ordered lexicographically in the remaining indices, the earlier
/// remaining index being more significant (the last one varies fastest).
Matrix unfold(const DenseTensor& x, int mode);

/// Exact inverse of unfold for the given mode and shape.
DenseTensor fold(const Matrix& m, int mode, const Shape& shape);

/// n-mode product x ×_mode a, defined as fold(a · unfold(x, mode), mode).
DenseTensor mode_multiply(const DenseTensor& x, const Matrix& a, int mode);

double inner(const DenseTensor& x, const DenseTensor& y);
double fro_norm(const DenseTensor& x);
double l1_norm(const DenseTensor& x);

/// Summation operator over the components of a tensor array.
DenseTensor sum_components(const TensorArray& xs);
/// Adjoint of sum_components: n copies of x.
TensorArray replicate(const DenseTensor& x, int n);

}  // namespace horpca
