#pragma once

#include "horpca/tensor.hpp"

namespace horpca {

/// Set of observed entries of a tensor, stored as strictly increasing
/// zero-based linear indices into the storage order.
struct ObservationMask {
    Shape shape;
    std::vector<Index> indices;

    ObservationMask() = default;
    ObservationMask(Shape s, std::vector<Index> idx);

    Index count() const { return static_cast<Index>(indices.size()); }
    bool is_full() const { return count() == shape.count(); }

    /// 0/1 indicator over the linearized tensor (1 at observed positions).
    Vector indicator() const;
};

/// A_Omega: extract the observed entries in index order.
Vector mask_project(const DenseTensor& x, const ObservationMask& mask);

/// Adjoint A_Omega^*: embed a value vector at the observed positions,
/// zero elsewhere.
DenseTensor mask_embed(const Vector& v, const ObservationMask& mask);

/// A_Omega^* A_Omega: zero the unobserved entries of x.
DenseTensor keep_observed(const DenseTensor& x, const ObservationMask& mask);

}  // namespace horpca
