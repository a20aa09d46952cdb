#include "horpca/mask.hpp"

#include <stdexcept>

namespace horpca {

ObservationMask::ObservationMask(Shape s, std::vector<Index> idx)
    : shape(std::move(s)), indices(std::move(idx)) {
    const Index n = shape.count();
    Index prev = -1;
    for (Index i : indices) {
        if (i <= prev) throw std::invalid_argument("mask indices must be strictly increasing");
        if (i >= n) throw std::invalid_argument("mask index exceeds element count");
        prev = i;
    }
}

Vector ObservationMask::indicator() const {
    Vector ind = Vector::Zero(shape.count());
    for (Index i : indices) ind[i] = 1.0;
    return ind;
}

Vector mask_project(const DenseTensor& x, const ObservationMask& mask) {
    if (!(x.shape == mask.shape)) throw std::invalid_argument("mask shape does not match tensor");
    Vector v(mask.count());
    for (Index k = 0; k < mask.count(); ++k) v[k] = x.values[mask.indices[static_cast<std::size_t>(k)]];
    return v;
}

DenseTensor mask_embed(const Vector& v, const ObservationMask& mask) {
    if (v.size() != mask.count()) throw std::invalid_argument("value count does not match mask");
    DenseTensor x(mask.shape);
    for (Index k = 0; k < mask.count(); ++k) x.values[mask.indices[static_cast<std::size_t>(k)]] = v[k];
    return x;
}

DenseTensor keep_observed(const DenseTensor& x, const ObservationMask& mask) {
    if (!(x.shape == mask.shape)) throw std::invalid_argument("mask shape does not match tensor");
    DenseTensor out(x.shape);
    for (Index i : mask.indices) out.values[i] = x.values[i];
    return out;
}

}  // namespace horpca
