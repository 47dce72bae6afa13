// layers.hpp -- digit-plane view of a square

#pragma once

#include <cstddef>
#include <vector>

#include "magicsq/types.hpp"

namespace magicsq {

/// n×n grid of single digits: one decimal place across all cells.
class Layer
{
public:
    Layer() = default;
    Layer(std::size_t order, std::vector<Digit> digits);

    std::size_t order() const noexcept { return order_; }
    Digit at(std::size_t row, std::size_t col) const noexcept { return digits_[row * order_ + col]; }
    std::span<const Digit> digits() const noexcept { return digits_; }

    auto operator<=>(const Layer&) const = default;
    bool operator==(const Layer&) const = default;

private:
    std::size_t order_ = 0;
    std::vector<Digit> digits_;
};

/// layers[0] holds the most significant place.
struct LayerStack
{
    std::size_t order = 0;
    std::vector<Layer> layers;

    std::size_t width() const noexcept { return layers.size(); }
};

LayerStack decompose(const Square& square);

/// Inverse of decompose. Throws ShapeMismatch on an empty stack or layers
/// of differing order.
Square recompose(const LayerStack& stack);

}  // namespace magicsq
