#include "magicsq/layers.hpp"

#include "magicsq/errors.hpp"

namespace magicsq {

Layer::Layer(std::size_t order, std::vector<Digit> digits)
    : order_(order), digits_(std::move(digits))
{
    if (order_ == 0 || digits_.size() != order_ * order_) {
        throw Error(ErrorCode::ShapeMismatch, "layer digit count does not match order");
    }
    for (Digit d : digits_) {
        if (d > 9) {
            throw Error(ErrorCode::InvalidDigit, "layer digit out of range");
        }
    }
}

LayerStack decompose(const Square& square)
{
    const std::size_t n = square.order();
    LayerStack stack;
    stack.order = n;
    stack.layers.reserve(square.width());
    for (std::size_t p = 0; p < square.width(); ++p) {
        std::vector<Digit> digits;
        digits.reserve(n * n);
        for (const auto& w : square.cells()) {
            digits.push_back(w.digit(p));
        }
        stack.layers.emplace_back(n, std::move(digits));
    }
    return stack;
}

Square recompose(const LayerStack& stack)
{
    if (stack.layers.empty()) {
        throw Error(ErrorCode::ShapeMismatch, "cannot recompose an empty layer stack");
    }
    const std::size_t n = stack.layers.front().order();
    for (std::size_t p = 0; p < stack.layers.size(); ++p) {
        if (stack.layers[p].order() != n || (stack.order != 0 && stack.order != n)) {
            throw Error(ErrorCode::ShapeMismatch,
                        "layer " + std::to_string(p) + " has order " +
                            std::to_string(stack.layers[p].order()) + ", expected " + std::to_string(n));
        }
    }
    if (stack.layers.size() > kMaxWidth) {
        throw Error(ErrorCode::InvalidCodeWord, "too many layers for a codeword");
    }
    std::vector<CodeWord> cells;
    cells.reserve(n * n);
    std::string text(stack.layers.size(), '0');
    for (std::size_t k = 0; k < n * n; ++k) {
        for (std::size_t p = 0; p < stack.layers.size(); ++p) {
            text[p] = static_cast<char>('0' + stack.layers[p].digits()[k]);
        }
        cells.emplace_back(text);
    }
    return Square(n, std::move(cells));
}

}  // namespace magicsq
