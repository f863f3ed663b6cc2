#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace orbit {

/// Row-major flattening of a multi-index; the last component varies fastest.
/// Throws std::out_of_range when a component exceeds its dimension.
std::size_t tensor_power_index(std::span<std::size_t const> dims, std::span<std::size_t const> multi);

/// Inverse of tensor_power_index.
std::vector<std::size_t> tensor_power_unindex(std::span<std::size_t const> dims, std::size_t flat);

/// Product of dims.
std::size_t tensor_size(std::span<std::size_t const> dims);

} // namespace orbit
