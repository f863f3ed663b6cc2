#include "orbit/exactnum/tensor_index.hpp"

#include <stdexcept>
#include <string>

namespace orbit {

std::size_t tensor_power_index(std::span<std::size_t const> dims, std::span<std::size_t const> multi)
{
	if (dims.size() != multi.size())
		throw std::out_of_range("tensor_power_index: arity mismatch");
	std::size_t flat = 0;
	for (std::size_t k = 0; k < dims.size(); ++k)
	{
		if (multi[k] >= dims[k])
			throw std::out_of_range("tensor_power_index: component " + std::to_string(k) + " = " +
			                        std::to_string(multi[k]) + " exceeds dimension " + std::to_string(dims[k]));
		flat = flat * dims[k] + multi[k];
	}
	return flat;
}

std::vector<std::size_t> tensor_power_unindex(std::span<std::size_t const> dims, std::size_t flat)
{
	if (flat >= tensor_size(dims))
		throw std::out_of_range("tensor_power_unindex: flat index out of range");
	std::vector<std::size_t> multi(dims.size());
	for (std::size_t k = dims.size(); k-- > 0;)
	{
		multi[k] = flat % dims[k];
		flat /= dims[k];
	}
	return multi;
}

std::size_t tensor_size(std::span<std::size_t const> dims)
{
	std::size_t n = 1;
	for (auto d : dims)
		n *= d;
	return n;
}

} // namespace orbit
