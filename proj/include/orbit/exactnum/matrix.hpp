#pragma once

#include "orbit/exactnum/gauss.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace orbit {

using ExactVector = std::vector<GaussRational>;

/// Dense row-major matrix over Q(i).
class ExactMatrix
{
public:
	ExactMatrix() = default;
	ExactMatrix(std::size_t rows, std::size_t cols) : m_rows(rows), m_cols(cols), m_data(rows * cols) {}
	ExactMatrix(std::initializer_list<std::initializer_list<GaussRational>> rows);

	static ExactMatrix identity(std::size_t n);
	/// Matrix whose rows are the given vectors (all of equal length).
	static ExactMatrix from_rows(std::vector<ExactVector> const &rows, std::size_t cols);

	std::size_t rows() const { return m_rows; }
	std::size_t cols() const { return m_cols; }

	GaussRational &operator()(std::size_t r, std::size_t c) { return m_data[r * m_cols + c]; }
	GaussRational const &operator()(std::size_t r, std::size_t c) const { return m_data[r * m_cols + c]; }

	ExactVector row(std::size_t r) const;
	ExactVector column(std::size_t c) const;

	ExactMatrix transpose() const;
	ExactMatrix conj_transpose() const;
	bool is_zero() const;

	friend ExactMatrix operator*(ExactMatrix const &a, ExactMatrix const &b);
	friend ExactVector operator*(ExactMatrix const &a, ExactVector const &v);
	friend ExactMatrix operator+(ExactMatrix const &a, ExactMatrix const &b);
	friend ExactMatrix operator-(ExactMatrix const &a, ExactMatrix const &b);
	friend bool operator==(ExactMatrix const &a, ExactMatrix const &b) = default;

private:
	std::size_t m_rows = 0;
	std::size_t m_cols = 0;
	std::vector<GaussRational> m_data;
};

bool is_zero(ExactVector const &v);

} // namespace orbit
