#pragma once

#include <cstdint>
#include <vector>

namespace solchar::fp {

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>; // row-major, rows of equal length

Mat identity(std::size_t n);
Mat multiply(Mat const &a, Mat const &b, std::uint64_t p);
Vec vec_times_mat(Vec const &v, Mat const &a, std::uint64_t p);
Mat transpose(Mat const &a);

/// Reduces `a` in place to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Mat &a, std::uint64_t p);
std::size_t rank(Mat a, std::uint64_t p);

/// Basis of {v : a v = 0}, with `cols` columns (needed when a has no rows).
Mat nullspace(Mat const &a, std::size_t cols, std::uint64_t p);

/// Inverse of a square matrix, or an empty matrix when singular.
Mat inverse(Mat const &a, std::uint64_t p);

/// Characteristic polynomial det(xI - a), low degree first, via reduction
/// to Hessenberg form.
Vec charpoly(Mat a, std::uint64_t p);

std::uint64_t primitive_root(std::uint64_t p);

} // namespace solchar::fp
