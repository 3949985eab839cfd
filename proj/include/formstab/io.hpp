#pragma once

#include <iosfwd>
#include <string>

#include "formstab/matrix.hpp"

namespace formstab {

/// Supported interchange formats. Matrix Market dense array is the canonical
/// one; CSV and JSON are conveniences. All three print doubles with 17
/// significant digits, so a written matrix re-reads bit-identically.
enum class MatrixFormat { matrix_market, csv, json };

const char* format_extension(MatrixFormat format);

/// Picks the format from a file extension: .mtx/.mm -> matrix_market,
/// .csv -> csv, .json -> json; anything else defaults to matrix_market.
MatrixFormat format_from_path(const std::string& path);

void write_matrix(std::ostream& out, const RealMatrix& m, MatrixFormat format);
RealMatrix read_matrix(std::istream& in, MatrixFormat format);

void write_matrix_file(const std::string& path, const RealMatrix& m,
                       MatrixFormat format);
RealMatrix read_matrix_file(const std::string& path);
RealMatrix read_matrix_file(const std::string& path, MatrixFormat format);

}  // namespace formstab
