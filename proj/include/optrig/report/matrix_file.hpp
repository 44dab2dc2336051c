#pragma once

#include <istream>
#include <string>

#include "optrig/spd.hpp"

namespace optrig::report {

/// Reads the dense-matrix text format: a header line with the dimension n,
/// then n rows of n whitespace-separated reals. '#' starts a comment; blank
/// lines are skipped. Throws FormatError with "name:line:token" positions.
DenseMatrix<double> read_matrix(std::istream& in, const std::string& name = "<stream>");

/// File variant; throws IoError when the file cannot be opened.
DenseMatrix<double> read_matrix_file(const std::string& path);

/// read_matrix_file followed by SPD validation.
SpdMatrix<double> parse_matrix_file(const std::string& path, const SpdOptions& opts = {});

}  // namespace optrig::report
