#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sdiep/dense_matrix.hpp"

namespace sdiep {

/// Replaces entries in [-kEntryTolerance, 0) by 0. Everything else is kept.
DenseMatrix clamp_entry_dust(DenseMatrix m);

/// printf("%.17g"), the round-trip format used for every number written to
/// a matrix file.
std::string format_double(double x);

/// Extra top-level member for matrix_to_json: a key and its value as
/// already-serialised JSON text.
using JsonMember = std::pair<std::string, std::string>;

/// {"n": N, "entries": [row-major]} followed by any extra members. Entries
/// are written as given; call clamp_entry_dust first for exported results.
std::string matrix_to_json(const DenseMatrix& m, const std::vector<JsonMember>& extra = {});

/// N lines of N comma-separated values, LF line endings.
std::string matrix_to_csv(const DenseMatrix& m);

/// Reads the JSON layout above. Unknown members are ignored. Throws
/// ParseError on malformed input or when entries.size() != n*n.
DenseMatrix matrix_from_json(std::string_view text);

/// Reads the CSV layout above. Throws ParseError on ragged or non-square data.
DenseMatrix matrix_from_csv(std::string_view text);

/// Dispatches on content: a leading '{' means JSON, anything else CSV.
DenseMatrix read_matrix_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

} // namespace sdiep
