#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace octowitt {

enum class TableFormat { kText, kJson };

/// fano, octonion-mul, sigma, jsigns, witt, twistor, hermitian, witt-products.
const std::vector<std::string>& table_kinds();

/// Deterministic rendering of one table; witt/twistor/hermitian use formal
/// coordinates and cover every block for n > 1. Throws std::invalid_argument
/// for an unknown kind or n < 1.
std::string render_table(std::string_view kind, int n, TableFormat format);

}  // namespace octowitt
