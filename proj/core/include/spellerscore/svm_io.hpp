#pragma once

#include <filesystem>
#include <iosfwd>

#include "spellerscore/svm.hpp"

namespace spellerscore {

// Text format: dimension, bias_scale and b on the first three lines, then one
// weight per line, all floats at shortest round-trip precision.
void save_hyperplane(const Hyperplane& h, std::ostream& out);
void save_hyperplane(const Hyperplane& h, const std::filesystem::path& path);

Hyperplane load_hyperplane(std::istream& in);
Hyperplane load_hyperplane(const std::filesystem::path& path);

}  // namespace spellerscore
