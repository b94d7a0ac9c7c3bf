#pragma once

#include <filesystem>
#include <iosfwd>

#include "spellerscore/dataset.hpp"

namespace spellerscore {

// Text format: `key=value` header lines, one record line per stimulus
// (`k,r,t,f,y,feat0,feat1,...`), then a `TRUTH` section with one
// `k,t,target_flash` line per (trial, level). Floats are written with
// shortest round-trip precision, so save followed by load reproduces the
// dataset bit for bit.
void save_dataset(const Dataset& d, std::ostream& out);
void save_dataset(const Dataset& d, const std::filesystem::path& path);

// Throws ParseError with a line number on malformed input and DataError when
// the parsed dataset violates an invariant. Record order in the file is free;
// records are sorted into canonical order on load.
Dataset load_dataset(std::istream& in);
Dataset load_dataset(const std::filesystem::path& path);

}  // namespace spellerscore
