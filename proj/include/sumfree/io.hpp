#pragma once

#include "sumfree/bitmatrix.hpp"
#include "sumfree/grassmann.hpp"
#include "sumfree/search.hpp"
#include "sumfree/vecfun.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>

namespace sumfree {

// Function file: header line `n=<int> m=<int> [modulus=<hex>]`, then either
// `poly:` followed by `<coeff-hex> <exponent>` lines (m = n, needs a modulus
// or the default), or `tt:` followed by 2^n hex values in index order.
struct FunctionFile {
    VectorialFunction fn;
    std::optional<std::uint32_t> modulus;
};

FunctionFile read_function(std::istream& is);
FunctionFile read_function_file(const std::filesystem::path& path);
void write_function(std::ostream& os, const VectorialFunction& fn,
                    std::optional<std::uint32_t> modulus = {});
void write_function_file(const std::filesystem::path& path, const VectorialFunction& fn,
                         std::optional<std::uint32_t> modulus = {});

BitMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const BitMatrix& m);

// Certificate file: header `n=<int> k=<int> t=<int> m=<int>`, then one line
// per vertex: `<basis-hex,comma-separated> <color-hex>`.
void write_certificate(std::ostream& os, const ColoringCertificate& cert);
ColoringCertificate read_certificate(std::istream& is);
void write_certificate_file(const std::filesystem::path& path, const ColoringCertificate& cert);
ColoringCertificate read_certificate_file(const std::filesystem::path& path);

// Catalog file: optional comment/blank lines, then repeated
// `[entry <label>]` blocks, each holding a function in the function-file
// format. A trailing `tags: <word> ...` line inside a block attaches
// free-form tags.
FunctionCatalog read_catalog(std::istream& is, std::string source);
FunctionCatalog read_catalog_file(const std::filesystem::path& path);

} // namespace sumfree
