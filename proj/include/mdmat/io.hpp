#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "mdmat/combinatorics.hpp"
#include "mdmat/tensor.hpp"

namespace mdmat {

using ParsedObject = std::variant<Tensor, LatinHypercube, OrthogonalArray>;

/// Detects the format from the header line (pmat v1 / latin v1 / oa v1) and
/// parses the whole stream. ParseError messages carry `name` and the line of
/// the offending token; semantic violations surface as ValidationError.
ParsedObject parse_stream(std::istream& in, const std::string& name);
ParsedObject parse_file(const std::string& path);

Tensor parse_pmat(std::istream& in, const std::string& name);
LatinHypercube parse_latin(std::istream& in, const std::string& name);
OrthogonalArray parse_oa(std::istream& in, const std::string& name);

/// Canonical serializations; parse -> serialize is a fixpoint byte for byte.
std::string to_pmat(const Tensor& t);
std::string to_latin(const LatinHypercube& q);
std::string to_oa(const OrthogonalArray& r);

const char* parsed_kind_name(const ParsedObject& obj);

} // namespace mdmat
