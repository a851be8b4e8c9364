#pragma once

#include <iosfwd>
#include <string>

#include "cohcfg/configuration.hpp"

namespace cohcfg {

/// Text format:
///   COHCFG v1
///   degree n
///   rank r
///   n lines of n space-separated color ids in 0..r-1
/// Throws FormatError with a line number. The matrix is returned as
/// written; axioms are not checked here.
ColorMatrix read_matrix(std::istream& in);
ColorMatrix read_matrix_file(const std::string& path);

/// Always emits canonical ids.
void write_configuration(std::ostream& out, const CoherentConfiguration& cfg);
void write_configuration_file(const std::string& path, const CoherentConfiguration& cfg);
std::string to_text(const CoherentConfiguration& cfg);

}  // namespace cohcfg
