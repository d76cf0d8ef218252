#pragma once

#include "qalg/algebra.hpp"

#include <stdexcept>
#include <string>

namespace qalg {

// Malformed algebra JSON: wrong types, missing keys, inconsistent sizes or
// unparseable rationals. The message names the offending location.
class AlgebraParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Canonical serialization:
//   {
//     "name":  string,
//     "dim":   n,
//     "basis": [n names],
//     "unit":  [n rationals as reduced strings],
//     "mult":  n x n array of length-n arrays of rational strings
//   }
// Rationals are always reduced strings like "-3/2"; no floats appear.
// Serialization then parsing reproduces the presentation exactly.
std::string algebra_to_json_string(const Algebra& a);

AlgebraPtr algebra_from_json_string(const std::string& text);

// File variants; I/O failures throw AlgebraParseError as well.
AlgebraPtr load_algebra_file(const std::string& path);
void save_algebra_file(const Algebra& a, const std::string& path);

}  // namespace qalg
