#pragma once

#include <iosfwd>
#include <string>

#include "enumkit/dag.hpp"
#include "enumkit/dnf.hpp"
#include "enumkit/gf2.hpp"
#include "enumkit/set_system.hpp"

namespace enumkit {

// Instance file formats, all ASCII and whitespace-separated:
//   set system:  header "n m", then m lines of 1-based elements (a line may
//                be empty for the empty set)
//   dnf:         header "p dnf n m", then m lines of signed 1-based literals
//                terminated by 0
//   dag:         header "V E s t", then E lines "u v" (1-based)
//   gf2:         header "r n", then r lines of n+1 bits (coefficients, then
//                the right-hand side)
// Malformed input raises ParseError with the line number; well-formed input
// that breaks a semantic rule raises ValidationError.

SetSystem parse_set_system(std::istream& in);
DnfFormula parse_dnf(std::istream& in);
Dag parse_dag(std::istream& in);
Gf2System parse_gf2(std::istream& in);

SetSystem load_set_system(const std::string& path);
DnfFormula load_dnf(const std::string& path);
Dag load_dag(const std::string& path);
Gf2System load_gf2(const std::string& path);

}  // namespace enumkit
