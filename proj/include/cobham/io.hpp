// Line-oriented text formats: automaton files and certificate files.
// Both are UTF-8, whitespace-tokenized, with '#' comments to end of line.
//
// Automaton format:
//   base <c>
//   digits <d0> <d1> ...      (optional; defaults to 0..c-1)
//   states <k>
//   initial <i>
//   outputs <t0> ... <t_{k-1}>
//   trans <s> <d> <s'>        (one line per pair; the table must be total)
//
// The loader rejects duplicate transitions, missing pairs, out-of-range
// indices, and an initial state that digit 0 does not fix, each with its own
// error message.
#pragma once

#include "cobham/cobham.hpp"
#include "cobham/dfao.hpp"

#include <iosfwd>
#include <string>

namespace cobham {

Dfao load_dfao(std::istream& in);
Dfao load_dfao_file(const std::string& path);
void save_dfao(std::ostream& out, const Dfao& m);

PeriodCertificate load_certificate(std::istream& in);
PeriodCertificate load_certificate_file(const std::string& path);
void save_certificate(std::ostream& out, const PeriodCertificate& cert);

}  // namespace cobham
