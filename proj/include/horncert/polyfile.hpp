#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "horncert/polynomial.hpp"

// File formats. A polynomial file holds one coefficient per line in
// ascending degree; '#' starts a comment, an optional "degree: n" header
// pins the expected count. Decimal literals are accepted on input but
// coefficients are always emitted as lowercase hexadecimal floats so files
// round-trip bit-exactly. Corpora are JSON lines, one polynomial per
// record, with the same hex-literal convention.

namespace horncert::io {

std::string hex_literal(double d);
double parse_double(const std::string& text);  // hex or decimal; throws on junk

Polynomial read_polynomial(std::istream& in);
Polynomial read_polynomial_file(const std::string& path);
void write_polynomial(std::ostream& out, const Polynomial& p);
void write_polynomial_file(const std::string& path, const Polynomial& p);

struct CorpusRecord {
    std::vector<double> coeffs;
    double x;
    std::uint64_t seed;
    double target_cond;
    double measured_cond;
};

void write_corpus(std::ostream& out, std::span<const CorpusRecord> records);
std::vector<CorpusRecord> read_corpus(std::istream& in);

}  // namespace horncert::io
