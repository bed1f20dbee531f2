#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "hht/catalog.hpp"

namespace hht {

/// Shortest decimal representation that round-trips the double exactly.
std::string format_double(double x);

/// Reads `t,re,im` rows (header required, t strictly increasing and
/// positive) into a UserSamples spec.
FunctionSpec read_samples_csv(const std::string& path);

/// Writes `x,re,im` rows with round-trippable numbers.
void write_csv(std::ostream& out, const std::vector<double>& x,
               const std::vector<std::complex<double>>& v);

void write_csv_file(const std::string& path, const std::vector<double>& x,
                    const std::vector<std::complex<double>>& v);

} // namespace hht
