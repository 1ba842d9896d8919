#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace h2v::cli {

// Exit codes: 0 success, 1 failed check, 2 argument/parse error,
// 3 domain error, 4 I/O failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Complex literal "a+bi" / "a-bi" with either part optional ("2", "i",
// "-2.5i", "1e-3+0.5i").  Throws std::invalid_argument on malformed input.
std::complex<double> parse_complex(const std::string& text);

}  // namespace h2v::cli
