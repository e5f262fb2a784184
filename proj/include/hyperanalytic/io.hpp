#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "hyperanalytic/envelope.hpp"
#include "hyperanalytic/signal.hpp"

namespace hyperanalytic::io {

/// Malformed signal file. line() is 1-based; 0 when the error is not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

inline constexpr const char* kSignalHeader = "index,real,imag";

/// Shortest text that round-trips: 17 significant digits.
std::string format_real(double v);

/// Reads `index,real,imag` rows; indices must run 0, 1, 2, ... and values must be finite.
ComplexSignal read_signal_csv(std::istream& in, const std::string& source = "<stream>", double sample_period = 1.0);
ComplexSignal read_signal_csv(const std::filesystem::path& path, double sample_period = 1.0);

void write_signal_csv(std::ostream& out, const ComplexSignal& z);
void write_signal_csv(const std::filesystem::path& path, const ComplexSignal& z);

/// Header `index,w,x,y,z`, components on (1, i, j, k).
void write_quaternion_csv(std::ostream& out, const QuaternionSignal& h);

/// index,z_re,z_im,o_re,o_im,env_re,env_im,phase_re,phase_im
void write_demodulation_csv(std::ostream& out, const ComplexSignal& z, const Demodulation& d);

/// Opens `path` for writing; throws std::runtime_error on failure.
std::ofstream open_output(const std::filesystem::path& path);

}  // namespace hyperanalytic::io
