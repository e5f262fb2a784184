#include "hyperanalytic/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

namespace hyperanalytic::io {

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? source + ": " + what : source + ":" + std::to_string(line) + ": " + what),
      line_(line) {}

std::string format_real(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return {buf, res.ptr};
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

template <typename T>
bool parse_number(std::string_view text, T& value) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    return res.ec == std::errc{} && res.ptr == text.data() + text.size() && !text.empty();
}

}  // namespace

ComplexSignal read_signal_csv(std::istream& in, const std::string& source, double sample_period) {
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    std::vector<Complex> samples;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view row = trim(line);
        if (row.empty()) {
            continue;
        }
        if (!header_seen) {
            if (row != kSignalHeader) {
                throw ParseError(source, line_no, "expected header '" + std::string(kSignalHeader) + "'");
            }
            header_seen = true;
            continue;
        }
        std::string_view fields[3];
        std::size_t count = 0;
        std::string_view rest = row;
        while (true) {
            const auto comma = rest.find(',');
            if (count < 3) fields[count] = rest.substr(0, comma);
            ++count;
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        if (count != 3) {
            throw ParseError(source, line_no, "expected 3 fields, found " + std::to_string(count));
        }
        long long index = 0;
        if (!parse_number(fields[0], index)) {
            throw ParseError(source, line_no, "invalid index '" + std::string(trim(fields[0])) + "'");
        }
        if (index != static_cast<long long>(samples.size())) {
            throw ParseError(source, line_no,
                             "index " + std::to_string(index) + " out of sequence (expected " +
                                 std::to_string(samples.size()) + ")");
        }
        double re = 0.0;
        double im = 0.0;
        if (!parse_number(fields[1], re) || !std::isfinite(re)) {
            throw ParseError(source, line_no, "invalid real value '" + std::string(trim(fields[1])) + "'");
        }
        if (!parse_number(fields[2], im) || !std::isfinite(im)) {
            throw ParseError(source, line_no, "invalid imaginary value '" + std::string(trim(fields[2])) + "'");
        }
        samples.emplace_back(re, im);
    }
    if (!header_seen) {
        throw ParseError(source, 0, "empty file");
    }
    if (samples.size() < ComplexSignal::kMinLength) {
        throw ParseError(source, 0,
                         "need at least " + std::to_string(ComplexSignal::kMinLength) + " samples, found " +
                             std::to_string(samples.size()));
    }
    return ComplexSignal(std::move(samples), sample_period);
}

ComplexSignal read_signal_csv(const std::filesystem::path& path, double sample_period) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path.string() + "' for reading");
    }
    return read_signal_csv(in, path.string(), sample_period);
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }
    return out;
}

void write_signal_csv(std::ostream& out, const ComplexSignal& z) {
    out << kSignalHeader << '\n';
    for (std::size_t n = 0; n < z.size(); ++n) {
        out << n << ',' << format_real(z[n].real()) << ',' << format_real(z[n].imag()) << '\n';
    }
}

void write_signal_csv(const std::filesystem::path& path, const ComplexSignal& z) {
    auto out = open_output(path);
    write_signal_csv(out, z);
    if (!out) {
        throw std::runtime_error("failed writing '" + path.string() + "'");
    }
}

void write_quaternion_csv(std::ostream& out, const QuaternionSignal& h) {
    out << "index,w,x,y,z\n";
    for (std::size_t n = 0; n < h.size(); ++n) {
        const Quaternion& q = h[n];
        out << n << ',' << format_real(q.w) << ',' << format_real(q.x) << ',' << format_real(q.y) << ','
            << format_real(q.z) << '\n';
    }
}

void write_demodulation_csv(std::ostream& out, const ComplexSignal& z, const Demodulation& d) {
    out << "index,z_re,z_im,o_re,o_im,env_re,env_im,phase_re,phase_im\n";
    const auto& o = d.orthogonal.o;
    for (std::size_t n = 0; n < z.size(); ++n) {
        out << n << ',' << format_real(z[n].real()) << ',' << format_real(z[n].imag()) << ','
            << format_real(o[n].real()) << ',' << format_real(o[n].imag()) << ','
            << format_real(d.polar.envelope[n].real()) << ',' << format_real(d.polar.envelope[n].imag()) << ','
            << format_real(d.polar.phase[n].real()) << ',' << format_real(d.polar.phase[n].imag()) << '\n';
    }
}

}  // namespace hyperanalytic::io
