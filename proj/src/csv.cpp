#include "hht/csv.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hht {

std::string format_double(double x)
{
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

namespace {

double parse_field(const std::string& s, const std::string& path)
{
    double out = 0.0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    while (begin < end && (*begin == ' ' || *begin == '\t'))
        ++begin;
    const auto res = std::from_chars(begin, end, out);
    if (res.ec != std::errc{})
        throw std::runtime_error(path + ": malformed numeric field '" + s + "'");
    return out;
}

} // namespace

FunctionSpec read_samples_csv(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error(path + ": cannot open");
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error(path + ": empty file");
    // Tolerate a UTF-8 BOM and whitespace around the header.
    std::string header;
    for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '\r')
            header += c;
    if (header.size() >= 3 && static_cast<unsigned char>(header[0]) == 0xEF)
        header.erase(0, 3);
    if (header != "t,re,im")
        throw std::runtime_error(path + ": expected header 't,re,im'");

    std::vector<double> t;
    std::vector<std::complex<double>> v;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        std::istringstream ss(line);
        std::string a, b, c;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') ||
            !std::getline(ss, c))
            throw std::runtime_error(path + ": malformed row '" + line + "'");
        t.push_back(parse_field(a, path));
        v.emplace_back(parse_field(b, path), parse_field(c, path));
    }
    return FunctionSpec::user_samples(std::move(t), std::move(v));
}

void write_csv(std::ostream& out, const std::vector<double>& x,
               const std::vector<std::complex<double>>& v)
{
    out << "x,re,im\n";
    for (std::size_t i = 0; i < x.size(); ++i)
        out << format_double(x[i]) << ',' << format_double(v[i].real()) << ','
            << format_double(v[i].imag()) << '\n';
}

void write_csv_file(const std::string& path, const std::vector<double>& x,
                    const std::vector<std::complex<double>>& v)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error(path + ": cannot open for writing");
    write_csv(out, x, v);
}

} // namespace hht
