#include "trajkit/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

namespace trajkit {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

double parse_value(const std::string& field, std::size_t line_no) {
    double value = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || field.empty()) {
        throw ParseError("non-numeric cell '" + field + "'", line_no);
    }
    return value;
}

long long parse_index(const std::string& field, std::size_t line_no) {
    long long value = 0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || field.empty()) {
        throw ParseError("non-integer time index '" + field + "'", line_no);
    }
    return value;
}

void validate_header(const std::vector<std::string>& fields, Index& m, Index& p) {
    if (fields.empty() || fields[0] != "k") {
        throw ParseError("header must start with 'k'", 1);
    }
    std::size_t pos = 1;
    m = 0;
    while (pos < fields.size() && fields[pos] == "u_" + std::to_string(m)) {
        ++m;
        ++pos;
    }
    p = 0;
    while (pos < fields.size() && fields[pos] == "y_" + std::to_string(p)) {
        ++p;
        ++pos;
    }
    if (m < 1 || p < 1 || pos != fields.size()) {
        throw ParseError("malformed header; expected k,u_0..u_{m-1},y_0..y_{p-1}", 1);
    }
}

}  // namespace

std::string format_double(double value) {
    char buffer[32];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != std::errc()) {
        return "nan";
    }
    return std::string(buffer, ptr);
}

Trajectory parse_trajectory_csv(std::istream& in, const std::string& path_for_errors) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError(path_for_errors + ": empty file", 1);
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();

    Index m = 0;
    Index p = 0;
    validate_header(split_fields(line), m, p);

    std::vector<double> u_values;
    std::vector<double> y_values;
    std::size_t line_no = 1;
    long long expected_k = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        const std::vector<std::string> fields = split_fields(line);
        if (static_cast<Index>(fields.size()) != 1 + m + p) {
            throw ParseError("row has " + std::to_string(fields.size()) + " cells, expected " +
                                 std::to_string(1 + m + p),
                             line_no);
        }
        const long long k = parse_index(fields[0], line_no);
        if (k != expected_k) {
            if (k == expected_k - 1) {
                throw ParseError("duplicate time index k=" + std::to_string(k), line_no);
            }
            throw ParseError("time index k=" + std::to_string(k) + " out of order; expected k=" +
                                 std::to_string(expected_k) +
                                 (k > expected_k ? " (missing row)" : ""),
                             line_no);
        }
        ++expected_k;
        for (Index i = 0; i < m; ++i) {
            u_values.push_back(parse_value(fields[1 + i], line_no));
        }
        for (Index i = 0; i < p; ++i) {
            y_values.push_back(parse_value(fields[1 + m + i], line_no));
        }
    }

    const Index N = expected_k;
    if (N < 1) {
        throw ParseError(path_for_errors + ": no data rows", line_no);
    }
    Matrix u(m, N);
    Matrix y(p, N);
    for (Index k = 0; k < N; ++k) {
        for (Index i = 0; i < m; ++i) u(i, k) = u_values[k * m + i];
        for (Index i = 0; i < p; ++i) y(i, k) = y_values[k * p + i];
    }
    return Trajectory(Signal(std::move(u)), Signal(std::move(y)));
}

Trajectory parse_trajectory_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path + ": cannot open file", 0);
    }
    return parse_trajectory_csv(in, path);
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
    out << "k";
    for (Index i = 0; i < traj.input_dim(); ++i) out << ",u_" << i;
    for (Index i = 0; i < traj.output_dim(); ++i) out << ",y_" << i;
    out << "\n";
    for (Index k = 0; k < traj.length(); ++k) {
        out << k;
        for (Index i = 0; i < traj.input_dim(); ++i) {
            out << "," << format_double(traj.u().data()(i, k));
        }
        for (Index i = 0; i < traj.output_dim(); ++i) {
            out << "," << format_double(traj.y().data()(i, k));
        }
        out << "\n";
    }
}

void write_trajectory_csv(const std::string& path, const Trajectory& traj) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError(path + ": cannot open file for writing", 0);
    }
    write_trajectory_csv(out, traj);
}

}  // namespace trajkit
