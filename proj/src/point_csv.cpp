#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

#include "pareto/bench.hpp"

namespace pareto::bench {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

double parse_double(std::string_view field, std::size_t line_no) {
    field = trim(field);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
        throw input_error("line " + std::to_string(line_no) + ": cannot parse '" + std::string(field) +
                          "' as a number");
    return v;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::vector<Point> read_points_csv(std::istream& in) {
    std::vector<Point> points;
    std::string line;
    std::size_t line_no = 0;
    Eigen::Index m = 0;
    std::vector<double> row;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view text = trim(line);
        if (text.empty()) continue;
        if (line_no == 1 && text.front() == '#') continue;

        row.clear();
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = text.find(',', start);
            row.push_back(parse_double(text.substr(start, comma - start), line_no));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (m == 0) m = static_cast<Eigen::Index>(row.size());
        if (static_cast<Eigen::Index>(row.size()) != m)
            throw input_error("line " + std::to_string(line_no) + ": expected " + std::to_string(m) +
                              " coordinates, found " + std::to_string(row.size()));
        try {
            points.emplace_back(Eigen::Map<const Eigen::VectorXd>(row.data(), m));
        } catch (const usage_error& e) {
            throw input_error("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return points;
}

std::vector<Point> read_points_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    return read_points_csv(in);
}

void write_points_csv(std::ostream& out, const std::vector<Point>& points) {
    for (const Point& p : points) {
        for (Eigen::Index k = 0; k < p.dimension(); ++k) {
            if (k) out << ',';
            out << format_double(p[k]);
        }
        out << '\n';
    }
}

void write_points_file(const std::string& path, const std::vector<Point>& points) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_points_csv(out, points);
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace pareto::bench
