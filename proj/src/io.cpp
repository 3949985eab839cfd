#include "formstab/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

namespace formstab {

namespace {

// 17 significant digits round-trips any double exactly.
std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_double(const std::string& token, const char* what) {
    try {
        std::size_t consumed = 0;
        const double v = std::stod(token, &consumed);
        if (consumed != token.size()) {
            throw IoError(std::string(what) + ": malformed number '" + token + "'");
        }
        return v;
    } catch (const IoError&) {
        throw;
    } catch (const std::exception&) {
        throw IoError(std::string(what) + ": malformed number '" + token + "'");
    }
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

void write_matrix_market(std::ostream& out, const RealMatrix& m) {
    out << "%%MatrixMarket matrix array real general\n";
    out << m.rows() << " " << m.cols() << "\n";
    // Array format lists entries down each column (Fortran order).
    for (Index j = 0; j < m.cols(); ++j) {
        for (Index i = 0; i < m.rows(); ++i) {
            out << format_double(m(i, j)) << "\n";
        }
    }
}

RealMatrix read_matrix_market(std::istream& in) {
    std::string banner;
    if (!std::getline(in, banner)) {
        throw IoError("matrix market: empty input");
    }
    if (!banner.empty() && banner.back() == '\r') banner.pop_back();
    std::istringstream header(lower(banner));
    std::string magic, object, layout, field, symmetry;
    header >> magic >> object >> layout >> field >> symmetry;
    if (magic != "%%matrixmarket" || object != "matrix") {
        throw IoError("matrix market: missing %%MatrixMarket banner");
    }
    if (layout != "array" || field != "real" || symmetry != "general") {
        throw IoError("matrix market: only 'array real general' is supported, got '" +
                      layout + " " + field + " " + symmetry + "'");
    }

    std::string line;
    Index rows = 0;
    Index cols = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '%') continue;
        std::istringstream sizes(line);
        if (!(sizes >> rows >> cols) || rows < 1 || cols < 1) {
            throw IoError("matrix market: bad size line '" + line + "'");
        }
        break;
    }
    if (rows < 1 || cols < 1) {
        throw IoError("matrix market: missing size line");
    }

    RealMatrix m(rows, cols);
    Index count = 0;
    std::string token;
    while (count < rows * cols && in >> token) {
        if (token[0] == '%') {
            std::getline(in, line);
            continue;
        }
        const Index j = count / rows;
        const Index i = count % rows;
        m(i, j) = parse_double(token, "matrix market");
        ++count;
    }
    if (count != rows * cols) {
        throw IoError("matrix market: expected " + std::to_string(rows * cols) +
                      " entries, found " + std::to_string(count));
    }
    ensure_finite(m, "matrix market");
    return m;
}

void write_csv(std::ostream& out, const RealMatrix& m) {
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            if (j > 0) out << ",";
            out << format_double(m(i, j));
        }
        out << "\n";
    }
}

RealMatrix read_csv(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<double> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            row.push_back(parse_double(cell, "csv"));
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw IoError("csv: ragged rows");
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty() || rows.front().empty()) {
        throw IoError("csv: empty input");
    }
    RealMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }
    ensure_finite(m, "csv");
    return m;
}

void write_json(std::ostream& out, const RealMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Index j = 0; j < m.cols(); ++j) {
            row.push_back(m(i, j));
        }
        rows.push_back(std::move(row));
    }
    nlohmann::json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["data"] = std::move(rows);
    out << j.dump() << "\n";
}

RealMatrix read_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("json: ") + e.what());
    }
    if (!j.contains("rows") || !j.contains("cols") || !j.contains("data")) {
        throw IoError("json: need fields rows, cols, data");
    }
    const auto rows = j["rows"].get<Index>();
    const auto cols = j["cols"].get<Index>();
    if (rows < 1 || cols < 1) {
        throw IoError("json: bad dimensions");
    }
    const auto& data = j["data"];
    if (!data.is_array() || static_cast<Index>(data.size()) != rows) {
        throw IoError("json: data has wrong row count");
    }
    RealMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        const auto& row = data[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
            throw IoError("json: data has wrong column count");
        }
        for (Index jx = 0; jx < cols; ++jx) {
            if (!row[static_cast<std::size_t>(jx)].is_number()) {
                throw IoError("json: non-numeric entry");
            }
            m(i, jx) = row[static_cast<std::size_t>(jx)].get<double>();
        }
    }
    ensure_finite(m, "json");
    return m;
}

}  // namespace

const char* format_extension(MatrixFormat format) {
    switch (format) {
        case MatrixFormat::matrix_market: return ".mtx";
        case MatrixFormat::csv: return ".csv";
        case MatrixFormat::json: return ".json";
    }
    return ".mtx";
}

MatrixFormat format_from_path(const std::string& path) {
    const auto dot = path.find_last_of('.');
    if (dot == std::string::npos) return MatrixFormat::matrix_market;
    const std::string ext = lower(path.substr(dot));
    if (ext == ".csv") return MatrixFormat::csv;
    if (ext == ".json") return MatrixFormat::json;
    return MatrixFormat::matrix_market;
}

void write_matrix(std::ostream& out, const RealMatrix& m, MatrixFormat format) {
    switch (format) {
        case MatrixFormat::matrix_market: write_matrix_market(out, m); return;
        case MatrixFormat::csv: write_csv(out, m); return;
        case MatrixFormat::json: write_json(out, m); return;
    }
}

RealMatrix read_matrix(std::istream& in, MatrixFormat format) {
    switch (format) {
        case MatrixFormat::matrix_market: return read_matrix_market(in);
        case MatrixFormat::csv: return read_csv(in);
        case MatrixFormat::json: return read_json(in);
    }
    throw IoError("read_matrix: unknown format");
}

void write_matrix_file(const std::string& path, const RealMatrix& m,
                       MatrixFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    write_matrix(out, m, format);
    if (!out) {
        throw IoError("failed writing '" + path + "'");
    }
}

RealMatrix read_matrix_file(const std::string& path) {
    return read_matrix_file(path, format_from_path(path));
}

RealMatrix read_matrix_file(const std::string& path, MatrixFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    return read_matrix(in, format);
}

}  // namespace formstab
