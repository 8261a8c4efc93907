#include "rvnorm/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rvnorm/errors.hpp"

namespace rvnorm {

namespace {

using nlohmann::json;

std::vector<std::vector<double>> read_grid(const json& j, const char* key,
                                           int n) {
    std::vector<std::vector<double>> grid;
    grid = j.at(key).get<std::vector<std::vector<double>>>();
    if (grid.size() != static_cast<std::size_t>(n)) {
        throw ParseError(std::string("matrix json: '") + key + "' must have " +
                         std::to_string(n) + " rows");
    }
    for (const auto& row : grid) {
        if (row.size() != static_cast<std::size_t>(n)) {
            throw ParseError(std::string("matrix json: '") + key +
                             "' rows must have " + std::to_string(n) +
                             " entries");
        }
    }
    return grid;
}

} // namespace

ComplexMatrix matrix_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("matrix json: ") + e.what());
    }
    try {
        const int n = j.at("n").get<int>();
        if (n < 1) throw ParseError("matrix json: n must be >= 1");
        const auto re = read_grid(j, "re", n);
        std::vector<std::vector<double>> im;
        if (j.contains("im")) im = read_grid(j, "im", n);

        std::vector<Complex> entries;
        entries.reserve(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                const double x = re[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
                const double y = im.empty()
                                     ? 0.0
                                     : im[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
                entries.emplace_back(x, y);
            }
        }
        return ComplexMatrix::from_entries(n, std::move(entries));
    } catch (const json::exception& e) {
        throw ParseError(std::string("matrix json: ") + e.what());
    }
}

ComplexMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return matrix_from_json(buf.str());
}

std::string matrix_to_json(const ComplexMatrix& z) {
    const int n = z.dim();
    json re = json::array();
    json im = json::array();
    bool any_imag = false;
    for (int i = 0; i < n; ++i) {
        json rrow = json::array();
        json irow = json::array();
        for (int k = 0; k < n; ++k) {
            rrow.push_back(z.at(i, k).real());
            irow.push_back(z.at(i, k).imag());
            any_imag = any_imag || z.at(i, k).imag() != 0.0;
        }
        re.push_back(std::move(rrow));
        im.push_back(std::move(irow));
    }
    json j{{"n", n}, {"re", std::move(re)}};
    if (any_imag) j["im"] = std::move(im);
    return j.dump();
}

} // namespace rvnorm
