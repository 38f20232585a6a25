// Copyright 2026 The qss-rec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qss/io.h"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

namespace qss {

namespace {

struct Line {
    size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream &in) {
    std::vector<Line> lines;
    std::string raw;
    size_t number = 0;
    while (std::getline(in, raw)) {
        number++;
        auto hash = raw.find('#');
        if (hash != std::string::npos) {
            raw.resize(hash);
        }
        std::istringstream ss(raw);
        Line line{number, {}};
        std::string tok;
        while (ss >> tok) {
            line.tokens.push_back(tok);
        }
        if (!line.tokens.empty()) {
            lines.push_back(std::move(line));
        }
    }
    return lines;
}

long parse_int(const std::string &tok, const std::string &source, size_t line) {
    try {
        size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size()) {
            throw std::invalid_argument(tok);
        }
        return v;
    } catch (const std::exception &) {
        throw ParseError(source, line, "expected an integer, got '" + tok + "'");
    }
}

double parse_double(const std::string &tok, const std::string &source, size_t line) {
    try {
        size_t used = 0;
        double v = std::stod(tok, &used);
        if (used != tok.size()) {
            throw std::invalid_argument(tok);
        }
        return v;
    } catch (const std::exception &) {
        throw ParseError(source, line, "expected a number, got '" + tok + "'");
    }
}

std::ifstream open_input(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path, 0, "cannot open file");
    }
    return in;
}

}  // namespace

ParseError::ParseError(const std::string &source, size_t line, const std::string &message)
    : std::runtime_error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + message), line_(line) {
}

StabilizerCode parse_code(std::istream &in, const std::string &source) {
    auto lines = tokenize(in);
    if (lines.empty()) {
        throw ParseError(source, 0, "empty code file");
    }
    const Line &header = lines[0];
    if (header.tokens.size() != 3) {
        throw ParseError(source, header.number, "header must be 'q n k'");
    }
    long q = parse_int(header.tokens[0], source, header.number);
    long n = parse_int(header.tokens[1], source, header.number);
    long k = parse_int(header.tokens[2], source, header.number);
    if (n < 1 || k < 0 || k > n) {
        throw ParseError(source, header.number, "need n >= 1 and 0 <= k <= n");
    }
    std::shared_ptr<const Field> field;
    try {
        field = Field::of_order(static_cast<int>(q));
    } catch (const std::exception &e) {
        throw ParseError(source, header.number, e.what());
    }
    size_t expected = static_cast<size_t>(n - k);
    if (lines.size() - 1 != expected) {
        throw ParseError(source, lines.back().number,
                         "expected " + std::to_string(expected) + " generator lines, found " +
                             std::to_string(lines.size() - 1));
    }
    std::vector<SymplecticVector> gens;
    for (size_t i = 1; i < lines.size(); i++) {
        const Line &l = lines[i];
        if (l.tokens.size() != static_cast<size_t>(2 * n)) {
            throw ParseError(source, l.number,
                             "generator needs " + std::to_string(2 * n) + " entries, found " +
                                 std::to_string(l.tokens.size()));
        }
        std::vector<int> coords;
        for (const auto &t : l.tokens) {
            long v = parse_int(t, source, l.number);
            if (v < 0 || v >= q) {
                throw ParseError(source, l.number, "entry " + t + " outside [0, " + std::to_string(q) + ")");
            }
            coords.push_back(static_cast<int>(v));
        }
        gens.push_back(SymplecticVector::from_ints(field, coords));
    }
    try {
        return StabilizerCode(field, static_cast<size_t>(n), static_cast<size_t>(k), std::move(gens));
    } catch (const std::invalid_argument &e) {
        throw ParseError(source, 0, e.what());
    }
}

StabilizerCode load_code(const std::string &path) {
    auto in = open_input(path);
    return parse_code(in, path);
}

void write_code(std::ostream &out, const StabilizerCode &code) {
    out << code.field().order() << ' ' << code.n() << ' ' << code.k() << '\n';
    for (const auto &g : code.raw_generators()) {
        for (size_t i = 0; i < g.coords().size(); i++) {
            out << (i ? " " : "") << static_cast<int>(g.coords()[i]);
        }
        out << '\n';
    }
}

QuditState parse_state(std::istream &in, const std::string &source) {
    auto lines = tokenize(in);
    if (lines.empty()) {
        throw ParseError(source, 0, "empty state file");
    }
    const Line &header = lines[0];
    if (header.tokens.size() != 2) {
        throw ParseError(source, header.number, "header must be 'q m'");
    }
    long q = parse_int(header.tokens[0], source, header.number);
    long m = parse_int(header.tokens[1], source, header.number);
    if (q < 2 || m < 0) {
        throw ParseError(source, header.number, "need q >= 2 and m >= 0");
    }
    size_t dim = 0;
    try {
        dim = checked_dim(static_cast<int>(q), static_cast<size_t>(m));
    } catch (const std::exception &e) {
        throw ParseError(source, header.number, e.what());
    }
    if (lines.size() - 1 != dim) {
        throw ParseError(source, lines.back().number,
                         "expected " + std::to_string(dim) + " amplitude lines, found " + std::to_string(lines.size() - 1));
    }
    Eigen::VectorXcd amps(static_cast<Eigen::Index>(dim));
    for (size_t i = 0; i < dim; i++) {
        const Line &l = lines[i + 1];
        if (l.tokens.size() != 3) {
            throw ParseError(source, l.number, "amplitude line must be 'index re im'");
        }
        long index = parse_int(l.tokens[0], source, l.number);
        if (index != static_cast<long>(i)) {
            throw ParseError(source, l.number, "expected index " + std::to_string(i) + ", got " + l.tokens[0]);
        }
        amps[static_cast<Eigen::Index>(i)] =
            Complex(parse_double(l.tokens[1], source, l.number), parse_double(l.tokens[2], source, l.number));
    }
    return QuditState(static_cast<int>(q), static_cast<size_t>(m), std::move(amps));
}

QuditState load_state(const std::string &path) {
    auto in = open_input(path);
    return parse_state(in, path);
}

void write_state(std::ostream &out, const QuditState &state) {
    out << state.q() << ' ' << state.num_qudits() << '\n';
    out << std::setprecision(17);
    for (size_t i = 0; i < state.dim(); i++) {
        Complex a = state.amps()[static_cast<Eigen::Index>(i)];
        out << i << ' ' << a.real() << ' ' << a.imag() << '\n';
    }
}

void save_state(const std::string &path, const QuditState &state) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error(path + ": cannot open for writing");
    }
    write_state(out, state);
}

QuditState parse_inline_state(const std::string &text, int q, size_t num_qudits) {
    size_t dim = checked_dim(q, num_qudits);
    std::vector<Complex> values;
    std::stringstream ss(text);
    std::string entry;
    while (std::getline(ss, entry, ',')) {
        auto colon = entry.find(':');
        double re = parse_double(entry.substr(0, colon), "--secret", 0);
        double im = colon == std::string::npos ? 0.0 : parse_double(entry.substr(colon + 1), "--secret", 0);
        values.emplace_back(re, im);
    }
    if (values.size() != dim) {
        throw ParseError("--secret", 0,
                         "expected " + std::to_string(dim) + " amplitudes, got " + std::to_string(values.size()));
    }
    Eigen::VectorXcd amps(static_cast<Eigen::Index>(dim));
    for (size_t i = 0; i < dim; i++) {
        amps[static_cast<Eigen::Index>(i)] = values[i];
    }
    return QuditState(q, num_qudits, std::move(amps));
}

}  // namespace qss
