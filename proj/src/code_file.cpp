#include "qsc/code_file.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace qsc {

namespace {

// Next non-comment, non-blank line; false at EOF.
bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        std::size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos) continue;
        if (line[i] == '#') continue;
        return true;
    }
    return false;
}

std::vector<felem> parse_row(const std::string& line, std::size_t n, unsigned q,
                             std::size_t lineno) {
    std::istringstream ss(line);
    std::vector<felem> row;
    long v;
    while (ss >> v) {
        if (v < 0 || static_cast<unsigned long>(v) >= q)
            throw parse_error("symbol " + std::to_string(v) +
                              " out of range [0," + std::to_string(q) + ") in row " +
                              std::to_string(lineno));
        row.push_back(static_cast<felem>(v));
    }
    std::string trailing;
    ss.clear();
    if (ss >> trailing)
        throw parse_error("non-numeric token in row " + std::to_string(lineno));
    if (row.size() != n)
        throw parse_error("expected " + std::to_string(n) + " symbols in row " +
                          std::to_string(lineno) + ", got " +
                          std::to_string(row.size()));
    return row;
}

}  // namespace

namespace {

ParsedCode parse_code_stream_impl(std::istream& in);

}  // namespace

ParsedCode parse_code_stream(std::istream& in) {
    try {
        return parse_code_stream_impl(in);
    } catch (const parse_error&) {
        throw;
    } catch (const std::domain_error& e) {
        throw parse_error(e.what());  // e.g. composite q
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

namespace {

ParsedCode parse_code_stream_impl(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw parse_error("empty code file");

    std::istringstream hdr(line);
    std::string kind;
    hdr >> kind;
    if (kind == "linear") {
        long q, k, n;
        if (!(hdr >> q >> k >> n))
            throw parse_error("malformed header: expected 'linear <q> <k> <n>'");
        if (q < 2 || k < 1 || n < k)
            throw parse_error("invalid linear header values");
        PrimeModulus F(static_cast<unsigned>(q));
        FieldMatrix g(F, static_cast<std::size_t>(k), static_cast<std::size_t>(n));
        for (long r = 0; r < k; ++r) {
            if (!next_line(in, line))
                throw parse_error("unexpected EOF: expected " + std::to_string(k) +
                                  " generator rows");
            auto row = parse_row(line, static_cast<std::size_t>(n),
                                 static_cast<unsigned>(q), r + 1);
            for (long c = 0; c < n; ++c) g.at(r, c) = row[c];
        }
        try {
            return GeneratorMatrix(std::move(g));
        } catch (const std::invalid_argument& e) {
            throw parse_error(e.what());  // rank-deficient generator etc.
        }
    }
    if (kind == "nonlinear") {
        long q, n, M;
        if (!(hdr >> q >> n >> M))
            throw parse_error("malformed header: expected 'nonlinear <q> <n> <M>'");
        if (q < 2 || n < 1 || M < 2)
            throw parse_error("invalid nonlinear header values");
        PrimeModulus F(static_cast<unsigned>(q));
        std::vector<std::vector<felem>> words;
        words.reserve(static_cast<std::size_t>(M));
        for (long r = 0; r < M; ++r) {
            if (!next_line(in, line))
                throw parse_error("unexpected EOF: expected " + std::to_string(M) +
                                  " codewords");
            words.push_back(parse_row(line, static_cast<std::size_t>(n),
                                      static_cast<unsigned>(q), r + 1));
        }
        try {
            return CodewordList(F, static_cast<std::size_t>(n), std::move(words));
        } catch (const std::invalid_argument& e) {
            throw parse_error(e.what());
        }
    }
    throw parse_error("unknown header keyword '" + kind +
                      "' (expected 'linear' or 'nonlinear')");
}

}  // namespace

ParsedCode parse_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open code file: " + path);
    return parse_code_stream(in);
}

void write_code_stream(std::ostream& out, const ParsedCode& code) {
    if (const auto* gen = std::get_if<GeneratorMatrix>(&code)) {
        out << "linear " << gen->q() << ' ' << gen->k() << ' ' << gen->n() << '\n';
        for (std::size_t r = 0; r < gen->k(); ++r) {
            for (std::size_t c = 0; c < gen->n(); ++c)
                out << (c ? " " : "") << gen->matrix().at(r, c);
            out << '\n';
        }
        return;
    }
    const auto& cl = std::get<CodewordList>(code);
    out << "nonlinear " << cl.q() << ' ' << cl.n() << ' ' << cl.size() << '\n';
    for (const auto& w : cl.words()) {
        for (std::size_t c = 0; c < cl.n(); ++c) out << (c ? " " : "") << w[c];
        out << '\n';
    }
}

void write_curve_csv(std::ostream& out, const std::vector<CurveRow>& rows) {
    out << "p,pue,pue_perp,good_bound,bad_bound\n";
    out << std::setprecision(17);
    for (const auto& r : rows)
        out << r.p << ',' << r.pue << ',' << r.pue_perp << ',' << r.good_bound
            << ',' << r.bad_bound << '\n';
}

}  // namespace qsc
