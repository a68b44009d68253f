#include "matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace ams {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

struct LineReader {
    std::ifstream in;
    long line_no = 0;

    explicit LineReader(const std::string& path) : in(path) {
        if (!in) throw Error(ErrorCode::io, "cannot open file: " + path);
    }

    /// Next non-comment, non-blank line; false at end of file.
    bool next(std::string& out) {
        while (std::getline(in, out)) {
            ++line_no;
            std::size_t p = out.find_first_not_of(" \t\r\n");
            if (p == std::string::npos) continue;
            if (out[p] == '%') continue;
            return true;
        }
        return false;
    }
};

Real parse_real(const std::string& tok, long line) {
    try {
        std::size_t used = 0;
        Real v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "invalid numeric value '" + tok + "'");
    }
}

Index parse_index(const std::string& tok, long line) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return static_cast<Index>(v);
    } catch (const std::exception&) {
        throw ParseError(line, "invalid integer '" + tok + "'");
    }
}

}  // namespace

CsrMatrix read_matrix_market(const std::string& path) {
    std::ifstream header_in(path);
    if (!header_in) throw Error(ErrorCode::io, "cannot open file: " + path);
    std::string banner;
    if (!std::getline(header_in, banner)) throw ParseError(1, "empty file");

    std::istringstream hs(banner);
    std::string tag, object, format, field, symmetry;
    hs >> tag >> object >> format >> field >> symmetry;
    if (lower(tag) != "%%matrixmarket" || lower(object) != "matrix")
        throw ParseError(1, "not a Matrix Market file (missing %%MatrixMarket banner)");
    format = lower(format);
    field = lower(field);
    symmetry = lower(symmetry);

    bool vector_array = format == "array";
    if (!vector_array && format != "coordinate")
        throw ParseError(1, "unsupported format '" + format + "' (expected coordinate)");
    if (field != "real")
        throw ParseError(1, "unsupported field '" + field + "' (only real matrices are supported)");
    bool header_symmetric = symmetry == "symmetric";
    if (!header_symmetric && symmetry != "general")
        throw ParseError(1, "unsupported symmetry '" + symmetry + "'");
    if (vector_array)
        throw ParseError(1, "array format holds a dense vector, not a sparse matrix");

    LineReader reader(path);
    reader.line_no = 0;
    // Re-consume the banner through the comment-skipping reader.
    std::string line;
    {
        std::getline(reader.in, line);
        ++reader.line_no;
    }

    if (!reader.next(line)) throw ParseError(reader.line_no, "missing size line");
    std::istringstream szs(line);
    std::string t1, t2, t3, extra;
    szs >> t1 >> t2 >> t3;
    if (t3.empty() || (szs >> extra))
        throw ParseError(reader.line_no, "size line must be 'rows cols nnz'");
    Index n_rows = parse_index(t1, reader.line_no);
    Index n_cols = parse_index(t2, reader.line_no);
    Index nnz = parse_index(t3, reader.line_no);
    if (n_rows <= 0 || n_cols <= 0) throw ParseError(reader.line_no, "empty matrix");
    if (nnz < 0) throw ParseError(reader.line_no, "negative entry count");
    if (header_symmetric && n_rows != n_cols)
        throw ParseError(reader.line_no, "symmetric matrix must be square");

    std::vector<Triplet> triplets;
    triplets.reserve(static_cast<std::size_t>(header_symmetric ? 2 * nnz : nnz));
    for (Index e = 0; e < nnz; ++e) {
        if (!reader.next(line))
            throw ParseError(reader.line_no, "unexpected end of file (expected " +
                                                 std::to_string(nnz) + " entries, got " +
                                                 std::to_string(e) + ")");
        std::istringstream es(line);
        std::string ti, tj, tv, rest;
        es >> ti >> tj >> tv;
        if (tv.empty() || (es >> rest))
            throw ParseError(reader.line_no, "entry line must be 'row col value'");
        Index i = parse_index(ti, reader.line_no) - 1;
        Index j = parse_index(tj, reader.line_no) - 1;
        Real v = parse_real(tv, reader.line_no);
        if (i < 0 || i >= n_rows || j < 0 || j >= n_cols)
            throw ParseError(reader.line_no, "index out of bounds");
        if (header_symmetric && j > i)
            throw ParseError(reader.line_no,
                             "symmetric file must store the lower triangle only");
        triplets.push_back({i, j, v});
        if (header_symmetric && i != j) triplets.push_back({j, i, v});
    }
    if (reader.next(line)) throw ParseError(reader.line_no, "trailing data after declared entries");

    CsrMatrix m = CsrMatrix::from_triplets(n_rows, n_cols, std::move(triplets));
    m.set_symmetric(header_symmetric || m.is_symmetric());
    return m;
}

std::vector<Real> read_vector(const std::string& path) {
    std::ifstream probe(path);
    if (!probe) throw Error(ErrorCode::io, "cannot open file: " + path);
    std::string first;
    std::getline(probe, first);
    probe.close();

    bool is_mm = first.rfind("%%MatrixMarket", 0) == 0 || first.rfind("%%matrixmarket", 0) == 0;
    LineReader reader(path);
    std::string line;

    if (is_mm) {
        std::getline(reader.in, line);  // banner
        ++reader.line_no;
        std::istringstream hs(first);
        std::string tag, object, format, field, symmetry;
        hs >> tag >> object >> format >> field >> symmetry;
        if (lower(format) != "array" || lower(field) != "real")
            throw ParseError(1, "vector file must be 'array real'");
        if (!reader.next(line)) throw ParseError(reader.line_no, "missing size line");
        std::istringstream szs(line);
        std::string t1, t2;
        szs >> t1 >> t2;
        Index n = parse_index(t1, reader.line_no);
        Index cols = t2.empty() ? 1 : parse_index(t2, reader.line_no);
        if (cols != 1) throw ParseError(reader.line_no, "expected a single-column vector");
        std::vector<Real> v;
        v.reserve(static_cast<std::size_t>(n));
        while (static_cast<Index>(v.size()) < n && reader.next(line)) {
            std::istringstream es(line);
            std::string tok;
            while (es >> tok) v.push_back(parse_real(tok, reader.line_no));
        }
        if (static_cast<Index>(v.size()) != n)
            throw ParseError(reader.line_no, "vector shorter than declared size");
        return v;
    }

    std::vector<Real> v;
    while (reader.next(line)) {
        std::istringstream es(line);
        std::string tok;
        while (es >> tok) v.push_back(parse_real(tok, reader.line_no));
    }
    if (v.empty()) throw ParseError(reader.line_no, "empty vector file");
    return v;
}

void write_matrix_market(const CsrMatrix& a, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::io, "cannot open file for writing: " + path);
    bool sym = a.symmetric();
    out << "%%MatrixMarket matrix coordinate real " << (sym ? "symmetric" : "general") << "\n";
    Index count = 0;
    out.precision(17);
    std::ostringstream body;
    body.precision(17);
    for (Index i = 0; i < a.n_rows(); ++i) {
        for (Index k = a.row_offsets()[i]; k < a.row_offsets()[i + 1]; ++k) {
            Index j = a.col_indices()[k];
            if (sym && j > i) continue;  // lower triangle only
            body << (i + 1) << " " << (j + 1) << " " << a.values()[k] << "\n";
            ++count;
        }
    }
    out << a.n_rows() << " " << a.n_cols() << " " << count << "\n" << body.str();
}

}  // namespace ams
