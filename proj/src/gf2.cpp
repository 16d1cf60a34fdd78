#include "lrc/gf2.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lrc {
namespace gf2 {

Mask parse_mask_1based(std::string_view text, int n) {
    Mask out = 0;
    std::string token;
    std::stringstream ss{std::string(text)};
    while (std::getline(ss, token, ',')) {
        size_t a = token.find_first_not_of(" \t");
        if (a == std::string::npos) throw ParseError("empty element in subset list");
        size_t b = token.find_last_not_of(" \t");
        token = token.substr(a, b - a + 1);
        int v;
        try {
            size_t used;
            v = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw ParseError("bad subset element '" + token + "'");
        }
        if (v < 1 || v > n) throw ParseError("subset element " + std::to_string(v) + " out of range 1.." + std::to_string(n));
        out |= Mask{1} << (v - 1);
    }
    return out;
}

std::vector<int> mask_elements_1based(Mask m) {
    std::vector<int> out;
    for (Mask t = m; t; t &= t - 1) out.push_back(lowest_bit(t) + 1);
    return out;
}

std::string format_mask_1based(Mask m) {
    std::string s = "{";
    bool first = true;
    for (int e : mask_elements_1based(m)) {
        if (!first) s += ",";
        s += std::to_string(e);
        first = false;
    }
    return s + "}";
}

BitMatrix::BitMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || rows > 64) throw std::invalid_argument("row count out of range 1..64");
    if (cols < 1 || cols > kMaxColumns) throw std::invalid_argument("column count out of range 1..64");
    row_bits_.assign(rows, 0);
    col_bits_.assign(cols, 0);
}

BitMatrix BitMatrix::from_rows(const std::vector<std::uint64_t>& rows, int cols) {
    BitMatrix m(static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (cols < 64 && (rows[i] & ~full_mask(cols))) throw std::invalid_argument("row has bits beyond column count");
        m.row_bits_[i] = rows[i];
    }
    m.rebuild_columns();
    return m;
}

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

void BitMatrix::set(int r, int c, bool v) {
    std::uint64_t row_bit = std::uint64_t{1} << c;
    std::uint64_t col_bit = std::uint64_t{1} << r;
    if (v) {
        row_bits_[r] |= row_bit;
        col_bits_[c] |= col_bit;
    } else {
        row_bits_[r] &= ~row_bit;
        col_bits_[c] &= ~col_bit;
    }
}

void BitMatrix::rebuild_columns() {
    std::fill(col_bits_.begin(), col_bits_.end(), 0);
    for (int r = 0; r < rows_; ++r)
        for (std::uint64_t t = row_bits_[r]; t; t &= t - 1)
            col_bits_[lowest_bit(t)] |= std::uint64_t{1} << r;
}

BitMatrix BitMatrix::parse(std::string_view text) {
    std::vector<std::uint64_t> rows;
    int ncols = -1;
    std::string line;
    std::stringstream ss{std::string(text)};
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t a = line.find_first_not_of(" \t");
        if (a == std::string::npos) continue;
        if (line[a] == '#') continue;
        std::uint64_t bits = 0;
        int col = 0;
        for (char ch : line) {
            if (ch == ' ' || ch == '\t') continue;
            if (ch != '0' && ch != '1')
                throw ParseError("line " + std::to_string(lineno) + ": unexpected character '" + std::string(1, ch) + "'");
            if (col >= kMaxColumns) throw ParseError("line " + std::to_string(lineno) + ": more than 64 columns");
            if (ch == '1') bits |= std::uint64_t{1} << col;
            ++col;
        }
        if (ncols < 0)
            ncols = col;
        else if (col != ncols)
            throw ParseError("line " + std::to_string(lineno) + ": row length " + std::to_string(col) +
                             " differs from " + std::to_string(ncols));
        rows.push_back(bits);
        if (rows.size() > 64) throw ParseError("more than 64 rows");
    }
    if (rows.empty() || ncols <= 0) throw ParseError("no matrix rows found");
    return from_rows(rows, ncols);
}

std::string BitMatrix::to_text() const {
    std::string out;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) out += get(r, c) ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::uint64_t BitMatrix::encode(std::uint64_t message) const {
    std::uint64_t x = 0;
    for (std::uint64_t t = message; t; t &= t - 1) x ^= row_bits_[lowest_bit(t)];
    return x;
}

int rank(const BitMatrix& m, Mask cols) {
    if (m.cols() < 64 && (cols & ~m.column_set())) throw std::invalid_argument("column selection outside matrix");
    std::uint64_t pivot[64] = {0};
    int r = 0;
    for (Mask t = cols; t; t &= t - 1) {
        std::uint64_t v = m.col_bits(lowest_bit(t));
        while (v) {
            int h = 63 - __builtin_clzll(v);
            if (pivot[h]) {
                v ^= pivot[h];
            } else {
                pivot[h] = v;
                ++r;
                break;
            }
        }
    }
    return r;
}

std::optional<Mask> solve_in_span(const BitMatrix& m, Mask basis_cols, int target_col) {
    if (target_col < 0 || target_col >= m.cols()) throw std::invalid_argument("target column out of range");
    // pivot value -> combination of basis columns that produced it
    std::uint64_t pivot[64] = {0};
    Mask pivot_comb[64] = {0};
    for (Mask t = basis_cols; t; t &= t - 1) {
        int j = lowest_bit(t);
        std::uint64_t v = m.col_bits(j);
        Mask comb = Mask{1} << j;
        while (v) {
            int h = 63 - __builtin_clzll(v);
            if (pivot[h]) {
                v ^= pivot[h];
                comb ^= pivot_comb[h];
            } else {
                pivot[h] = v;
                pivot_comb[h] = comb;
                break;
            }
        }
        if (!v) throw std::invalid_argument("basis columns are dependent");
    }
    std::uint64_t v = m.col_bits(target_col);
    Mask comb = 0;
    while (v) {
        int h = 63 - __builtin_clzll(v);
        if (!pivot[h]) return std::nullopt;
        v ^= pivot[h];
        comb ^= pivot_comb[h];
    }
    return comb;
}

namespace {

// Minimum punctured weight over message indices in [begin, end), messages
// visited in Gray-code order so each step XORs a single restricted row.
int min_weight_range(const std::vector<std::uint64_t>& rows, std::uint64_t begin, std::uint64_t end, Mask cols) {
    std::uint64_t gray = begin ^ (begin >> 1);
    std::uint64_t x = 0;
    for (std::uint64_t t = gray; t; t &= t - 1) x ^= rows[lowest_bit(t)];
    int best = std::numeric_limits<int>::max();
    int w = popcount(x & cols);
    if (gray != 0 && w > 0) best = w;
    for (std::uint64_t i = begin + 1; i < end; ++i) {
        x ^= rows[lowest_bit(i)];
        w = popcount(x & cols);
        if (w > 0 && w < best) best = w;
    }
    return best;
}

}  // namespace

int min_distance_serial(const BitMatrix& m, Mask cols) {
    if (m.rows() > kMaxEnumerationRows)
        throw std::domain_error("min_distance: row count exceeds enumeration budget (k <= 24)");
    if (rank(m, cols) < 1) throw std::domain_error("min_distance: punctured code has dimension 0");
    std::vector<std::uint64_t> rows(m.rows());
    for (int r = 0; r < m.rows(); ++r) rows[r] = m.row_bits(r) & cols;
    return min_weight_range(rows, 0, std::uint64_t{1} << m.rows(), cols);
}

int min_distance(const BitMatrix& m, Mask cols) {
    if (m.rows() > kMaxEnumerationRows)
        throw std::domain_error("min_distance: row count exceeds enumeration budget (k <= 24)");
    if (rank(m, cols) < 1) throw std::domain_error("min_distance: punctured code has dimension 0");
#ifdef _OPENMP
    if (m.rows() > 16 && omp_get_max_threads() > 1) {
        std::vector<std::uint64_t> rows(m.rows());
        for (int r = 0; r < m.rows(); ++r) rows[r] = m.row_bits(r) & cols;
        const std::uint64_t total = std::uint64_t{1} << m.rows();
        const int chunks = omp_get_max_threads() * 4;
        const std::uint64_t step = (total + chunks - 1) / chunks;
        int best = std::numeric_limits<int>::max();
#pragma omp parallel for reduction(min : best) schedule(static)
        for (int c = 0; c < chunks; ++c) {
            std::uint64_t lo = std::uint64_t(c) * step;
            std::uint64_t hi = std::min(total, lo + step);
            if (lo < hi) {
                int w = min_weight_range(rows, lo, hi, cols);
                if (w < best) best = w;
            }
        }
        return best;
    }
#endif
    return min_distance_serial(m, cols);
}

int min_distance(const BitMatrix& m) { return min_distance(m, m.column_set()); }

CodeValidation validate_storage_code(const BitMatrix& m) {
    CodeValidation v;
    for (int c = 0; c < m.cols(); ++c)
        if (m.col_bits(c) == 0) v.zero_column = true;
    for (int a = 0; a < m.cols(); ++a)
        for (int b = a + 1; b < m.cols(); ++b)
            if (m.col_bits(a) == m.col_bits(b)) v.replicated_pairs.emplace_back(a + 1, b + 1);
    const Mask full = m.column_set();
    const int full_rank = rank(m, full);
    v.rows_dependent = full_rank < m.rows();
    // d >= 2 iff no weight-1 codeword iff no column is a co-loop
    v.distance_ge_2 = full_rank > 0;
    for (int c = 0; c < m.cols() && v.distance_ge_2; ++c)
        if (rank(m, full & ~(Mask{1} << c)) < full_rank) v.distance_ge_2 = false;
    return v;
}

}  // namespace gf2
}  // namespace lrc
