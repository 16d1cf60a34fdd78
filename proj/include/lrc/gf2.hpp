#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lrc {
namespace gf2 {

// A subset of the column ground set {0,...,n-1}, one bit per column.
// External I/O is 1-based; everything in here is 0-based.
using Mask = std::uint64_t;

constexpr int kMaxColumns = 64;
constexpr int kMaxEnumerationRows = 24;  // 2^k codeword enumeration budget

inline Mask full_mask(int n) {
    return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline int lowest_bit(Mask m) { return __builtin_ctzll(m); }

/// Parse "1,2,5" (1-based, comma separated) into a mask; throws on junk.
Mask parse_mask_1based(std::string_view text, int n);

/// Format a mask as "{1,2,5}" (1-based, ascending).
std::string format_mask_1based(Mask m);

/// 1-based element list of a mask, ascending.
std::vector<int> mask_elements_1based(Mask m);

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Fixed-width bit vector over positions 0..len-1, len <= 64.
struct BitVec {
    std::uint64_t bits = 0;
    int len = 0;

    BitVec() = default;
    BitVec(std::uint64_t b, int n) : bits(b), len(n) {
        if (n < 0 || n > 64) throw std::invalid_argument("BitVec length out of range");
        if (n < 64) bits &= full_mask(n);
    }
    bool get(int i) const { return (bits >> i) & 1; }
    int weight() const { return popcount(bits); }
};

// A k x n matrix over GF(2). Rows are stored as n-bit masks and the
// columns are additionally cached as k-bit values for rank computations.
class BitMatrix {
public:
    BitMatrix(int rows, int cols);
    static BitMatrix from_rows(const std::vector<std::uint64_t>& rows, int cols);
    static BitMatrix identity(int n);

    /// Matrix text format: one row per line, '0'/'1' characters with optional
    /// single spaces, '#' starts a comment line, blank lines ignored.
    static BitMatrix parse(std::string_view text);
    std::string to_text() const;

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Mask column_set() const { return full_mask(cols_); }

    bool get(int r, int c) const { return (row_bits_[r] >> c) & 1; }
    void set(int r, int c, bool v);

    std::uint64_t row_bits(int r) const { return row_bits_[r]; }
    std::uint64_t col_bits(int c) const { return col_bits_[c]; }

    BitVec row(int r) const { return BitVec(row_bits_[r], cols_); }
    BitVec col(int c) const { return BitVec(col_bits_[c], rows_); }

    /// Encode a message (one bit per row) to a codeword mask (one bit per column).
    std::uint64_t encode(std::uint64_t message) const;

    bool operator==(const BitMatrix& o) const = default;

private:
    int rows_;
    int cols_;
    std::vector<std::uint64_t> row_bits_;
    std::vector<std::uint64_t> col_bits_;
    void rebuild_columns();
};

/// GF(2) rank of the submatrix formed by the selected columns.
int rank(const BitMatrix& m, Mask cols);

/// The unique subset S of basis_cols with XOR of columns in S equal to the
/// target column, or nullopt if the target is outside the span.
/// Throws std::invalid_argument if basis_cols are dependent.
std::optional<Mask> solve_in_span(const BitMatrix& m, Mask basis_cols, int target_col);

/// Minimum Hamming weight over nonzero codewords of the punctured code C|cols,
/// by enumerating all 2^k - 1 messages (Gray code, incremental XOR).
/// Throws std::domain_error if rows > 24 or the punctured code has dimension 0.
int min_distance(const BitMatrix& m, Mask cols);
int min_distance(const BitMatrix& m);

/// Serial reference implementation; the parallel kernel must agree with it.
int min_distance_serial(const BitMatrix& m, Mask cols);

struct CodeValidation {
    bool zero_column = false;
    std::vector<std::pair<int, int>> replicated_pairs;  // 1-based column pairs
    bool distance_ge_2 = false;                         // no co-loops
    bool rows_dependent = false;                        // reported as a warning

    bool replicated() const { return !replicated_pairs.empty(); }
    bool non_degenerate() const { return !zero_column && distance_ge_2; }
    bool storage_code_ok() const { return non_degenerate() && !replicated(); }
};

/// Non-degeneracy and replication checks for a storage code generator matrix.
CodeValidation validate_storage_code(const BitMatrix& m);

}  // namespace gf2

using gf2::BitMatrix;
using gf2::BitVec;
using gf2::Mask;

}  // namespace lrc
